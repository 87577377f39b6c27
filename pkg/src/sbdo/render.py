"""Serialization of operators: JSON dictionaries, plain text, LaTeX.

Term order is graded lex on the derivative multi-index pair; scalar
entries render through the canonical polynomial/rational strings, so
identical inputs always produce identical output.
"""

from __future__ import annotations

from .scalars import Poly, RationalFunction, scalar_str
from .weyl import WeylOperator


def entry_str(e) -> str:
    if isinstance(e, (Poly, RationalFunction)):
        return str(e)
    return scalar_str(e)


def matrix_rows(mat):
    return [[entry_str(e) for e in row] for row in mat.rows]


def weyl_terms_json(op: WeylOperator, coeff_key: str = "coeff"):
    out = []
    for (a, b), mat in op.sorted_terms():
        out.append({"dx": list(a), "dy": list(b), coeff_key: matrix_rows(mat)})
    return out


def weyl_text(op: WeylOperator) -> str:
    lines = []
    for (a, b), mat in op.sorted_terms():
        lines.append(f"dx={list(a)} dy={list(b)}:")
        for row in matrix_rows(mat):
            lines.append("  [" + ", ".join(row) + "]")
    return "\n".join(lines)


_GREEK = {"lam": r"\lambda", "mu": r"\mu"}


def poly_latex(p) -> str:
    if not isinstance(p, Poly):
        return scalar_str(p)
    if not p.terms:
        return "0"
    parts = []
    for exp, c in p.sorted_terms():
        mono = ""
        for v, k in zip(p.ring.names, exp):
            if k:
                name = _GREEK.get(v, v)
                mono += name if k == 1 else f"{name}^{{{k}}}"
        cs = scalar_str(c)
        if mono:
            if cs == "1":
                term = mono
            elif cs == "-1":
                term = f"-{mono}"
            else:
                term = f"{cs}{mono}"
        else:
            term = cs
        parts.append(term)
    body = parts[0]
    for term in parts[1:]:
        body += term if term.startswith("-") else "+" + term
    return body


def _partial_latex(block: str, exps, n: int) -> str:
    pieces = []
    for j, k in enumerate(exps):
        if not k:
            continue
        var = block if n == 1 else f"{block}_{{{j + 1}}}"
        pieces.append(rf"\partial {var}" if k == 1 else rf"\partial {var}^{{{k}}}")
    return " ".join(pieces)


def weyl_latex(op: WeylOperator) -> str:
    """Sum of (coefficient) d^k/dx^a dy^b terms, matching the layout of
    the printed rank-two example for scalar-valued operators."""
    n = len(op.space.xvars)
    parts = []
    for (a, b), mat in op.sorted_terms():
        order = sum(a) + sum(b)
        dens = " ".join(x for x in (_partial_latex("x", a, n),
                                    _partial_latex("y", b, n)) if x)
        frac = rf"\frac{{\partial^{{{order}}}}}{{{dens}}}" if order else "1"
        if mat.shape == (1, 1):
            coeff = poly_latex(mat[0, 0])
            parts.append(rf"({coeff})\,{frac}")
        else:
            rows = [" & ".join(poly_latex(e) for e in row) for row in mat.rows]
            body = r" \\ ".join(rows)
            parts.append(rf"\begin{{pmatrix}}{body}\end{{pmatrix}}\,{frac}")
    return " + ".join(parts) if parts else "0"
