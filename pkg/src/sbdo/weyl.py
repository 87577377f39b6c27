"""Differential operators with matrix-valued polynomial coefficients on
R^n (x R^n), their composition and their symbols.

An operator is a normal-ordered finite sum  sum_{a,b} C_{a,b}(x,y) dx^a dy^b
stored as a map from the derivative multi-index pair (a, b) to the
coefficient matrix.  The variable layout lives in an OpSpace: an x-block,
an optional y-block, and a polynomial ring that also carries any formal
parameters (and, for symbol work, the frequency variables).

The symbol replaces dx^a dy^b by (i*xi)^a (i*zeta)^b, following
D e^{i<x,xi>} = sigma_D(x,xi) e^{i<x,xi>}; symbol_to_weyl inverts it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .linalg import Matrix
from .scalars import I_UNIT, Poly, PolyRing, binomial


@dataclass(frozen=True)
class OpSpace:
    """Variable layout shared by composable operators."""

    ring: PolyRing
    xvars: tuple
    yvars: tuple = ()

    def zero_key(self):
        return ((0,) * len(self.xvars), (0,) * len(self.yvars))

    def dx_key(self, j: int, order: int = 1):
        a = [0] * len(self.xvars)
        a[j] = order
        return (tuple(a), (0,) * len(self.yvars))

    def dy_key(self, j: int, order: int = 1):
        b = [0] * len(self.yvars)
        b[j] = order
        return ((0,) * len(self.xvars), tuple(b))

    def x(self, j: int) -> Poly:
        return self.ring.var(self.xvars[j])

    def y(self, j: int) -> Poly:
        return self.ring.var(self.yvars[j])


def _entry_diff(e, name):
    return e.diff(name) if isinstance(e, Poly) else 0


def _entry_subst(e, repl):
    return e.subst(repl) if isinstance(e, Poly) else e


def _splits(alpha):
    """All (gamma, delta, binom) with gamma + delta = alpha componentwise."""
    ranges = [range(k + 1) for k in alpha]
    for gamma in product(*ranges):
        delta = tuple(a - g for a, g in zip(alpha, gamma))
        c = 1
        for a, g in zip(alpha, gamma):
            c *= binomial(a, g)
        yield gamma, delta, c


def _tuple_add(a, b):
    return tuple(map(int.__add__, a, b))


class WeylOperator:
    __slots__ = ("space", "shape", "terms")

    def __init__(self, space: OpSpace, shape, terms):
        self.space = space
        self.shape = tuple(shape)
        nx, ny = len(space.xvars), len(space.yvars)
        for a, b in terms:
            if len(a) != nx or len(b) != ny:
                raise ValueError(f"malformed derivative key ({a}, {b}) "
                                 f"for {nx}+{ny} variables")
        self.terms = {k: m for k, m in terms.items() if not m.is_zero()}

    @staticmethod
    def zero(space: OpSpace, shape) -> "WeylOperator":
        return WeylOperator(space, shape, {})

    @staticmethod
    def from_matrix(space: OpSpace, mat: Matrix) -> "WeylOperator":
        """Order-zero operator (multiplication by a matrix polynomial)."""
        return WeylOperator(space, mat.shape, {space.zero_key(): mat})

    def _check(self, other: "WeylOperator"):
        if self.space != other.space:
            raise ValueError("operators on different variable layouts")

    def __add__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("operator shape mismatch")
        out = dict(self.terms)
        for k, m in other.terms.items():
            cur = out.get(k)
            out[k] = m if cur is None else cur + m
        return WeylOperator(self.space, self.shape, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return WeylOperator(self.space, self.shape,
                            {k: -m for k, m in self.terms.items()})

    def __rmul__(self, c):
        """Scalar (or polynomial) multiple from the left."""
        return WeylOperator(self.space, self.shape,
                            {k: m.map(lambda e: c * e) for k, m in self.terms.items()})

    def compose(self, other: "WeylOperator") -> "WeylOperator":
        """Normal-ordered composition self after other (Leibniz expansion)."""
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot compose shapes {self.shape} and {other.shape}")
        space = self.space
        xv, yv = space.xvars, space.yvars
        out = {}
        for (a2, b2), m2 in other.terms.items():
            deriv_cache = {((0,) * len(xv), (0,) * len(yv)): m2}

            def deriv(da, db, _cache=deriv_cache, _m2=m2):
                key = (da, db)
                got = _cache.get(key)
                if got is not None:
                    return got
                # peel one derivative off an already-computed entry
                for i, k in enumerate(da):
                    if k:
                        prev = deriv(da[:i] + (k - 1,) + da[i + 1:], db)
                        got = prev.map(lambda e: _entry_diff(e, xv[i]))
                        break
                else:
                    for i, k in enumerate(db):
                        if k:
                            prev = deriv(da, db[:i] + (k - 1,) + db[i + 1:])
                            got = prev.map(lambda e: _entry_diff(e, yv[i]))
                            break
                _cache[key] = got
                return got

            for (a1, b1), m1 in self.terms.items():
                for ga, da, ca in _splits(a1):
                    for gb, db, cb in _splits(b1):
                        dm = deriv(da, db)
                        if dm.is_zero():
                            continue
                        coef = ca * cb
                        prod_m = m1 @ dm
                        if coef != 1:
                            prod_m = prod_m.map(lambda e: coef * e)
                        key = (_tuple_add(ga, a2), _tuple_add(gb, b2))
                        cur = out.get(key)
                        out[key] = prod_m if cur is None else cur + prod_m
        return WeylOperator(space, (self.shape[0], other.shape[1]), out)

    def apply(self, vec):
        """Apply to a column vector of polynomials; exact."""
        if len(vec) != self.shape[1]:
            raise ValueError("vector length mismatch")
        space = self.space
        out = [space.ring.zero] * self.shape[0]
        for (a, b), m in self.terms.items():
            dvec = list(vec)
            for i, k in enumerate(a):
                for _ in range(k):
                    dvec = [_entry_diff(f, space.xvars[i]) for f in dvec]
            for i, k in enumerate(b):
                for _ in range(k):
                    dvec = [_entry_diff(f, space.yvars[i]) for f in dvec]
            for r, val in enumerate(m.apply(dvec)):
                out[r] = out[r] + val
        return out

    def map_coeffs(self, fn) -> "WeylOperator":
        return WeylOperator(self.space, self.shape,
                            {k: m.map(fn) for k, m in self.terms.items()})

    def subst_params(self, repl: dict) -> "WeylOperator":
        """Substitute formal parameters inside every coefficient."""
        return self.map_coeffs(lambda e: _entry_subst(e, repl))

    def restrict_diagonal(self) -> "WeylOperator":
        """Replace y_j by x_j in every coefficient (keys untouched)."""
        space = self.space
        repl = {yv: space.ring.var(xv) for yv, xv in zip(space.yvars, space.xvars)}
        return self.subst_params(repl)

    def tensor_with_identity(self, dim: int, side: str) -> "WeylOperator":
        """kron(M, Id) for side "left" (operator acts on the first tensor
        factor) or kron(Id, M) for side "right"."""
        eye = Matrix.identity(dim)
        if side == "left":
            fn = lambda m: m.kron(eye)
        elif side == "right":
            fn = lambda m: eye.kron(m)
        else:
            raise ValueError("side must be 'left' or 'right'")
        return WeylOperator(self.space, (self.shape[0] * dim, self.shape[1] * dim),
                            {k: fn(m) for k, m in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.space == other.space and self.shape == other.shape \
            and (self - other).is_zero()

    __hash__ = None

    def is_translation_invariant(self) -> bool:
        """True iff every coefficient depends on (x, y) only through x - y."""
        space = self.space
        for m in self.terms.values():
            for row in m.rows:
                for e in row:
                    if not isinstance(e, Poly):
                        continue
                    for xv, yv in zip(space.xvars, space.yvars):
                        if e.diff(xv) + e.diff(yv):
                            return False
        return True

    def max_orders(self):
        ax = max((sum(a) for a, _ in self.terms), default=0)
        ay = max((sum(b) for _, b in self.terms), default=0)
        return ax, ay

    def sorted_terms(self):
        """Deterministic graded-lex order on (a, b), ascending."""
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0][0]) + sum(t[0][1]), t[0]))

    def symbol(self, xi_names, zeta_names=()) -> "OperatorSymbol":
        """Replace dx^a dy^b by (i xi)^a (i zeta)^b.

        The frequency variables must already be names of the ring.
        """
        space = self.space
        ring = space.ring
        acc = Matrix.zeros(*self.shape)
        for (a, b), m in self.terms.items():
            mono = ring.one
            for name, k in zip(xi_names, a):
                if k:
                    mono = mono * ring.var(name) ** k
            for name, k in zip(zeta_names, b):
                if k:
                    mono = mono * ring.var(name) ** k
            factor = I_UNIT ** (sum(a) + sum(b)) * mono
            acc = acc + m.map(lambda e: e * factor if e else 0)
        return OperatorSymbol(ring, tuple(xi_names), tuple(zeta_names), acc)

    def __repr__(self):
        return f"WeylOperator(shape={self.shape}, terms={len(self.terms)})"


@dataclass
class OperatorSymbol:
    """Matrix-valued polynomial in (x, y, xi, zeta)."""

    ring: PolyRing
    xi: tuple
    zeta: tuple
    mat: Matrix

    def __eq__(self, other):
        return isinstance(other, OperatorSymbol) and self.mat == other.mat

    def to_weyl(self, space: OpSpace) -> "WeylOperator":
        """Inverse of WeylOperator.symbol (bijective on matrix polynomials)."""
        ring = space.ring
        nx, ny = len(space.xvars), len(space.yvars)
        if len(self.xi) not in (0, nx) or len(self.zeta) not in (0, ny):
            raise ValueError("frequency names do not match the variable layout")
        fpos_x = [ring.index[v] for v in self.xi]
        fpos_y = [ring.index[v] for v in self.zeta]
        fset = set(fpos_x) | set(fpos_y)
        zero_a, zero_b = (0,) * nx, (0,) * ny
        rows, cols = self.mat.shape
        buckets: dict = {}
        for r in range(rows):
            for c in range(cols):
                e = self.mat[r, c]
                if not isinstance(e, Poly):
                    if e:
                        buckets.setdefault((zero_a, zero_b), {}).setdefault(
                            (r, c), []).append((ring._zexp, e))
                    continue
                for exp, coeff in e.terms.items():
                    a = tuple(exp[i] for i in fpos_x) if fpos_x else zero_a
                    b = tuple(exp[i] for i in fpos_y) if fpos_y else zero_b
                    base = tuple(0 if i in fset else k for i, k in enumerate(exp))
                    # divide by i^{|a|+|b|}
                    scale = (-I_UNIT) ** (sum(a) + sum(b))
                    buckets.setdefault((a, b), {}).setdefault((r, c), []).append(
                        (base, coeff * scale))
        terms = {}
        for key, entries in buckets.items():
            grid = [[0] * cols for _ in range(rows)]
            for (r, c), monos in entries.items():
                acc = {}
                for base, coeff in monos:
                    cur = acc.get(base)
                    cur = coeff if cur is None else cur + coeff
                    if cur:
                        acc[base] = cur
                    else:
                        acc.pop(base, None)
                grid[r][c] = Poly(ring, acc)
            terms[key] = Matrix(grid)
        return WeylOperator(space, (rows, cols), terms)


def laplacian(space: OpSpace, block: str, dim: int) -> WeylOperator:
    """Delta on the chosen block, tensored with an identity matrix."""
    eye = Matrix.identity(dim)
    nvars = len(space.xvars if block == "x" else space.yvars)
    terms = {}
    for j in range(nvars):
        key = space.dx_key(j, 2) if block == "x" else space.dy_key(j, 2)
        terms[key] = eye
    return WeylOperator(space, (dim, dim), terms)


def first_derivative(space: OpSpace, block: str, j: int, mat: Matrix) -> WeylOperator:
    key = space.dx_key(j) if block == "x" else space.dy_key(j)
    return WeylOperator(space, mat.shape, {key: mat})


def dirac_operator(space: OpSpace, block: str, module) -> WeylOperator:
    """sum_j rho(e_j) d/dx_j on the chosen block for a (dual) module."""
    terms = {}
    for j in range(module.n):
        key = space.dx_key(j) if block == "x" else space.dy_key(j)
        terms[key] = module.gamma[j]
    return WeylOperator(space, (module.dim, module.dim), terms)
