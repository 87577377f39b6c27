"""The graded ring of radial symbols: finite sums of terms

    P(x, y, xi, zeta) |xi|^(base_1 + 2 a) |zeta|^(base_2 + 2 b)

with formal exponent bases (affine in the formal parameters s, t), integer
offsets (a, b), and matrix coefficients P over the rational-function field
in the parameters.  The ring is closed under differentiation in the radial
variables via  d_j |v|^c = c v_j |v|^(c-2)  and under left multiplication
by matrix polynomials.

Equality collects terms onto common lowest offsets, multiplying the
polynomial coefficients by |v|^2 as needed, and tests the resulting single
matrix for zero; this is exact, and faithful because |v|^2 is not a zero
divisor.  Mixed-parity powers never arise: every operation shifts
exponents by even amounts only.
"""

from __future__ import annotations

from math import factorial
from itertools import product

from .linalg import Matrix
from .scalars import I_UNIT, Poly, PolyRing, Q, RationalFunction


class RadialBlock:
    """One radial factor: variable names plus the base exponent of |v|."""

    __slots__ = ("vars", "base", "_norm")

    def __init__(self, vars, base: Poly):
        self.vars = tuple(vars)
        self.base = base
        ring = base.ring
        acc = ring.zero
        for v in self.vars:
            acc = acc + ring.var(v) ** 2
        self._norm = acc

    @property
    def norm_sq(self) -> Poly:
        return self._norm

    def __eq__(self, other):
        return (isinstance(other, RadialBlock) and self.vars == other.vars
                and self.base == other.base)

    __hash__ = None


def _to_rf(entry, ring: PolyRing) -> RationalFunction:
    if isinstance(entry, RationalFunction):
        return entry
    return RationalFunction(ring.const(entry))


class RieszSymbol:
    __slots__ = ("ring", "blocks", "shape", "terms")

    def __init__(self, ring: PolyRing, blocks, shape, terms):
        self.ring = ring
        self.blocks = tuple(blocks)
        self.shape = tuple(shape)
        self.terms = {off: m for off, m in terms.items() if not m.is_zero()}

    @staticmethod
    def zero(ring, blocks, shape) -> "RieszSymbol":
        return RieszSymbol(ring, blocks, shape, {})

    def _alignment(self, other: "RieszSymbol"):
        """Per-block offset shifts translating other's lattice onto ours.

        Bases may differ by an even integer (|v|^(s-2+2a) and |v|^(s+2a)
        live on the same lattice); anything else is incompatible.
        """
        if self.ring.names != other.ring.names or self.shape != other.shape \
                or len(self.blocks) != len(other.blocks):
            raise ValueError("incompatible radial symbols")
        shifts = []
        for mine, theirs in zip(self.blocks, other.blocks):
            if mine.vars != theirs.vars:
                raise ValueError("incompatible radial symbols")
            gap = theirs.base - mine.base
            if not gap:
                shifts.append(0)
                continue
            if not gap.is_constant():
                raise ValueError("radial bases differ by a non-constant")
            val = gap.constant_value()
            if getattr(val, "denominator", 1) != 1 or int(val) % 2:
                raise ValueError("radial bases differ by an odd or fractional amount")
            shifts.append(int(val) // 2)
        return tuple(shifts)

    def __add__(self, other):
        if not isinstance(other, RieszSymbol):
            return NotImplemented
        shifts = self._alignment(other)
        out = dict(self.terms)
        for off, m in other.terms.items():
            key = tuple(o + s for o, s in zip(off, shifts))
            cur = out.get(key)
            out[key] = m if cur is None else cur + m
        return RieszSymbol(self.ring, self.blocks, self.shape, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RieszSymbol(self.ring, self.blocks, self.shape,
                           {off: -m for off, m in self.terms.items()})

    def scale(self, c) -> "RieszSymbol":
        """Multiply by a scalar, polynomial or rational function."""
        factor = _to_rf(c, self.ring)
        return RieszSymbol(self.ring, self.blocks, self.shape, {
            off: m.map(lambda e: factor * e if e else 0)
            for off, m in self.terms.items()
        })

    def left_mul(self, mat: Matrix) -> "RieszSymbol":
        """Left-multiply every coefficient by a matrix (polynomial entries
        allowed, including the radial variables); this is the composition
        rule for a differential operator applied after a convolution."""
        lifted = mat.map(lambda e: _to_rf(e, self.ring) if e else 0)
        return RieszSymbol(self.ring, self.blocks,
                           (mat.shape[0], self.shape[1]),
                           {off: lifted @ m for off, m in self.terms.items()})

    def _block_of(self, var: str) -> int:
        for i, b in enumerate(self.blocks):
            if var in b.vars:
                return i
        raise KeyError(f"{var!r} is not a radial variable of this symbol")

    def diff(self, var: str) -> "RieszSymbol":
        bi = self._block_of(var)
        block = self.blocks[bi]
        v = self.ring.var(var)
        out = {}

        def _acc(off, m):
            cur = out.get(off)
            out[off] = m if cur is None else cur + m

        for off, m in self.terms.items():
            d1 = m.map(lambda e: e.diff(var) if isinstance(e, RationalFunction) else 0)
            if not d1.is_zero():
                _acc(off, d1)
            exponent = block.base + 2 * off[bi]
            factor = _to_rf(exponent * v, self.ring)
            d2 = m.map(lambda e: factor * e if e else 0)
            if not d2.is_zero():
                off2 = off[:bi] + (off[bi] - 1,) + off[bi + 1:]
                _acc(off2, d2)
        return RieszSymbol(self.ring, self.blocks, self.shape, out)

    def laplacian(self, block_index: int) -> "RieszSymbol":
        acc = RieszSymbol.zero(self.ring, self.blocks, self.shape)
        for v in self.blocks[block_index].vars:
            acc = acc + self.diff(v).diff(v)
        return acc

    def tensor(self, other: "RieszSymbol") -> "RieszSymbol":
        if self.ring.names != other.ring.names:
            raise ValueError("tensor factors over different rings")
        terms = {}
        for off1, m1 in self.terms.items():
            for off2, m2 in other.terms.items():
                key = off1 + off2
                m = m1.kron(m2)
                cur = terms.get(key)
                terms[key] = m if cur is None else cur + m
        return RieszSymbol(self.ring, self.blocks + other.blocks,
                           (self.shape[0] * other.shape[0],
                            self.shape[1] * other.shape[1]), terms)

    def flattened(self):
        """(minimal offsets, single coefficient matrix) with all terms
        brought to the common lowest power of each |v|."""
        if not self.terms:
            return None
        mins = tuple(min(off[i] for off in self.terms)
                     for i in range(len(self.blocks)))
        acc = Matrix.zeros(*self.shape)
        for off, m in self.terms.items():
            factor = self.ring.one
            for i, block in enumerate(self.blocks):
                gap = off[i] - mins[i]
                if gap:
                    factor = factor * block.norm_sq ** gap
            if factor == self.ring.one:
                acc = acc + m
            else:
                rf = RationalFunction(factor)
                acc = acc + m.map(lambda e: rf * e if e else 0)
        return mins, acc

    def is_zero(self) -> bool:
        flat = self.flattened()
        return flat is None or flat[1].is_zero()

    def __eq__(self, other):
        if not isinstance(other, RieszSymbol):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"RieszSymbol(blocks={len(self.blocks)}, terms={len(self.terms)})"


def clifford_riesz_symbol(ring: PolyRing, var_names, exponent: Poly,
                          module) -> RieszSymbol:
    """The radial symbol |v|^(exponent-1) rho(v) of the spinor-valued
    Riesz family, as a single-block symbol."""
    block = RadialBlock(var_names, exponent - 1)
    d = module.dim
    rho_v = Matrix.zeros(d, d)
    for j, name in enumerate(var_names):
        v = ring.var(name)
        rho_v = rho_v + module.gamma[j].map(lambda e: e * v if e else 0)
    mat = rho_v.map(lambda e: RationalFunction(e) if e else 0)
    return RieszSymbol(ring, (block,), (d, d), {(0,): mat})


def scalar_riesz_symbol(ring: PolyRing, var_names, exponent: Poly) -> RieszSymbol:
    """The scalar radial symbol |v|^exponent."""
    block = RadialBlock(var_names, exponent)
    one = Matrix([[RationalFunction(ring.one)]])
    return RieszSymbol(ring, (block,), (1, 1), {(0,): one})


def compose_with_multiplication(sym: RieszSymbol, p: Poly, pairs) -> RieszSymbol:
    """Symbol of (convolution with symbol sym) composed after multiplication
    by the scalar polynomial p: the finite Taylor-type sum

        sum_alpha (1/alpha!) (d_x^alpha p) ((1/i) d_freq)^alpha sym

    pairs maps each position variable of p to its frequency variable.
    """
    if isinstance(p, Matrix):
        raise TypeError("the multiplication composition rule requires a "
                        "scalar-valued polynomial")
    pos_vars = [a for a, _ in pairs]
    freq_vars = [b for _, b in pairs]
    bound = p.total_degree()
    out = RieszSymbol.zero(sym.ring, sym.blocks, sym.shape)
    for alpha in product(range(bound + 1), repeat=len(pairs)):
        if sum(alpha) > bound:
            continue
        dp = p
        for v, k in zip(pos_vars, alpha):
            for _ in range(k):
                dp = dp.diff(v)
            if not dp:
                break
        if not dp:
            continue
        dsym = sym
        for v, k in zip(freq_vars, alpha):
            for _ in range(k):
                dsym = dsym.diff(v)
        inv_fact = Q(1)
        for k in alpha:
            inv_fact = inv_fact / factorial(k)
        coeff = ((-I_UNIT) ** sum(alpha) * inv_fact) * dp
        out = out + dsym.scale(coeff)
    return out
