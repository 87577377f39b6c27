"""Exact Clifford algebras Cl(p,q) over any scalar ring of the tower.

A multivector is a sparse map from basis blades to scalars.  Blades are
bitmaks over generator positions; the generator labelled ``start + i``
occupies bit ``i``.  Two signatures are exercised downstream:

  * the Euclidean algebra on generators e_1..e_n with e_j*e_j = -1
    (relation x*y + y*x = -2<x,y>), and
  * the Lorentzian algebra on e_0..e_{n+1} with e_0*e_0 = +1 and
    e_j*e_j = -1 otherwise (relation x*y + y*x = 2*Q(x,y)).

Both conventions are carried by the diagonal of the signature rather than
hardcoded.  The product sign of a blade pair is computed once per
signature (transposition counting plus diagonal contractions) and cached.
"""

from __future__ import annotations


class Signature:
    """Diagonal quadratic form: squares[i] is the square of generator i."""

    __slots__ = ("squares", "start", "_cache")

    def __init__(self, squares, start: int = 1):
        self.squares = tuple(squares)
        if any(s not in (1, -1) for s in self.squares):
            raise ValueError("generator squares must be +1 or -1")
        self.start = start
        self._cache = {}

    @property
    def dim(self) -> int:
        return len(self.squares)

    def generators(self):
        return range(self.start, self.start + self.dim)

    def blade_mul(self, a: int, b: int):
        """Product of basis blades: returns (sign, blade mask)."""
        got = self._cache.get((a, b))
        if got is None:
            swaps = 0
            bb = b
            while bb:
                i = (bb & -bb).bit_length() - 1
                swaps += (a >> (i + 1)).bit_count()
                bb &= bb - 1
            sign = -1 if swaps & 1 else 1
            common = a & b
            while common:
                i = (common & -common).bit_length() - 1
                sign *= self.squares[i]
                common &= common - 1
            got = (sign, a ^ b)
            self._cache[(a, b)] = got
        return got

    def blade_label(self, mask: int) -> str:
        if not mask:
            return "1"
        return "^".join(f"e{i + self.start}" for i in range(self.dim) if mask >> i & 1)

    def __eq__(self, other):
        return (isinstance(other, Signature) and self.squares == other.squares
                and self.start == other.start)

    def __hash__(self):
        return hash((self.squares, self.start))

    def __repr__(self):
        return f"Signature({self.squares}, start={self.start})"


def euclidean(n: int) -> Signature:
    """cl(R^n): generators e_1..e_n, all squaring to -1."""
    return Signature((-1,) * n, start=1)


def lorentzian(n: int) -> Signature:
    """Cl(1, n+1): generators e_0..e_{n+1} with e_0^2 = +1."""
    return Signature((1,) + (-1,) * (n + 1), start=0)


def _alpha_sign(grade: int) -> int:
    # conjugation alpha: anti-involution with alpha(x) = -x on vectors
    return -1 if grade * (grade + 1) // 2 & 1 else 1


class Multivector:
    """Sparse multivector: blade mask -> nonzero scalar coefficient."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: dict):
        self.sig = sig
        self.terms = terms

    @staticmethod
    def zero(sig: Signature) -> "Multivector":
        return Multivector(sig, {})

    @staticmethod
    def scalar(sig: Signature, c) -> "Multivector":
        return Multivector(sig, {0: c} if c else {})

    @staticmethod
    def blade(sig: Signature, indices, c=1) -> "Multivector":
        """Basis blade from increasing generator indices (labels)."""
        mask = 0
        prev = None
        for i in indices:
            pos = i - sig.start
            if not 0 <= pos < sig.dim:
                raise ValueError(f"generator e{i} not in signature")
            if prev is not None and i <= prev:
                raise ValueError("blade indices must be strictly increasing")
            prev = i
            mask |= 1 << pos
        return Multivector(sig, {mask: c} if c else {})

    @staticmethod
    def vector(sig: Signature, coords) -> "Multivector":
        """Grade-1 element from coordinates in generator order."""
        coords = list(coords)
        if len(coords) != sig.dim:
            raise ValueError("coordinate count mismatch")
        return Multivector(sig, {1 << i: c for i, c in enumerate(coords) if c})

    def _check(self, other: "Multivector"):
        if self.sig != other.sig:
            raise ValueError("multivectors from different signatures")

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            out = dict(self.terms)
            for m, c in other.terms.items():
                s = out.get(m)
                if s is None:
                    out[m] = c
                else:
                    s = s + c
                    if s:
                        out[m] = s
                    else:
                        del out[m]
            return Multivector(self.sig, out)
        return self + Multivector.scalar(self.sig, other)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            other = Multivector.scalar(self.sig, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector(self.sig, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            blade_mul = self.sig.blade_mul
            out = {}
            get = out.get
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    sign, m = blade_mul(m1, m2)
                    c = c1 * c2 if sign > 0 else -(c1 * c2)
                    s = get(m)
                    out[m] = c if s is None else s + c
            return Multivector(self.sig, {m: c for m, c in out.items() if c})
        # scalar multiplication
        return Multivector(self.sig, {m: c * other for m, c in self.terms.items()
                                      if c * other})

    def __rmul__(self, other):
        return Multivector(self.sig, {m: other * c for m, c in self.terms.items()
                                      if other * c})

    def __pow__(self, k: int):
        out = Multivector.scalar(self.sig, 1)
        for _ in range(k):
            out = out * self
        return out

    def alpha(self) -> "Multivector":
        """Clifford conjugation: anti-involution with alpha(x) = -x on vectors."""
        return Multivector(self.sig, {
            m: c if _alpha_sign(m.bit_count()) > 0 else -c
            for m, c in self.terms.items()
        })

    def grade(self, k: int) -> "Multivector":
        return Multivector(self.sig, {m: c for m, c in self.terms.items()
                                      if m.bit_count() == k})

    def grades(self):
        return sorted({m.bit_count() for m in self.terms})

    def is_grade(self, k: int) -> bool:
        return all(m.bit_count() == k for m in self.terms)

    def scalar_part(self):
        return self.terms.get(0, 0)

    def coeff(self, indices):
        mask = 0
        for i in indices:
            mask |= 1 << (i - self.sig.start)
        return self.terms.get(mask, 0)

    def vector_coords(self):
        """Coordinates of the grade-1 part, in generator order."""
        return [self.terms.get(1 << i, 0) for i in range(self.sig.dim)]

    def map_scalars(self, fn) -> "Multivector":
        out = {m: fn(c) for m, c in self.terms.items()}
        return Multivector(self.sig, {m: c for m, c in out.items() if c})

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.sig == other.sig and not (self - other)
        return not (self - Multivector.scalar(self.sig, other))

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (t[0].bit_count(), t[0]))
        return " + ".join(f"{c}*{self.sig.blade_label(m)}" for m, c in items)

    def __repr__(self):
        return f"Multivector({self})"


class ExteriorElement:
    """Element of the exterior algebra on the same labelled generators.

    Shares the blade-mask representation with multivectors so that the
    quantization map is coefficientwise on the e_I basis.
    """

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: dict):
        self.sig = sig
        self.terms = terms

    @staticmethod
    def blade(sig: Signature, indices, c=1) -> "ExteriorElement":
        mv = Multivector.blade(sig, indices, c)
        return ExteriorElement(sig, mv.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ExteriorElement(self.sig, out)

    def __rmul__(self, other):
        return ExteriorElement(self.sig, {m: other * c for m, c in self.terms.items()
                                          if other * c})

    def wedge(self, other: "ExteriorElement") -> "ExteriorElement":
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue
                sign, m = self.sig.blade_mul(m1, m2)
                c = c1 * c2 if sign > 0 else -(c1 * c2)
                s = out.get(m, 0) + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return ExteriorElement(self.sig, out)

    def __eq__(self, other):
        return isinstance(other, ExteriorElement) and self.sig == other.sig \
            and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"ExteriorElement({Multivector(self.sig, self.terms)})"


def quantize(omega: ExteriorElement) -> Multivector:
    """Quantization map: e_{i1} ^ ... ^ e_{ik} -> e_{i1} * ... * e_{ik}.

    On the increasing-index basis the Clifford product of distinct
    generators is the basis blade itself, so the map is coefficientwise.
    """
    return Multivector(omega.sig, dict(omega.terms))


def symbol(a: Multivector) -> ExteriorElement:
    """Symbol map, the inverse of quantization."""
    return ExteriorElement(a.sig, dict(a.terms))


def versor_norm(g: Multivector):
    """g * alpha(g), which must be a scalar (+1 or -1) for a versor."""
    p = g * g.alpha()
    if not p.is_grade(0):
        raise ValueError("not a versor: g*alpha(g) is not scalar")
    return p.scalar_part()


class Versor:
    """Invertible product of vectors, carrying its parity."""

    __slots__ = ("mv", "parity", "norm")

    def __init__(self, mv: Multivector):
        grades = mv.grades()
        if all(g % 2 == 0 for g in grades):
            self.parity = 0
        elif all(g % 2 == 1 for g in grades):
            self.parity = 1
        else:
            raise ValueError("versor must be purely even or purely odd")
        n = versor_norm(mv)
        if n != 1 and n != -1:
            raise ValueError("versor norm must be +1 or -1")
        self.mv = mv
        self.norm = 1 if n == 1 else -1

    def inverse_mv(self) -> Multivector:
        inv = self.mv.alpha()
        return inv if self.norm == 1 else -inv


def versor_adjoint(g, x: Multivector, mode: str = "pin_conj") -> Multivector:
    """Adjoint action of a versor on a vector.

    mode "pin_conj" computes g x g^{-1} (Euclidean convention); mode
    "lorentz_alpha" computes g x alpha(g) (the isometry action used in the
    Lorentzian algebra, where group elements satisfy g*alpha(g) = 1).
    """
    if not isinstance(g, Versor):
        g = Versor(g)
    if not x.is_grade(1):
        raise ValueError("versor_adjoint expects a grade-1 argument")
    if mode == "pin_conj":
        y = g.mv * x * g.inverse_mv()
    elif mode == "lorentz_alpha":
        y = g.mv * x * g.mv.alpha()
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not y.is_grade(1):
        raise ValueError("adjoint action did not return a vector")
    return y


def tau_matrix(g, sig: Signature, mode: str = "pin_conj"):
    """Matrix (list of columns) of the induced isometry on the vector space."""
    cols = []
    for i in sig.generators():
        e_i = Multivector.blade(sig, (i,))
        cols.append(versor_adjoint(g, e_i, mode).vector_coords())
    # columns to rows-of-matrix layout: entry [r][c] = coefficient of e_r in tau(e_c)
    return [list(row) for row in zip(*cols)]


def sum_e_i_a_e_i(a: Multivector) -> Multivector:
    """Sum over generators of e_i * a * e_i (Euclidean contraction lemma)."""
    sig = a.sig
    out = Multivector.zero(sig)
    for i in sig.generators():
        e_i = Multivector.blade(sig, (i,))
        out = out + e_i * a * e_i
    return out
