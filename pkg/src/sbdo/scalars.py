"""Exact scalar tower used by every other module.

The tower, from bottom to top:

  rationals  <  Gaussian rationals  <  sparse multivariate polynomials
                                       <  rational functions

plus two wrappers that can sit on top of any level: first-order jets
(dual numbers, ``a + t*b`` with ``t**2 = 0``) and a single quadratic
extension ``a + b*sqrt(d)``.

Rationals are ``gmpy2.mpq`` when available (much faster), otherwise
``fractions.Fraction``; both keep gcd-reduced numerator/denominator with a
positive denominator.  A polynomial is a dict mapping exponent tuples to
coefficients; the zero polynomial is the empty dict and zero coefficients
are never stored.  Rational functions are reduced lazily: arithmetic only
cross-multiplies, zero/equality tests are exact, and full multivariate gcd
reduction happens in :meth:`RationalFunction.reduced` (emission paths).

No floating point appears anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    Q = Fraction

QZERO = Q(0)
QONE = Q(1)
QHALF = Q(1, 2)

_RATIONAL_TYPES = tuple({int, Fraction, type(QZERO)})


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES)


def rational_sqrt(q):
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        raise ValueError("rational_sqrt of a negative value")
    num = int(q if isinstance(q, int) else q.numerator)
    den = 1 if isinstance(q, int) else int(q.denominator)
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Q(rn, rd)
    return None


def scalar_str(x) -> str:
    """Canonical rendering: rationals as "a/b" (or "a"), Gaussian rationals
    as "a/b+c/d*i"."""
    if isinstance(x, GaussianRational):
        if not x.im:
            return scalar_str(x.re)
        re, im = scalar_str(x.re), scalar_str(abs(x.im))
        return f"{re}{'+' if x.im > 0 else '-'}{im}*i"
    if isinstance(x, int):
        return str(x)
    if is_rational(x):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    raise TypeError(f"no canonical string for {type(x).__name__}")


class GaussianRational:
    """Element a + b*i of Q(i); conjugation is the involutive automorphism."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = QONE * re
        self.im = QONE * im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if is_rational(other):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _as_gaussian(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if is_rational(other):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _as_gaussian(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_gaussian(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out, base = GaussianRational(1), self
        while k:
            if k & 1:
                out = out * base
            base, k = base * base, k >> 1
        return out

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = _as_gaussian(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return scalar_str(self)


def _as_gaussian(x):
    if isinstance(x, GaussianRational):
        return x
    if is_rational(x):
        return GaussianRational(x)
    return None


I_UNIT = GaussianRational(0, 1)


class Jet:
    """First-order jet ``val + t*eps`` with ``t**2 = 0`` over any ring.

    Scalars of the tower (rationals, Gaussian rationals, polynomials,
    rational functions, square-root extensions) are treated as constants;
    container types (matrices, multivectors) are deliberately refused so
    that their own coercion scales entrywise instead of wrapping.
    """

    __slots__ = ("val", "eps")

    def __init__(self, val, eps=0):
        self.val = val
        self.eps = eps

    @staticmethod
    def _const_ok(x) -> bool:
        return _is_coeff(x) or isinstance(x, (Poly, RationalFunction))

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val, self.eps + other.eps)
        if self._const_ok(other):
            return Jet(self.val + other, self.eps)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            return self + (-other)
        if self._const_ok(other):
            return Jet(self.val - other, self.eps)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val * other.val, self.val * other.eps + self.eps * other.val)
        if self._const_ok(other):
            return Jet(self.val * other, self.eps * other)
        return NotImplemented

    def __rmul__(self, other):
        if self._const_ok(other):
            return Jet(other * self.val, other * self.eps)
        return NotImplemented

    def __neg__(self):
        return Jet(-self.val, -self.eps)

    def inverse(self) -> "Jet":
        # (a + tb)^(-1) = a^(-1) - t b a^(-2); requires invertible value part
        iv = QONE / self.val if is_rational(self.val) else self.val.inverse()
        return Jet(iv, -(iv * self.eps * iv))

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.inverse()
        if self._const_ok(other):
            return Jet(self.val / other, self.eps / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if self._const_ok(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, k: int):
        if k == 0:
            return Jet(1)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def sqrt(self) -> "Jet":
        """Exact square root; value part must be a perfect rational square."""
        r = rational_sqrt(self.val)
        if r is None:
            raise ValueError("jet value part is not a perfect square")
        return Jet(r, self.eps / (2 * r))

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.val == other.val and self.eps == other.eps
        return self.val == other and not self.eps

    def __hash__(self):
        return hash((self.val, self.eps))

    def __bool__(self):
        return bool(self.val) or bool(self.eps)

    def __repr__(self):
        return f"Jet({self.val!r}, {self.eps!r})"


class SqrtExt:
    """Element a + b*sqrt(d) of the quadratic extension Q(sqrt(d)).

    A single extension only; mixing elements with different d is an error.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        self.a = QONE * a
        self.b = QONE * b
        self.d = QONE * d

    def _check(self, other):
        if other.d != self.d:
            raise ValueError("mixing distinct quadratic extensions")

    def __add__(self, other):
        if isinstance(other, SqrtExt):
            self._check(other)
            return SqrtExt(self.a + other.a, self.b + other.b, self.d)
        if is_rational(other):
            return SqrtExt(self.a + other, self.b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SqrtExt):
            self._check(other)
            return SqrtExt(
                self.a * other.a + self.d * self.b * other.b,
                self.a * other.b + self.b * other.a,
                self.d,
            )
        if is_rational(other):
            return SqrtExt(self.a * other, self.b * other, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "SqrtExt":
        n = self.a * self.a - self.d * self.b * self.b
        if not n:
            raise ZeroDivisionError("inverse of zero (or d is a square)")
        return SqrtExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if is_rational(other):
            return SqrtExt(self.a / other, self.b / other, self.d)
        if isinstance(other, SqrtExt):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other) or isinstance(other, SqrtExt):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self):
        return SqrtExt(-self.a, -self.b, self.d)

    def __eq__(self, other):
        if isinstance(other, SqrtExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if is_rational(other):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash(self.a) if not self.b else hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"{self.a}+{self.b}*sqrt({self.d})"


_COEFF_TYPES = _RATIONAL_TYPES + (GaussianRational, SqrtExt)


def _is_coeff(x) -> bool:
    return isinstance(x, _COEFF_TYPES)


class PolyRing:
    """Polynomial ring with a fixed, ordered tuple of indeterminate names."""

    __slots__ = ("names", "index", "_zexp", "zero", "one")

    def __init__(self, names):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate indeterminate names")
        self.index = {v: i for i, v in enumerate(self.names)}
        self._zexp = (0,) * len(self.names)
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zexp: 1})

    def var(self, name: str) -> "Poly":
        i = self.index.get(name)
        if i is None:
            raise KeyError(f"unknown indeterminate {name!r}")
        exp = [0] * len(self.names)
        exp[i] = 1
        return Poly(self, {tuple(exp): 1})

    def const(self, c) -> "Poly":
        if isinstance(c, Poly):
            if c.ring is not self:
                return c.lift(self)
            return c
        return Poly(self, {self._zexp: c} if c else {})

    def extend(self, extra_names) -> "PolyRing":
        return PolyRing(self.names + tuple(extra_names))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing{self.names}"


def _grlex_key(exp):
    return (sum(exp), exp)


class Poly:
    """Sparse multivariate polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def _clean(terms: dict) -> dict:
        return {e: c for e, c in terms.items() if c}

    def _same_ring(self, other: "Poly"):
        if self.ring.names != other.ring.names:
            raise ValueError("polynomials from different rings")

    def __add__(self, other):
        if isinstance(other, Poly):
            self._same_ring(other)
            out = dict(self.terms)
            for e, c in other.terms.items():
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
            return Poly(self.ring, out)
        if _is_coeff(other):
            return self + self.ring.const(other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        o = other if isinstance(other, Poly) else (
            self.ring.const(other) if _is_coeff(other) else None)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        if _is_coeff(other):
            return self.ring.const(other) + (-self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._same_ring(other)
            out = {}
            get = out.get
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(map(int.__add__, e1, e2))
                    c = c1 * c2
                    s = get(e)
                    out[e] = c if s is None else s + c
            return Poly(self.ring, self._clean(out))
        if _is_coeff(other):
            if not other:
                return self.ring.zero
            return Poly(self.ring, self._clean({e: c * other for e, c in self.terms.items()}))
        return NotImplemented

    def __rmul__(self, other):
        if _is_coeff(other):
            if not other:
                return self.ring.zero
            return Poly(self.ring, self._clean({e: other * c for e, c in self.terms.items()}))
        return NotImplemented

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out, base = self.ring.one, self
        while k:
            if k & 1:
                out = out * base
            base, k = base * base, k >> 1
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        if _is_coeff(other):
            if not other:
                return not self.terms
            return (
                list(self.terms) == [self.ring._zexp]
                and self.terms[self.ring._zexp] == other
            )
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def diff(self, name: str) -> "Poly":
        i = self.ring.index.get(name)
        if i is None:
            raise KeyError(f"unknown indeterminate {name!r}")
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = c * k
        return Poly(self.ring, self._clean(out))

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.terms:
            return 0
        [(e, c)] = self.terms.items()
        if any(e):
            raise ValueError("polynomial is not constant")
        return c

    def coefficient(self, exp) -> object:
        return self.terms.get(tuple(exp), 0)

    def lift(self, ring: PolyRing) -> "Poly":
        """Re-express in a ring whose name set contains this ring's names."""
        pos = [ring.index[v] for v in self.ring.names]
        n = len(ring.names)
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * n
            for p, k in zip(pos, e):
                e2[p] = k
            out[tuple(e2)] = c
        return Poly(ring, out)

    def subst(self, repl: dict) -> "Poly":
        """Substitute some indeterminates by polynomials (or scalars)."""
        ring = self.ring
        rp = {}
        for name, val in repl.items():
            rp[ring.index[name]] = val if isinstance(val, Poly) else ring.const(val)
        caches = {i: {1: p} for i, p in rp.items()}
        out = ring.zero
        for e, c in self.terms.items():
            base = tuple(0 if i in rp else k for i, k in enumerate(e))
            term = Poly(ring, {base: c})
            for i, k in enumerate(e):
                if i in rp and k:
                    term = term * _cached_pow(rp[i], k, caches[i])
            out = out + term
        return out

    def eval(self, vals: dict):
        """Evaluate at a point; every occurring indeterminate must be given."""
        ring = self.ring
        point = [None] * len(ring.names)
        for name, v in vals.items():
            point[ring.index[name]] = v
        acc = None
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    if point[i] is None:
                        raise KeyError(f"no value for {ring.names[i]!r}")
                    t = t * point[i] ** k
            acc = t if acc is None else acc + t
        return acc if acc is not None else 0

    def sorted_terms(self):
        """Terms in descending graded-lex order (the canonical emission order)."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.ring.names, e) if k
            )
            cs = scalar_str(c)
            if mono:
                if "+" in cs[1:] or "-" in cs[1:]:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}" if cs != "1" else mono)
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def _cached_pow(p: Poly, k: int, cache: dict) -> Poly:
    got = cache.get(k)
    if got is None:
        got = p ** k
        cache[k] = got
    return got


class RationalFunction:
    """Quotient of two polynomials, reduced lazily.

    Equality and zero tests cross-multiply (exact, no gcd); ``reduced()``
    performs the full multivariate gcd reduction and is meant for emission.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = num.ring.one
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @staticmethod
    def of(value, ring: PolyRing) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return RationalFunction(ring.const(value))

    def _pair(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly) or _is_coeff(other):
            return RationalFunction(self.ring.const(other))
        return None

    def __add__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        if self.den.terms == o.den.terms:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._pair(other)
        if o is None:
            return NotImplemented
        return not (self.num * o.den + (-(o.num * self.den)))

    __hash__ = None

    def diff(self, name: str) -> "RationalFunction":
        dn = self.num.diff(name)
        dd = self.den.diff(name)
        if not dd:
            return RationalFunction(dn, self.den)
        return RationalFunction(dn * self.den - self.num * dd, self.den * self.den)

    def reduced(self) -> "RationalFunction":
        """gcd-reduced form with graded-lex-monic denominator."""
        if not self.num:
            return RationalFunction(self.ring.zero, self.ring.one)
        g = poly_gcd(self.num, self.den)
        num = poly_exact_div(self.num, g)
        den = poly_exact_div(self.den, g)
        lead = den.sorted_terms()[0][1]
        inv = QONE / lead if is_rational(lead) else lead.inverse()
        return RationalFunction(num * inv, den * inv)

    def __str__(self):
        if self.den == self.ring.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Exact division a / b; raises ValueError if b does not divide a."""
    q = _try_div(a, b)
    if q is None:
        raise ValueError("inexact polynomial division")
    return q


def _try_div(a: Poly, b: Poly):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    ring = a.ring
    be, bc = max(b.terms.items(), key=lambda t: _grlex_key(t[0]))
    bc_inv = QONE / bc if is_rational(bc) else bc.inverse()
    rem = dict(a.terms)
    out = {}
    while rem:
        re_, rc = max(rem.items(), key=lambda t: _grlex_key(t[0]))
        qe = tuple(x - y for x, y in zip(re_, be))
        if any(k < 0 for k in qe):
            return None
        qc = rc * bc_inv
        out[qe] = qc
        for e, c in b.terms.items():
            e2 = tuple(map(int.__add__, qe, e))
            s = rem.get(e2, 0) - qc * c
            if s:
                rem[e2] = s
            else:
                rem.pop(e2, None)
    return Poly(ring, out)


def poly_divides(b: Poly, a: Poly) -> bool:
    return _try_div(a, b) is not None


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Multivariate gcd over a coefficient field, graded-lex-monic."""
    g = _gcd_rec(a, b)
    if not g:
        return g
    lead = g.sorted_terms()[0][1]
    inv = QONE / lead if is_rational(lead) else lead.inverse()
    return g * inv

def _gcd_rec(a: Poly, b: Poly) -> Poly:
    if not a:
        return b
    if not b:
        return a
    ring = a.ring
    main = None
    for i in reversed(range(len(ring.names))):
        if any(e[i] for e in a.terms) or any(e[i] for e in b.terms):
            main = i
            break
    if main is None:
        return ring.one
    fa, fb = _as_univariate(a, main), _as_univariate(b, main)
    ca, cb = _content(fa), _content(fb)
    fa = {d: poly_exact_div(c, ca) for d, c in fa.items()}
    fb = {d: poly_exact_div(c, cb) for d, c in fb.items()}
    cont = _gcd_rec(ca, cb)
    # primitive PRS in the main variable
    f, g = (fa, fb) if max(fa) >= max(fb) else (fb, fa)
    while g:
        r = _pseudo_rem(f, g, main)
        if not r:
            break
        cr = _content(r)
        f, g = g, {d: poly_exact_div(c, cr) for d, c in r.items()}
    return cont * _from_univariate(a.ring, g, main)


def _as_univariate(p: Poly, i: int) -> dict:
    """View p as a univariate polynomial in variable i: degree -> Poly coeff."""
    ring = p.ring
    out = {}
    for e, c in p.terms.items():
        d = e[i]
        e2 = e[:i] + (0,) + e[i + 1:]
        cur = out.get(d)
        out[d] = Poly(ring, {e2: c}) if cur is None else cur + Poly(ring, {e2: c})
    return {d: c for d, c in out.items() if c}


def _from_univariate(ring: PolyRing, f: dict, i: int) -> Poly:
    out = ring.zero
    xi = ring.var(ring.names[i])
    for d, c in f.items():
        out = out + c * xi ** d
    return out


def _content(f: dict) -> Poly:
    g = None
    for c in f.values():
        g = c if g is None else _gcd_rec(g, c)
    return g


def _pseudo_rem(f: dict, g: dict, i: int) -> dict:
    """Pseudo-remainder of univariate-in-i polynomial dicts with Poly coeffs."""
    df, dg = max(f), max(g)
    lg = g[dg]
    r = dict(f)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        shift = dr - dg
        new = {}
        for d, c in r.items():
            if d != dr:
                new[d] = c * lg
        for d, c in g.items():
            if d != dg:
                e = d + shift
                cur = new.get(e)
                val = lr * c
                new[e] = -val if cur is None else cur - val
        r = {d: c for d, c in new.items() if c}
    return r


def binomial(n: int, k: int) -> int:
    return math.comb(n, k)


def multi_indices(nvars: int, total: int):
    """All exponent tuples of the given total degree, lexicographic order."""
    for comb in combinations_with_replacement(range(nvars), total):
        e = [0] * nvars
        for i in comb:
            e[i] += 1
        yield tuple(e)
