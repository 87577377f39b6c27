"""The conformal spin group inside Cl(1, n+1) and its principal-series
actions, all over exact scalars.

Generators are labelled e_0 .. e_{n+1} with e_0^2 = +1; R^n embeds on
e_1 .. e_n.  Standard elements:

    a(r)    = (r + 1/r)/2 + (r - 1/r)/2 e_0 e_{n+1}        (r = e^t)
    n(y)    = 1 + y (e_0 - e_{n+1}) / 2
    nbar(z) = 1 + z (e_0 + e_{n+1}) / 2
    w       = e_1 e_{n+1},   H = e_0 e_{n+1}

The dense-cell factorization g = nbar(v) m a(r) n(u) is computed
algebraically: the isometry image of the null vector (e_0 - e_{n+1})/2
yields r^2 and v at once, the residual nbar(-v) g a(1/r) equals
m (1 + r^2 u (e_0 - e_{n+1})/2), whose part supported on Euclidean blades
is exactly m.  This stays inside the field generated by the entries of g
(adjoining a single square root for r when r^2 is not a perfect square)
and ends with a mandatory exact recomposition check.

The infinitesimal weighted action on V-valued functions is assembled from
the bivector Y(x) = nbar(-x) X nbar(x) (polynomial entries, degree <= 2):
minus the nbar-component drives the transport term, the H-component is
weighted by 2*lambda, and the rotation component acts through the given
representation of the stabilizer.  The three resulting anchor operators
(translations, dilations, and the n=1 special conformal generator) are
pinned by tests against an independent first-order jet computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import Matrix
from .scalars import (
    Jet, Poly, Q, QHALF, SqrtExt, is_rational, rational_sqrt,
)
from .clifford import Multivector, Signature, Versor, euclidean, lorentzian, tau_matrix
from .spinmod import build_module, dual_module, form_basis, rho
from .weyl import OpSpace, WeylOperator


class NotInDenseCell(ValueError):
    """The element admits no nbar-m-a-n factorization."""


class FieldExtensionRequired(ValueError):
    """The a-part needs an irrational square root over the working field."""


class ActionUndefined(ValueError):
    """The conformal action maps the point to infinity."""


def _inv(r):
    if is_rational(r):
        return Q(1) / r
    return r.inverse()


def embed_vector(sig: Signature, coords) -> Multivector:
    """sum_j coords[j] e_j on the Euclidean generators e_1..e_n."""
    n = sig.dim - 2
    if len(coords) != n:
        raise ValueError("expected an R^n vector")
    full = [0] + list(coords) + [0]
    return Multivector.vector(sig, full)


def a_element(sig: Signature, r) -> Multivector:
    if is_rational(r) and r <= 0:
        raise ValueError("a(r) requires r > 0")
    ri = _inv(r)
    H = Multivector.blade(sig, (0, sig.dim - 1))
    return QHALF * (r + ri) + (QHALF * (r - ri)) * H


def n_element(sig: Signature, y) -> Multivector:
    np1 = sig.dim - 1
    e0 = Multivector.blade(sig, (0,))
    en = Multivector.blade(sig, (np1,))
    return 1 + QHALF * (embed_vector(sig, y) * (e0 - en))


def nbar_element(sig: Signature, z) -> Multivector:
    np1 = sig.dim - 1
    e0 = Multivector.blade(sig, (0,))
    en = Multivector.blade(sig, (np1,))
    return 1 + QHALF * (embed_vector(sig, z) * (e0 + en))


def weyl_w(sig: Signature) -> Multivector:
    return Multivector.blade(sig, (1, sig.dim - 1))


def cartan_H(sig: Signature) -> Multivector:
    return Multivector.blade(sig, (0, sig.dim - 1))


def p_minus(sig: Signature) -> Multivector:
    np1 = sig.dim - 1
    return QHALF * (Multivector.blade(sig, (0,)) - Multivector.blade(sig, (np1,)))


def is_group_element(g: Multivector) -> bool:
    """Even multivector with g * alpha(g) = 1."""
    return all(k % 2 == 0 for k in g.grades()) and g * g.alpha() == 1


@dataclass
class GNFactors:
    """Factors of g = nbar(v) m a(r) n(u)."""

    sig: Signature
    v: tuple
    m: Multivector
    r: object
    u: tuple

    def recompose(self) -> Multivector:
        return (nbar_element(self.sig, self.v) * self.m
                * a_element(self.sig, self.r) * n_element(self.sig, self.u))


def _sqrt_scalar(r2, allow_extension: bool):
    if isinstance(r2, Jet):
        return r2.sqrt()
    if is_rational(r2):
        root = rational_sqrt(r2)
        if root is not None:
            return root
        if allow_extension:
            return SqrtExt(0, 1, r2)
        raise FieldExtensionRequired(f"sqrt({r2}) is irrational over the rationals")
    if isinstance(r2, SqrtExt) and not r2.b:
        return _sqrt_scalar(r2.a, allow_extension)
    raise FieldExtensionRequired(f"cannot take an exact square root of {r2!r}")


def _null_image_data(g: Multivector):
    """Scale r^2 and nbar-part v read from the image of (e_0 - e_{n+1})/2."""
    sig = g.sig
    np1 = sig.dim - 1
    image = g * p_minus(sig) * g.alpha()
    if not image.is_grade(1):
        raise ValueError("not a group element: the null ray is not preserved")
    coords = image.vector_coords()
    r2 = coords[0] - coords[np1]
    if not r2:
        raise NotInDenseCell("the nbar-m-a-n cell does not contain this element")
    if is_rational(r2) and r2 < 0:
        raise NotInDenseCell("negative scale: element outside the identity component cell")
    r2_inv = _inv(r2)
    return r2, tuple(c * r2_inv for c in coords[1:np1])


def gn_factorize(g: Multivector, allow_extension: bool = False) -> GNFactors:
    """Exact Gelfand-Naimark factorization of a dense-cell element.

    Raises NotInDenseCell when no factorization exists and
    FieldExtensionRequired when r would be irrational (pass
    allow_extension=True to adjoin the single square root instead).
    """
    sig = g.sig
    n = sig.dim - 2
    np1 = n + 1
    r2, v = _null_image_data(g)
    r2_inv = _inv(r2)
    r = _sqrt_scalar(r2, allow_extension)
    residual = nbar_element(sig, [-c for c in v]) * g * a_element(sig, _inv(r))
    euclid_mask = ((1 << np1) - 1) & ~1  # bit positions 1..n
    m = Multivector(sig, {mask: c for mask, c in residual.terms.items()
                          if not (mask & ~euclid_mask)})
    if m * m.alpha() != 1:
        raise ValueError("extracted rotation factor is not a unit spinor")
    nu = m.alpha() * residual
    u = []
    for j in range(1, n + 1):
        q_j = -2 * nu.coeff((0, j))
        u.append(q_j * r2_inv)
    factors = GNFactors(sig, v, m, r, tuple(u))
    if factors.recompose() != g:
        raise ValueError("internal error: factorization failed to recompose")
    return factors


def conformal_action(g: Multivector, x) -> tuple:
    """The rational action g(x) on R^n, where defined.

    Only the nbar-part of the factorization of g nbar_x is needed, so no
    square root (and no field extension) is ever required here.
    """
    sig = g.sig
    try:
        return _null_image_data(g * nbar_element(sig, x))[1]
    except NotInDenseCell as exc:
        raise ActionUndefined(f"g maps {tuple(x)} to infinity") from exc


@dataclass
class BivectorDecomp:
    """Components of a bivector along nbar + m + a + n.

    nbar[j] and n[j] are coefficients on the unnormalized basis vectors
    e_j(e_0 + e_{n+1}) and e_j(e_0 - e_{n+1}); a is the coefficient of
    H = e_0 e_{n+1}; m is the Euclidean bivector part.
    """

    sig: Signature
    nbar: tuple
    m: Multivector
    a: object
    n: tuple

    def recompose(self) -> Multivector:
        sig = self.sig
        nn = sig.dim - 2
        e0 = Multivector.blade(sig, (0,))
        etop = Multivector.blade(sig, (nn + 1,))
        out = self.m + self.a * cartan_H(sig)
        for j in range(1, nn + 1):
            ej = Multivector.blade(sig, (j,))
            out = out + self.nbar[j - 1] * (ej * (e0 + etop))
            out = out + self.n[j - 1] * (ej * (e0 - etop))
        return out


def decompose_bivector(Y: Multivector) -> BivectorDecomp:
    if not Y.is_grade(2):
        raise ValueError("bivector decomposition expects a grade-2 element")
    sig = Y.sig
    n = sig.dim - 2
    np1 = n + 1
    a = Y.coeff((0, np1))
    euclid_mask = ((1 << np1) - 1) & ~1
    m = Multivector(sig, {mask: c for mask, c in Y.terms.items()
                          if not (mask & ~euclid_mask)})
    nbar_c, n_c = [], []
    for j in range(1, n + 1):
        c0j = Y.coeff((0, j))
        cjn = Y.coeff((j, np1))
        nbar_c.append((cjn - c0j) * QHALF)
        n_c.append(-(cjn + c0j) * QHALF)
    return BivectorDecomp(sig, tuple(nbar_c), m, a, tuple(n_c))


def to_euclidean(a: Multivector) -> Multivector:
    """Reinterpret a Euclidean-supported element of Cl(1, n+1) in cl(R^n)."""
    n = a.sig.dim - 2
    sig = euclidean(n)
    out = {}
    for mask, c in a.terms.items():
        if mask & 1 or mask >> (n + 1) & 1:
            raise ValueError("element is not supported on Euclidean blades")
        out[mask >> 1] = c
    return Multivector(sig, out)


def bivector_basis(n: int):
    """Ordered basis e_i e_j (i < j) of the Lie algebra of Spin(1, n+1)."""
    sig = lorentzian(n)
    out = []
    for i in range(n + 2):
        for j in range(i + 1, n + 2):
            out.append(Multivector.blade(sig, (i, j)))
    return out


def bracket(X: Multivector, Y: Multivector) -> Multivector:
    """Commutator of bivectors (again a bivector)."""
    return X * Y - Y * X


class SpinorRep:
    """Action of the rotation subgroup on the module (or its dual).

    The bivector e_i e_j acts by the algebra element itself:
    rho(e_i) rho(e_j), matching exp inside the Clifford algebra.
    """

    def __init__(self, n: int, dual: bool = False):
        self.n = n
        self.module = dual_module(n) if dual else build_module(n)
        self.dim = self.module.dim

    def lie(self, m_bivector: Multivector) -> Matrix:
        return rho(self.module, m_bivector)

    def group(self, versor_mv: Multivector) -> Matrix:
        return rho(self.module, versor_mv)


class FormRep:
    """Action of the rotation subgroup on alternating k-forms.

    The group acts on coordinates by omega -> omega o tau(g)^{-1}; the
    Lie-algebra action of a Euclidean bivector b is minus the transpose of
    the derivation induced on Lambda_k by x -> b x - x b on vectors.
    """

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.basis = form_basis(n, k)
        self.dim = len(self.basis)
        self.pos = {I: i for i, I in enumerate(self.basis)}

    @lru_cache(maxsize=None)
    def _lie_blade(self, i: int, j: int) -> Matrix:
        sig = euclidean(self.n)
        b = Multivector.blade(sig, (i, j))
        vec_action = []
        for l in range(1, self.n + 1):
            e_l = Multivector.blade(sig, (l,))
            comm = b * e_l - e_l * b
            vec_action.append(comm.vector_coords())
        # vec_action[l-1][p-1] = coefficient of e_p in [b, e_l]
        rows = [[0] * self.dim for _ in range(self.dim)]
        for I in self.basis:
            col = self.pos[I]
            for slot, l in enumerate(I):
                for p in range(1, self.n + 1):
                    c = vec_action[l - 1][p - 1]
                    if not c or p in I[:slot] + I[slot + 1:]:
                        continue
                    rest = I[:slot] + I[slot + 1:]
                    J = tuple(sorted(rest + (p,)))
                    sign = 1 if (J.index(p) - slot) % 2 == 0 else -1
                    rows[self.pos[J]][col] += sign * c
        derivation = Matrix(rows)
        return -derivation.transpose()

    def lie(self, m_bivector: Multivector) -> Matrix:
        acc = Matrix.zeros(self.dim, self.dim)
        start = m_bivector.sig.start
        for mask, c in m_bivector.terms.items():
            idx = [pos + start for pos in range(m_bivector.sig.dim) if mask >> pos & 1]
            if len(idx) != 2:
                raise ValueError("rotation part must be a bivector")
            acc = acc + c * self._lie_blade(idx[0], idx[1])
        return acc

    def group(self, versor_mv: Multivector) -> Matrix:
        if versor_mv.sig.start == 0:
            versor_mv = to_euclidean(versor_mv)
        g = Versor(versor_mv)
        r_inv = Matrix(tau_matrix(g.inverse_mv(), versor_mv.sig, "pin_conj"))
        return r_inv.exterior_power(self.k).transpose()


def infinitesimal_action(X: Multivector, weight, rep, space: OpSpace,
                         block: str = "x") -> WeylOperator:
    """The operator d/dt at 0 of the weighted action of exp(tX).

    weight may be a rational or a polynomial in the formal parameters of
    space.ring; rep provides the stabilizer action on the target.
    """
    if not X.is_grade(2):
        raise ValueError("expected a Lie algebra element (bivector)")
    ring = space.ring
    names = space.xvars if block == "x" else space.yvars
    n = len(names)
    sig = X.sig
    if sig.dim != n + 2:
        raise ValueError("bivector dimension does not match the variable block")
    coords = [ring.var(v) for v in names]
    Xp = X.map_scalars(ring.const)
    Y = nbar_element(sig, [-c for c in coords]) * Xp * nbar_element(sig, coords)
    dec = decompose_bivector(Y)
    eye = Matrix.identity(rep.dim)
    mat0 = rep.lie(dec.m) + (2 * dec.a * weight) * eye
    terms = {}
    if not mat0.is_zero():
        terms[space.zero_key()] = mat0
    for j in range(n):
        c = dec.nbar[j]
        if not c:
            continue
        key = space.dx_key(j) if block == "x" else space.dy_key(j)
        terms[key] = (-2 * c) * eye
    return WeylOperator(space, (rep.dim, rep.dim), terms)
