"""Conformal spin group: standard elements, factorization, actions."""

import itertools
import random

import pytest

from sbdo.linalg import Matrix
from sbdo.scalars import Poly, PolyRing, Q, SqrtExt
from sbdo.clifford import Multivector, euclidean, lorentzian
from sbdo.conformal import (
    ActionUndefined, BivectorDecomp, FieldExtensionRequired, FormRep,
    NotInDenseCell, SpinorRep, a_element, bivector_basis, bracket, cartan_H,
    conformal_action, decompose_bivector, embed_vector, gn_factorize,
    infinitesimal_action, is_group_element, n_element, nbar_element,
    to_euclidean, weyl_w,
)
from sbdo.spinmod import build_module, dual_module, psi_matrix, rho
from sbdo.weyl import OpSpace, WeylOperator

from jet_oracle import dpi_via_jets, jet_slopes


def _space(n, params=("lam",)):
    names = tuple(f"x{i}" for i in range(1, n + 1))
    return OpSpace(PolyRing(names + tuple(params)), names)


def _rand_q(rng, lo=-4, hi=4):
    return Q(rng.randrange(lo, hi + 1), rng.randrange(1, 4))


def _pyth_pair(rng):
    # rational (c, s) with c^2 + s^2 = 1 from the tangent half-angle map
    t = _rand_q(rng)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def _random_spin(sig, n, rng):
    m = Multivector.scalar(sig, Q(1))
    for _ in range(2):
        if n < 2:
            break
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        c, s = _pyth_pair(rng)
        m = m * (c + s * Multivector.blade(sig, (i, j)))
    return m


def _random_cell_element(sig, n, rng):
    v = [_rand_q(rng) for _ in range(n)]
    u = [_rand_q(rng) for _ in range(n)]
    r = abs(_rand_q(rng)) + 1
    return (nbar_element(sig, v) * _random_spin(sig, n, rng)
            * a_element(sig, r) * n_element(sig, u))


def test_one_parameter_groups():
    for n in (1, 2, 3):
        sig = lorentzian(n)
        z = [Q(k + 1, 3) for k in range(n)]
        zp = [Q(2 - k, 5) for k in range(n)]
        assert nbar_element(sig, z) * nbar_element(sig, zp) == \
            nbar_element(sig, [a + b for a, b in zip(z, zp)])
        assert nbar_element(sig, z) * nbar_element(sig, [-a for a in z]) == 1
        assert n_element(sig, z) * n_element(sig, zp) == \
            n_element(sig, [a + b for a, b in zip(z, zp)])
        assert a_element(sig, Q(3, 2)) * a_element(sig, Q(4, 3)) == a_element(sig, Q(2))


def test_standard_elements_are_group_elements():
    sig = lorentzian(2)
    for g in (nbar_element(sig, [Q(1), Q(-2)]), n_element(sig, [Q(1, 3), Q(0)]),
              a_element(sig, Q(5, 2)), weyl_w(sig)):
        assert is_group_element(g)


def test_a_rejects_nonpositive():
    with pytest.raises(ValueError):
        a_element(lorentzian(2), Q(-1))


def test_w_conjugates_H_to_minus_H():
    for n in (1, 2, 3):
        sig = lorentzian(n)
        w, H = weyl_w(sig), cartan_H(sig)
        w_inv = w.alpha()
        assert w * w_inv == 1
        assert w * H * w_inv == -H


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_prop_gn_of_w_inverse_nbar(n):
    # w^(-1) nbar_x = nbar(x'/|x|^2) (-e_1 x / |x|) a(|x|) n(x/|x|^2), x' = e_1 x e_1
    from sbdo.scalars import rational_sqrt
    sig = lorentzian(n)
    rng = random.Random(33 + n)
    e1 = Multivector.blade(sig, (1,))
    count = 0
    while count < 20:
        x = [_rand_q(rng) for _ in range(n)]
        norm_sq = sum(c * c for c in x)
        norm = rational_sqrt(norm_sq) if norm_sq else None
        if norm is None or not norm:
            continue
        count += 1
        xv = embed_vector(sig, x)
        g = weyl_w(sig).alpha() * nbar_element(sig, x)
        fac = gn_factorize(g)
        xprime = e1 * xv * e1
        expected_v = tuple(c / norm_sq for c in xprime.vector_coords()[1:n + 1])
        assert fac.v == expected_v
        assert fac.m == -(e1 * xv) * (1 / norm)
        assert fac.r == norm
        assert fac.u == tuple(c / norm_sq for c in x)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gn_roundtrip_random(n):
    sig = lorentzian(n)
    rng = random.Random(101 + n)
    for _ in range(200):
        g = _random_cell_element(sig, n, rng)
        fac = gn_factorize(g)  # recomposition check is internal and mandatory
        assert fac.recompose() == g


def test_gn_not_in_dense_cell():
    sig = lorentzian(2)
    with pytest.raises(NotInDenseCell):
        gn_factorize(weyl_w(sig))


def test_gn_field_extension():
    sig = lorentzian(2)
    g = weyl_w(sig).alpha() * nbar_element(sig, [Q(1), Q(1)])  # |x|^2 = 2
    with pytest.raises(FieldExtensionRequired):
        gn_factorize(g)
    fac = gn_factorize(g, allow_extension=True)
    assert isinstance(fac.r, SqrtExt)
    assert fac.r * fac.r == 2
    assert fac.recompose() == g


def test_conformal_action_translation_dilation_rotation():
    n = 2
    sig = lorentzian(n)
    x = (Q(1, 2), Q(-1, 3))
    v = [Q(2), Q(5)]
    assert conformal_action(nbar_element(sig, v), x) == (Q(5, 2), Q(14, 3))
    r = Q(3)
    assert conformal_action(a_element(sig, r), x) == (Q(1, 18), Q(-1, 27))
    c, s = Q(3, 5), Q(4, 5)
    m = c + s * Multivector.blade(sig, (1, 2))
    got = conformal_action(m, x)
    expected = (m * embed_vector(sig, x) * m.alpha()).vector_coords()[1:n + 1]
    assert got == tuple(expected)


def test_conformal_action_homomorphism():
    n = 2
    sig = lorentzian(n)
    rng = random.Random(7)
    for _ in range(20):
        g = _random_cell_element(sig, n, rng)
        h = _random_cell_element(sig, n, rng)
        x = (_rand_q(rng), _rand_q(rng))
        try:
            both = conformal_action(g, conformal_action(h, x))
        except ActionUndefined:
            continue
        assert conformal_action(g * h, x) == both


def test_action_undefined_at_infinity():
    sig = lorentzian(1)
    w = weyl_w(sig)
    with pytest.raises(ActionUndefined):
        conformal_action(w.alpha(), (Q(0),))


def test_decompose_bivector_examples():
    n = 2
    sig = lorentzian(n)
    H = cartan_H(sig)
    d = decompose_bivector(H)
    assert d.a == 1 and not d.m and d.nbar == (0, 0) and d.n == (0, 0)

    e12 = Multivector.blade(sig, (1, 2))
    d = decompose_bivector(e12)
    assert d.m == e12 and not d.a

    e10 = -Multivector.blade(sig, (0, 1))  # e_1 e_0
    d = decompose_bivector(e10)
    assert d.nbar == (Q(1, 2), 0) and d.n == (Q(1, 2), 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_decompose_recompose_basis(n):
    for Y in bivector_basis(n):
        assert decompose_bivector(Y).recompose() == Y
    with pytest.raises(ValueError):
        decompose_bivector(Multivector.blade(lorentzian(n), (1,)))


def test_dpi_anchor_translation():
    # X = e_j (e_0 + e_{n+1}) / 2  =>  -d/dx_j
    n = 2
    sig = lorentzian(n)
    sp = _space(n)
    rep = SpinorRep(n)
    e0 = Multivector.blade(sig, (0,))
    etop = Multivector.blade(sig, (n + 1,))
    lam = sp.ring.var("lam")
    for j in range(n):
        ej = Multivector.blade(sig, (j + 1,))
        X = Q(1, 2) * (ej * (e0 + etop))
        op = infinitesimal_action(X, lam, rep, sp)
        assert op.terms == {sp.dx_key(j): -Matrix.identity(rep.dim)}


def test_dpi_anchor_dilation():
    # X = H  =>  2*lam + 2 * sum_j x_j d/dx_j
    n = 2
    sp = _space(n)
    rep = SpinorRep(n)
    lam = sp.ring.var("lam")
    op = infinitesimal_action(cartan_H(lorentzian(n)), lam, rep, sp)
    eye = Matrix.identity(rep.dim)
    expected = {
        sp.zero_key(): (2 * lam) * eye,
        sp.dx_key(0): (2 * sp.x(0)) * eye,
        sp.dx_key(1): (2 * sp.x(1)) * eye,
    }
    assert op.terms == expected


def test_dpi_anchor_special_conformal_n1():
    # n=1, X = e_1 (e_0 - e_2)/2  =>  x^2 d/dx + 2*lam*x
    sig = lorentzian(1)
    sp = _space(1)
    rep = SpinorRep(1)
    lam, x = sp.ring.var("lam"), sp.x(0)
    e0, e1, e2 = (Multivector.blade(sig, (i,)) for i in range(3))
    X = Q(1, 2) * (e1 * (e0 - e2))
    op = infinitesimal_action(X, lam, rep, sp)
    assert op.terms == {
        sp.zero_key(): Matrix([[2 * lam * x]]),
        sp.dx_key(0): Matrix([[x ** 2]]),
    }


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dpi_matches_jet_oracle(n):
    rng = random.Random(11 * n)
    sp = _space(n)
    names = sp.xvars
    weight = Q(rng.randrange(-3, 4), 2)
    for rep in (SpinorRep(n), SpinorRep(n, dual=True), FormRep(n, min(1, n)), FormRep(n, 0)):
        for X in bivector_basis(n):
            op = infinitesimal_action(
                X, sp.ring.const(weight), rep, sp)
            funcs = []
            for _ in range(rep.dim):
                f = sp.ring.zero
                for _ in range(3):
                    mono = sp.ring.one
                    for v in names:
                        mono = mono * sp.ring.var(v) ** rng.randrange(0, 3)
                    f = f + _rand_q(rng) * mono
                funcs.append(f)
            point = [_rand_q(rng, -2, 2) for _ in range(n)]
            expected = jet_slopes(dpi_via_jets(X, weight, rep, funcs, names, point))
            got = [p.eval(dict(zip(names, [Q(c) for c in point])))
                   for p in op.apply(funcs)]
            assert got == expected, (n, type(rep).__name__, X)


@pytest.mark.parametrize("n", [1, 2])
def test_dpi_representation_property(n):
    sp = _space(n)
    rep = SpinorRep(n)
    lam = sp.ring.var("lam")
    basis = bivector_basis(n)
    ops = [infinitesimal_action(X, lam, rep, sp) for X in basis]
    for (i, X), (j, Y) in itertools.combinations(enumerate(basis), 2):
        lhs = ops[i].compose(ops[j]) - ops[j].compose(ops[i])
        rhs = infinitesimal_action(bracket(X, Y), lam, rep, sp)
        assert lhs == rhs, (n, i, j)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_m_rep_bracket_compatibility(n):
    sig = euclidean(n)
    reps = [SpinorRep(n), SpinorRep(n, dual=True)] + [FormRep(n, k) for k in range(n + 1)]
    blades = [Multivector.blade(sig, ij) for ij in itertools.combinations(range(1, n + 1), 2)]
    for rep in reps:
        for X in blades:
            for Y in blades:
                lhs = rep.lie(X) @ rep.lie(Y) - rep.lie(Y) @ rep.lie(X)
                assert lhs == rep.lie(bracket(X, Y)), (n, type(rep).__name__)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_psi_intertwines_group_level(n):
    # Psi^(k) (rho tensor rho')(g) = tau*_k(g) Psi^(k) for g = e_p e_q
    sig = euclidean(n)
    mod, dual = build_module(n), dual_module(n)
    for p, q in itertools.combinations(range(1, n + 1), 2):
        g = Multivector.blade(sig, (p, q))
        rg = rho(mod, g).kron(rho(dual, g))
        for k in range(n + 1):
            P = psi_matrix(n, k)
            assert P @ rg == FormRep(n, k).group(g) @ P, (n, k, p, q)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_w_rho_equivalence(n):
    # rho(-e_1) o (w rho)(m) = rho(m) o rho(-e_1) for m = e_i e_j generators
    sig = lorentzian(n)
    mod = build_module(n)
    w = weyl_w(sig)
    w_inv = w.alpha()
    e1_eucl = Multivector.blade(euclidean(n), (1,))
    rho_me1 = rho(mod, -e1_eucl)
    gens = [Multivector.blade(sig, ij) for ij in itertools.combinations(range(1, n + 1), 2)]
    if n == 1:
        gens = [Multivector.scalar(sig, Q(-1))]  # Spin(1) = {1, -1}
    for m in gens:
        w_rho_m = rho(mod, to_euclidean(w_inv * m * w))
        rho_m = rho(mod, to_euclidean(m))
        assert rho_me1 @ w_rho_m == rho_m @ rho_me1


def test_group_element_rendering_helpers():
    sig = lorentzian(2)
    g = nbar_element(sig, [Q(1), Q(0)])
    assert is_group_element(g)
    assert not is_group_element(Multivector.blade(sig, (1,)))
