"""Gamma matrices, dual module, pairing, Psi projections and L."""

import itertools

import pytest

from sbdo.linalg import Matrix
from sbdo.scalars import GaussianRational, I_UNIT, Q
from sbdo.clifford import Multivector, euclidean
from sbdo.spinmod import (
    build_module, dual_module, form_basis, form_dim, operator_L, pairing,
    psi_apply, psi_matrix, rho,
)


def test_n1_module_is_i():
    mod = build_module(1)
    assert mod.dim == 1
    assert mod.gamma[0] == Matrix([[I_UNIT]])


@pytest.mark.parametrize("n", range(1, 7))
def test_anticommutation(n):
    mod = build_module(n)
    d = mod.dim
    assert d == 2 ** (n // 2)
    for j in range(n):
        for k in range(n):
            anti = mod.gamma[j] @ mod.gamma[k] + mod.gamma[k] @ mod.gamma[j]
            expected = -2 * Matrix.identity(d) if j == k else Matrix.zeros(d, d)
            assert anti == expected, (n, j, k)


@pytest.mark.parametrize("n", range(1, 6))
def test_entries_are_gaussian_units(n):
    allowed = {0, 1, -1, I_UNIT, -I_UNIT}
    for g in build_module(n).gamma:
        for row in g.rows:
            for a in row:
                assert any(a == u for u in allowed)


@pytest.mark.parametrize("n", range(1, 6))
def test_dual_module_relations(n):
    dual = dual_module(n)
    d = dual.dim
    for g in dual.gamma:
        assert g @ g == -Matrix.identity(d)


@pytest.mark.parametrize("n", range(1, 6))
def test_pairing_skewness(n):
    # (rho(e_j) v, w') = -(v, rho'(e_j) w') on basis vectors
    mod, dual = build_module(n), dual_module(n)
    d = mod.dim
    basis = [[1 if i == a else 0 for i in range(d)] for a in range(d)]
    for j in range(n):
        for a in range(d):
            for b in range(d):
                lhs = pairing(mod.gamma[j].apply(basis[a]), basis[b])
                rhs = pairing(basis[a], dual.gamma[j].apply(basis[b]))
                assert lhs == -rhs


@pytest.mark.parametrize("n", range(2, 6))
def test_pairing_spin_invariance(n):
    # (rho(g) v, rho'(g) w') = (v, w') for g = e_i e_j
    sig = euclidean(n)
    mod, dual = build_module(n), dual_module(n)
    d = mod.dim
    basis = [[1 if i == a else 0 for i in range(d)] for a in range(d)]
    for i, j in itertools.combinations(range(1, n + 1), 2):
        g = Multivector.blade(sig, (i, j))
        rg, rg_dual = rho(mod, g), rho(dual, g)
        for a in range(d):
            for b in range(d):
                lhs = pairing(rg.apply(basis[a]), rg_dual.apply(basis[b]))
                assert lhs == pairing(basis[a], basis[b])


def test_rho_is_algebra_homomorphism():
    sig = euclidean(3)
    mod = build_module(3)
    e1, e12 = Multivector.blade(sig, (1,)), Multivector.blade(sig, (1, 2))
    assert rho(mod, e1 * e1) == -Matrix.identity(mod.dim)
    assert rho(mod, Multivector.scalar(sig, Q(1))) == Matrix.identity(mod.dim)
    assert rho(mod, e12) == mod.gamma[0] @ mod.gamma[1]
    a = e12 + 3 * e1
    b = e1 * e12 + 1
    assert rho(mod, a * b) == rho(mod, a) @ rho(mod, b)


def test_psi_dimensions():
    assert form_dim(4, 2) == 6
    assert psi_matrix(4, 2).shape == (6, 16)
    assert form_basis(3, 2) == [(1, 2), (1, 3), (2, 3)]
    with pytest.raises(ValueError):
        form_basis(3, 4)


def test_psi0_is_pairing():
    for n in (1, 2, 3):
        d = build_module(n).dim
        v = [Q(a + 1) for a in range(d)]
        w = [Q(2 * b - 3) for b in range(d)]
        assert psi_apply(n, 0, v, w) == [pairing(v, w)]


def test_psi1_n1():
    # n=1: Psi^(1)(v tensor w')(e_1) = i*v*w'
    [val] = psi_apply(1, 1, [Q(3)], [Q(5)])
    assert val == GaussianRational(0, 15)


@pytest.mark.parametrize("n", range(1, 6))
def test_psi_L_eigenvalue(n):
    # Psi^(k) o L = (-1)^k (n-2k) Psi^(k) as matrices
    L = operator_L(n)
    for k in range(n + 1):
        P = psi_matrix(n, k)
        assert P @ L == ((-1) ** k * (n - 2 * k)) * P, (n, k)


def test_L_is_identity_for_n1():
    assert operator_L(1) == Matrix.identity(1)
