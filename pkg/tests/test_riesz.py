"""Radial symbol ring: derivative formulas, grading, composition rules."""

import pytest

from sbdo.linalg import Matrix
from sbdo.scalars import PolyRing, Q, RationalFunction
from sbdo.spinmod import build_module
from sbdo.riesz import (
    RadialBlock, RieszSymbol, clifford_riesz_symbol, compose_with_multiplication,
    scalar_riesz_symbol,
)


def _ring(n):
    xi = tuple(f"xi{j}" for j in range(1, n + 1))
    return PolyRing(xi + ("s",)), xi


def test_scalar_power_rule():
    ring, xi = _ring(2)
    s = ring.var("s")
    r = scalar_riesz_symbol(ring, xi, s)
    d = r.diff("xi1")
    # s * xi1 * |xi|^(s-2)
    expected = scalar_riesz_symbol(ring, xi, s - 2).left_mul(
        Matrix([[s * ring.var("xi1")]]))
    assert d == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_clifford_riesz_first_derivative(n):
    # d_j of |v|^(s-1) rho(v) equals ((s-1) v_j - rho(e_j v)) |v|^(s-3) rho(v)
    ring, xi = _ring(n)
    s = ring.var("s")
    mod = build_module(n)
    r_s = clifford_riesz_symbol(ring, xi, s, mod)
    r_sm2 = clifford_riesz_symbol(ring, xi, s - 2, mod)
    for j in range(n):
        v_j = ring.var(xi[j])
        rho_ej_v = Matrix.zeros(mod.dim, mod.dim)
        for l in range(n):
            rho_ej_v = rho_ej_v + (mod.gamma[j] @ mod.gamma[l]).map(
                lambda e: e * ring.var(xi[l]) if e else 0)
        coeff = Matrix.identity(mod.dim).map(lambda e: e * ((s - 1) * v_j) if e else 0)
        expected = r_sm2.left_mul(coeff - rho_ej_v)
        assert r_s.diff(xi[j]) == expected, (n, j)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_clifford_riesz_laplacian(n):
    # Laplacian of |v|^(s-1) rho(v) equals (s-1)(s+n-1) |v|^(s-3) rho(v)
    ring, xi = _ring(n)
    s = ring.var("s")
    mod = build_module(n)
    r_s = clifford_riesz_symbol(ring, xi, s, mod)
    r_sm2 = clifford_riesz_symbol(ring, xi, s - 2, mod)
    assert r_s.laplacian(0) == r_sm2.scale((s - 1) * (s + n - 1))


def test_power_shift_normalization():
    # a term at offset +1 equals the |v|^2-multiplied term at offset 0
    ring, xi = _ring(2)
    s = ring.var("s")
    block = RadialBlock(xi, s)
    one = Matrix([[RationalFunction(ring.one)]])
    hi = RieszSymbol(ring, (block,), (1, 1), {(1,): one})
    norm2 = ring.var("xi1") ** 2 + ring.var("xi2") ** 2
    lo = RieszSymbol(ring, (block,), (1, 1),
                     {(0,): Matrix([[RationalFunction(norm2)]])})
    assert hi == lo
    assert (hi - lo).is_zero()


def test_diff_leibniz_against_polynomial_scaling():
    ring, xi = _ring(2)
    s = ring.var("s")
    r = clifford_riesz_symbol(ring, xi, s, build_module(2))
    p = ring.var("xi1") ** 2 + 3 * ring.var("xi2")
    lhs = r.scale(p).diff("xi1")
    rhs = r.diff("xi1").scale(p) + r.scale(p.diff("xi1"))
    assert lhs == rhs


def test_tensor_block_structure():
    n = 2
    xi = tuple(f"xi{j}" for j in range(1, n + 1))
    zeta = tuple(f"zeta{j}" for j in range(1, n + 1))
    ring = PolyRing(xi + zeta + ("s", "t"))
    s, t = ring.var("s"), ring.var("t")
    mod = build_module(n)
    a = clifford_riesz_symbol(ring, xi, s, mod)
    b = clifford_riesz_symbol(ring, zeta, t, mod)
    ab = a.tensor(b)
    assert ab.shape == (4, 4)
    assert len(ab.blocks) == 2
    # differentiating in a zeta variable leaves the xi offset untouched
    d = ab.diff("zeta1")
    assert all(off[0] == 0 for off in d.terms)


def test_compose_with_multiplication_two_term():
    # p = x_j: x_j k - i d_(xi_j) k
    n = 2
    xi = tuple(f"xi{j}" for j in range(1, n + 1))
    xs = tuple(f"x{j}" for j in range(1, n + 1))
    ring = PolyRing(xs + xi + ("s",))
    s = ring.var("s")
    mod = build_module(n)
    k = clifford_riesz_symbol(ring, xi, s, mod)
    p = ring.var("x1")
    got = compose_with_multiplication(k, p, list(zip(xs, xi)))
    from sbdo.scalars import I_UNIT
    expected = k.left_mul(Matrix.identity(mod.dim).map(
        lambda e: e * p if e else 0)) + k.diff("xi1").scale(-I_UNIT)
    assert got == expected


def test_compose_with_multiplication_constant():
    ring, xi = _ring(1)
    s = ring.var("s")
    k = scalar_riesz_symbol(ring, xi, s)
    assert compose_with_multiplication(k, ring.one, [("s", "xi1")]) == k


def test_compose_rejects_matrix_valued_p():
    ring, xi = _ring(1)
    k = scalar_riesz_symbol(ring, xi, ring.var("s"))
    with pytest.raises(TypeError):
        compose_with_multiplication(k, Matrix([[ring.one]]), [])


def test_unknown_radial_variable():
    ring, xi = _ring(1)
    k = scalar_riesz_symbol(ring, xi, ring.var("s"))
    with pytest.raises(KeyError):
        k.diff("s")
