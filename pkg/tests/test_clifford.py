"""Clifford algebra: products, conjugation, quantization, versors."""

import itertools
import random

import pytest

from sbdo.scalars import Q
from sbdo.clifford import (
    ExteriorElement, Multivector, Signature, euclidean, lorentzian,
    quantize, symbol, sum_e_i_a_e_i, tau_matrix, versor_adjoint, versor_norm,
)


def blade(sig, *idx):
    return Multivector.blade(sig, idx)


def test_defining_relations():
    e = euclidean(2)
    e1, e2 = blade(e, 1), blade(e, 2)
    assert e1 * e1 == -1
    assert e1 * e2 + e2 * e1 == Multivector.zero(e)

    lz = lorentzian(2)
    e0 = blade(lz, 0)
    assert e0 * e0 == 1
    assert blade(lz, 3) * blade(lz, 3) == -1


def test_signature_mismatch():
    with pytest.raises(ValueError):
        blade(euclidean(2), 1) * blade(euclidean(3), 1)


def _random_mv(sig, rng, nterms=4):
    out = Multivector.zero(sig)
    for _ in range(nterms):
        k = rng.randrange(sig.dim + 1)
        idx = sorted(rng.sample(list(sig.generators()), k))
        out = out + Multivector.blade(sig, idx, Q(rng.randrange(-9, 10), rng.randrange(1, 5)))
    return out


@pytest.mark.parametrize("sig", [euclidean(3), euclidean(4), lorentzian(2)])
def test_associativity_random(sig):
    rng = random.Random(20210513)
    for _ in range(25):
        a, b, c = (_random_mv(sig, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_alpha_values():
    e = euclidean(3)
    assert blade(e, 1).alpha() == -blade(e, 1)
    assert blade(e, 1, 2).alpha() == -blade(e, 1, 2)
    assert blade(e, 1, 2, 3).alpha() == blade(e, 1, 2, 3)
    g = blade(e, 1, 2)
    assert g * g.alpha() == 1


def test_alpha_antiautomorphism():
    sig = lorentzian(2)
    rng = random.Random(7)
    for _ in range(20):
        a, b = _random_mv(sig, rng), _random_mv(sig, rng)
        assert (a * b).alpha() == b.alpha() * a.alpha()


def test_unit_vector_inverse_is_alpha():
    # alpha(x) = x^{-1} for Euclidean unit vectors
    e = euclidean(2)
    x = Multivector.vector(e, [Q(3, 5), Q(4, 5)])
    assert x * x.alpha() == 1


def test_contraction_lemma_exhaustive():
    # sum_i e_i e_J e_i = (-1)^(k-1) (n-2k) e_J for all J, n <= 6
    for n in range(1, 7):
        sig = euclidean(n)
        for k in range(n + 1):
            for J in itertools.combinations(range(1, n + 1), k):
                e_J = Multivector.blade(sig, J)
                expected = ((-1) ** (k - 1)) * (n - 2 * k) * e_J
                assert sum_e_i_a_e_i(e_J) == expected, (n, J)


def test_contraction_on_vectors():
    # sum_j e_j x e_j = (n-2) x for grade-1 x (Euclidean)
    for n in range(1, 6):
        sig = euclidean(n)
        x = Multivector.vector(sig, [Q(i + 1, 3) for i in range(n)])
        assert sum_e_i_a_e_i(x) == (n - 2) * x


def test_quantize_symbol_roundtrip():
    sig = euclidean(3)
    w = ExteriorElement.blade(sig, (1, 2))
    assert quantize(w) == blade(sig, 1, 2)
    assert symbol(blade(sig, 1, 2)) == w
    assert symbol(Multivector.scalar(sig, Q(1))).terms == {0: Q(1)}
    # wedge matches quantization on disjoint blades
    w13 = ExteriorElement.blade(sig, (1,)).wedge(ExteriorElement.blade(sig, (3,)))
    assert quantize(w13) == blade(sig, 1, 3)
    assert not ExteriorElement.blade(sig, (1,)).wedge(ExteriorElement.blade(sig, (1,)))


def test_versor_adjoint_reflection():
    e = euclidean(2)
    e1, e2 = blade(e, 1), blade(e, 2)
    assert versor_adjoint(e1, e1) == e1
    assert versor_adjoint(e1, e2) == -e2
    assert versor_adjoint(Multivector.scalar(e, Q(1)), e2) == e2


def test_versor_adjoint_errors():
    e = euclidean(2)
    with pytest.raises(ValueError):
        versor_adjoint(blade(e, 1), blade(e, 1, 2))
    e3 = euclidean(3)
    with pytest.raises(ValueError):
        versor_norm(1 + blade(e3, 1, 2, 3))  # g*alpha(g) has a grade-3 part
    from sbdo.clifford import Versor
    with pytest.raises(ValueError):
        Versor(1 + blade(e, 1, 2))  # norm is 2, not +-1


def test_adjoint_preserves_form():
    # <tau_g x, tau_g y> = <x, y> on basis pairs; Euclidean <e_i, e_j> via
    # x*y + y*x = -2<x,y>
    e = euclidean(3)
    g = blade(e, 1, 2) * (Q(3, 5) + Q(4, 5) * blade(e, 2, 3))
    for i in range(1, 4):
        for j in range(1, 4):
            x, y = blade(e, i), blade(e, j)
            tx, ty = versor_adjoint(g, x), versor_adjoint(g, y)
            assert tx * ty + ty * tx == x * y + y * x


def test_lorentz_adjoint_preserves_q():
    lz = lorentzian(2)
    # nbar-type element 1 + e_1 (e_0 + e_3) / 2, written in increasing blades
    g = 1 + Q(1, 2) * (-blade(lz, 0, 1) + blade(lz, 1, 3))
    assert versor_norm(g) == 1
    for i in range(4):
        for j in range(4):
            x, y = blade(lz, i), blade(lz, j)
            tx = versor_adjoint(g, x, "lorentz_alpha")
            ty = versor_adjoint(g, y, "lorentz_alpha")
            assert tx * ty + ty * tx == x * y + y * x


def test_tau_matrix_identity():
    e = euclidean(3)
    m = tau_matrix(Multivector.scalar(e, Q(1)), e)
    assert m == [[1 if i == j else 0 for j in range(3)] for i in range(3)]


def test_rendering():
    e = euclidean(3)
    mv = Q(3, 2) * blade(e, 1, 3) + blade(e, 2)
    assert str(mv) == "1*e2 + 3/2*e1^e3"
