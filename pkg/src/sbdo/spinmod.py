"""Concrete Clifford modules via gamma matrices, the dual module, the
pairing, the projections onto alternating forms and the flip operator L.

The module for dimension n has dim = 2^floor(n/2) and is built by the
recursive Pauli tensor scheme: Hermitian anticommuting involutions

    A_{2j-1} = s3^(j-1) x s1 x I^(m-j),   A_{2j} = s3^(j-1) x s2 x I^(m-j),

plus A_n = s3^m when n is odd, each multiplied by i so that the matrices
E_j = rho(e_j) square to -Id and pairwise anticommute.  All entries lie in
{0, +-1, +-i}.  The pairing between the module and its dual is the
bilinear dot pairing (no conjugation), and rho'(e_j) = -E_j^T.

Tensor-product conventions are row-major: the basis vector v_a tensor w_b
has index a*dim + b, and an operator A on the first factor acts as
kron(A, Id).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb

from .linalg import Matrix
from .scalars import GaussianRational, I_UNIT
from .clifford import Multivector

_S1 = Matrix([[0, 1], [1, 0]])
_S2 = Matrix([[0, GaussianRational(0, -1)], [GaussianRational(0, 1), 0]])
_S3 = Matrix([[1, 0], [0, -1]])
_I2 = Matrix.identity(2)


def _tensor_chain(factors):
    out = factors[0]
    for f in factors[1:]:
        out = out.kron(f)
    return out


class CliffordModule:
    """The module (S, rho) with gamma matrices E_j = rho(e_j)."""

    __slots__ = ("n", "dim", "gamma")

    def __init__(self, n: int, gamma):
        self.n = n
        self.gamma = tuple(gamma)
        self.dim = self.gamma[0].shape[0]

    def __repr__(self):
        return f"CliffordModule(n={self.n}, dim={self.dim})"


class DualModule:
    """The dual module (S', rho') with rho'(e_j) = -E_j^T."""

    __slots__ = ("n", "dim", "gamma", "base")

    def __init__(self, base: CliffordModule):
        self.base = base
        self.n = base.n
        self.dim = base.dim
        self.gamma = tuple(-g.transpose() for g in base.gamma)

    def __repr__(self):
        return f"DualModule(n={self.n}, dim={self.dim})"


@lru_cache(maxsize=None)
def build_module(n: int) -> CliffordModule:
    if n < 1:
        raise ValueError("module dimension n must be >= 1")
    m = n // 2
    mats = []
    for j in range(1, m + 1):
        head = [_S3] * (j - 1)
        tail = [_I2] * (m - j)
        mats.append(_tensor_chain(head + [_S1] + tail))
        mats.append(_tensor_chain(head + [_S2] + tail))
    if n % 2 == 1:
        mats.append(_tensor_chain([_S3] * m) if m else Matrix([[1]]))
    return CliffordModule(n, [I_UNIT * a for a in mats[:n]])


@lru_cache(maxsize=None)
def dual_module(n: int) -> DualModule:
    return DualModule(build_module(n))


def rho(module, a: Multivector) -> Matrix:
    """Algebra action of a multivector supported on Euclidean generators.

    Works for both the module and its dual; the blade e_{i1}...e_{ik} acts
    by gamma[i1-1] @ ... @ gamma[ik-1].  Generators must lie in 1..n.
    """
    d = module.dim
    acc = Matrix.zeros(d, d)
    start = a.sig.start
    for mask, c in a.terms.items():
        mat = Matrix.identity(d)
        pos = 0
        mm = mask
        while mm:
            if mm & 1:
                label = pos + start
                if not 1 <= label <= module.n:
                    raise ValueError(f"generator e{label} outside module range")
                mat = mat @ module.gamma[label - 1]
            mm >>= 1
            pos += 1
        acc = acc + c * mat
    return acc


def form_basis(n: int, k: int):
    """Increasing multi-indices of size k, in lexicographic order."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for n={n}")
    return list(combinations(range(1, n + 1), k))


def form_dim(n: int, k: int) -> int:
    return comb(n, k)


@lru_cache(maxsize=None)
def psi_matrix(n: int, k: int) -> Matrix:
    """Matrix of Psi^(k): S tensor S' -> Lambda*_k, in the bases above.

    The coordinate of Psi^(k)(v tensor w') at the multi-index I is
    (rho(e_{i1}) ... rho(e_{ik}) v, w'), so the row for I evaluated on
    v_a tensor w'_b is (E_I)[b][a].
    """
    module = build_module(n)
    d = module.dim
    rows = []
    for index in form_basis(n, k):
        mat = Matrix.identity(d)
        for i in index:
            mat = mat @ module.gamma[i - 1]
        rows.append([mat[b, a] for a in range(d) for b in range(d)])
    return Matrix(rows)


def psi_apply(n: int, k: int, v, w):
    """Psi^(k)(v tensor w') coordinates for explicit vectors v, w'."""
    d = build_module(n).dim
    tensor = [v[a] * w[b] for a in range(d) for b in range(d)]
    return psi_matrix(n, k).apply(tensor)


def pairing(v, w):
    """Bilinear duality (v, w') = sum v_i w'_i."""
    acc = 0
    for a, b in zip(v, w):
        acc = acc + a * b
    return acc


@lru_cache(maxsize=None)
def operator_L(n: int) -> Matrix:
    """The flip operator sum_i rho(e_i) tensor rho'(e_i) on S tensor S'."""
    module = build_module(n)
    dual = dual_module(n)
    d = module.dim
    acc = Matrix.zeros(d * d, d * d)
    for e, e_dual in zip(module.gamma, dual.gamma):
        acc = acc + e.kron(e_dual)
    return acc
