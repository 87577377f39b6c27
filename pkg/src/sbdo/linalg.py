"""Small dense matrices over any exact scalar ring.

Entries only need +, -, * and truthiness (nonzero test); integer 0/1 act
as neutral elements through the coercion protocol of the scalar classes.
Matrices are immutable (tuples of tuples).
"""

from __future__ import annotations

from itertools import combinations


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows and any(len(r) != len(self.rows[0]) for r in self.rows):
            raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int, one=1, zero=0) -> "Matrix":
        return Matrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(nrows: int, ncols: int, zero=0) -> "Matrix":
        return Matrix([[zero] * ncols for _ in range(nrows)])

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return Matrix([[a * other for a in r] for r in self.rows])

    def __rmul__(self, other):
        return Matrix([[other * a for a in r] for r in self.rows])

    def matmul(self, other: "Matrix") -> "Matrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            orow = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                orow.append(acc)
            out.append(orow)
        return Matrix(out)

    def __matmul__(self, other):
        return self.matmul(other)

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product; (A kron B)(v tensor w) = Av tensor Bw with
        row-major tensor basis (left index major)."""
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                out.append([a * b if (a and b) else 0 for a in r1 for b in r2])
        return Matrix(out)

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows))) if self.rows else self

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(a) for a in r] for r in self.rows])

    def apply(self, vec):
        """Matrix times column vector (any scalar sequence)."""
        n, k = self.shape
        if len(vec) != k:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.rows:
            acc = 0
            for a, v in zip(row, vec):
                if a and v:
                    acc = acc + a * v
            out.append(acc)
        return out

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    __hash__ = None

    def __bool__(self):
        return not self.is_zero()

    def det(self):
        """Exact determinant by cofactor expansion (small matrices only)."""
        n, m = self.shape
        if n != m:
            raise ValueError("determinant of non-square matrix")
        if n == 0:
            return 1
        if n == 1:
            return self.rows[0][0]
        acc = 0
        for j, a in enumerate(self.rows[0]):
            if not a:
                continue
            minor = Matrix([r[:j] + r[j + 1:] for r in self.rows[1:]])
            term = a * minor.det()
            acc = acc + term if j % 2 == 0 else acc - term
        return acc

    def minor(self, rows, cols):
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    def exterior_power(self, k: int) -> "Matrix":
        """Induced matrix on the k-th exterior power, basis = increasing
        k-subsets of row/column indices in lexicographic order."""
        n, m = self.shape
        ridx = list(combinations(range(n), k))
        cidx = list(combinations(range(m), k))
        return Matrix([[self.minor(R, C).det() for C in cidx] for R in ridx])

    def __repr__(self):
        body = "; ".join(" ".join(repr(a) for a in r) for r in self.rows)
        return f"Matrix[{body}]"
