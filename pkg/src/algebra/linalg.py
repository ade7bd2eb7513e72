"""Dense matrix algebra over a finite field"""

from typing import Optional, Sequence

import numpy as np

from algebra.gf import Field, build_field
from utils.errors import DimensionMismatch, FieldMismatch, Singular, UsageError


class Matrix:
    """Immutable row-major matrix whose entries are element encodings"""

    __hash__ = None

    def __init__(self, field: Field, data, cols: Optional[int] = None):
        arr = np.array(data, dtype=np.int64)
        if arr.size == 0:
            rows = arr.shape[0] if arr.ndim == 2 else 0
            width = cols if cols is not None else (arr.shape[1] if arr.ndim == 2 else 0)
            arr = arr.reshape(rows, width)
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix data must be two-dimensional, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise FieldMismatch(f"entry outside {field}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64), cols=n)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64), cols=cols)

    @classmethod
    def row_vector(cls, field: Field, values: Sequence[int]) -> "Matrix":
        return cls(field, [list(values)], cols=len(values))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.data[i])

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and np.array_equal(self.data, other.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_add(self, other)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def to_text(self) -> str:
        """Header 'rows cols p k', then one space-separated row per line"""
        lines = [f"{self.rows} {self.cols} {self.field.p} {self.field.k}"]
        lines.extend(' '.join(str(int(v)) for v in row) for row in self.data)
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text: str, field: Optional[Field] = None) -> "Matrix":
        lines = [line.split() for line in text.strip().splitlines() if line.strip()]
        if not lines or len(lines[0]) != 4:
            raise UsageError("matrix text must start with 'rows cols p k'")
        rows, cols, p, k = (int(v) for v in lines[0])
        parsed = build_field(p, k)
        if field is not None and field != parsed:
            raise FieldMismatch(f"matrix is over {parsed}, expected {field}")
        body = [[int(v) for v in line] for line in lines[1:]]
        if len(body) != rows or any(len(row) != cols for row in body):
            raise DimensionMismatch(f"matrix text does not hold {rows}x{cols} entries")
        return cls(parsed, body, cols=cols)


def _same_field(A: Matrix, B: Matrix):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    return Matrix(A.field, A.field.vdot(A.data, B.data), cols=B.cols)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    _same_field(A, B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"cannot add {A.rows}x{A.cols} and {B.rows}x{B.cols}")
    return Matrix(A.field, A.field.vadd(A.data, B.data), cols=A.cols)


def transpose(A: Matrix) -> Matrix:
    """Plain transpose, no conjugation"""
    return Matrix(A.field, A.data.T, cols=A.rows)


def conj_transpose(A: Matrix) -> Matrix:
    """Entry-wise conjugate of the transpose"""
    return Matrix(A.field, A.field.vconj(A.data.T), cols=A.rows)


def vstack(A: Matrix, B: Matrix) -> Matrix:
    """Rows of A followed by rows of B"""
    _same_field(A, B)
    if A.cols != B.cols:
        raise DimensionMismatch(f"cannot stack {A.cols} and {B.cols} columns")
    return Matrix(A.field, np.vstack([A.data, B.data]), cols=A.cols)


def vec_mat(field: Field, vector: Sequence[int], A: Matrix) -> tuple[int, ...]:
    """Row vector times matrix"""
    if field != A.field:
        raise FieldMismatch(f"{field} vs {A.field}")
    if len(vector) != A.rows:
        raise DimensionMismatch(f"vector of length {len(vector)} against {A.rows} rows")
    if A.rows == 0:
        return (0,) * A.cols
    product = field.vdot(np.array([list(vector)], dtype=np.int64), A.data)
    return tuple(int(v) for v in product[0])


def rref(A: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row-echelon form, pivot columns and rank

    Pivot is the first nonzero entry scanning down the column.
    """
    field = A.field
    M = A.data.copy()
    pivots = []
    r = 0
    for c in range(A.cols):
        if r == A.rows:
            break
        below = np.nonzero(M[r:, c])[0]
        if below.size == 0:
            continue
        pivot = r + int(below[0])
        if pivot != r:
            M[[r, pivot]] = M[[pivot, r]]
        M[r] = field.mul_table[field.inv(int(M[r, c])), M[r]]
        factors = M[:, c].copy()
        factors[r] = 0
        others = np.nonzero(factors)[0]
        if others.size:
            scaled = field.mul_table[field.vneg(factors[others])[:, None], M[r][None, :]]
            M[others] = field.vadd(M[others], scaled)
        pivots.append(c)
        r += 1
    return Matrix(field, M, cols=A.cols), tuple(pivots), r


def rank(A: Matrix) -> int:
    """Number of pivots in the reduced row-echelon form"""
    return rref(A)[2]


def mat_inv(A: Matrix) -> Matrix:
    """Gauss-Jordan on [A | I]; raises Singular when A is not invertible"""
    if A.rows != A.cols:
        raise DimensionMismatch(f"cannot invert a {A.rows}x{A.cols} matrix")
    n = A.rows
    augmented = Matrix(A.field, np.hstack([A.data, np.eye(n, dtype=np.int64)]), cols=2 * n)
    R, pivots, _ = rref(augmented)
    if pivots[:n] != tuple(range(n)):
        raise Singular(f"{n}x{n} matrix is singular")
    return Matrix(A.field, R.data[:, n:], cols=n)


def null_space(A: Matrix) -> Matrix:
    """Basis rows v of the right kernel, A v^T = 0"""
    field = A.field
    R, pivots, _ = rref(A)
    free = [c for c in range(A.cols) if c not in pivots]
    basis = np.zeros((len(free), A.cols), dtype=np.int64)
    for idx, col in enumerate(free):
        basis[idx, col] = 1
        for i, pc in enumerate(pivots):
            basis[idx, pc] = field.neg(int(R.data[i, col]))
    return Matrix(field, basis, cols=A.cols)


def hermitian_inner(field: Field, u: Sequence[int], v: Sequence[int]) -> int:
    """<u, v> = sum of u_i * conjugate(v_i)"""
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    uu = np.array(u, dtype=np.int64)
    vv = np.array(v, dtype=np.int64)
    return int(field.vsum(field.vmul(uu, field.vconj(vv)), axis=0))
