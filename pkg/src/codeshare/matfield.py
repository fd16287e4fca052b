"""Dense matrices over GF(p^m) with exact Gaussian elimination.

Entries are canonical integer encodings (see :mod:`codeshare.galois`).
Row and column indices are 0-based throughout this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .galois import FieldEmbedding, FieldError, FieldSpec

Vector = tuple[int, ...]


@dataclass(frozen=True)
class MatrixF:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self):
        entries = tuple(tuple(int(a) for a in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ValueError(f"entry count does not match shape {self.rows}x{self.cols}")
        q = self.field.size
        if any(not 0 <= a < q for r in entries for a in r):
            raise FieldError(f"matrix entry outside {self.field!r}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: int | None = None) -> MatrixF:
        rows = [tuple(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for an empty matrix")
            cols = len(rows[0])
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixF:
        return cls(field, n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> MatrixF:
        return MatrixF(self.field, self.cols, self.rows, tuple(self.columns()))

    def select_columns(self, idx: Sequence[int]) -> MatrixF:
        return MatrixF(self.field, self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.entries))

    def scale_column(self, j: int, c: int) -> MatrixF:
        f = self.field
        return MatrixF(
            f, self.rows, self.cols,
            tuple(r[:j] + (f.mul(r[j], c),) + r[j + 1:] for r in self.entries),
        )

    def apply(self, x: Sequence[int]) -> Vector:
        """Matrix-vector product M x."""
        if len(x) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(self.field.dot(r, x) for r in self.entries)

    def matmul(self, other: MatrixF) -> MatrixF:
        if other.field != self.field or other.rows != self.cols:
            raise ValueError("incompatible matrices")
        cols = other.columns()
        return MatrixF(
            self.field, self.rows, other.cols,
            tuple(tuple(self.field.dot(r, c) for c in cols) for r in self.entries),
        )

    def embed(self, emb: FieldEmbedding) -> MatrixF:
        if emb.source != self.field:
            raise FieldError("embedding source does not match matrix field")
        return MatrixF(emb.target, self.rows, self.cols, tuple(emb.vector(r) for r in self.entries))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def _eliminate(field: FieldSpec, rows: list[list[int]], ncols: int, pivot_limit: int | None = None):
    """In-place reduction to RREF; returns the pivot column list.

    Only columns below `pivot_limit` may hold pivots (used for augmented systems).
    """
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if rows[i][c]), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        pr = rows[r]
        lead = pr[c]
        if lead != 1:
            s = inv(lead)
            pr = rows[r] = [mul(a, s) for a in pr]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    nf = neg(f)
                    row = rows[i]
                    rows[i] = [add(a, mul(nf, b)) if b else a for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: MatrixF) -> tuple[MatrixF, int, list[int]]:
    """Reduced row echelon form, rank and (0-based) pivot columns of M."""
    rows = [list(r) for r in M.entries]
    pivots = _eliminate(M.field, rows, M.cols)
    return MatrixF(M.field, M.rows, M.cols, tuple(map(tuple, rows))), len(pivots), pivots


def rank(M: MatrixF) -> int:
    rows = [list(r) for r in M.entries]
    return len(_eliminate(M.field, rows, M.cols))


def _kernel_from_rref(field: FieldSpec, rows, pivots: list[int], ncols: int) -> list[Vector]:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x = [0] * ncols
        x[free] = 1
        for i, pc in enumerate(pivots):
            x[pc] = field.neg(rows[i][free])
        basis.append(tuple(x))
    return basis


def kernel_basis(M: MatrixF) -> list[Vector]:
    """Canonical basis of {x : M x = 0}, one vector per free column in increasing order.

    The vector for free column f has a 1 at f, zeros at the other free columns,
    and the pivot coordinates forced by the RREF.
    """
    rows = [list(r) for r in M.entries]
    pivots = _eliminate(M.field, rows, M.cols)
    return _kernel_from_rref(M.field, rows, pivots, M.cols)


def solve_membership(field: FieldSpec, vectors: Sequence[Sequence[int]], target: Sequence[int]) -> Vector | None:
    """Coefficients expressing `target` in the span of `vectors`, or None.

    Free variables are set to zero, so the answer is deterministic.
    """
    dim = len(target)
    if any(len(v) != dim for v in vectors):
        raise ValueError("vectors and target must share one length")
    k = len(vectors)
    # augmented system [v_1 ... v_k | target], one row per coordinate
    rows = [[v[i] for v in vectors] + [target[i]] for i in range(dim)]
    pivots = _eliminate(field, rows, k + 1, pivot_limit=k)
    r = len(pivots)
    if any(rows[i][k] for i in range(r, dim)):
        return None
    coeffs = [0] * k
    for i, pc in enumerate(pivots):
        coeffs[pc] = rows[i][k]
    return tuple(coeffs)


def in_span(field: FieldSpec, vectors: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    return solve_membership(field, vectors, target) is not None


def combine(field: FieldSpec, coeffs: Iterable[int], vectors: Sequence[Sequence[int]], dim: int) -> Vector:
    """Linear combination sum(c_i * v_i)."""
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] = field.add(out[i], field.mul(c, a))
    return tuple(out)
