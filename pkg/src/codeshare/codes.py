"""Linear [n, k] codes over finite fields."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._sets import SupportSet, labels_of, minimal_masks
from .galois import FieldElement, FieldEmbedding, FieldError, FieldSpec
from .matfield import MatrixF, kernel_basis, rank, rref

MAX_CODEWORDS = 1 << 20


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCode:
    """The row space of a full-rank k x n generator matrix."""

    generator: MatrixF

    def __post_init__(self):
        G = self.generator
        if G.rows < 1:
            raise CodeError("a code needs dimension k >= 1")
        if rank(G) != G.rows:
            raise CodeError(f"generator has rank {rank(G)} < {G.rows} rows")

    @property
    def field(self) -> FieldSpec:
        return self.generator.field

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"

    def canonical(self) -> MatrixF:
        return rref(self.generator)[0]

    def same_code(self, other: LinearCode) -> bool:
        """Equality as codeword sets."""
        return self.field == other.field and self.canonical() == other.canonical()

    def codewords(self) -> Iterator[tuple[int, ...]]:
        """All q^k codewords, zero first."""
        if self.field.size**self.k > MAX_CODEWORDS:
            raise CodeError(f"{self.field.size}^{self.k} codewords exceed the enumeration bound")
        f = self.field
        words = [(0,) * self.n]
        for g in self.generator.entries:
            words = [
                w if c == 0 else tuple(f.add(a, f.mul(c, b)) for a, b in zip(w, g))
                for c in f.elements()
                for w in words
            ]
        return iter(words)

    def contains(self, word: Sequence[int]) -> bool:
        return all(v == 0 for v in parity_check(self).apply(word))

    def embed(self, emb: FieldEmbedding) -> LinearCode:
        """Same generator read over an extension field."""
        return LinearCode(self.generator.embed(emb))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "k": self.k,
            "generator": self.generator.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> LinearCode:
        try:
            field = FieldSpec.from_json(obj["field"])
            n, k = int(obj["n"]), int(obj["k"])
            rows = obj["generator"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CodeError(f"malformed code object: {exc}") from None
        G = MatrixF.from_rows(field, rows, cols=n)
        if G.rows != k:
            raise CodeError(f"declared k={k} but generator has {G.rows} rows")
        return cls(G)


def code_make(generator: MatrixF) -> LinearCode:
    return LinearCode(generator)


def code_from_parity(H: MatrixF, n: int | None = None) -> LinearCode:
    """The code {x : H x = 0}."""
    if n is not None and H.cols != n:
        raise CodeError(f"parity-check matrix has {H.cols} columns, expected {n}")
    basis = kernel_basis(H)
    if not basis:
        raise CodeError("parity-check matrix has trivial kernel (zero code)")
    return LinearCode(MatrixF.from_rows(H.field, basis, cols=H.cols))


def parity_check(C: LinearCode) -> MatrixF:
    """Canonical (n-k) x n parity-check matrix: the kernel basis of the generator."""
    return MatrixF.from_rows(C.field, kernel_basis(C.generator), cols=C.n)


def dual_code(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise CodeError("the dual of the full space is the zero code")
    return LinearCode(parity_check(C))


def support_mask(word: Sequence[int]) -> int:
    m = 0
    for i, a in enumerate(word):
        if a:
            m |= 1 << i
    return m


def minimal_support_masks(C: LinearCode) -> list[int]:
    return minimal_masks(m for m in map(support_mask, C.codewords()) if m)


def minimal_supports(C: LinearCode) -> list[SupportSet]:
    """Supports of the minimal codewords, 1-based, sorted lexicographically."""
    return sorted(labels_of(m) for m in minimal_support_masks(C))


def reed_solomon(
    n: int,
    k: int,
    field: FieldSpec,
    points: Sequence[int | FieldElement] | None = None,
) -> LinearCode:
    """RS(n, k): generator row i is (x_j^i) over distinct nonzero points x_j.

    Without explicit points the first n nonzero encodings are used.
    """
    if not 1 <= k <= n:
        raise CodeError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > field.size - 1:
        raise CodeError(f"RS length {n} exceeds q-1 = {field.size - 1}")
    if points is None:
        pts = list(range(1, n + 1))
    else:
        pts = [int(x) for x in points]
        if isinstance(points[0], FieldElement) and any(x.field != field for x in points):
            raise FieldError("evaluation points belong to another field")
    if len(pts) != n:
        raise CodeError(f"need {n} evaluation points, got {len(pts)}")
    for x in pts:
        field.check(x)
    if 0 in pts or len(set(pts)) != n:
        raise CodeError("evaluation points must be distinct and nonzero")
    rows = [tuple(field.pow(x, i) for x in pts) for i in range(k)]
    return LinearCode(MatrixF.from_rows(field, rows, cols=n))
