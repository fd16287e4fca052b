"""Vector space constructions for code-based and composite access structures.

A construction assigns each participant j a vector phi_j in F^D; a set A is
qualified iff e_1 = (1, 0, ..., 0) lies in the span of {phi_j : j in A}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Sequence

from ._sets import SupportSet, check_scan
from .access import AccessStructure, BlockPartition
from .codes import LinearCode, code_from_parity, minimal_supports, parity_check
from .galois import FieldEmbedding, FieldError, FieldSpec, field_embed, field_make
from .matfield import MatrixF, Vector, kernel_basis, solve_membership


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class VectorSpaceConstruction:
    field: FieldSpec
    dim: int
    table: tuple[Vector, ...]

    def __post_init__(self):
        table = tuple(tuple(int(a) for a in v) for v in self.table)
        object.__setattr__(self, "table", table)
        if self.dim < 1:
            raise ConstructionError("ambient dimension must be >= 1")
        if not table:
            raise ConstructionError("a construction needs at least one participant")
        q = self.field.size
        for v in table:
            if len(v) != self.dim:
                raise ConstructionError(f"table vector {v} does not have length {self.dim}")
            if any(not 0 <= a < q for a in v):
                raise FieldError(f"table entry outside {self.field!r}")

    @property
    def n(self) -> int:
        return len(self.table)

    @property
    def target(self) -> Vector:
        return (1,) + (0,) * (self.dim - 1)

    @property
    def zero_participants(self) -> list[int]:
        """Labels whose vector is zero; such participants never help."""
        return [j + 1 for j, v in enumerate(self.table) if not any(v)]

    def vectors(self, A: Sequence[int]) -> list[Vector]:
        return [self.table[j - 1] for j in A]

    def reaches_target(self, A: Sequence[int]) -> bool:
        return solve_membership(self.field, self.vectors(A), self.target) is not None

    def embed(self, emb: FieldEmbedding) -> VectorSpaceConstruction:
        if emb.source != self.field:
            raise FieldError("embedding source does not match construction field")
        return VectorSpaceConstruction(emb.target, self.dim, tuple(emb.vector(v) for v in self.table))

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "dim": self.dim,
            "n": self.n,
            "table": [list(v) for v in self.table],
        }

    @classmethod
    def from_json(cls, obj: dict) -> VectorSpaceConstruction:
        try:
            field = FieldSpec.from_json(obj["field"])
            vsc = cls(field, int(obj["dim"]), tuple(tuple(v) for v in obj["table"]))
            n = int(obj["n"])
        except (KeyError, TypeError) as exc:
            raise ConstructionError(f"malformed construction object: {exc}") from None
        if n != vsc.n:
            raise ConstructionError(f"declared n={n} but table has {vsc.n} rows")
        return vsc


@dataclass(frozen=True)
class WitnessTable:
    """For each minimal support A_t, a codeword supported exactly on A_t."""

    field: FieldSpec
    supports: tuple[SupportSet, ...]
    witnesses: tuple[Vector, ...]

    def to_json(self) -> dict:
        return {"supports": [list(s) for s in self.supports], "witnesses": [list(w) for w in self.witnesses]}


@dataclass(frozen=True)
class Normalized:
    code: LinearCode
    parity: MatrixF
    witnesses: WitnessTable
    chain: tuple[FieldEmbedding, ...]


def identity_embedding(field: FieldSpec) -> FieldEmbedding:
    return FieldEmbedding(field, field, (-field.modulus[0]) % field.p if field.m == 1 else field.p)


def sum_normalize(C: LinearCode) -> Normalized:
    """Rescale parity-check columns until every minimal support of the code is
    the support of some codeword whose coordinates do not sum to zero.

    Minimal supports are visited in lexicographic order.  A support whose
    canonical kernel vector already has nonzero sum keeps it as witness.
    Otherwise column j = min(A_t) is divided by the smallest gamma such that
    the new witness, and every stored witness through column j, keeps a
    nonzero coordinate sum; when the current field has no such gamma its
    degree is doubled and everything is re-embedded.
    """
    field = C.field
    n = C.n
    H = parity_check(C)
    supports = minimal_supports(C)
    witnesses: list[list[int]] = []
    chain: list[FieldEmbedding] = []

    for A in supports:
        idx = [i - 1 for i in A]
        basis = kernel_basis(H.select_columns(idx))
        candidates = []
        for v in basis:
            full = [0] * n
            for i, a in zip(idx, v):
                full[i] = a
            candidates.append(full)
        good = next((w for w in candidates if field.sum(w) != 0), None)
        if good is not None:
            witnesses.append(good)
            continue

        lam = candidates[0]
        j = next(i for i in idx if lam[i])
        while True:
            gamma = _admissible_scale(field, lam, j, witnesses)
            if gamma is not None:
                break
            bigger = field_make(field.p, 2 * field.m)
            emb = field_embed(field, bigger)
            chain.append(emb)
            H = H.embed(emb)
            lam = list(emb.vector(lam))
            witnesses = [list(emb.vector(w)) for w in witnesses]
            field = bigger

        # h_j -> h_j / gamma keeps H w = 0 once w_j is multiplied by gamma
        H = H.scale_column(j, field.inv(gamma))
        for w in witnesses:
            if w[j]:
                w[j] = field.mul(w[j], gamma)
        lam[j] = field.mul(lam[j], gamma)
        witnesses.append(lam)

    code = code_from_parity(H, n)
    table = WitnessTable(field, tuple(supports), tuple(tuple(w) for w in witnesses))
    return Normalized(code, H, table, tuple(chain))


def _admissible_scale(field: FieldSpec, lam: list[int], j: int, witnesses: list[list[int]]) -> int | None:
    # Scaling w_j by gamma changes sum(w) to sum(w) - w_j + w_j*gamma, which
    # vanishes iff w_j*gamma == w_j - sum(w).  Each stored witness touching
    # column j contributes its bad gamma, expressed as a value of lam_j*gamma.
    lj = lam[j]
    forbidden = {0, field.sub(lj, field.sum(lam))}
    for w in witnesses:
        if w[j]:
            bad_gamma = field.div(field.sub(w[j], field.sum(w)), w[j])
            forbidden.add(field.mul(lj, bad_gamma))
    for g in field.elements():
        if field.mul(lj, g) not in forbidden:
            return g
    return None


def threshold_construction(t: int, n: int, field: FieldSpec) -> VectorSpaceConstruction:
    """phi_i = (1, a_i, ..., a_i^(t-1)) with a_i the i-th nonzero element."""
    if not 1 <= t <= n:
        raise ConstructionError(f"threshold needs 1 <= t <= n, got t={t}, n={n}")
    if n > field.size - 1:
        raise ConstructionError(f"{n} participants need more than {field.size - 1} nonzero elements")
    table = tuple(tuple(field.pow(a, e) for e in range(t)) for a in range(1, n + 1))
    return VectorSpaceConstruction(field, t, table)


def trivial_construction(field: FieldSpec) -> VectorSpaceConstruction:
    """One participant holding e_1: realizes the (1,1) structure."""
    return VectorSpaceConstruction(field, 1, ((1,),))


def compose_construction(
    phi0: VectorSpaceConstruction,
    codes: Sequence[LinearCode],
    partition: BlockPartition | None = None,
) -> VectorSpaceConstruction:
    """Construction for phi0's structure composed with the code structures.

    Participant j of block i receives phi0(i) followed by the block-diagonal
    column j of the normalized parity-check matrix H_i; block widths are the
    row counts of the H_i.
    """
    if phi0.n != len(codes):
        raise ConstructionError(f"outer construction has {phi0.n} participants but {len(codes)} codes were given")
    sizes = tuple(c.n for c in codes)
    if partition is not None and tuple(partition.sizes) != sizes:
        raise ConstructionError(f"partition blocks {partition.sizes} do not match code lengths {sizes}")
    p = phi0.field.p
    if any(c.field.p != p for c in codes):
        raise ConstructionError("all codes must share the characteristic of the outer construction")

    parities = [sum_normalize(c).parity for c in codes]
    degree = lcm(phi0.field.m, *(H.field.m for H in parities))
    common = next((f for f in [phi0.field] + [H.field for H in parities] if f.m == degree), None)
    if common is None:
        common = field_make(p, degree)

    def lift(f: FieldSpec) -> FieldEmbedding:
        return identity_embedding(f) if f == common else field_embed(f, common)

    outer = phi0.embed(lift(phi0.field))
    parities = [H.embed(lift(H.field)) for H in parities]
    widths = [H.rows for H in parities]
    dim = phi0.dim + sum(widths)

    table = []
    for i, H in enumerate(parities):
        before = sum(widths[:i])
        after = sum(widths[i + 1:])
        for col in H.columns():
            table.append(outer.table[i] + (0,) * before + col + (0,) * after)
    return VectorSpaceConstruction(common, dim, tuple(table))


def code_construction(C: LinearCode) -> VectorSpaceConstruction:
    """phi_j = (1, h_j) over the sum-normalized parity-check matrix of C."""
    return compose_construction(trivial_construction(C.field), [C])


@dataclass(frozen=True)
class RealizesVerdict:
    ok: bool
    scanned: int
    counterexample: SupportSet | None = None
    direction: str | None = None  # "qualified-but-unreachable" or "unqualified-but-reachable"


def _subsets_lex(n: int):
    """All subsets of 1..n as sorted tuples, in lexicographic order."""
    yield ()
    stack = [(i,) for i in range(n, 0, -1)]
    while stack:
        s = stack.pop()
        yield s
        stack.extend(s + (i,) for i in range(n, s[-1], -1))


def realizes(phi: VectorSpaceConstruction, gamma: AccessStructure, max_subsets: int | None = None) -> RealizesVerdict:
    """Check e_1 in span(phi(A)) <=> A qualified, for every subset A."""
    if phi.n != gamma.n:
        raise ConstructionError(f"construction has {phi.n} participants, structure has {gamma.n}")
    check_scan(phi.n, max_subsets)
    scanned = 0
    for A in _subsets_lex(phi.n):
        scanned += 1
        reach = phi.reaches_target(A)
        qual = gamma.is_qualified(A)
        if reach != qual:
            direction = "unqualified-but-reachable" if reach else "qualified-but-unreachable"
            return RealizesVerdict(False, scanned, A, direction)
    return RealizesVerdict(True, scanned)
