"""Monotone access structures, stored by their minimal qualified sets.

Duality and composition are computed by exhaustive subset scans, bounded by
``max_subsets`` (2^20 unless overridden).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from ._sets import SupportSet, check_scan, labels_of, mask_of, minimal_from_table, minimal_masks
from .codes import LinearCode, dual_code, minimal_support_masks


class AccessError(ValueError):
    pass


@dataclass(frozen=True)
class AccessStructure:
    n: int
    minimal: tuple[SupportSet, ...]

    def __post_init__(self):
        minimal = tuple(sorted(tuple(sorted(set(s))) for s in self.minimal))
        object.__setattr__(self, "minimal", minimal)
        if self.n < 1:
            raise AccessError("an access structure needs at least one participant")
        if not minimal:
            raise AccessError("an access structure needs at least one minimal set")
        for s in minimal:
            if not s:
                raise AccessError("the empty set cannot be a minimal qualified set")
            if s[0] < 1 or s[-1] > self.n:
                raise AccessError(f"set {s} outside participants 1..{self.n}")
        masks = self.masks
        if len(set(masks)) != len(masks):
            raise AccessError("duplicate minimal sets")
        for a in masks:
            for b in masks:
                if a != b and a & b == a:
                    raise AccessError(f"{labels_of(a)} is contained in {labels_of(b)}: not an antichain")

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(s) for s in self.minimal)

    @cached_property
    def table(self) -> list[bool]:
        """Qualification truth table over all 2^n masks."""
        check_scan(self.n, None)
        t = [False] * (1 << self.n)
        for m in self.masks:
            t[m] = True
        # superset closure, one participant bit at a time
        for i in range(self.n):
            bit = 1 << i
            for a in range(1 << self.n):
                if t[a]:
                    t[a | bit] = True
        return t

    def qualifies_mask(self, a: int) -> bool:
        return any(m & a == m for m in self.masks)

    def is_qualified(self, A: Iterable[int]) -> bool:
        A = tuple(A)
        if any(not 1 <= i <= self.n for i in A):
            raise AccessError(f"set {A} outside participants 1..{self.n}")
        return self.qualifies_mask(mask_of(A))

    def to_json(self) -> dict:
        return {"n": self.n, "minimal": [list(s) for s in self.minimal]}

    @classmethod
    def from_json(cls, obj: dict) -> AccessStructure:
        try:
            return cls(int(obj["n"]), tuple(tuple(int(i) for i in s) for s in obj["minimal"]))
        except (KeyError, TypeError) as exc:
            raise AccessError(f"malformed structure object: {exc}") from None


def _from_masks(n: int, masks: Iterable[int]) -> AccessStructure:
    return AccessStructure(n, tuple(labels_of(m) for m in masks))


@dataclass(frozen=True)
class BlockPartition:
    """Contiguous blocks: block i owns labels offset_i+1 .. offset_i+sizes[i]."""

    sizes: tuple[int, ...]
    offsets: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise AccessError("block sizes must be positive")
        offs, acc = [], 0
        for s in sizes:
            offs.append(acc)
            acc += s
        object.__setattr__(self, "offsets", tuple(offs))

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def block_labels(self, i: int) -> SupportSet:
        return tuple(range(self.offsets[i] + 1, self.offsets[i] + self.sizes[i] + 1))

    def restrict(self, mask: int, i: int) -> int:
        """Local mask of the block-i part of a global mask."""
        return (mask >> self.offsets[i]) & ((1 << self.sizes[i]) - 1)

    def to_json(self) -> dict:
        return {"blocks": list(self.sizes)}

    @classmethod
    def from_json(cls, obj: dict) -> BlockPartition:
        try:
            return cls(tuple(obj["blocks"]))
        except (KeyError, TypeError) as exc:
            raise AccessError(f"malformed partition object: {exc}") from None


def from_supports(n: int, family: Iterable[Iterable[int]]) -> AccessStructure:
    """Monotone closure of a family of sets, as its minimal antichain."""
    family = [tuple(s) for s in family]
    if not family:
        raise AccessError("empty family")
    for s in family:
        if not s:
            raise AccessError("empty member set")
        if any(not 1 <= i <= n for i in s):
            raise AccessError(f"set {s} outside participants 1..{n}")
    return _from_masks(n, minimal_masks(mask_of(s) for s in family))


def threshold(t: int, n: int) -> AccessStructure:
    if not 1 <= t <= n:
        raise AccessError(f"threshold needs 1 <= t <= n, got t={t}, n={n}")
    return AccessStructure(n, tuple(combinations(range(1, n + 1), t)))


def structure_of_code(C: LinearCode) -> AccessStructure:
    """The monotone structure generated by the nonzero codeword supports of C."""
    return _from_masks(C.n, minimal_support_masks(C))


def dual_structure(gamma: AccessStructure, max_subsets: int | None = None) -> AccessStructure:
    """{A : complement of A is unqualified}."""
    check_scan(gamma.n, max_subsets)
    full = (1 << gamma.n) - 1
    t = gamma.table
    dual = [not t[full ^ a] for a in range(full + 1)]
    return _from_masks(gamma.n, minimal_from_table(dual))


def _composite_table(gamma0: AccessStructure, parts: Sequence[AccessStructure], partition: BlockPartition) -> list[bool]:
    t0 = gamma0.table
    part_tables = [g.table for g in parts]
    blocks = list(zip(partition.offsets, partition.sizes, part_tables))
    out = []
    for a in range(1 << partition.total):
        b = 0
        for i, (off, size, t) in enumerate(blocks):
            if t[(a >> off) & ((1 << size) - 1)]:
                b |= 1 << i
        out.append(t0[b])
    return out


def _check_compose(gamma0: AccessStructure, sizes: Sequence[int], partition: BlockPartition | None) -> BlockPartition:
    if gamma0.n != len(sizes):
        raise AccessError(f"outer structure has {gamma0.n} participants but {len(sizes)} parts were given")
    if partition is None:
        return BlockPartition(tuple(sizes))
    if tuple(partition.sizes) != tuple(sizes):
        raise AccessError(f"partition blocks {partition.sizes} do not match part sizes {tuple(sizes)}")
    return partition


def compose(
    gamma0: AccessStructure,
    parts: Sequence[AccessStructure],
    partition: BlockPartition | None = None,
    max_subsets: int | None = None,
) -> AccessStructure:
    """Composite structure: A qualifies iff the blocks where A's restriction
    qualifies form a qualified set of gamma0."""
    partition = _check_compose(gamma0, [g.n for g in parts], partition)
    check_scan(partition.total, max_subsets)
    return _from_masks(partition.total, minimal_from_table(_composite_table(gamma0, parts, partition)))


# -- empirical probes ----------------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    equal: bool | None
    counterexample: SupportSet | None = None
    note: str = ""

    @property
    def label(self) -> str:
        if self.equal is None:
            return "N/A"
        return "EQUAL" if self.equal else "UNEQUAL"


@dataclass(frozen=True)
class ProbeReport:
    minimal_sets: Verdict
    duality: Verdict


def _first_difference(n: int, left: Sequence[bool], right: Sequence[bool]) -> SupportSet | None:
    diffs = [labels_of(a) for a in range(1 << n) if left[a] != right[a]]
    return min(diffs) if diffs else None


def probe_propositions(
    gamma0: AccessStructure,
    codes: Sequence[LinearCode],
    partition: BlockPartition | None = None,
    max_subsets: int | None = None,
) -> ProbeReport:
    """Test the minimal-sets and duality identities for gamma0[C_1, ..., C_r].

    (a) the minimal sets of the composite against the unions built from
        minimal sets of gamma0 and minimal supports of each code;
    (b) the dual of the composite against dual(gamma0)[C_1^perp, ...].
    """
    partition = _check_compose(gamma0, [c.n for c in codes], partition)
    check_scan(partition.total, max_subsets)
    parts = [structure_of_code(c) for c in codes]
    composite = compose(gamma0, parts, partition, max_subsets)

    built: set[int] = set()
    for b in gamma0.minimal:
        pieces = [[m << partition.offsets[i - 1] for m in parts[i - 1].masks] for i in b]
        unions = {0}
        for options in pieces:
            unions = {u | o for u in unions for o in options}
        built |= unions
    lhs = set(composite.masks)
    diff = sorted(labels_of(m) for m in lhs ^ built)
    verdict_a = Verdict(not diff, diff[0] if diff else None)

    if any(c.k == c.n for c in codes):
        verdict_b = Verdict(None, None, "a block code is the full space; its dual is the zero code")
    else:
        dual_side = compose(dual_structure(gamma0, max_subsets), [structure_of_code(dual_code(c)) for c in codes], partition, max_subsets)
        left = dual_structure(composite, max_subsets)
        cex = _first_difference(partition.total, left.table, dual_side.table)
        verdict_b = Verdict(cex is None, cex)
    return ProbeReport(verdict_a, verdict_b)

