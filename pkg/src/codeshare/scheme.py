"""Dealing, reconstruction and perfectness audits for vector space schemes.

The dealer picks a in F^D with a_1 = secret; participant j receives
<a, phi_j>.  Randomness comes from a SplitMix64 stream so that a seed fully
determines a dealing.
"""

from __future__ import annotations

import hashlib
import json
from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Mapping, Sequence

from ._sets import SupportSet
from .construction import VectorSpaceConstruction
from .galois import FieldElement, FieldError
from .matfield import Vector, kernel_basis, MatrixF, solve_membership

MAX_AUDIT_VECTORS = 1 << 16
_MASK64 = (1 << 64) - 1


class SchemeError(ValueError):
    pass


class UnqualifiedSetError(SchemeError):
    pass


class InconsistentSharesError(SchemeError):
    pass


class SplitMix64:
    """state <- state + 0x9E3779B97F4A7C15 (mod 2^64); output is the mixed state."""

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK64:
            raise SchemeError(f"seed {seed} is not an unsigned 64-bit integer")
        self.state = seed

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)


def canonical_bytes(obj: dict) -> bytes:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True).encode("utf-8")


def construction_digest(phi: VectorSpaceConstruction) -> str:
    return hashlib.sha256(canonical_bytes(phi.to_json())).hexdigest()


@dataclass(frozen=True)
class ShareBundle:
    construction_digest: str
    shares: dict[int, int]
    dealer_vector: Vector | None = None

    def to_json(self) -> dict:
        return {
            "construction_digest": self.construction_digest,
            "shares": {str(j): s for j, s in sorted(self.shares.items())},
        }

    @classmethod
    def from_json(cls, obj: dict) -> ShareBundle:
        try:
            return cls(str(obj["construction_digest"]), {int(j): int(s) for j, s in obj["shares"].items()})
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise SchemeError(f"malformed share object: {exc}") from None


def shares_from_dealer(phi: VectorSpaceConstruction, a: Sequence[int]) -> dict[int, int]:
    if len(a) != phi.dim:
        raise SchemeError(f"dealer vector must have length {phi.dim}")
    return {j + 1: phi.field.dot(a, v) for j, v in enumerate(phi.table)}


def deal(
    phi: VectorSpaceConstruction,
    secret: int | FieldElement,
    seed: int,
    keep_dealer: bool = False,
) -> ShareBundle:
    f = phi.field
    if isinstance(secret, FieldElement):
        if secret.field != f:
            raise FieldError(f"secret lives in {secret.field!r}, construction in {f!r}")
        secret = secret.value
    f.check(secret)
    rng = SplitMix64(seed)
    a = (secret,) + tuple(rng.next() % f.size for _ in range(phi.dim - 1))
    return ShareBundle(construction_digest(phi), shares_from_dealer(phi, a), a if keep_dealer else None)


def reconstruct(phi: VectorSpaceConstruction, A: Sequence[int], shares: Mapping[int, int]) -> int:
    """Secret encoding recovered from the shares of the participants in A."""
    A = tuple(sorted(set(A)))
    missing = [j for j in A if j not in shares]
    if missing:
        raise SchemeError(f"no share supplied for participants {missing}")
    if any(not 1 <= j <= phi.n for j in A):
        raise SchemeError(f"participants must lie in 1..{phi.n}")
    f = phi.field
    vecs = phi.vectors(A)
    lam = solve_membership(f, vecs, phi.target)
    if lam is None:
        raise UnqualifiedSetError(f"participants {list(A)} do not form a qualified set")
    s = [shares[j] for j in A]
    # dependencies among the vectors must hold among honest shares too
    relations = kernel_basis(MatrixF.from_rows(f, vecs, cols=phi.dim).transpose()) if vecs else []
    for mu in relations:
        if f.dot(mu, s) != 0:
            raise InconsistentSharesError(f"shares of {list(A)} are not consistent with any dealing")
    return f.dot(lam, s)


@dataclass(frozen=True)
class AuditReport:
    verdict: str  # PERFECT, DETERMINED or LEAKY
    participants: SupportSet
    buckets: dict[tuple[int, ...], dict[int, int]]


def perfectness_audit(phi: VectorSpaceConstruction, A: Sequence[int]) -> AuditReport:
    """Enumerate every dealer vector and tabulate secrets per observed share tuple."""
    f = phi.field
    q = f.size
    if q**phi.dim > MAX_AUDIT_VECTORS:
        raise SchemeError(f"{q}^{phi.dim} dealer vectors exceed the audit bound 2^16")
    A = tuple(sorted(set(A)))
    vecs = phi.vectors(A)
    buckets: dict[tuple[int, ...], dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for a in product(range(q), repeat=phi.dim):
        key = tuple(f.dot(a, v) for v in vecs)
        buckets[key][a[0]] += 1
    table = {k: dict(v) for k, v in buckets.items()}
    return AuditReport(_classify(table, q), A, table)


def _classify(buckets: Mapping[tuple, Mapping[int, int]], q: int) -> str:
    if all(len(c) == 1 for c in buckets.values()):
        return "DETERMINED"
    if all(len(c) == q and len(set(c.values())) == 1 for c in buckets.values()):
        return "PERFECT"
    return "LEAKY"
