"""Bitmask helpers for participant subsets.

Participants are labelled 1..n; label i is bit i-1 of a mask.
"""

from __future__ import annotations

from typing import Iterable, Sequence

SupportSet = tuple[int, ...]

MAX_SCAN_SUBSETS = 1 << 20


class ScanBoundError(ValueError):
    """An exhaustive scan would exceed its configured size bound."""


def mask_of(labels: Iterable[int]) -> int:
    m = 0
    for i in labels:
        m |= 1 << (i - 1)
    return m


def labels_of(mask: int) -> SupportSet:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def check_scan(n: int, max_subsets: int | None) -> None:
    bound = MAX_SCAN_SUBSETS if max_subsets is None else max_subsets
    if (1 << n) > bound:
        raise ScanBoundError(f"scan over 2^{n} subsets exceeds bound {bound}")


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of nonempty masks."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (bin(x).count("1"), x)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def minimal_from_table(qualified: Sequence[bool]) -> list[int]:
    """Minimal members of a monotone family given as a truth table over all masks."""
    out = []
    for a, q in enumerate(qualified):
        if not q:
            continue
        b = a
        while b:
            low = b & -b
            if qualified[a ^ low]:
                break
            b ^= low
        else:
            out.append(a)
    return out


def lex_sorted(sets: Iterable[SupportSet]) -> list[SupportSet]:
    return sorted(sets)
