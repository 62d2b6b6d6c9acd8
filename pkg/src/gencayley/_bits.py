"""Bitmask helpers for element sets: bit i of a mask means element i."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for x in items:
        m |= 1 << x
    return m


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def elems(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def perm_mask(perm, mask: int) -> int:
    """Image of a set under a permutation given as an index array."""
    m = 0
    for x in bits(mask):
        m |= 1 << perm[x]
    return m


def product_mask(table, amask: int, bmask: int) -> int:
    """Pointwise product set {a*b} as a mask."""
    m = 0
    for a in bits(amask):
        row = table[a]
        for b in bits(bmask):
            m |= 1 << row[b]
    return m


def fmt_set(items: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(items)) + "}"
