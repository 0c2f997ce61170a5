"""Bitmask helpers. A subset of an n-point space is an int whose bit i is point i."""
from __future__ import annotations

from typing import Iterator


def full(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> Iterator[int]:
    """Point ids in ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def singleton(i: int) -> int:
    return 1 << i


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def from_ids(ids) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m
