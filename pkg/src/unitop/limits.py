"""Search-space guards.

All exhaustive routines call :func:`check` before committing to an
enumeration. Guards can be lifted explicitly with :func:`unsafe_limits`
(the CLI's ``--unsafe-limits``); they are never lifted silently.
"""
from __future__ import annotations

import contextlib
import os
from dataclasses import dataclass

from .errors import SearchSpaceTooLarge


@dataclass(frozen=True)
class Limits:
    max_maps: int = 10**7
    max_choice_tuples: int = 10**6
    max_space_points: int = 20
    max_lattice_points: int = 6
    max_census_points: int = 5
    max_family_census_points: int = 4
    max_search_points: int = 4
    max_lattice_elements: int = 64
    # rough per-item cost used against UNITOP_GUARD_BYTES
    bytes_per_item: int = 64


DEFAULT = Limits()
_unsafe = False


@contextlib.contextmanager
def unsafe_limits(enabled: bool = True):
    global _unsafe
    previous = _unsafe
    _unsafe = enabled
    try:
        yield
    finally:
        _unsafe = previous


def is_unsafe() -> bool:
    return _unsafe


def guard_bytes() -> int | None:
    raw = os.environ.get("UNITOP_GUARD_BYTES")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


def check(what: str, size: int, limit: int, exc: type[SearchSpaceTooLarge] = SearchSpaceTooLarge) -> None:
    """Raise ``exc`` when ``size`` exceeds ``limit`` or the memory cap."""
    if _unsafe:
        return
    if size > limit:
        raise exc(f"{what}: {size} exceeds guard {limit} (use --unsafe-limits to override)")
    cap = guard_bytes()
    if cap is not None and size * DEFAULT.bytes_per_item > cap:
        raise exc(f"{what}: ~{size * DEFAULT.bytes_per_item} bytes exceeds UNITOP_GUARD_BYTES={cap}")
