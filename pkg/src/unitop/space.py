"""Finite topological spaces and maps between them.

Points are ids ``0..n-1``; labels exist only for presentation. Subsets are
bitmasks (see :mod:`unitop.bits`). Arbitrary finite topologies are accepted,
not only discrete ones, so closure structure is non-trivial at small sizes.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import limits
from .bits import from_ids, full, is_subset, members, popcount
from .errors import (
    DuplicateLabel,
    InvalidMap,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    SearchSpaceTooLarge,
    SpaceTooLarge,
    UnknownLabel,
)


def default_labels(n: int) -> tuple[str, ...]:
    if n <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:n])
    return tuple(f"p{i}" for i in range(n))


class FiniteSpace:
    """A finite set with a validated topology.

    ``opens`` is stored sorted by mask value. The closure of every subset is
    precomputed at construction, so :meth:`cl` is a table lookup.
    """

    def __init__(self, n: int, opens: Iterable[int], labels: Sequence[str] | None = None,
                 *, validate: bool = True):
        limits.check("space points", n, limits.DEFAULT.max_space_points, SpaceTooLarge)
        if labels is None:
            labels = default_labels(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise ValueError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise DuplicateLabel(f"duplicate point labels in {list(labels)}")
        self.labels = labels
        self.n = n
        self._open_set = frozenset(opens)
        self.opens = tuple(sorted(self._open_set))
        if validate:
            _validate_opens(n, self.opens, self._open_set)
        self._cl = _closure_table(n, self.opens)

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self.n == other.n and self._open_set == other._open_set

    def __hash__(self):
        return hash((self.n, self.opens))

    def __repr__(self):
        shown = ", ".join(self.format_set(u) for u in self.opens)
        return f"FiniteSpace(n={self.n}, opens=[{shown}])"

    # -- sets and labels --------------------------------------------------

    @property
    def full(self) -> int:
        return full(self.n)

    def mask(self, labels: Iterable[str]) -> int:
        index = self.index
        try:
            return from_ids(index[l] for l in labels)
        except KeyError as exc:
            raise UnknownLabel(f"unknown point label {exc.args[0]!r}") from None

    @cached_property
    def index(self) -> dict[str, int]:
        return {l: i for i, l in enumerate(self.labels)}

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in members(mask)]

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"

    # -- closure and interior --------------------------------------------

    def cl(self, mask: int) -> int:
        return self._cl[mask]

    def interior(self, mask: int) -> int:
        return self.full & ~self._cl[self.full & ~mask]

    def is_open(self, mask: int) -> bool:
        return mask in self._open_set

    def is_closed(self, mask: int) -> bool:
        return self._cl[mask] == mask

    @cached_property
    def closed_sets(self) -> tuple[int, ...]:
        return tuple(sorted(self.full & ~u for u in self.opens))

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        return tuple(self._cl[1 << i] for i in range(self.n))

    @cached_property
    def min_neighbourhoods(self) -> tuple[int, ...]:
        """Smallest open set containing each point."""
        out = []
        for i in range(self.n):
            u = self.full
            for v in self.opens:
                if v >> i & 1:
                    u &= v
            out.append(u)
        return tuple(out)

    def specialization(self) -> list[list[bool]]:
        """Matrix ``r`` with ``r[x][y]`` iff x is in the closure of {y}."""
        pc = self.point_closures
        return [[bool(pc[y] >> x & 1) for y in range(self.n)] for x in range(self.n)]

    def subspace(self, mask: int) -> tuple["FiniteSpace", "PointMap"]:
        """Subspace on ``mask`` together with its inclusion map."""
        ids = list(members(mask))
        pos = {p: k for k, p in enumerate(ids)}
        opens = set()
        for u in self.opens:
            opens.add(from_ids(pos[p] for p in members(u & mask)))
        sub = FiniteSpace(len(ids), opens, [self.labels[p] for p in ids])
        return sub, PointMap(sub, self, tuple(ids))

    def to_dict(self) -> dict:
        return {"points": list(self.labels), "opens": [self.labels_of(u) for u in self.opens]}


def _validate_opens(n: int, opens: Sequence[int], open_set: frozenset[int]) -> None:
    top = full(n)
    for u in opens:
        if u & ~top:
            raise UnknownLabel(f"open set {u:#b} mentions points outside 0..{n - 1}")
    for a, b in itertools.combinations(opens, 2):
        if a | b not in open_set:
            raise NotClosedUnderUnion(f"union of {a:#b} and {b:#b} is not open")
    for a, b in itertools.combinations(opens, 2):
        if a & b not in open_set:
            raise NotClosedUnderIntersection(f"intersection of {a:#b} and {b:#b} is not open")
    if 0 not in open_set or top not in open_set:
        raise MissingEmptyOrFull("the empty set and the whole space must both be open")


def _closure_table(n: int, opens: Sequence[int]) -> list[int]:
    top = full(n)
    closed = [top & ~u for u in opens]
    point_cl = []
    for i in range(n):
        c = top
        for f in closed:
            if f >> i & 1:
                c &= f
        point_cl.append(c)
    # closure is finitely additive, so fill by peeling off the lowest bit
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] | point_cl[low.bit_length() - 1]
    return table


# -- constructors -----------------------------------------------------------

def build_space(labels: Sequence[str], opens: Iterable[Iterable[str]]) -> FiniteSpace:
    """Build and validate a space from point labels and open sets given as label lists."""
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabel(f"duplicate point labels in {labels}")
    index = {l: i for i, l in enumerate(labels)}
    masks = set()
    for u in opens:
        try:
            masks.add(from_ids(index[l] for l in u))
        except KeyError as exc:
            raise UnknownLabel(f"unknown point label {exc.args[0]!r}") from None
    return FiniteSpace(len(labels), masks, labels)


def from_preorder(labels: Sequence[str], relation: Sequence[Sequence[bool]]) -> FiniteSpace:
    """Alexandroff space whose opens are the up-sets of ``relation``.

    ``relation[x][y]`` means x <= y, read as "x lies in the closure of {y}".
    """
    n = len(labels)
    if len(relation) != n or any(len(row) != n for row in relation):
        raise ValueError("relation matrix must be n x n")
    for x in range(n):
        if not relation[x][x]:
            raise NotReflexive(f"{labels[x]} is not related to itself")
    for x, y, z in itertools.product(range(n), repeat=3):
        if relation[x][y] and relation[y][z] and not relation[x][z]:
            raise NotTransitive(f"{labels[x]} <= {labels[y]} <= {labels[z]} but not {labels[x]} <= {labels[z]}")
    limits.check("space points", n, limits.DEFAULT.max_space_points, SpaceTooLarge)
    up = [from_ids(y for y in range(n) if relation[x][y]) for x in range(n)]
    opens = [m for m in range(1 << n) if all(is_subset(up[x], m) for x in members(m))]
    return FiniteSpace(n, opens, labels)


def discrete(n: int, labels: Sequence[str] | None = None) -> FiniteSpace:
    limits.check("space points", n, limits.DEFAULT.max_space_points, SpaceTooLarge)
    return FiniteSpace(n, range(1 << n), labels, validate=False)


def indiscrete(n: int, labels: Sequence[str] | None = None) -> FiniteSpace:
    return FiniteSpace(n, {0, full(n)}, labels)


def sierpinski(labels: Sequence[str] = ("a", "b")) -> FiniteSpace:
    """Two points, the first one open: opens {}, {a}, {a,b}."""
    return FiniteSpace(2, {0, 0b01, 0b11}, labels)


# -- point-level predicates and invariants ------------------------------------

@dataclass(frozen=True)
class Predicates:
    T0: bool
    T1: bool
    hausdorff: bool
    discrete: bool
    zero_dimensional: bool

    def hypothesis_class(self) -> str:
        if self.discrete:
            return "discrete"
        if self.T1:
            return "T1"
        if self.T0:
            return "T0"
        return "arbitrary"


def predicates(space: FiniteSpace) -> Predicates:
    pc = space.point_closures
    nb = space.min_neighbourhoods
    t0 = len(set(pc)) == space.n
    t1 = all(pc[i] == 1 << i for i in range(space.n))
    hausdorff = all(nb[i] & nb[j] == 0 for i, j in itertools.combinations(range(space.n), 2))
    is_discrete = all(space.is_open(1 << i) for i in range(space.n))
    # finite spaces: T2, T1 and discreteness all coincide
    assert hausdorff == is_discrete == t1, "finite-space separation axioms disagree"
    return Predicates(t0, t1, hausdorff, is_discrete, is_zero_dimensional(space))


def clopen_sets(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(u for u in space.opens if space.is_closed(u))


def is_zero_dimensional(space: FiniteSpace) -> bool:
    """Whether the clopen sets form a base: every open is a union of clopens inside it."""
    co = clopen_sets(space)
    for u in space.opens:
        covered = 0
        for c in co:
            if is_subset(c, u):
                covered |= c
        if covered != u:
            return False
    return True


def regular_open_sets(space: FiniteSpace) -> tuple[int, ...]:
    return tuple(u for u in space.opens if space.interior(space.cl(u)) == u)


def density(space: FiniteSpace) -> int:
    """Minimum size of a dense subset (exact; a finite analogue of d(X))."""
    for k in range(space.n + 1):
        for ids in itertools.combinations(range(space.n), k):
            if space.cl(from_ids(ids)) == space.full:
                return k
    raise AssertionError("the whole space is always dense")


def open_count(space: FiniteSpace) -> int:
    return len(space.opens)


# -- maps ----------------------------------------------------------------------

@dataclass(frozen=True)
class PointMap:
    source: FiniteSpace
    target: FiniteSpace
    table: tuple[int, ...]

    def __post_init__(self):
        table = tuple(self.table)
        object.__setattr__(self, "table", table)
        if len(table) != self.source.n:
            raise InvalidMap(f"table has {len(table)} entries for {self.source.n} source points")
        if any(not 0 <= t < self.target.n for t in table):
            raise InvalidMap(f"table {table} leaves the target's {self.target.n} points")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, mask: int) -> int:
        out = 0
        for i in members(mask):
            out |= 1 << self.table[i]
        return out

    def preimage(self, mask: int) -> int:
        return from_ids(i for i, t in enumerate(self.table) if mask >> t & 1)

    def then(self, other: "PointMap") -> "PointMap":
        """``other`` after ``self``."""
        if other.source != self.target:
            raise InvalidMap("maps are not composable")
        return PointMap(self.source, other.target, tuple(other.table[t] for t in self.table))

    @property
    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    @property
    def is_surjective(self) -> bool:
        return set(self.table) == set(range(self.target.n))

    def describe(self) -> str:
        src, dst = self.source.labels, self.target.labels
        return ",".join(f"{src[i]}->{dst[t]}" for i, t in enumerate(self.table))


def identity_map(space: FiniteSpace) -> PointMap:
    return PointMap(space, space, tuple(range(space.n)))


def is_continuous(f: PointMap) -> bool:
    return all(f.source.is_open(f.preimage(v)) for v in f.target.opens)


def is_open_onto_range(f: PointMap) -> bool:
    """Whether the image of every open set is open in the subspace f[X]."""
    rng = f.image(f.source.full)
    sub_opens = {v & rng for v in f.target.opens}
    return all(f.image(u) in sub_opens for u in f.source.opens)


def all_maps(source: FiniteSpace, target: FiniteSpace) -> list[PointMap]:
    count = target.n ** source.n
    limits.check("maps", count, limits.DEFAULT.max_maps)
    return [PointMap(source, target, t) for t in itertools.product(range(target.n), repeat=source.n)]


def homeomorphisms(source: FiniteSpace, target: FiniteSpace) -> list[PointMap]:
    """All homeomorphisms, by backtracking over specialization-compatible assignments."""
    if source.n != target.n or len(source.opens) != len(target.opens):
        return []
    n = source.n
    limits.check("bijections", math.factorial(n), limits.DEFAULT.max_maps, SearchSpaceTooLarge)
    rs, rt = source.specialization(), target.specialization()

    def signature(space, i):
        return popcount(space.point_closures[i]), popcount(space.min_neighbourhoods[i])

    sig_s = [signature(source, i) for i in range(n)]
    sig_t = [signature(target, j) for j in range(n)]
    found: list[PointMap] = []
    table = [0] * n
    used = [False] * n

    def extend(i):
        if i == n:
            f = PointMap(source, target, tuple(table))
            inv = PointMap(target, source, tuple(table.index(j) for j in range(n)))
            if is_continuous(f) and is_continuous(inv):
                found.append(f)
            return
        for j in range(n):
            if used[j] or sig_s[i] != sig_t[j]:
                continue
            if any(rs[i][k] != rt[j][table[k]] or rs[k][i] != rt[table[k]][j] for k in range(i)):
                continue
            used[j] = True
            table[i] = j
            extend(i + 1)
            used[j] = False

    extend(0)
    return found


def is_homeomorphic(a: FiniteSpace, b: FiniteSpace) -> bool:
    return bool(homeomorphisms(a, b))
