"""The quotient lattice of directed-family classes over a finite space.

Every class has a unique closed representative (the closure of the greatest
member), so the element universe is the family of closed sets. The order,
join and meet tables are nevertheless filled through the family calculus on
single-member generators, and the ``brute_*`` routines re-derive bounds from
the order matrix alone, so the two routes check each other.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import limits
from .bits import popcount
from .errors import NoBound, SearchSpaceTooLarge, SpaceTooLarge
from .families import LatticeElement, gen_set, join, leq, meet, normal_form
from .space import FiniteSpace, clopen_sets, predicates


class UniformLattice:
    """Elements sorted by (size, mask), so index 0 is the bottom and the last is the top."""

    def __init__(self, space: FiniteSpace):
        self.space = space
        canons = sorted(space.closed_sets, key=lambda m: (popcount(m), m))
        self.canons: tuple[int, ...] = tuple(canons)
        self.elements = tuple(LatticeElement(space, c) for c in canons)
        self.index = {c: i for i, c in enumerate(canons)}
        gens = [gen_set(space, c) for c in canons]
        size = len(canons)
        self.leq_matrix = [[leq(gens[i], gens[j]) for j in range(size)] for i in range(size)]
        self.join_table = [[self.index[normal_form(join(gens[i], gens[j])).canon] for j in range(size)]
                           for i in range(size)]
        self.meet_table = [[self.index[normal_form(meet(gens[i], gens[j])).canon] for j in range(size)]
                           for i in range(size)]
        self.bottom = self.index[0]
        self.top = self.index[space.full]

    def __len__(self) -> int:
        return len(self.canons)

    def __repr__(self):
        return f"UniformLattice({len(self)} elements over {self.space!r})"

    def element_index(self, mask: int) -> int:
        """Index of the class generated by the single set ``mask``."""
        return self.index[self.space.cl(mask)]

    def label(self, i: int) -> str:
        return self.space.format_set(self.canons[i])

    @property
    def positive(self) -> list[int]:
        """Indices of all elements except the bottom."""
        return [i for i in range(len(self)) if i != self.bottom]

    def ranks(self) -> list[int]:
        """Length of the longest chain from the bottom to each element."""
        rank = [0] * len(self)
        for j in range(len(self)):
            for i in range(j):
                if self.leq_matrix[i][j] and i != j:
                    rank[j] = max(rank[j], rank[i] + 1)
        return rank


def build_lattice(space: FiniteSpace) -> UniformLattice:
    limits.check("lattice points", space.n, limits.DEFAULT.max_lattice_points, SpaceTooLarge)
    return UniformLattice(space)


# -- brute-force bounds ---------------------------------------------------------

def upper_bounds(L: UniformLattice, subset: Iterable[int]) -> list[int]:
    subset = list(subset)
    return [j for j in range(len(L)) if all(L.leq_matrix[i][j] for i in subset)]


def lower_bounds(L: UniformLattice, subset: Iterable[int]) -> list[int]:
    subset = list(subset)
    return [j for j in range(len(L)) if all(L.leq_matrix[j][i] for i in subset)]


def brute_sup(L: UniformLattice, subset: Iterable[int]) -> int:
    ups = upper_bounds(L, subset)
    least = [u for u in ups if all(L.leq_matrix[u][v] for v in ups)]
    if len(least) != 1:
        raise NoBound(f"no least upper bound (candidates {least})")
    return least[0]


def brute_inf(L: UniformLattice, subset: Iterable[int]) -> int:
    lows = lower_bounds(L, subset)
    greatest = [u for u in lows if all(L.leq_matrix[v][u] for v in lows)]
    if len(greatest) != 1:
        raise NoBound(f"no greatest lower bound (candidates {greatest})")
    return greatest[0]


# -- structure ---------------------------------------------------------------------

def atoms(L: UniformLattice) -> list[int]:
    pos = L.positive
    return [i for i in pos if not any(k != i and L.leq_matrix[k][i] for k in pos)]


def complemented(L: UniformLattice) -> list[tuple[int, int]]:
    """All ordered pairs (s, t) with s meet t = bottom and s join t = top."""
    size = len(L)
    return [(s, t) for s in range(size) for t in range(size)
            if L.meet_table[s][t] == L.bottom and L.join_table[s][t] == L.top]


def complemented_elements(L: UniformLattice) -> list[int]:
    return sorted({s for s, _ in complemented(L)})


def clopen_elements(L: UniformLattice) -> list[int]:
    return sorted(L.index[c] for c in clopen_sets(L.space))


def is_boolean(L: UniformLattice) -> bool:
    return len(complemented_elements(L)) == len(L)


def hasse(L: UniformLattice) -> list[tuple[int, int]]:
    """Covering pairs (lower, upper)."""
    size = len(L)
    le = L.leq_matrix
    edges = []
    for i in range(size):
        for j in range(size):
            if i == j or not le[i][j]:
                continue
            if not any(k not in (i, j) and le[i][k] and le[k][j] for k in range(size)):
                edges.append((i, j))
    return edges


# -- cardinal characteristics --------------------------------------------------

def _guard_elements(L: UniformLattice) -> None:
    limits.check("lattice elements", len(L), limits.DEFAULT.max_lattice_elements, SearchSpaceTooLarge)


def cellularity(L: UniformLattice) -> int:
    """Largest set of non-bottom elements whose pairwise meets are the bottom."""
    _guard_elements(L)
    pos = L.positive
    k = len(pos)
    # compat[a]: bitmask of positions disjoint (meet = bottom) from position a
    compat = []
    for a in range(k):
        m = 0
        for b in range(k):
            if a != b and L.meet_table[pos[a]][pos[b]] == L.bottom:
                m |= 1 << b
        compat.append(m)
    best = 0

    def grow(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + popcount(cand) <= best:
                return
            low = cand & -cand
            a = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & compat[a])

    grow(0, (1 << k) - 1)
    return best


def pi_density(L: UniformLattice) -> int:
    """Smallest set S of non-bottom elements with every non-bottom element above some member of S."""
    _guard_elements(L)
    pos = L.positive
    if not pos:
        return 0
    below = {s: [t for t in pos if L.leq_matrix[t][s]] for s in pos}
    best = len(pos)

    def search(chosen: list[int], uncovered: set[int]) -> None:
        nonlocal best
        if not uncovered:
            best = min(best, len(chosen))
            return
        if len(chosen) + 1 >= best:
            return
        target = min(uncovered, key=lambda s: (len(below[s]), s))
        for t in below[target]:
            chosen.append(t)
            search(chosen, {s for s in uncovered if not L.leq_matrix[t][s]})
            chosen.pop()

    search([], set(pos))
    return best


# -- isomorphisms --------------------------------------------------------------------

def _profile(L: UniformLattice) -> list[tuple[int, int, int]]:
    rank = L.ranks()
    size = len(L)
    return [(rank[i], sum(L.leq_matrix[k][i] for k in range(size)),
             sum(L.leq_matrix[i][k] for k in range(size))) for i in range(size)]


def iso_search(L1: UniformLattice, L2: UniformLattice, *, first_only: bool = False) -> list[tuple[int, ...]]:
    """All order isomorphisms L1 -> L2 as index tables, in lexicographic order."""
    size = len(L1)
    if size != len(L2):
        return []
    _guard_elements(L1)
    p1, p2 = _profile(L1), _profile(L2)
    if sorted(p1) != sorted(p2):
        return []
    le1, le2 = L1.leq_matrix, L2.leq_matrix
    order = sorted(range(size), key=lambda i: (p1[i], i))
    table = [-1] * size
    used = [False] * size
    found: list[tuple[int, ...]] = []

    def extend(pos: int) -> bool:
        if pos == size:
            found.append(tuple(table))
            return first_only
        i = order[pos]
        for j in range(size):
            if used[j] or p1[i] != p2[j]:
                continue
            if any(le1[i][k] != le2[j][table[k]] or le1[k][i] != le2[table[k]][j]
                   for k in order[:pos]):
                continue
            used[j] = True
            table[i] = j
            if extend(pos + 1):
                return True
            used[j] = False
            table[i] = -1
        return False

    extend(0)
    found.sort()
    return found


def is_order_isomorphism(L1: UniformLattice, L2: UniformLattice, table: Sequence[int]) -> bool:
    size = len(L1)
    if len(L2) != size or sorted(table) != list(range(size)):
        return False
    return all(L1.leq_matrix[i][k] == L2.leq_matrix[table[i]][table[k]]
               for i in range(size) for k in range(size))


# -- law checks and hypothesis bookkeeping -------------------------------------------

def lattice_laws(L: UniformLattice) -> dict[str, bool]:
    """Evaluate partial-order and lattice identities against the stored tables."""
    size = len(L)
    le, J, M = L.leq_matrix, L.join_table, L.meet_table
    r = range(size)
    return {
        "order.reflexive": all(le[i][i] for i in r),
        "order.antisymmetric": all(not (le[i][j] and le[j][i]) or i == j for i in r for j in r),
        "order.transitive": all(not (le[i][j] and le[j][k]) or le[i][k] for i in r for j in r for k in r),
        "lattice.commutative": all(J[i][j] == J[j][i] and M[i][j] == M[j][i] for i in r for j in r),
        "lattice.idempotent": all(J[i][i] == i and M[i][i] == i for i in r),
        "lattice.associative": all(J[J[i][j]][k] == J[i][J[j][k]] and M[M[i][j]][k] == M[i][M[j][k]]
                                   for i in r for j in r for k in r),
        "lattice.absorption": all(J[i][M[i][j]] == i and M[i][J[i][j]] == i for i in r for j in r),
        "lattice.bounded": all(le[L.bottom][i] and le[i][L.top] for i in r),
        "lattice.distributive": all(M[i][J[j][k]] == J[M[i][j]][M[i][k]] for i in r for j in r for k in r),
        "lattice.join_is_sup": all(J[i][j] == brute_sup(L, (i, j)) for i in r for j in r),
        "lattice.meet_is_inf": all(M[i][j] == brute_inf(L, (i, j)) for i in r for j in r),
    }


@dataclass
class HypothesisViolation:
    """A place where a result stated for Tychonoff spaces differs on this surrogate."""

    statement: str
    expected: object
    observed: object
    hypothesis_class: str
    note: str = field(default="")

    def to_dict(self) -> dict:
        return {"statement": self.statement, "expected": self.expected, "observed": self.observed,
                "hypothesis_class": self.hypothesis_class, "note": self.note}


def hypothesis_violations(L: UniformLattice) -> list[HypothesisViolation]:
    space = L.space
    hclass = predicates(space).hypothesis_class()
    out = []
    singles = sorted(L.element_index(1 << x) for x in range(space.n))
    got_atoms = atoms(L)
    if got_atoms != sorted(set(singles)) or len(got_atoms) != space.n:
        out.append(HypothesisViolation("atoms are the point generators", singles, got_atoms, hclass))
    if len(L) != 2 ** space.n:
        out.append(HypothesisViolation("lattice size is 2^|X|", 2 ** space.n, len(L), hclass))
    c, p = cellularity(L), pi_density(L)
    if not c == p == space.n:
        out.append(HypothesisViolation("c = pi = |X|", space.n, [c, p], hclass))
    if not is_boolean(L):
        out.append(HypothesisViolation("finite space gives a Boolean lattice", True, False, hclass))
    return out
