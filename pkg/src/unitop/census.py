"""Exhaustive enumeration and counting over all labeled spaces on n points.

Three independent routes produce the labeled topologies:

* :func:`enumerate_topologies` backtracks over open families in mask order
  (the production path, fine up to n = 5),
* :func:`topologies_by_filter` filters every family of subsets through the
  axioms directly,
* :func:`topologies_by_closure` enumerates closure operators via the
  closures of singletons.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterable

from . import limits
from .bits import from_ids, full, subsets
from .errors import Overflow, SearchSpaceTooLarge
from .lattice import build_lattice, iso_search
from .space import (
    FiniteSpace,
    density,
    discrete,
    homeomorphisms,
    predicates,
    regular_open_sets,
)

# labeled topology counts, for cross-reference only (OEIS A000798)
KNOWN_LABELED_COUNTS = (1, 1, 4, 29, 355, 6942, 209527)


def _guard_points(n: int, limit: int) -> None:
    limits.check("census points", n, limit, SearchSpaceTooLarge)


# -- topologies ------------------------------------------------------------------

def _open_families(n: int) -> list[tuple[int, ...]]:
    top = full(n)
    if n == 0:
        return [(0,)]
    out: list[tuple[int, ...]] = []
    chosen = [0]

    def visit(m: int, included: int, required: int) -> None:
        # included / required are bitsets over the power set
        if m == top:
            out.append(tuple(chosen) + (top,))
            return
        bit = 1 << m
        if not required & bit:
            visit(m + 1, included, required)
        for t in chosen:
            if not included >> (m & t) & 1:
                break
        else:
            new_required = required
            for t in chosen:
                new_required |= 1 << (m | t)
            chosen.append(m)
            visit(m + 1, included | bit, new_required)
            chosen.pop()

    visit(1, 1, 0)
    out.sort()
    return out


def enumerate_topologies(n: int) -> list[FiniteSpace]:
    """All labeled topologies on n points, ordered by their sorted open masks."""
    _guard_points(n, limits.DEFAULT.max_census_points)
    return [FiniteSpace(n, opens, validate=False) for opens in _open_families(n)]


def topologies_by_filter(n: int) -> set[frozenset[int]]:
    """Open families found by testing every family containing the empty set and X."""
    _guard_points(n, 4)
    top = full(n)
    middle = [m for m in range(1, top)]
    out = set()
    for k in range(len(middle) + 1):
        for extra in itertools.combinations(middle, k):
            fam = {0, top, *extra}
            if all(a | b in fam and a & b in fam for a in fam for b in fam):
                out.add(frozenset(fam))
    if n == 0:
        out = {frozenset({0})}
    return out


def topologies_by_closure(n: int) -> set[frozenset[int]]:
    """Open families read off every Kuratowski closure operator on n points.

    A closure operator on a finite set is additive, so it is fixed by the
    closures of the singletons; each candidate is checked against all four
    axioms on every subset before being accepted.
    """
    _guard_points(n, 4)
    top = full(n)
    choices = [[s for s in subsets(top) if s >> x & 1] for x in range(n)]
    out = set()
    for pc in itertools.product(*choices):
        cl = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = m & -m
            cl[m] = cl[m ^ low] | pc[low.bit_length() - 1]
        if cl[0] != 0:
            continue
        if any(cl[cl[a]] != cl[a] or a & ~cl[a] for a in range(1 << n)):
            continue
        if any(cl[a | b] != cl[a] | cl[b] for a in range(1 << n) for b in range(1 << n)):
            continue
        out.add(frozenset(top & ~a for a in range(1 << n) if cl[a] == a))
    return out


def sigma_count(n: int) -> int:
    _guard_points(n, limits.DEFAULT.max_census_points)
    return len(_open_families(n))


# -- directed families ---------------------------------------------------------------

@dataclass(frozen=True)
class FamilyCount:
    with_empty: int
    nonempty: int
    closed_form: int


def directed_closed_form(n: int) -> int:
    """1 + sum over M of 2^(2^|M| - 1): a greatest member M plus any set of its proper subsets."""
    from math import comb
    return 1 + sum(comb(n, k) * 2 ** (2 ** k - 1) for k in range(n + 1))


def count_directed_families(space_or_n: FiniteSpace | int) -> FamilyCount:
    """Count directed subfamilies of the power set by testing each one pairwise.

    Directedness ignores the topology, so a space only contributes its size.
    The empty family is counted in ``with_empty`` only.
    """
    n = space_or_n.n if isinstance(space_or_n, FiniteSpace) else space_or_n
    _guard_points(n, limits.DEFAULT.max_family_census_points)
    size = 1 << n
    # up[s]: bitset over the power set of the supersets of s
    up = [from_ids(t for t in range(size) if t & s == s) for s in range(size)]
    nonempty = 0
    for fam in range(1, 1 << size):
        ms = [s for s in range(size) if fam >> s & 1]
        if all(fam & up[a | b] for i, a in enumerate(ms) for b in ms[i + 1:]):
            nonempty += 1
    return FamilyCount(nonempty + 1, nonempty, directed_closed_form(n))


def beth_finite(level: int, n: int) -> int:
    """Iterated power: beth_0 = n, beth_{k+1} = 2 ** beth_k; 64-bit range only."""
    if level < 0 or n < 0:
        raise ValueError("level and n must be non-negative")
    value = n
    for _ in range(level):
        if value >= 63:
            raise Overflow(f"beth_{level}({n}) exceeds the 64-bit range")
        value = 2 ** value
    return value


# -- the finite cardinality statements --------------------------------------------------

@dataclass
class InequalityCheck:
    name: str
    chain: list
    relations: list[str]
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "chain": self.chain, "relations": self.relations, "passed": self.passed}


def _chain(name: str, values: list[int], relations: list[str]) -> InequalityCheck:
    ops = {"<": lambda a, b: a < b, "<=": lambda a, b: a <= b, "=": lambda a, b: a == b}
    passed = all(ops[r](a, b) for a, b, r in zip(values, values[1:], relations))
    return InequalityCheck(name, values, relations, passed)


@dataclass
class CensusReport:
    n: int
    sigma_count: int
    dx_count: FamilyCount
    ux_sizes: dict[str, int]
    inequality_checks: list[InequalityCheck]
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.inequality_checks)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "sigma_count": self.sigma_count,
            "dx_count": {"with_empty": self.dx_count.with_empty, "nonempty": self.dx_count.nonempty,
                         "closed_form": self.dx_count.closed_form},
            "ux_sizes": self.ux_sizes,
            "inequality_checks": [c.to_dict() for c in self.inequality_checks],
            "passed": self.passed,
            "metadata": {"sigma_reference": "OEIS A000798 (labeled topologies), informational only"},
        }
        if include_timing:
            out["timing"] = self.timing
        return out


def check_finite_cardinalities(n: int) -> CensusReport:
    _guard_points(n, limits.DEFAULT.max_family_census_points)
    timing = {}
    t0 = time.perf_counter()
    spaces = enumerate_topologies(n)
    sigma = len(spaces)
    timing["topologies"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    dx = count_directed_families(n)
    timing["directed_families"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    ux = {f"{n}:{k}": len(build_lattice(s)) for k, s in enumerate(spaces)}
    timing["lattices"] = time.perf_counter() - t0
    checks = [_chain("closed form matches exhaustive count", [dx.with_empty, dx.closed_form], ["="])]
    b2 = beth_finite(2, n)
    if n == 1:
        checks.append(_chain("|Sigma| < 2^|X| < |D_X| = beth_2(|X|)", [sigma, 2 ** n, dx.with_empty, b2],
                             ["<", "<", "="]))
    elif n >= 2:
        checks.append(_chain("2^|X| <= |Sigma| < |D_X| < beth_2(|X|)", [2 ** n, sigma, dx.with_empty, b2],
                             ["<=", "<", "<"]))
        checks.append(_chain("2^|X| <= |Sigma| < |D_X \\ {{}}| < beth_2(|X|)",
                             [2 ** n, sigma, dx.nonempty, b2], ["<=", "<", "<"]))
    checks.append(_chain("discrete: |U_X| = 2^|X|", [len(build_lattice(discrete(n))), 2 ** n], ["="]))
    return CensusReport(n, sigma, dx, ux, checks, timing)


# -- surrogate search for isomorphic lattices over non-homeomorphic spaces ---------------

def canonical_key(space: FiniteSpace) -> tuple[int, tuple[int, ...]]:
    """Smallest relabeled open family; equal keys iff homeomorphic."""
    n = space.n
    best = None
    for perm in itertools.permutations(range(n)):
        opens = tuple(sorted(from_ids(perm[i] for i in range(n) if u >> i & 1) for u in space.opens))
        if best is None or opens < best:
            best = opens
    return n, best


def homeomorphism_classes(max_n: int, min_n: int = 1) -> list[FiniteSpace]:
    """One representative per homeomorphism class, first in enumeration order."""
    reps: dict = {}
    for n in range(min_n, max_n + 1):
        for s in enumerate_topologies(n):
            reps.setdefault(canonical_key(s), s)
    return list(reps.values())


_RESTRICT = {
    None: lambda p: True,
    "all": lambda p: True,
    "discrete": lambda p: p.discrete,
    "T0": lambda p: p.T0,
    "T1": lambda p: p.T1,
}


def search_iso_nonhomeo(max_n: int, restrict: str | None = None, min_n: int = 1) -> list[dict]:
    """Pairs of non-homeomorphic spaces whose lattices are order-isomorphic.

    Any witness here is non-Tychonoff: finite Tychonoff spaces are discrete and
    their lattice size 2^n pins down n.
    """
    _guard_points(max_n, limits.DEFAULT.max_search_points)
    keep = _RESTRICT[restrict]
    reps = [s for s in homeomorphism_classes(max_n, min_n) if keep(predicates(s))]
    lattices = [build_lattice(s) for s in reps]
    findings = []
    for i, j in itertools.combinations(range(len(reps)), 2):
        if len(lattices[i]) != len(lattices[j]):
            continue
        if not iso_search(lattices[i], lattices[j], first_only=True):
            continue
        if homeomorphisms(reps[i], reps[j]):
            continue
        pi, pj = predicates(reps[i]), predicates(reps[j])
        findings.append({
            "x": reps[i].to_dict(),
            "y": reps[j].to_dict(),
            "x_flags": {"T0": pi.T0, "T1": pi.T1, "discrete": pi.discrete},
            "y_flags": {"T0": pj.T0, "T1": pj.T1, "discrete": pj.discrete},
            "lattice_size": len(lattices[i]),
            "tychonoff": False,
            "non_T0": not (pi.T0 and pj.T0),
            "note": "finite surrogate only; finite Tychonoff spaces are discrete, so this pair is not Tychonoff",
        })
    return findings


# -- regular open sets versus density ------------------------------------------------------

def ro_density_sweep(max_n: int, min_n: int = 0) -> dict:
    _guard_points(max_n, limits.DEFAULT.max_search_points)
    total, failures, equalities = 0, [], 0
    for n in range(min_n, max_n + 1):
        for s in enumerate_topologies(n):
            ro, d = len(regular_open_sets(s)), density(s)
            total += 1
            if ro > 2 ** d:
                failures.append({"space": s.to_dict(), "ro": ro, "density": d})
            elif ro == 2 ** d:
                equalities += 1
    return {"proposition_id": "regular_open_bound", "spaces": total, "equalities": equalities,
            "failures": failures, "passed": not failures}


def all_spaces(max_n: int, min_n: int = 0) -> Iterable[FiniteSpace]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_topologies(n)

