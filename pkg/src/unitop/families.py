"""Directed families of subsets and the order calculus on their classes.

A family is *directed* when it is nonempty and any two members lie inside a
third. Two families are compared with the closure criterion: ``alpha <= beta``
iff every member of ``alpha`` lies inside the closure of some member of
``beta``. All class identity goes through :func:`normal_form`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import limits
from .bits import is_subset, subsets
from .errors import NotDirected, SearchSpaceTooLarge, SpaceMismatch
from .space import FiniteSpace, PointMap


@dataclass(frozen=True, order=False)
class LatticeElement:
    """Class representative: a closed subset of ``space``."""

    space: FiniteSpace
    canon: int

    def __post_init__(self):
        if self.space.cl(self.canon) != self.canon:
            raise ValueError(f"{self.space.format_set(self.canon)} is not closed")

    def __le__(self, other: "LatticeElement") -> bool:
        _same_space(self.space, other.space)
        return is_subset(self.canon, other.canon)

    def __lt__(self, other: "LatticeElement") -> bool:
        return self <= other and self.canon != other.canon

    def __repr__(self):
        return f"C{self.space.format_set(self.canon)}"


class DirectedFamily:
    """A finite directed family, stored deduplicated and sorted by mask value."""

    __slots__ = ("space", "members")

    def __init__(self, space: FiniteSpace, members: Iterable[int], *, validate: bool = True):
        self.space = space
        self.members = tuple(sorted(set(members)))
        if validate:
            top = space.full
            if any(m & ~top for m in self.members):
                raise ValueError("family member leaves the space")
            if not is_directed(space, self.members):
                raise NotDirected(f"family {self.describe()} is not directed")

    @property
    def greatest(self) -> int:
        """Largest member; exists because a finite directed family has a maximum."""
        top = 0
        for m in self.members:
            top |= m
        assert top in self.members, "finite directed family without a greatest member"
        return top

    @property
    def union(self) -> int:
        out = 0
        for m in self.members:
            out |= m
        return out

    def describe(self) -> str:
        return "{" + ", ".join(self.space.format_set(m) for m in self.members) + "}"

    def __eq__(self, other):
        if not isinstance(other, DirectedFamily):
            return NotImplemented
        return self.space == other.space and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"DirectedFamily({self.describe()})"


def _same_space(a: FiniteSpace, b: FiniteSpace) -> None:
    if a is not b and a != b:
        raise SpaceMismatch("operands live on different spaces")


def is_directed(space: FiniteSpace, members: Iterable[int]) -> bool:
    ms = list(set(members))
    if not ms:
        return False
    union = 0
    for m in ms:
        union |= m
    if union in ms:
        # the union itself witnesses every pair
        return True
    for a, b in itertools.combinations_with_replacement(ms, 2):
        u = a | b
        if not any(is_subset(u, e) for e in ms):
            return False
    return True


def family(space: FiniteSpace, members: Iterable[int]) -> DirectedFamily:
    return DirectedFamily(space, members)


def normal_form(alpha: DirectedFamily) -> LatticeElement:
    return LatticeElement(alpha.space, alpha.space.cl(alpha.greatest))


def leq(alpha: DirectedFamily, beta: DirectedFamily) -> bool:
    """Closure criterion: each A in alpha sits inside cl(B) for some B in beta."""
    _same_space(alpha.space, beta.space)
    cl = beta.space.cl
    closures = [cl(b) for b in beta.members]
    for a in alpha.members:
        for c in closures:
            if a & ~c == 0:
                break
        else:
            return False
    return True


def equiv(alpha: DirectedFamily, beta: DirectedFamily) -> bool:
    return leq(alpha, beta) and leq(beta, alpha)


def join(alpha: DirectedFamily, beta: DirectedFamily) -> DirectedFamily:
    _same_space(alpha.space, beta.space)
    return DirectedFamily(alpha.space, {a | b for a in alpha.members for b in beta.members}, validate=False)


def meet(alpha: DirectedFamily, beta: DirectedFamily) -> DirectedFamily:
    _same_space(alpha.space, beta.space)
    cl = alpha.space.cl
    return DirectedFamily(alpha.space, {cl(a) & cl(b) for a in alpha.members for b in beta.members},
                          validate=False)


def sup_many(families: Sequence[DirectedFamily], space: FiniteSpace | None = None) -> DirectedFamily:
    """Supremum: all finite unions of members drawn from any of the families.

    The empty union is included, so the empty list yields ``{{}}`` (the bottom).
    """
    space = _common_space(families, space)
    unions = {0}
    pool = {m for fam in families for m in fam.members}
    for m in sorted(pool):
        unions |= {u | m for u in unions}
    return DirectedFamily(space, unions, validate=False)


def inf_many(families: Sequence[DirectedFamily], space: FiniteSpace | None = None,
             *, verbatim: bool = False) -> DirectedFamily:
    """Infimum via choice functions: for each choice e, intersect the closures of e's picks.

    The empty list yields ``{X}`` (the top). Unless ``verbatim`` is set, each
    family is first replaced by the closure of its greatest member, which is
    in the same class, so only one choice function remains.
    """
    space = _common_space(families, space)
    if not families:
        return DirectedFamily(space, [space.full], validate=False)
    cl = space.cl
    if verbatim:
        pools = [sorted({cl(m) for m in fam.members}) for fam in families]
    else:
        pools = [[cl(fam.greatest)] for fam in families]
    size = math.prod(len(p) for p in pools)
    limits.check("choice functions", size, limits.DEFAULT.max_choice_tuples, SearchSpaceTooLarge)
    out = set()
    for choice in itertools.product(*pools):
        m = space.full
        for c in choice:
            m &= c
        out.add(m)
    return DirectedFamily(space, out, validate=False)


def _common_space(families: Sequence[DirectedFamily], space: FiniteSpace | None) -> FiniteSpace:
    if space is None:
        if not families:
            raise ValueError("an empty list of families needs an explicit space")
        space = families[0].space
    for fam in families:
        _same_space(space, fam.space)
    return space


def hausdorff_flag(alpha: DirectedFamily) -> bool:
    """Whether the family has dense union."""
    return alpha.space.cl(alpha.union) == alpha.space.full


def pushforward(f: PointMap, alpha: DirectedFamily) -> DirectedFamily:
    _same_space(f.source, alpha.space)
    return DirectedFamily(f.target, {f.image(a) for a in alpha.members}, validate=False)


# -- canonical generators --------------------------------------------------------

def gen_bottom(space: FiniteSpace) -> DirectedFamily:
    return DirectedFamily(space, [0], validate=False)


def gen_p(space: FiniteSpace) -> DirectedFamily:
    """All finite subsets; on a finite space that is the whole power set."""
    return DirectedFamily(space, subsets(space.full), validate=False)


def gen_u(space: FiniteSpace) -> DirectedFamily:
    return DirectedFamily(space, [space.full], validate=False)


def gen_point(space: FiniteSpace, x: int) -> DirectedFamily:
    if not 0 <= x < space.n:
        raise ValueError(f"point {x} not in space")
    return DirectedFamily(space, [1 << x], validate=False)


def gen_set(space: FiniteSpace, mask: int) -> DirectedFamily:
    if mask & ~space.full:
        raise ValueError("set leaves the space")
    return DirectedFamily(space, [mask], validate=False)


def all_directed_families(space: FiniteSpace) -> list[DirectedFamily]:
    """Every nonempty directed family, via the greatest-member characterization.

    A family is directed iff it contains the union of its members, so the
    families with greatest member M are M plus any set of proper subsets of M.
    """
    count = sum(2 ** ((1 << bin(m).count("1")) - 1) for m in subsets(space.full))
    limits.check("directed families", count, 10**6)
    out = []
    for top in subsets(space.full):
        below = [s for s in subsets(top) if s != top]
        for k in range(len(below) + 1):
            for extra in itertools.combinations(below, k):
                out.append(DirectedFamily(space, (top,) + extra, validate=False))
    out.sort(key=lambda fam: fam.members)
    return out
