import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import spaces_up_to
from unitop.bits import from_ids, popcount
from unitop.errors import (
    DuplicateLabel,
    InvalidMap,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotReflexive,
    NotTransitive,
    SearchSpaceTooLarge,
)
from unitop.limits import unsafe_limits
from unitop.space import (
    PointMap,
    all_maps,
    build_space,
    clopen_sets,
    density,
    discrete,
    from_preorder,
    homeomorphisms,
    identity_map,
    indiscrete,
    is_continuous,
    is_open_onto_range,
    open_count,
    predicates,
    regular_open_sets,
)

SPACES_4 = spaces_up_to(4)


def test_sierpinski_closures():
    s = build_space(["a", "b"], [[], ["a"], ["a", "b"]])
    assert s.cl(s.mask("a")) == s.mask("ab")
    assert s.cl(s.mask("b")) == s.mask("b")


def test_indiscrete_closure():
    s = build_space(["a", "b"], [[], ["a", "b"]])
    assert s.cl(s.mask("a")) == s.full


@pytest.mark.parametrize("opens, error", [
    ([[], ["a"], ["b"]], NotClosedUnderUnion),
    ([[], ["a"]], MissingEmptyOrFull),
    ([["a"], ["a", "b"]], MissingEmptyOrFull),
])
def test_build_space_rejects(opens, error):
    with pytest.raises(error):
        build_space(["a", "b"], opens)


def test_intersection_violation():
    with pytest.raises(NotClosedUnderIntersection):
        build_space(["a", "b", "c"], [[], ["a", "b"], ["b", "c"], ["a", "b", "c"]])


def test_duplicate_label():
    with pytest.raises(DuplicateLabel):
        build_space(["a", "a"], [[], ["a"]])


def test_labels_do_not_affect_identity():
    a = build_space(["a", "b"], [[], ["a"], ["a", "b"]])
    b = build_space(["x", "y"], [[], ["x"], ["x", "y"]])
    assert a == b and hash(a) == hash(b)


# -- preorders ------------------------------------------------------------------

def test_from_preorder_antichain_is_discrete():
    rel = [[i == j for j in range(3)] for i in range(3)]
    assert from_preorder("abc", rel) == discrete(3)


def test_from_preorder_chain_is_sierpinski_like(sier):
    # a <= b: a lies in the closure of b, so b is the open point
    s = from_preorder("ab", [[True, True], [False, True]])
    assert set(s.opens) == {0, 0b10, 0b11}
    assert homeomorphisms(s, sier)


def test_from_preorder_total_relation_is_indiscrete():
    assert from_preorder("ab", [[True, True], [True, True]]) == indiscrete(2)


def test_from_preorder_errors():
    with pytest.raises(NotReflexive):
        from_preorder("ab", [[False, True], [False, True]])
    with pytest.raises(NotTransitive):
        from_preorder("abc", [[True, True, False], [False, True, True], [False, False, True]])


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_preorder_roundtrip(space):
    assert from_preorder(space.labels, space.specialization()) == space


# -- predicates ----------------------------------------------------------------------

def test_predicates_discrete(disc3):
    p = predicates(disc3)
    assert p.T0 and p.T1 and p.hausdorff and p.discrete and p.zero_dimensional


def test_predicates_sierpinski(sier):
    p = predicates(sier)
    assert p.T0 and not p.T1 and not p.zero_dimensional


def test_zero_dimensional_by_exhaustive_base_check(sier):
    # oracle: every open set is a union of clopen subsets of it
    co = [u for u in sier.opens if sier.is_closed(u)]
    unions = {from_ids([]) | 0}
    for k in range(len(co) + 1):
        for pick in itertools.combinations(co, k):
            m = 0
            for c in pick:
                m |= c
            unions.add(m)
    assert sier.mask("a") not in unions
    assert not predicates(sier).zero_dimensional


def test_predicates_indiscrete(indisc2):
    p = predicates(indisc2)
    assert not p.T0 and p.zero_dimensional


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_hausdorff_iff_discrete(space):
    p = predicates(space)
    assert p.hausdorff == p.discrete == p.T1


# -- set invariants ------------------------------------------------------------------

def test_discrete_three_counts(disc3):
    assert len(clopen_sets(disc3)) == 8
    assert len(regular_open_sets(disc3)) == 8
    assert density(disc3) == 3
    assert open_count(disc3) == 8


def test_sierpinski_regular_opens(sier):
    # oracle: enumerate all 4 subsets and test int(cl U) == U on the open ones
    ro = [u for u in range(4) if sier.is_open(u) and sier.interior(sier.cl(u)) == u]
    assert ro == [0, 3]
    assert list(regular_open_sets(sier)) == ro
    assert density(sier) == 1


def test_indiscrete_counts(indisc2):
    assert clopen_sets(indisc2) == (0, 3)
    assert density(indisc2) == 1


def _density_oracle(space):
    return min(popcount(d) for d in range(1 << space.n) if space.cl(d) == space.full)


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_kuratowski_and_duality(space):
    cl, full = space.cl, space.full
    every = range(1 << space.n)
    assert cl(0) == 0
    for a in every:
        assert a & ~cl(a) == 0
        assert cl(cl(a)) == cl(a)
        assert space.interior(a) == full & ~cl(full & ~a)
        # closure is the smallest superset with open complement
        supers = [c for c in every if a & ~c == 0 and space.is_open(full & ~c)]
        assert cl(a) == min(supers, key=popcount)
        for b in every:
            assert cl(a | b) == cl(a) | cl(b)


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_regular_open_bound(space):
    assert density(space) == _density_oracle(space)
    assert len(regular_open_sets(space)) <= 2 ** density(space)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.booleans(), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_random_preorder_spaces_are_valid(raw):
    n = len(raw)
    # reflexive-transitive closure of a random relation
    rel = [[raw[i][j] or i == j for j in range(n)] for i in range(n)]
    for k, i, j in itertools.product(range(n), repeat=3):
        if rel[i][k] and rel[k][j]:
            rel[i][j] = True
    space = from_preorder([str(i) for i in range(n)], rel)
    assert space.specialization() == rel
    for a in range(1 << n):
        assert space.cl(space.cl(a)) == space.cl(a)


# -- maps -------------------------------------------------------------------------------

def test_identity_on_sierpinski(sier):
    f = identity_map(sier)
    assert is_continuous(f) and is_open_onto_range(f)
    assert f in homeomorphisms(sier, sier)


def test_swap_on_sierpinski_not_continuous(sier):
    assert not is_continuous(PointMap(sier, sier, (1, 0)))


def test_discrete_homeomorphisms(disc3):
    assert len(homeomorphisms(disc3, disc3)) == 6


@pytest.mark.parametrize("space", spaces_up_to(3), ids=repr)
def test_homeomorphisms_match_brute_force(space):
    brute = [f for f in all_maps(space, space)
             if f.is_injective and is_continuous(f)
             and is_continuous(PointMap(space, space, tuple(f.table.index(i) for i in range(space.n))))]
    assert sorted(h.table for h in homeomorphisms(space, space)) == sorted(f.table for f in brute)


def test_all_maps_count(disc2, disc3):
    assert len(all_maps(disc2, disc3)) == 9


def test_all_maps_guard():
    big = discrete(9)
    with pytest.raises(SearchSpaceTooLarge):
        all_maps(big, big)


def test_invalid_map(disc2):
    with pytest.raises(InvalidMap):
        PointMap(disc2, disc2, (0, 2))


def test_unsafe_limits_lifts_guard():
    with unsafe_limits():
        assert discrete(2).n == 2
