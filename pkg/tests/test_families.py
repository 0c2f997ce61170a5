import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import spaces_up_to
from unitop.bits import subsets
from unitop.errors import NotDirected, SearchSpaceTooLarge, SpaceMismatch
from unitop.families import (
    DirectedFamily,
    LatticeElement,
    all_directed_families,
    equiv,
    gen_bottom,
    gen_p,
    gen_point,
    gen_set,
    gen_u,
    hausdorff_flag,
    inf_many,
    is_directed,
    join,
    leq,
    meet,
    normal_form,
    pushforward,
    sup_many,
)
from unitop.space import PointMap, all_maps, discrete


def _leq_oracle(alpha, beta):
    # literal reading of the criterion, no precomputed closures
    sp = alpha.space
    return all(any(a & ~sp.cl(b) == 0 for b in beta.members) for a in alpha.members)


def _directed_oracle(members):
    ms = set(members)
    return bool(ms) and all(any((a | b) & ~c == 0 for c in ms) for a in ms for b in ms)


def test_sierpinski_leq_examples(sier):
    a, b = sier.mask("a"), sier.mask("b")
    fa, fb = gen_set(sier, a), gen_set(sier, b)
    # cl{a} = X contains {b}; cl{b} = {b} misses a
    assert leq(fb, fa)
    assert not leq(fa, fb)
    assert normal_form(fa).canon == sier.full
    assert normal_form(fb).canon == b


def test_not_directed(disc2):
    with pytest.raises(NotDirected):
        DirectedFamily(disc2, [0b01, 0b10])
    with pytest.raises(NotDirected):
        DirectedFamily(disc2, [])


def test_directed_ok(disc2):
    fam = DirectedFamily(disc2, [0b01, 0b10, 0b11, 0b01])
    assert fam.members == (0b01, 0b10, 0b11)
    assert fam.greatest == 0b11


def test_space_mismatch(disc2, sier):
    with pytest.raises(SpaceMismatch):
        leq(gen_bottom(disc2), gen_bottom(sier))


def test_lattice_element_requires_closed(sier):
    with pytest.raises(ValueError):
        LatticeElement(sier, sier.mask("a"))
    assert LatticeElement(sier, 0) < LatticeElement(sier, sier.full)


@pytest.mark.parametrize("space", spaces_up_to(2), ids=repr)
def test_all_directed_families_matches_brute_filter(space):
    every = list(subsets(space.full))
    brute = set()
    for r in range(1, len(every) + 1):
        for pick in itertools.combinations(every, r):
            if _directed_oracle(pick):
                brute.add(tuple(sorted(pick)))
    assert {f.members for f in all_directed_families(space)} == brute


@pytest.mark.parametrize("space", spaces_up_to(2), ids=repr)
def test_leq_matches_oracle_and_canon_inclusion(space):
    fams = all_directed_families(space)
    for a, b in itertools.product(fams, repeat=2):
        expected = _leq_oracle(a, b)
        assert leq(a, b) == expected
        ca, cb = normal_form(a).canon, normal_form(b).canon
        assert expected == (ca & ~cb == 0)


@pytest.mark.parametrize("space", spaces_up_to(3, start=3), ids=repr)
def test_leq_preorder_on_three_points(space):
    fams = all_directed_families(space)[::7]  # a stride keeps this unit test quick
    for a in fams:
        assert leq(a, a)
    for a, b, c in itertools.product(fams[:40], repeat=3):
        if leq(a, b) and leq(b, c):
            assert leq(a, c)
    for a, b in itertools.product(fams, repeat=2):
        assert equiv(a, b) == (normal_form(a) == normal_form(b))


@pytest.mark.parametrize("space", spaces_up_to(3), ids=repr)
def test_join_meet_are_directed_bounds(space):
    fams = all_directed_families(space)
    sample = fams if len(fams) < 60 else fams[::len(fams) // 60]
    for a, b in itertools.product(sample, repeat=2):
        j, m = join(a, b), meet(a, b)
        assert is_directed(space, j.members) and is_directed(space, m.members)
        assert normal_form(j).canon == space.cl(normal_form(a).canon | normal_form(b).canon)
        assert normal_form(m).canon == normal_form(a).canon & normal_form(b).canon


def test_generators(disc2, sier):
    for sp in (disc2, sier):
        assert equiv(gen_p(sp), gen_u(sp))
        assert normal_form(gen_bottom(sp)).canon == 0
        assert hausdorff_flag(gen_u(sp))
        assert not hausdorff_flag(gen_bottom(sp))
    assert normal_form(gen_point(sier, 0)).canon == sier.full
    with pytest.raises(ValueError):
        gen_point(sier, 5)


def test_sup_inf_many_empty_lists(sier):
    assert normal_form(sup_many([], sier)).canon == 0
    assert normal_form(inf_many([], sier)).canon == sier.full
    with pytest.raises(ValueError):
        sup_many([])


def test_inf_many_guard():
    sp = discrete(6)
    big = gen_p(sp)
    with pytest.raises(SearchSpaceTooLarge):
        inf_many([big] * 5, verbatim=True)


@pytest.mark.parametrize("space", spaces_up_to(3), ids=repr)
def test_many_agrees_with_folded_binary(space):
    closed = space.closed_sets
    reps = [gen_set(space, c) for c in closed]
    for r in range(1, 4):
        for seq in itertools.combinations_with_replacement(range(len(reps)), r):
            fams = [reps[i] for i in seq]
            j = m = fams[0]
            for f in fams[1:]:
                j, m = join(j, f), meet(m, f)
            assert normal_form(sup_many(fams)) == normal_form(j)
            assert normal_form(inf_many(fams)) == normal_form(m)
            assert normal_form(inf_many(fams, verbatim=True)) == normal_form(m)


@pytest.mark.parametrize("space", spaces_up_to(2), ids=repr)
def test_pushforward_along_continuous_maps_is_monotone(space):
    from unitop.space import is_continuous
    fams = all_directed_families(space)
    for f in all_maps(space, space):
        if not is_continuous(f):
            continue
        for a, b in itertools.product(fams, repeat=2):
            if leq(a, b):
                assert leq(pushforward(f, a), pushforward(f, b))


def test_pushforward_discontinuous_can_break_monotonicity(sier):
    swap = PointMap(sier, sier, (1, 0))
    fb, fa = gen_set(sier, sier.mask("b")), gen_set(sier, sier.mask("a"))
    assert leq(fb, fa)
    assert not leq(pushforward(swap, fb), pushforward(swap, fa))


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_random_families_on_disc3(data):
    sp = discrete(3)
    top = data.draw(st.integers(0, 7))
    extra = data.draw(st.lists(st.sampled_from(list(subsets(top))), max_size=5))
    fam = DirectedFamily(sp, [top, *extra])
    assert fam.greatest == top
    assert normal_form(fam).canon == top
    assert equiv(fam, gen_set(sp, top))
