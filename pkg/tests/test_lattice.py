import itertools

import pytest

from conftest import spaces_up_to
from unitop.errors import NoBound, SearchSpaceTooLarge
from unitop.formats import lattice_to_dict, lattice_to_dot
from unitop.lattice import (
    atoms,
    brute_inf,
    brute_sup,
    build_lattice,
    cellularity,
    clopen_elements,
    complemented_elements,
    hasse,
    hypothesis_violations,
    is_boolean,
    iso_search,
    is_order_isomorphism,
    lattice_laws,
    pi_density,
)
from unitop.space import build_space, clopen_sets, discrete, predicates

SPACES_4 = spaces_up_to(4)


def _cellularity_oracle(L):
    pos = L.positive
    best = 0
    for r in range(1, len(pos) + 1):
        for pick in itertools.combinations(pos, r):
            if all(L.canons[a] & L.canons[b] == 0 for a, b in itertools.combinations(pick, 2)):
                best = r
    return best


def _pi_oracle(L):
    pos = L.positive
    for r in range(0, len(pos) + 1):
        for pick in itertools.combinations(pos, r):
            if all(any(L.canons[t] & ~L.canons[s] == 0 for t in pick) for s in pos):
                return r


def test_sierpinski_lattice(sier):
    L = build_lattice(sier)
    assert L.canons == (0, sier.mask("b"), sier.full)
    assert atoms(L) == [1]
    assert cellularity(L) == pi_density(L) == 1
    assert complemented_elements(L) == [0, 2]
    assert not is_boolean(L)


def test_indiscrete_lattice(indisc2):
    L = build_lattice(indisc2)
    assert len(L) == 2
    assert is_boolean(L)
    assert hypothesis_violations(L)  # 2 elements, not 4


def test_discrete_three(disc3):
    L = build_lattice(disc3)
    assert len(L) == 8
    assert is_boolean(L)
    assert cellularity(L) == pi_density(L) == 3
    assert len(iso_search(L, L)) == 6
    assert hypothesis_violations(L) == []


def test_brute_bounds(sier):
    L = build_lattice(sier)
    assert brute_sup(L, []) == L.bottom
    assert brute_inf(L, []) == L.top
    assert brute_sup(L, [1, 2]) == 2


def test_no_bound_on_incomplete_order(disc2):
    L = build_lattice(disc2)
    # break the order so {a},{b} have two minimal upper bounds
    L.leq_matrix = [row[:] for row in L.leq_matrix]
    L.leq_matrix[1][3] = L.leq_matrix[2][3] = False
    with pytest.raises(NoBound):
        brute_sup(L, [1, 2])


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_lattice_laws(space):
    L = build_lattice(space)
    assert list(L.canons) == sorted(space.closed_sets, key=lambda m: (bin(m).count("1"), m))
    assert all(lattice_laws(L).values())


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_complemented_equals_clopen(space):
    L = build_lattice(space)
    assert complemented_elements(L) == clopen_elements(L)
    assert len(clopen_elements(L)) == len(clopen_sets(space))


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_c_and_pi_against_subset_oracle(space):
    L = build_lattice(space)
    c, p = cellularity(L), pi_density(L)
    assert c == _cellularity_oracle(L)
    assert p == _pi_oracle(L)
    assert c <= p


@pytest.mark.parametrize("space", SPACES_4, ids=repr)
def test_atoms_are_minimal_positive(space):
    L = build_lattice(space)
    minimal = [i for i in L.positive
               if not any(j != i and L.canons[j] & ~L.canons[i] == 0 for j in L.positive)]
    assert atoms(L) == minimal


@pytest.mark.parametrize("n", range(0, 6))
def test_discrete_facts(n):
    L = build_lattice(discrete(n))
    assert len(L) == 2 ** n
    assert is_boolean(L)
    assert cellularity(L) == pi_density(L) == n


@pytest.mark.parametrize("pair", list(itertools.combinations_with_replacement(spaces_up_to(3), 2)),
                         ids=lambda p: f"{p[0]!r}-{p[1]!r}")
def test_iso_search_matches_permutation_brute_force(pair):
    L1, L2 = build_lattice(pair[0]), build_lattice(pair[1])
    brute = []
    if len(L1) == len(L2):
        brute = [p for p in itertools.permutations(range(len(L1))) if is_order_isomorphism(L1, L2, p)]
    assert iso_search(L1, L2) == sorted(brute)
    first = iso_search(L1, L2, first_only=True)
    assert first == brute[:1] if brute else first == []


@pytest.mark.parametrize("space, nodes, edges", [
    (discrete(2), 4, 4),
    (build_space("ab", [[], ["a"], ["a", "b"]]), 3, 2),
    (build_space("ab", [[], ["a", "b"]]), 2, 1),
])
def test_hasse_and_dot(space, nodes, edges):
    L = build_lattice(space)
    assert len(L) == nodes and len(hasse(L)) == edges
    dot = lattice_to_dot(L)
    assert dot.count("->") == edges
    assert dot.count("[label=") == nodes
    assert "rankdir=BT" in dot


def test_lattice_dump_shape(sier):
    d = lattice_to_dict(build_lattice(sier))
    assert d["elements"] == [[], ["b"], ["a", "b"]]
    assert d["c"] == d["pi"] == 1
    assert d["atoms"] == [1]


def test_hausdorff_spaces_have_no_violations():
    for space in SPACES_4:
        if predicates(space).hausdorff:
            assert hypothesis_violations(build_lattice(space)) == []


def test_lattice_guard():
    with pytest.raises(SearchSpaceTooLarge):
        build_lattice(discrete(7))
