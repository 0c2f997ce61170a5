"""Exhaustive theorem sweep behind ``unitop check-paper``.

Every checker runs over every enumerated space (and every map between them)
up to a point bound and feeds a :class:`Tally` keyed by a stable proposition
id. The final report carries counts only, no timings, so two runs with the
same arguments are byte-identical.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bits import subsets
from .census import (
    check_finite_cardinalities,
    enumerate_topologies,
    search_iso_nonhomeo,
    topologies_by_closure,
    topologies_by_filter,
)
from .families import (
    DirectedFamily,
    all_directed_families,
    gen_p,
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
from .functors import (
    check_continuity_equiv,
    check_functoriality,
    check_injective_open_equiv,
    check_onto_equiv,
    embedding_from_subspace,
    extract_point_map,
    from_iso,
    induced_relation,
    roundtrip_zero_dim,
)
from .lattice import (
    UniformLattice,
    brute_inf,
    brute_sup,
    build_lattice,
    cellularity,
    clopen_elements,
    complemented_elements,
    atoms,
    hypothesis_violations,
    is_boolean,
    iso_search,
    lattice_laws,
    pi_density,
)
from .space import (
    FiniteSpace,
    all_maps,
    density,
    discrete,
    from_preorder,
    homeomorphisms,
    identity_map,
    predicates,
    regular_open_sets,
)

MAX_SAMPLES = 3


@dataclass
class Tally:
    instances: int = 0
    holds: int = 0
    recorded: int = 0
    failures: int = 0
    samples: list = field(default_factory=list)

    def add(self, ok: bool, sample=None, recorded: bool = False) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if sample is not None and len(self.samples) < MAX_SAMPLES:
                self.samples.append(sample)
        elif recorded:
            self.recorded += 1
        else:
            self.holds += 1

    def merge(self, other: "Tally") -> None:
        self.instances += other.instances
        self.holds += other.holds
        self.recorded += other.recorded
        self.failures += other.failures
        room = MAX_SAMPLES - len(self.samples)
        self.samples.extend(other.samples[:max(room, 0)])

    def to_dict(self) -> dict:
        out = {"instances": self.instances, "holds": self.holds, "recorded": self.recorded,
               "failures": self.failures, "verdict": "fails" if self.failures else "holds"}
        if self.samples:
            out["failure_samples"] = self.samples
        return out


class Tallies(dict):
    def __missing__(self, key):
        self[key] = Tally()
        return self[key]

    def merge(self, other: "Tallies") -> None:
        for key, tally in other.items():
            self[key].merge(tally)


# -- space-level ------------------------------------------------------------------

def check_space_axioms(space: FiniteSpace) -> dict[str, bool]:
    cl, full = space.cl, space.full
    every = range(1 << space.n)
    pr = predicates(space)
    rebuilt = from_preorder(space.labels, space.specialization())
    return {
        "space.kuratowski": cl(0) == 0
        and all(a & ~cl(a) == 0 and cl(cl(a)) == cl(a) for a in every)
        and all(cl(a | b) == cl(a) | cl(b) for a in every for b in every),
        "space.interior_duality": all(space.interior(a) == full & ~cl(full & ~a) for a in every),
        "space.hausdorff_iff_discrete": pr.hausdorff == pr.discrete,
        "space.preorder_roundtrip": rebuilt == space,
        "space.regular_open_bound": len(regular_open_sets(space)) <= 2 ** density(space),
    }


# -- family calculus ------------------------------------------------------------------

def check_order_calculus(space: FiniteSpace, L: UniformLattice | None = None) -> dict[str, bool]:
    """Preorder, normal form, join/meet as sup/inf, distributivity, over all directed families."""
    L = L or build_lattice(space)
    fams = all_directed_families(space)
    k = len(fams)
    canon = [normal_form(f).canon for f in fams]
    le = [[leq(a, b) for b in fams] for a in fams]
    reps = [gen_set(space, c) for c in L.canons]
    out = {
        "family.leq_reflexive": all(le[i][i] for i in range(k)),
        "family.leq_transitive": _transitive(le),
        "family.normal_form_respects_equiv": all(
            (le[i][j] and le[j][i]) == (canon[i] == canon[j]) for i in range(k) for j in range(k)),
        "family.normal_form_witness": all(
            leq(f, gen_set(space, c)) and leq(gen_set(space, c), f) for f, c in zip(fams, canon)),
        "family.quotient_antisymmetric": all(
            not (L.leq_matrix[i][j] and L.leq_matrix[j][i]) or i == j for i in range(len(L)) for j in range(len(L))),
    }
    # order of every family against the class representatives, reused as the bound check
    up_to = [[leq(f, g) for g in reps] for f in fams]
    down_to = [[leq(g, f) for g in reps] for f in fams]
    r = range(len(reps))
    join_ok = meet_ok = True
    for i, a in enumerate(fams):
        for j in range(i, k):
            b = fams[j]
            jn, mt = join(a, b), meet(a, b)
            sup = brute_sup(L, (L.index[canon[i]], L.index[canon[j]]))
            inf = brute_inf(L, (L.index[canon[i]], L.index[canon[j]]))
            if not (_directed(jn) and leq(a, jn) and leq(b, jn) and L.index[normal_form(jn).canon] == sup
                    and all(leq(jn, reps[g]) for g in r if up_to[i][g] and up_to[j][g])):
                join_ok = False
            if not (_directed(mt) and leq(mt, a) and leq(mt, b) and L.index[normal_form(mt).canon] == inf
                    and all(leq(reps[g], mt) for g in r if down_to[i][g] and down_to[j][g])):
                meet_ok = False
    out["family.join_is_sup"] = join_ok
    out["family.meet_is_inf"] = meet_ok
    # distributivity of the canon-level operations, computed through the families
    dist = True
    for x, y, z in itertools.product(reps, repeat=3):
        lhs = normal_form(meet(x, join(y, z))).canon
        rhs = normal_form(join(meet(x, y), meet(x, z))).canon
        dist &= lhs == rhs
    out["family.distributive"] = dist
    out["family.generators"] = (leq(gen_p(space), gen_u(space)) and leq(gen_u(space), gen_p(space))
                                and hausdorff_flag(gen_u(space)) == (space.cl(space.full) == space.full))
    out["family.hausdorff_iff_dense_union"] = all(
        hausdorff_flag(f) == (space.cl(f.union) == space.full) for f in fams)
    return out


def _directed(fam: DirectedFamily) -> bool:
    return is_directed(fam.space, fam.members)


def _transitive(le: list[list[bool]]) -> bool:
    k = len(le)
    rows = [sum(1 << j for j in range(k) if le[i][j]) for i in range(k)]
    for i in range(k):
        reach = 0
        r = rows[i]
        j = 0
        while r:
            if r & 1:
                reach |= rows[j]
            r >>= 1
            j += 1
        if reach & ~rows[i]:
            return False
    return True


def representative(space: FiniteSpace, closed: int) -> DirectedFamily:
    """A non-trivial directed family in the class of ``closed``: {}, a smallest generator, and the set."""
    gen = min((m for m in subsets(closed) if space.cl(m) == closed), key=lambda m: (bin(m).count("1"), m))
    return DirectedFamily(space, {0, gen, closed}, validate=False)


def check_completeness(space: FiniteSpace, L: UniformLattice | None = None) -> dict[str, bool]:
    """Union and choice-function constructions against brute bounds on every subset of elements."""
    L = L or build_lattice(space)
    reps = [representative(space, c) for c in L.canons]
    sup_ok = inf_ok = inf_fast_ok = True
    for r in range(len(L) + 1):
        for sub in itertools.combinations(range(len(L)), r):
            fams = [reps[i] for i in sub]
            s = L.index[normal_form(sup_many(fams, space)).canon]
            sup_ok &= s == brute_sup(L, sub)
            target = brute_inf(L, sub)
            inf_ok &= L.index[normal_form(inf_many(fams, space, verbatim=True)).canon] == target
            inf_fast_ok &= L.index[normal_form(inf_many(fams, space)).canon] == target
    return {"complete.sup_many": sup_ok, "complete.inf_many_verbatim": inf_ok,
            "complete.inf_many": inf_fast_ok}


def check_iterated_binary(space: FiniteSpace, L: UniformLattice | None = None, max_len: int = 4) -> bool:
    """sup_many/inf_many against folded join/meet on lists of up to ``max_len`` elements."""
    L = L or build_lattice(space)
    reps = [gen_set(space, c) for c in L.canons]
    for r in range(1, max_len + 1):
        for seq in itertools.product(range(len(L)), repeat=r) if len(L) ** r <= 4096 else \
                itertools.combinations_with_replacement(range(len(L)), r):
            fams = [reps[i] for i in seq]
            j, m = fams[0], fams[0]
            for f in fams[1:]:
                j, m = join(j, f), meet(m, f)
            if normal_form(j) != normal_form(sup_many(fams)) or normal_form(m) != normal_form(inf_many(fams)):
                return False
    return True


def check_pushforward_functorial(f, g) -> bool:
    """Pushforward along g o f matches pushing along f then g, class by class."""
    ok = True
    for m in subsets(f.source.full):
        a = gen_set(f.source, m)
        ok &= normal_form(pushforward(f.then(g), a)) == normal_form(pushforward(g, pushforward(f, a)))
        ok &= pushforward(identity_map(f.source), a) == a
    return ok


# -- lattice level -------------------------------------------------------------------------

def corrupt_meet_table(L: UniformLattice) -> bool:
    """Test hook: overwrite meet(atom, top) with the bottom. Returns whether anything changed."""
    candidates = [a for a in atoms(L) if a != L.top]
    if not candidates:
        return False
    a = candidates[0]
    L.meet_table[a][L.top] = L.meet_table[L.top][a] = L.bottom
    return True


def check_lattice(space: FiniteSpace, L: UniformLattice) -> dict[str, bool]:
    out = dict(lattice_laws(L))
    out["lattice.elements_are_closed_sets"] = sorted(L.canons) == sorted(space.closed_sets)
    out["lattice.complemented_eq_clopen"] = complemented_elements(L) == clopen_elements(L)
    c, p = cellularity(L), pi_density(L)
    out["lattice.c_le_pi"] = c <= p
    if predicates(space).discrete:
        n = space.n
        singles = sorted(L.element_index(1 << x) for x in range(n))
        out["lattice.discrete_facts"] = (len(L) == 2 ** n and atoms(L) == singles and c == p == n
                                         and is_boolean(L))
    return out


def check_embeddings(space: FiniteSpace, L: UniformLattice) -> bool:
    try:
        for mask in subsets(space.full):
            if mask:
                embedding_from_subspace(space, mask, L)
    except AssertionError:
        return False
    return True


# -- map sweeps ---------------------------------------------------------------------------

def _map_sweep_for_source(args) -> Tallies:
    src_key, max_points = args
    spaces = _spaces_up_to(max_points)
    lattices = {s: build_lattice(s) for s in spaces}
    source = spaces[src_key]
    tallies = Tallies()
    for target in spaces:
        for f in all_maps(source, target):
            phi = induced_relation(f, lattices[source], lattices[target])
            for rep in (check_continuity_equiv(f, phi), check_injective_open_equiv(f, phi),
                        check_onto_equiv(f, phi)):
                tallies[f"functor.{rep.proposition_id}"].add(
                    rep.ok, rep.to_dict(), recorded=rep.verdict == "recorded")
    return tallies


def _spaces_up_to(max_points: int, min_points: int = 0) -> list[FiniteSpace]:
    out = []
    for n in range(min_points, max_points + 1):
        out.extend(enumerate_topologies(n))
    return out


def sweep_maps(max_points: int, jobs: int = 1) -> Tallies:
    spaces = _spaces_up_to(max_points)
    work = [(i, max_points) for i in range(len(spaces))]
    tallies = Tallies()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_map_sweep_for_source, work))
    else:
        results = [_map_sweep_for_source(w) for w in work]
    for part in results:  # merged in source order, so the report is job-count independent
        tallies.merge(part)
    return tallies


def sweep_functoriality(max_points: int) -> Tallies:
    tallies = Tallies()
    spaces = _spaces_up_to(max_points)
    for x, y, z in itertools.product(spaces, repeat=3):
        for f in all_maps(x, y):
            for g in all_maps(y, z):
                rep = check_functoriality(f, g)
                tallies["functor.functoriality"].add(rep.ok, rep.to_dict(), recorded=rep.verdict == "recorded")
                tallies["family.pushforward_functorial"].add(check_pushforward_functorial(f, g))
    return tallies


def sweep_zero_dim(max_points: int) -> Tallies:
    """Every isomorphism between lattices of discrete spaces round-trips through a homeomorphism."""
    tallies = Tallies()
    for n in range(0, max_points + 1):
        for m in range(0, max_points + 1):
            X, Y = discrete(n), discrete(m)
            L1, L2 = build_lattice(X), build_lattice(Y)
            isos = iso_search(L1, L2)
            tallies["functor.zero_dim_no_iso_iff_size_differs"].add(bool(isos) == (n == m))
            for table in isos:
                rep = roundtrip_zero_dim(from_iso(L1, L2, table))
                tallies["functor.zero_dim_iso_is_induced"].add(rep.ok, rep.to_dict())
            if n == m:
                cycle = all(extract_point_map(induced_relation(h, L1, L2)).table == h.table
                            for h in homeomorphisms(X, Y))
                tallies["functor.homeo_extraction_cycle"].add(
                    cycle and len(isos) == len(homeomorphisms(X, Y)), {"n": n})
    return tallies


# -- driver ---------------------------------------------------------------------------------

def run_paper_checks(max_points: int = 3, jobs: int = 1, fault: str | None = None) -> dict:
    tallies = Tallies()
    violations: dict[str, int] = {}
    spaces = _spaces_up_to(max_points, min_points=0)
    for space in spaces:
        L = build_lattice(space)
        for key, ok in check_space_axioms(space).items():
            tallies[key].add(ok, space.to_dict())
        if fault == "meet-table":
            corrupt_meet_table(L)
        for key, ok in check_lattice(space, L).items():
            tallies[key].add(ok, space.to_dict())
        tallies["lattice.subspace_embedding"].add(check_embeddings(space, build_lattice(space)))
        clean = build_lattice(space)
        for key, ok in check_order_calculus(space, clean).items():
            tallies[key].add(ok, space.to_dict())
        for key, ok in check_completeness(space, clean).items():
            tallies[key].add(ok, space.to_dict())
        for v in hypothesis_violations(clean):
            name = f"{v.statement} [{v.hypothesis_class}]"
            violations[name] = violations.get(name, 0) + 1

    tallies.merge(sweep_maps(max_points, jobs))
    tallies.merge(sweep_functoriality(min(max_points, 2)))
    tallies.merge(sweep_zero_dim(max(max_points, 4) if max_points >= 3 else max_points))

    for n in range(1, max_points + 1):
        rep = check_finite_cardinalities(n)
        tallies["census.finite_cardinalities"].add(rep.passed, rep.to_dict())
    for n in range(0, min(max_points, 4) + 1):
        by_enum = {frozenset(s.opens) for s in enumerate_topologies(n)}
        tallies["census.sigma_enumerators_agree"].add(
            by_enum == topologies_by_filter(n) == topologies_by_closure(n), {"n": n})

    findings = search_iso_nonhomeo(max(max_points, 2))
    witness = any(f["x"]["points"] == ["a"] and f["y"]["opens"] == [[], ["a", "b"]] and f["non_T0"]
                  for f in findings)
    tallies["census.iso_nonhomeo_witness"].add(witness and all(not f["tychonoff"] for f in findings))
    tallies["census.iso_nonhomeo_discrete_empty"].add(not search_iso_nonhomeo(max(max_points, 2), "discrete"))
    tallies["census.iso_nonhomeo_T0_empty"].add(not search_iso_nonhomeo(max_points, "T0"))

    failed = sorted(k for k, t in tallies.items() if t.failures)
    return {
        "max_points": max_points,
        "fault_injection": fault,
        "propositions": {k: tallies[k].to_dict() for k in sorted(tallies)},
        "hypothesis_violations": dict(sorted(violations.items())),
        "iso_nonhomeo_findings": len(findings),
        "failed": failed,
        "passed": not failed,
    }
