"""Maps between lattices induced by point maps, and the reverse direction.

A point map f: X -> Y induces the relation ``{(class(a), class(f*a))}`` over
directed families ``a`` on X. It lives on element indices; whether it is
single-valued is checked, never assumed.

Each ``check_*`` routine evaluates the point-level side and the lattice-level
side independently and returns a :class:`Report`. Statements proved only for
Tychonoff spaces are asserted on the surrogate only inside the hypothesis
class where their proof still goes through; outside it they are recorded.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .bits import subsets
from .errors import (
    AmbiguousWitness,
    EmptySubset,
    ExtractionFailed,
    NoPointWitness,
    NotAnIsomorphism,
    NotZeroDimensional,
)
from .families import DirectedFamily, all_directed_families, gen_set, normal_form, pushforward
from .lattice import UniformLattice, build_lattice, is_order_isomorphism
from .space import (
    FiniteSpace,
    PointMap,
    clopen_sets,
    is_continuous,
    is_open_onto_range,
    is_zero_dimensional,
    predicates,
)


@dataclass
class LatticeMap:
    source: UniformLattice
    target: UniformLattice
    pairs: frozenset[tuple[int, int]]
    provenance: str

    @property
    def is_function(self) -> bool:
        dom = [i for i, _ in self.pairs]
        return len(dom) == len(set(dom)) and set(dom) == set(range(len(self.source)))

    @property
    def table(self) -> tuple[int, ...] | None:
        if not self.is_function:
            return None
        out = [0] * len(self.source)
        for i, j in self.pairs:
            out[i] = j
        return tuple(out)

    def __call__(self, i: int) -> int:
        images = {j for k, j in self.pairs if k == i}
        if len(images) != 1:
            raise ValueError(f"relation is not single-valued at {i}: {sorted(images)}")
        return images.pop()

    @property
    def range(self) -> set[int]:
        return {j for _, j in self.pairs}

    @property
    def is_order_preserving_function(self) -> bool:
        t = self.table
        if t is None:
            return False
        le1, le2 = self.source.leq_matrix, self.target.leq_matrix
        size = len(t)
        return all(le2[t[i]][t[k]] for i in range(size) for k in range(size) if le1[i][k])

    def inverse(self) -> "LatticeMap":
        return LatticeMap(self.target, self.source, frozenset((j, i) for i, j in self.pairs),
                          f"inverse of {self.provenance}")

    @property
    def is_partial_order_preserving_function(self) -> bool:
        """Single-valued on its domain (not necessarily total) and monotone there."""
        image: dict[int, int] = {}
        for i, j in self.pairs:
            if image.setdefault(i, j) != j:
                return False
        le1, le2 = self.source.leq_matrix, self.target.leq_matrix
        return all(le2[image[a]][image[b]] for a in image for b in image if le1[a][b])

    def then(self, other: "LatticeMap") -> "LatticeMap":
        """Relational composition: ``other`` after ``self``."""
        pairs = frozenset((a, c) for a, b in self.pairs for b2, c in other.pairs if b == b2)
        return LatticeMap(self.source, other.target, pairs, f"{other.provenance} o {self.provenance}")


def induced_relation(f: PointMap, source: UniformLattice | None = None, target: UniformLattice | None = None,
                     *, exhaustive: bool = False) -> LatticeMap:
    """The f-induced relation.

    By default the relation is collected over the single-set families ``{M}``;
    every finite directed family is equivalent to the one holding its greatest
    member, whose image is the greatest member of the pushforward, so nothing
    is lost. ``exhaustive=True`` walks every directed family instead.
    """
    source = source or build_lattice(f.source)
    target = target or build_lattice(f.target)
    fams: Iterable[DirectedFamily]
    if exhaustive:
        fams = all_directed_families(f.source)
    else:
        fams = (gen_set(f.source, m) for m in subsets(f.source.full))
    pairs = set()
    for alpha in fams:
        pairs.add((source.index[normal_form(alpha).canon],
                   target.index[normal_form(pushforward(f, alpha)).canon]))
    return LatticeMap(source, target, frozenset(pairs), f"induced by {f.describe()}")


def from_iso(source: UniformLattice, target: UniformLattice, table: Sequence[int]) -> LatticeMap:
    if not is_order_isomorphism(source, target, table):
        raise NotAnIsomorphism(f"{tuple(table)} is not an order isomorphism")
    return LatticeMap(source, target, frozenset(enumerate(table)), "isomorphism")


# -- reports -----------------------------------------------------------------------

@dataclass
class Report:
    proposition_id: str
    instance: dict
    hypothesis_class: str
    lhs: object
    rhs: object
    verdict: str  # holds | fails | recorded
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict != "fails"

    def to_dict(self) -> dict:
        out = {"proposition_id": self.proposition_id, "instance": self.instance,
               "hypothesis_class": self.hypothesis_class, "lhs": self.lhs, "rhs": self.rhs,
               "verdict": self.verdict}
        if self.details:
            out["details"] = self.details
        return out


def _map_instance(f: PointMap) -> dict:
    return {"source": f.source.to_dict(), "target": f.target.to_dict(), "map": f.describe()}


def _verdict(lhs: bool, rhs: bool, two_sided: bool) -> str:
    if lhs and not rhs:
        return "fails"
    if not two_sided:
        return "recorded"
    return "holds" if lhs == rhs else "fails"


def check_continuity_equiv(f: PointMap, phi: LatticeMap | None = None) -> Report:
    """f continuous  <=>  the induced relation is an order-preserving function."""
    phi = phi or induced_relation(f)
    lhs = is_continuous(f)
    rhs = phi.is_order_preserving_function
    verdict = "holds" if lhs == rhs else "fails"
    return Report("continuity_iff_monotone_function", _map_instance(f), "all", lhs, rhs, verdict)


def check_injective_open_equiv(f: PointMap, phi: LatticeMap | None = None) -> Report:
    """f injective and open onto its range  <=>  the inverse relation is an order-preserving function.

    The forward direction is asserted everywhere; the converse needs distinct
    point closures in the source, so it is asserted only for T0 sources.
    """
    phi = phi or induced_relation(f)
    lhs = f.is_injective and is_open_onto_range(f)
    rhs = phi.inverse().is_partial_order_preserving_function
    t0 = predicates(f.source).T0
    return Report("injective_open_iff_inverse_monotone_function", _map_instance(f),
                  "T0-source" if t0 else "all(one-sided)", lhs, rhs, _verdict(lhs, rhs, two_sided=t0))


def check_onto_equiv(f: PointMap, phi: LatticeMap | None = None) -> Report:
    """f onto  <=>  the induced relation hits every element.

    The converse uses closed points in the target, so it is asserted only for
    T1 targets.
    """
    phi = phi or induced_relation(f)
    lhs = f.is_surjective
    rhs = phi.range == set(range(len(phi.target)))
    t1 = predicates(f.target).T1
    return Report("onto_iff_range_is_everything", _map_instance(f),
                  "T1-target" if t1 else "all(one-sided)", lhs, rhs, _verdict(lhs, rhs, two_sided=t1))


def check_functoriality(f: PointMap, g: PointMap) -> Report:
    """Induced relation of g o f versus the composite of the two induced relations.

    Asserted when g is continuous (then g's relation is a function on
    classes); otherwise the composite can be strictly larger and is recorded.
    """
    gf = f.then(g)
    lhs_rel = induced_relation(gf)
    rhs_rel = induced_relation(f).then(induced_relation(g))
    equal = lhs_rel.pairs == rhs_rel.pairs
    contained = lhs_rel.pairs <= rhs_rel.pairs
    gated = is_continuous(g)
    if not contained:
        verdict = "fails"
    elif gated:
        verdict = "holds" if equal else "fails"
    else:
        verdict = "recorded"
    instance = {"f": _map_instance(f), "g": g.describe()}
    return Report("functoriality", instance, "continuous-outer" if gated else "all(containment)",
                  True, equal, verdict)


# -- from isomorphisms back to points -----------------------------------------------

def extract_point_map(phi: LatticeMap) -> PointMap:
    """The point map f with phi(class of {x}) = class of {f(x)}."""
    table = phi.table
    if table is None or not is_order_isomorphism(phi.source, phi.target, table):
        raise NotAnIsomorphism("point extraction needs an order isomorphism")
    X, Y = phi.source.space, phi.target.space
    point_class = [phi.target.element_index(1 << y) for y in range(Y.n)]
    out = []
    for x in range(X.n):
        image = table[phi.source.element_index(1 << x)]
        witnesses = [y for y in range(Y.n) if point_class[y] == image]
        if not witnesses:
            raise NoPointWitness(f"image of the class of {X.labels[x]} is not a point class")
        if len(witnesses) > 1:
            raise AmbiguousWitness(f"image of the class of {X.labels[x]} has witnesses "
                                   f"{[Y.labels[y] for y in witnesses]}")
        out.append(witnesses[0])
    return PointMap(X, Y, tuple(out))


def _iso_instance(phi: LatticeMap) -> dict:
    return {"source": phi.source.space.to_dict(), "target": phi.target.space.to_dict(),
            "table": list(phi.table or ())}


def _require_zero_dim(phi: LatticeMap) -> None:
    for space in (phi.source.space, phi.target.space):
        if not is_zero_dimensional(space):
            raise NotZeroDimensional(f"{space!r} is not zero-dimensional")


def check_clopen_transfer(phi: LatticeMap) -> Report:
    """Clopen sets travel to clopen sets, and closed sets are bounded by their images."""
    _require_zero_dim(phi)
    try:
        f = extract_point_map(phi)
        g = extract_point_map(phi.inverse())
    except (NoPointWitness, AmbiguousWitness) as exc:
        raise ExtractionFailed(str(exc)) from exc
    X, Y = f.source, f.target
    L1, L2 = phi.source, phi.target
    t = phi.table
    co_y = set(clopen_sets(Y))
    bijective_inverse = f.is_injective and f.is_surjective and f.then(g).table == tuple(range(X.n))
    clopen_ok = all(f.image(a) in co_y and t[L1.index[a]] == L2.element_index(f.image(a))
                    for a in clopen_sets(X))
    bounded = all(L2.leq_matrix[t[L1.index[gs]]][L2.element_index(f.image(gs))] for gs in X.closed_sets)
    checks = {"bijection_with_inverse_from_inverse_iso": bijective_inverse,
              "clopen_images": clopen_ok, "closed_image_bound": bounded}
    ok = all(checks.values())
    return Report("clopen_transfer", _iso_instance(phi), "zero-dimensional", True, ok,
                  "holds" if ok else "fails", checks)


def roundtrip_zero_dim(phi: LatticeMap) -> Report:
    """Isomorphism -> extracted point map -> induced relation gives phi back."""
    _require_zero_dim(phi)
    try:
        f = extract_point_map(phi)
    except (NoPointWitness, AmbiguousWitness) as exc:
        raise ExtractionFailed(str(exc)) from exc
    X = f.source
    L1, L2 = phi.source, phi.target
    t = phi.table
    inverse_table = tuple(f.table.index(y) for y in range(f.target.n)) if f.is_injective and f.is_surjective else None
    homeo = (inverse_table is not None and is_continuous(f)
             and is_continuous(PointMap(f.target, X, inverse_table)))
    cond3 = all(t[L1.index[gs]] == L2.element_index(f.image(gs)) for gs in X.closed_sets)
    cond2 = all(t[L1.element_index(a)] == L2.element_index(f.image(a)) for a in subsets(X.full))
    psi = induced_relation(f, L1, L2)
    cond1 = psi.pairs == phi.pairs
    checks = {"homeomorphism": homeo, "closed_sets": cond3, "all_sets": cond2, "equals_induced": cond1}
    ok = all(checks.values())
    return Report("zero_dim_iso_is_induced", _iso_instance(phi), "zero-dimensional", True, ok,
                  "holds" if ok else "fails", {**checks, "point_map": f.describe()})


def embedding_from_subspace(space: FiniteSpace, mask: int, L: UniformLattice | None = None) -> LatticeMap:
    """Lattice map induced by the inclusion of the subspace on ``mask``."""
    if mask == 0:
        raise EmptySubset("the subspace must be nonempty")
    sub, inclusion = space.subspace(mask)
    phi = induced_relation(inclusion, build_lattice(sub), L or build_lattice(space))
    t = phi.table
    assert t is not None, "inclusion induced a non-function"
    size = len(t)
    le1, le2 = phi.source.leq_matrix, phi.target.leq_matrix
    assert all(le1[i][k] == le2[t[i]][t[k]] for i in range(size) for k in range(size)), \
        "inclusion did not induce an order embedding"
    assert len(phi.source) <= len(phi.target)
    phi.provenance = f"embedding of {space.format_set(mask)}"
    return phi
