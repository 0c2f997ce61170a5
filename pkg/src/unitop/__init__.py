"""Finite-space engine for the lattice of directed-family classes (uniform topologies on C(X))."""

from .families import (
    DirectedFamily,
    LatticeElement,
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
from .lattice import UniformLattice, build_lattice
from .space import FiniteSpace, PointMap, build_space, discrete, from_preorder, indiscrete, sierpinski

__all__ = [
    "DirectedFamily", "FiniteSpace", "LatticeElement", "PointMap", "UniformLattice",
    "build_lattice", "build_space", "discrete", "equiv", "from_preorder", "gen_bottom", "gen_p",
    "gen_point", "gen_set", "gen_u", "hausdorff_flag", "indiscrete", "inf_many", "is_directed",
    "join", "leq", "meet", "normal_form", "pushforward", "sierpinski", "sup_many",
]
