"""Exact-arithmetic toolkit for terminal Fano lattice polytopes.

Classifies 3-dimensional terminal Fano polytopes and the toric Fano
threefolds they define: class and Picard ranks, anticanonical degree,
genus, lattice automorphism groups, and the invariant class-group rank
that detects G-Fano varieties.
"""

from .polytope import (
    DegenerateInputError,
    LatticePolytope,
    PropertyFlags,
    classify,
    convex_hull,
    facet_vertex_counts,
    interior_lattice_points,
    lattice_points,
    polygon_counts,
)
from .toric import (
    RationalPolytope,
    anticanonical_degree,
    class_group_rank,
    dual_polytope,
    genus,
    lattice_quotient,
    picard_rank,
    wps_polytope,
)
from .symmetry import (
    OrbitPartition,
    PointGroup,
    automorphism_group,
    fixed_subspace_dim,
    group_closure,
    invariant_class_rank,
    is_gfano,
    is_vertex_transitive,
    normal_form,
    vertex_orbits,
)
from .search import EnumConfig, enumerate_empty_polygons, enumerate_terminal_fano

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "EnumConfig",
    "LatticePolytope",
    "OrbitPartition",
    "PointGroup",
    "PropertyFlags",
    "RationalPolytope",
    "anticanonical_degree",
    "automorphism_group",
    "class_group_rank",
    "classify",
    "convex_hull",
    "dual_polytope",
    "enumerate_empty_polygons",
    "enumerate_terminal_fano",
    "facet_vertex_counts",
    "fixed_subspace_dim",
    "genus",
    "group_closure",
    "interior_lattice_points",
    "invariant_class_rank",
    "is_gfano",
    "is_vertex_transitive",
    "lattice_points",
    "lattice_quotient",
    "normal_form",
    "picard_rank",
    "polygon_counts",
    "vertex_orbits",
    "wps_polytope",
]
