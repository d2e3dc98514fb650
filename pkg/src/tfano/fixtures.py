"""The thirteen classified toric G-Fano threefolds, as polytope fixtures.

The eight rank-one varieties are constructed (weighted projective spaces
and the order-5 quotient of projective space); the five varieties with
known vertex lists are hard-coded.  Expected invariants follow the
classification table; negatives are terminal Fano polytopes whose full
symmetry leaves an invariant class rank of at least 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Vec
from .polytope import LatticePolytope, convex_hull
from .toric import lattice_quotient, wps_polytope

P3_VERTICES = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1))

# Order-5 superlattice generator realising the weight-(1,2,3,4) action on
# projective 3-space; recovered by exhaustive search over all index-5
# superlattices of the simplex (24 generators work, all giving one class;
# this is the lexicographically smallest).
C5_GENERATOR = (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5))

VERTICES_32 = ((1, 0, 0), (0, 1, 0), (1, 1, 1), (-1, -1, 0), (0, 0, -1))
VERTICES_92 = ((-1, -1, 0), (1, 0, 0), (1, 1, 1), (-2, -1, -1), (0, 0, -1), (0, 1, 0))
VERTICES_297 = (
    (1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1),
    (1, 1, 1), (-1, -1, -1), (0, 1, 0), (0, -1, 0),
)
VERTICES_47 = ((1, 1, 0), (-1, -1, 0), (1, 0, 1), (-1, 0, -1), (0, 1, 1), (0, -1, -1))
VERTICES_62 = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))

# Cyclic symmetry generators acting on the fixtures (columns convention:
# the matrix multiplies vertex column vectors).
GENERATOR_32 = ((1, 0, -1), (1, 0, 0), (1, -1, 0))
GENERATOR_92 = ((-1, 0, 2), (-1, 0, 1), (0, -1, 1))
GENERATOR_297 = ((0, -1, 1), (0, 0, 1), (-1, 0, 1))
W2_COORDINATE_CYCLE = ((0, 1, 0), (0, 0, 1), (1, 0, 0))

PAPER_GENERATORS = {
    "32": GENERATOR_32,
    "92": GENERATOR_92,
    "297": GENERATOR_297,
    "62": W2_COORDINATE_CYCLE,
    "47": W2_COORDINATE_CYCLE,
}


@dataclass(frozen=True)
class FixtureEntry:
    id: str
    label: str
    vertices: tuple[Vec, ...]
    rk_pic: int
    rk_cl: int
    degree: Fraction
    genus: int

    def polytope(self) -> LatticePolytope:
        return convex_hull(self.vertices)


def _entry(fid, label, polytope_or_vertices, rk_pic, rk_cl, degree, genus):
    if isinstance(polytope_or_vertices, LatticePolytope):
        verts = polytope_or_vertices.vertices
    else:
        verts = convex_hull(polytope_or_vertices).vertices
    return FixtureEntry(
        id=fid,
        label=label,
        vertices=verts,
        rk_pic=rk_pic,
        rk_cl=rk_cl,
        degree=Fraction(degree),
        genus=genus,
    )


def theorem1_fixtures() -> list[FixtureEntry]:
    """The thirteen classified varieties with their expected invariants."""
    quotient = lattice_quotient(convex_hull(P3_VERTICES), C5_GENERATOR, 5)
    return [
        _entry("1", "P3/C5", quotient, 1, 1, Fraction(64, 5), 5),
        _entry("2", "P(2,3,5,7)", wps_polytope(2, 3, 5, 7), 1, 1, Fraction(4913, 210), 11),
        _entry("3", "P(3,4,5,7)", wps_polytope(3, 4, 5, 7), 1, 1, Fraction(6859, 420), 7),
        _entry("4", "P3", wps_polytope(1, 1, 1, 1), 1, 1, Fraction(64), 33),
        _entry("5", "P(1,3,4,5)", wps_polytope(1, 3, 4, 5), 1, 1, Fraction(2197, 60), 18),
        _entry("6", "P(1,2,3,5)", wps_polytope(1, 2, 3, 5), 1, 1, Fraction(1331, 30), 22),
        _entry("7", "P(1,1,1,2)", wps_polytope(1, 1, 1, 2), 1, 1, Fraction(125, 2), 32),
        _entry("8", "P(1,1,2,3)", wps_polytope(1, 1, 2, 3), 1, 1, Fraction(343, 6), 29),
        _entry("32", "quadric cone", VERTICES_32, 1, 2, Fraction(54), 28),
        _entry("92", "triangle prism", VERTICES_92, 1, 3, Fraction(81, 2), 21),
        _entry("297", "V22 quadric intersection", VERTICES_297, 1, 5, Fraction(32), 17),
        _entry("47", "(P1xP1xP1)/involution", VERTICES_47, 3, 3, Fraction(24), 11),
        _entry("62", "P1xP1xP1", VERTICES_62, 3, 3, Fraction(48), 25),
    ]


def fixture_by_id(fid: str) -> FixtureEntry:
    for e in theorem1_fixtures():
        if e.id == fid:
            return e
    raise KeyError(fid)


# Terminal Fano polytopes that are NOT G-Fano: the full lattice symmetry
# leaves an invariant class rank of at least 2.  The v=5 entries are
# tetrahedra with one vertex split in two (bipyramid-type), taken from the
# box enumeration.
NEGATIVE_FIXTURES = {
    "P1xP2": ((1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)),
    "blowup of P3 at a point": ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (-1, -1, -1)),
    "hexagon times segment": (
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (1, 1, 0), (-1, -1, 0),
        (0, 0, 1), (0, 0, -1),
    ),
    "split tetrahedron A": ((-2, -1, -1), (-1, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)),
    "split tetrahedron B": ((-3, -2, -1), (-1, -1, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)),
}

# All terminal Fano pyramids over a quadrangle base (complete up to
# unimodular equivalence; the box-2 enumeration finds exactly these
# three).  Only the first is in the classification table; the other two
# carry a base-swapping reflection fixing the apex.
QUADRANGLE_PYRAMIDS = {
    "32": VERTICES_32,
    "apex (-3,-2,1)": ((-3, -2, 1), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, -1)),
    "apex (-4,-3,1)": ((-4, -3, 1), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, -1)),
}
