"""Exact convex hulls of lattice points and the Fano predicate family.

A polytope is stored by its lexicographically sorted vertex list together
with the facet description: each facet is a pair (primitive inward normal
n, integer offset c) cutting out the half space <n, x> >= -c, with
equality exactly on the facet.  Only ambient dimensions 2 and 3 are
supported; all predicates are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    Mat,
    Vec,
    cross,
    det2,
    det3,
    dot,
    is_primitive,
    primitivize,
    rank,
    vsub,
)


class DegenerateInputError(ValueError):
    """Input points do not span the ambient space."""


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Vec, ...]
    facets: tuple[tuple[Vec, int], ...]
    facet_vertex_sets: tuple[tuple[int, ...], ...]
    ambient_dim: int

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PropertyFlags:
    is_fano: bool
    is_terminal: bool
    is_canonical: bool
    is_reflexive: bool
    is_simplicial: bool
    is_regular: bool


def _affine_rank(points) -> int:
    base = points[0]
    return rank([vsub(p, base) for p in points[1:]]) if len(points) > 1 else 0


def _orient3d(a, b, c, d):
    return det3((vsub(b, a), vsub(c, a), vsub(d, a)))


def _hull3d_planes(points):
    """Incremental triangulated hull; returns the set of facet planes."""
    n = len(points)
    # Seed with four affinely independent points.
    i0 = 0
    i1 = next(i for i in range(1, n) if points[i] != points[i0])
    i2 = next(
        i
        for i in range(1, n)
        if i != i1 and cross(vsub(points[i1], points[i0]), vsub(points[i], points[i0])) != (0, 0, 0)
    )
    i3 = next(
        i
        for i in range(1, n)
        if _orient3d(points[i0], points[i1], points[i2], points[i]) != 0
    )
    if _orient3d(points[i0], points[i1], points[i2], points[i3]) < 0:
        i2, i3 = i3, i2
    a, b, c, d = i0, i1, i2, i3
    faces = [(a, c, b), (a, b, d), (b, c, d), (a, d, c)]

    seed = {a, b, c, d}
    for p in range(n):
        if p in seed:
            continue
        pt = points[p]
        visible = [
            f for f in faces if _orient3d(points[f[0]], points[f[1]], points[f[2]], pt) > 0
        ]
        if not visible:
            continue
        visible_set = set(visible)
        edge_owner = {}
        for f in faces:
            for e in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
                edge_owner[e] = f
        horizon = []
        for f in visible:
            for e in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
                if edge_owner[(e[1], e[0])] not in visible_set:
                    horizon.append(e)
        faces = [f for f in faces if f not in visible_set]
        faces.extend((u, v, p) for u, v in horizon)

    planes = set()
    for f in faces:
        fa, fb, fc = points[f[0]], points[f[1]], points[f[2]]
        outward = cross(vsub(fb, fa), vsub(fc, fa))
        normal = primitivize(tuple(-x for x in outward))
        planes.add((normal, -dot(normal, fa)))
    return planes


def _hull2d_cycle(points):
    """Andrew monotone chain with strict turns; counterclockwise cycle."""
    pts = sorted(points)

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and det2((vsub(out[-1], out[-2]), vsub(p, out[-2]))) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    return lower[:-1] + upper[:-1]


def convex_hull(points) -> LatticePolytope:
    """Exact convex hull of integer points in dimension 2 or 3.

    The returned vertex list is minimal and lexicographically sorted;
    facet normals are primitive and inward.  Raises DegenerateInputError
    when the points do not span the ambient space.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise ValueError("no points given")
    dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError("mixed point dimensions")
    if dim not in (2, 3):
        raise ValueError("only dimensions 2 and 3 are supported")
    if _affine_rank(pts) < dim:
        raise DegenerateInputError("polytope not full-dimensional")

    if dim == 2:
        cycle = _hull2d_cycle(pts)
        k = len(cycle)
        planes = set()
        for i in range(k):
            a, b = cycle[i], cycle[(i + 1) % k]
            d = vsub(b, a)
            normal = primitivize((-d[1], d[0]))
            planes.add((normal, -dot(normal, a)))
    else:
        planes = _hull3d_planes(pts)

    facets = sorted(planes)
    for normal, offset in facets:
        if any(dot(normal, p) < -offset for p in pts):
            raise AssertionError("hull construction produced a violated facet")

    # A point is a vertex iff its incident facet normals span the space.
    incident = {p: [] for p in pts}
    for normal, offset in facets:
        for p in pts:
            if dot(normal, p) == -offset:
                incident[p].append(normal)
    vertices = tuple(p for p in pts if rank(incident[p]) == dim)
    index_of = {p: i for i, p in enumerate(vertices)}
    facet_vertex_sets = tuple(
        tuple(index_of[p] for p in vertices if dot(normal, p) == -offset)
        for normal, offset in facets
    )
    if any(len(s) < dim for s in facet_vertex_sets):
        raise AssertionError("facet with too few vertices")
    return LatticePolytope(
        vertices=vertices,
        facets=tuple(facets),
        facet_vertex_sets=facet_vertex_sets,
        ambient_dim=dim,
    )


def contains(p: LatticePolytope, point) -> bool:
    return all(dot(n, point) >= -c for n, c in p.facets)


def contains_strictly(p: LatticePolytope, point) -> bool:
    return all(dot(n, point) > -c for n, c in p.facets)


def _box_points(p: LatticePolytope):
    lo = [min(v[i] for v in p.vertices) for i in range(p.ambient_dim)]
    hi = [max(v[i] for v in p.vertices) for i in range(p.ambient_dim)]
    if p.ambient_dim == 2:
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                yield (x, y)
    else:
        for x in range(lo[0], hi[0] + 1):
            for y in range(lo[1], hi[1] + 1):
                for z in range(lo[2], hi[2] + 1):
                    yield (x, y, z)


def lattice_points(p: LatticePolytope) -> list[Vec]:
    """All lattice points of p (bounding-box scan), sorted lexicographically."""
    return [q for q in _box_points(p) if contains(p, q)]


def interior_lattice_points(p: LatticePolytope) -> list[Vec]:
    """Lattice points strictly inside p, sorted lexicographically."""
    return [q for q in _box_points(p) if contains_strictly(p, q)]


def classify(p: LatticePolytope) -> PropertyFlags:
    """Fano / terminal / canonical / reflexive / simplicial / regular flags."""
    dim = p.ambient_dim
    origin = (0,) * dim
    fano = contains_strictly(p, origin) and all(is_primitive(v) for v in p.vertices)
    pts = set(lattice_points(p))
    terminal = pts == set(p.vertices) | {origin}
    canonical = interior_lattice_points(p) == [origin]
    reflexive = all(c == 1 for _, c in p.facets)
    simplicial = all(len(s) == dim for s in p.facet_vertex_sets)
    regular = simplicial and all(
        abs(det3([p.vertices[i] for i in s]) if dim == 3 else det2([p.vertices[i] for i in s])) == 1
        for s in p.facet_vertex_sets
    )
    return PropertyFlags(
        is_fano=fano,
        is_terminal=terminal,
        is_canonical=canonical,
        is_reflexive=reflexive,
        is_simplicial=simplicial,
        is_regular=regular,
    )


def facet_vertex_counts(p: LatticePolytope) -> tuple[int, ...]:
    """Multiset (sorted) of the vertex counts of the facet polygons."""
    return tuple(sorted(len(s) for s in p.facet_vertex_sets))


def boundary_cycle(p: LatticePolytope) -> list[Vec]:
    """Vertices of a 2D polytope in cyclic boundary order."""
    if p.ambient_dim != 2:
        raise ValueError("boundary cycle is for 2D polytopes")
    return _hull2d_cycle(p.vertices)


def polygon_counts(p: LatticePolytope) -> tuple[int, int, int]:
    """(twice area by shoelace, interior points, boundary points) of a polygon."""
    cycle = boundary_cycle(p)
    k = len(cycle)
    twice_area = abs(
        sum(
            cycle[i][0] * cycle[(i + 1) % k][1] - cycle[(i + 1) % k][0] * cycle[i][1]
            for i in range(k)
        )
    )
    interior = len(interior_lattice_points(p))
    boundary = len(lattice_points(p)) - interior
    return twice_area, interior, boundary
