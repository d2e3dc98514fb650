"""Toric invariants of Fano polytopes.

A Fano polytope (origin strictly interior, primitive vertices) defines a
toric Fano variety through its face fan.  This module computes the dual
polytope, anticanonical degree 6*vol(P*), genus #(P* cap M) - 2, class
group and Picard ranks, and provides the two constructors used for the
rank-one families: weighted projective spaces and finite cyclic lattice
quotients.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Vec,
    adjugate3,
    cross,
    det3,
    dot,
    hnf,
    is_primitive,
    primitivize,
    rank,
    transpose,
    vsub,
)
from .polytope import LatticePolytope, convex_hull


@dataclass(frozen=True)
class RationalPolytope:
    vertices: tuple[tuple[Fraction, ...], ...]
    facets: tuple[tuple[Vec, Fraction], ...]
    facet_vertex_sets: tuple[tuple[int, ...], ...]


def dual_polytope(p: LatticePolytope) -> RationalPolytope:
    """Dual polytope {m : <m, v> >= -1 for all vertices v of p}.

    Vertices of the dual are normal/offset over the facets of p; its
    facets correspond to the vertices of p with offset 1.  Requires the
    origin strictly inside p.
    """
    if any(c <= 0 for _, c in p.facets):
        raise ValueError("dual undefined: origin not interior")
    raw = [
        tuple(Fraction(x, c) for x in n) for n, c in p.facets
    ]
    order = sorted(range(len(raw)), key=lambda i: raw[i])
    verts = tuple(raw[i] for i in order)
    facets = tuple((v, Fraction(1)) for v in p.vertices)
    # dual vertex from facet F lies on the dual facet of vertex v iff v in F
    sets = tuple(
        tuple(
            j
            for j, i in enumerate(order)
            if vi in p.facet_vertex_sets[i]
        )
        for vi in range(len(p.vertices))
    )
    return RationalPolytope(vertices=verts, facets=facets, facet_vertex_sets=sets)


def as_lattice_polytope(q: RationalPolytope) -> LatticePolytope:
    """Cast a rational polytope with integral vertices back to a lattice one."""
    pts = []
    for v in q.vertices:
        if any(x.denominator != 1 for x in v):
            raise ValueError("polytope has non-integral vertices")
        pts.append(tuple(int(x) for x in v))
    return convex_hull(pts)


def _facet_cycle(vertex_set, all_sets):
    """Order a facet's vertex indices into a boundary cycle.

    Two vertices are adjacent on the facet iff they also share some other
    facet.
    """
    s = list(vertex_set)
    if len(s) == 3:
        return s
    members = set(s)
    adjacency = {a: [] for a in s}
    for other in all_sets:
        if set(other) == members:
            continue
        shared = [a for a in s if a in other]
        if len(shared) == 2:
            adjacency[shared[0]].append(shared[1])
            adjacency[shared[1]].append(shared[0])
    cycle = [s[0]]
    prev = None
    while len(cycle) < len(s):
        nxts = [b for b in adjacency[cycle[-1]] if b != prev]
        if not nxts:
            raise AssertionError("facet cycle walk failed")
        prev = cycle[-1]
        cycle.append(nxts[0])
    return cycle


def _volume6(vertices, facets, facet_vertex_sets):
    """Six times the Euclidean volume, via outward-oriented facet fans."""
    total = 0
    for (normal, _), vset in zip(facets, facet_vertex_sets):
        cycle = [vertices[i] for i in _facet_cycle(vset, facet_vertex_sets)]
        c = cross(vsub(cycle[1], cycle[0]), vsub(cycle[2], cycle[0]))
        if dot(c, normal) > 0:  # make the fan outward-oriented
            cycle.reverse()
        v0 = cycle[0]
        for i in range(1, len(cycle) - 1):
            total += det3((v0, cycle[i], cycle[i + 1]))
    if total <= 0:
        raise AssertionError("volume computation produced a nonpositive value")
    return total


def anticanonical_degree(p: LatticePolytope) -> Fraction:
    """Degree (-K)^3 of the toric variety of p: exactly 6*vol of the dual."""
    d = dual_polytope(p)
    vol6 = _volume6(d.vertices, d.facets, d.facet_vertex_sets)
    return Fraction(vol6)


def genus(p: LatticePolytope) -> int:
    """Genus: number of lattice points of the dual polytope minus 2."""
    d = dual_polytope(p)
    lo = [math.floor(min(v[i] for v in d.vertices)) for i in range(3)]
    hi = [math.ceil(max(v[i] for v in d.vertices)) for i in range(3)]
    count = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if all(x * v[0] + y * v[1] + z * v[2] >= -1 for v in p.vertices):
                    count += 1
    return count - 2


def class_group_rank(p: LatticePolytope) -> int:
    """Rank of the class group: one ray per vertex, minus the lattice rank."""
    return p.n_vertices - p.ambient_dim


def picard_rank(p: LatticePolytope) -> int:
    """Rank of the Picard group for the face fan of p.

    A divisor (a_rho) is Cartier iff each facet cone admits an integral
    linear functional m with <m, v> = -a_v on all its rays.  The Cartier
    conditions form one integer linear system in the a-variables plus one
    m-vector per facet; the Picard rank is the dimension of its solution
    space minus the rank of the character lattice.
    """
    nv = len(p.vertices)
    nf = len(p.facets)
    d = p.ambient_dim
    rows = []
    for s, vset in enumerate(p.facet_vertex_sets):
        for vi in vset:
            row = [0] * (nv + d * nf)
            row[vi] = 1
            for j in range(d):
                row[nv + d * s + j] = p.vertices[vi][j]
            rows.append(row)
    return (nv + d * nf) - rank(rows) - d


def wps_polytope(w0: int, w1: int, w2: int, w3: int) -> LatticePolytope:
    """Fano polytope of the weighted projective space with these weights.

    The vertices are the images of the standard basis of Z^4 in the
    quotient lattice Z^4 / Z*(w0,...,w3); they are primitive and satisfy
    sum(w_i * v_i) = 0.  Weights must be positive with every triple
    coprime (well-formedness).
    """
    w = (w0, w1, w2, w3)
    if any(x <= 0 for x in w):
        raise ValueError("weights must be positive")
    if math.gcd(*w) != 1:
        raise ValueError("weights must be coprime")
    for skip in range(4):
        triple = [w[i] for i in range(4) if i != skip]
        if math.gcd(*triple) != 1:
            raise ValueError("weights not well-formed: a triple has a common factor")
    h, u = hnf(tuple((x,) for x in w))
    assert h[0] == (1,) and all(row == (0,) for row in h[1:])
    verts = [tuple(u[i][j] for i in range(1, 4)) for j in range(4)]
    for v in verts:
        if not is_primitive(v):
            raise AssertionError("weighted projective vertex is not primitive")
    assert all(
        sum(w[j] * verts[j][i] for j in range(4)) == 0 for i in range(3)
    )
    return convex_hull(verts)


def lattice_quotient(p: LatticePolytope, g, k: int) -> LatticePolytope:
    """Polytope of the quotient by the cyclic group N'/N of order k.

    N' = N + Z*g is the superlattice generated by the rational vector g
    (with k*g integral); the rays of p are re-expressed in a basis of N'
    and replaced by their primitive generators.  The result need not be
    terminal; callers must re-classify it.
    """
    if p.ambient_dim != 3:
        raise ValueError("lattice quotients are implemented for 3D polytopes")
    gv = tuple(Fraction(x) for x in g)
    if all(x.denominator == 1 for x in gv):
        raise ValueError("trivial quotient: generator is a lattice point")
    if k <= 0:
        raise ValueError("quotient order must be positive")
    kg = tuple(x * k for x in gv)
    if any(x.denominator != 1 for x in kg):
        raise ValueError("k*g is not integral")
    order = math.lcm(*(x.denominator for x in gv))
    if order != k:
        raise ValueError(f"superlattice index is {order}, not {k}")

    scaled = [
        (k, 0, 0),
        (0, k, 0),
        (0, 0, k),
        tuple(int(x) for x in kg),
    ]
    h, _ = hnf(scaled)
    basis = h[:3]  # rows span k*N'
    assert all(any(x != 0 for x in row) for row in basis)
    det_b = det3(basis)
    assert abs(det_b) == k * k
    adj = adjugate3(basis)
    new_verts = []
    for v in p.vertices:
        # coordinates y with y @ basis = k*v, i.e. y = k*v @ adj / det
        target = tuple(k * x for x in v)
        nums = tuple(dot(target, col) for col in transpose(adj))
        if any(x % det_b != 0 for x in nums):
            raise AssertionError("vertex does not lie in the superlattice")
        y = tuple(x // det_b for x in nums)
        new_verts.append(primitivize(y))
    return convex_hull(new_verts)
