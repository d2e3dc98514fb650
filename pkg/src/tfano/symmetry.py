"""Lattice symmetry of polytopes.

Automorphism groups inside GL(3,Z) (or GL(2,Z)), vertex orbits, fixed
subspaces, the invariant class-group rank that characterises G-Fano
varieties, and a canonical normal form for unimodular equivalence
classes of polytopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .linalg import (
    Mat,
    Vec,
    adjugate3,
    det2,
    det3,
    hnf,
    identity,
    mat_mul,
    mat_vec,
    rank,
    transpose,
)
from .polytope import LatticePolytope


@dataclass(frozen=True)
class PointGroup:
    """A finite set of unimodular integer matrices closed under product."""

    elements: tuple[Mat, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m) -> bool:
        return tuple(tuple(row) for row in m) in set(self.elements)


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[int, ...], ...]

    @property
    def n_orbits(self) -> int:
        return len(self.orbits)


def group_closure(generators, dim: int = 3) -> PointGroup:
    """Close a set of unimodular matrices under multiplication.

    The identity is always included; for finite groups closure under
    product implies closure under inverse.
    """
    gens = [tuple(tuple(int(x) for x in row) for row in m) for m in generators]
    elems = {identity(dim)}
    frontier = [g for g in gens if g not in elems]
    elems.update(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                prod = mat_mul(a, g)
                if prod not in elems:
                    elems.add(prod)
                    nxt.append(prod)
        frontier = nxt
        if len(elems) > 10000:
            raise ValueError("group closure did not terminate; generators not finite order?")
    return PointGroup(elements=tuple(sorted(elems)))


def _det(m, dim):
    return det3(m) if dim == 3 else det2(m)


def _solve_map(basis_cols, image_cols, dim):
    """Integer matrix A with A @ basis = image (columns), or None."""
    if dim == 3:
        b = transpose(basis_cols)
        d = det3(b)
        if d == 0:
            return None
        adj = adjugate3(b)
        # A = image_matrix @ b^{-1}; image matrix has image_cols as columns
        img = transpose(image_cols)
        num = mat_mul(img, adj)
    else:
        b = transpose(basis_cols)
        d = det2(b)
        if d == 0:
            return None
        adj = ((b[1][1], -b[0][1]), (-b[1][0], b[0][0]))
        img = transpose(image_cols)
        num = mat_mul(img, adj)
    if any(x % d != 0 for row in num for x in row):
        return None
    return tuple(tuple(x // d for x in row) for row in num)


def _independent_tuple(vertices, indices, dim):
    cols = [vertices[i] for i in indices]
    return _det(transpose(cols), dim) != 0 if len(cols) == dim else False


def automorphism_group(p: LatticePolytope) -> PointGroup:
    """All unimodular matrices mapping the vertex set of p onto itself.

    Anchors a linearly independent vertex tuple on one facet and solves
    A @ anchor = candidate for every candidate tuple drawn from facets
    with the same vertex count; exhaustion makes the result a group.
    """
    dim = p.ambient_dim
    verts = p.vertices
    vset = set(verts)

    anchor = None
    anchor_facet_size = None
    for fs in sorted(p.facet_vertex_sets, key=len):
        for combo in permutations(fs, dim):
            if _independent_tuple(verts, combo, dim):
                anchor = combo
                anchor_facet_size = len(fs)
                break
        if anchor:
            break
    if anchor is None:
        # facet tuples degenerate (origin on a facet plane); fall back to
        # arbitrary vertex tuples and exhaust all images
        for combo in permutations(range(len(verts)), dim):
            if _independent_tuple(verts, combo, dim):
                anchor = combo
                break
        candidates = permutations(range(len(verts)), dim)
    else:
        candidates = (
            c
            for fs in p.facet_vertex_sets
            if len(fs) == anchor_facet_size
            for c in permutations(fs, dim)
        )
    if anchor is None:
        raise ValueError("polytope has no linearly independent vertex tuple")

    basis = [verts[i] for i in anchor]
    found = set()
    for cand in candidates:
        a = _solve_map(basis, [verts[i] for i in cand], dim)
        if a is None or abs(_det(a, dim)) != 1:
            continue
        if {mat_vec(a, v) for v in verts} == vset:
            found.add(a)
    return PointGroup(elements=tuple(sorted(found)))


def vertex_orbits(p: LatticePolytope, g: PointGroup) -> OrbitPartition:
    """Partition of the vertex indices under the action of g."""
    verts = p.vertices
    index = {v: i for i, v in enumerate(verts)}
    parent = list(range(len(verts)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g:
        for i, v in enumerate(verts):
            w = mat_vec(a, v)
            if w not in index:
                raise ValueError("group element does not preserve the vertex set")
            ri, rj = find(i), find(index[w])
            if ri != rj:
                parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(len(verts)):
        groups.setdefault(find(i), []).append(i)
    orbits = tuple(sorted(tuple(sorted(o)) for o in groups.values()))
    return OrbitPartition(orbits=orbits)


def fixed_subspace_dim(g: PointGroup) -> int:
    """Dimension over Q of the common fixed subspace of all elements.

    The fixed dimension of the dual action on characters is the same, by
    the character identity sum tr(A) = sum tr(A^{-1}) over a finite group.
    """
    elems = list(g.elements)
    if not elems:
        raise ValueError("empty group")
    dim = len(elems[0])
    stacked = []
    for a in elems:
        for i in range(dim):
            row = list(a[i])
            row[i] -= 1
            stacked.append(row)
    return dim - rank(stacked)


def invariant_class_rank(p: LatticePolytope, g: PointGroup) -> int:
    """Rank of the invariant part of the class group: orbits minus fixed dim."""
    return vertex_orbits(p, g).n_orbits - fixed_subspace_dim(g)


def is_gfano(p: LatticePolytope) -> bool:
    """True iff the full lattice automorphism group leaves invariant rank 1.

    Invariants of a group are contained in invariants of any subgroup, so
    the full automorphism group minimises the rank; the rank is at least
    1 because the anticanonical class is always invariant.
    """
    return invariant_class_rank(p, automorphism_group(p)) == 1


def is_vertex_transitive(p: LatticePolytope) -> bool:
    return vertex_orbits(p, automorphism_group(p)).n_orbits == 1


def normal_form(p: LatticePolytope) -> Mat:
    """Canonical vertex matrix of the unimodular equivalence class of p.

    For every linearly independent ordered vertex tuple, change
    coordinates by the unimodular transform that puts the tuple into
    Hermite normal form, sort the transformed vertices, and keep the
    lexicographically smallest result.  The rows of the returned matrix
    are the canonical vertex coordinates; it is equal for p and U(p) for
    every unimodular U, and distinct classes give distinct outputs.
    """
    dim = p.ambient_dim
    verts = p.vertices
    best = None
    for combo in permutations(range(len(verts)), dim):
        cols = [verts[i] for i in combo]
        b = transpose(cols)  # tuple columns -> matrix with cols as columns
        if _det(b, dim) == 0:
            continue
        _, u = hnf(b)
        cand = tuple(sorted(mat_vec(u, v) for v in verts))
        if best is None or cand < best:
            best = cand
    if best is None:
        raise ValueError("polytope has no linearly independent vertex tuple")
    return best


def affine_normal_form(p: LatticePolytope) -> Mat:
    """Canonical form under affine unimodular maps (2D polygons).

    Minimises over every choice of base vertex (translated to the origin)
    and every independent ordered pair of translated vertices.
    """
    if p.ambient_dim != 2:
        raise ValueError("affine normal form is for 2D polytopes")
    verts = p.vertices
    best = None
    for w in verts:
        shifted = [tuple(x - y for x, y in zip(v, w)) for v in verts]
        nonzero = [v for v in shifted if v != (0, 0)]
        for pair in permutations(nonzero, 2):
            b = transpose(pair)
            if det2(b) == 0:
                continue
            _, u = hnf(b)
            cand = tuple(sorted(mat_vec(u, v) for v in shifted))
            if best is None or cand < best:
                best = cand
    if best is None:
        raise ValueError("polygon has no independent vertex pair")
    return best
