"""Exhaustive enumeration of terminal Fano polytopes and empty polygons.

Vertex sets are grown one candidate point at a time in a fixed total
order.  Hulls only grow along a branch, so a lattice point that sits
inside the current hull without being one of its vertices can never
become a vertex later; such branches are pruned immediately.  Every
surviving full-dimensional node whose hull strictly contains the origin
is a terminal Fano polytope.  Classes are deduplicated by normal form,
after first collapsing the 48 signed-permutation symmetries of the
search box, which cost nothing to detect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product

from .linalg import Mat, cross, dot, hnf, mat_vec, primitivize, transpose, vsub
from .polytope import classify, convex_hull, lattice_points
from .symmetry import affine_normal_form, normal_form


@dataclass(frozen=True)
class EnumConfig:
    box_bound: int
    dim: int
    max_vertices: int = 14

    def __post_init__(self):
        if self.box_bound < 1:
            raise ValueError("box bound must be at least 1")
        if self.dim not in (2, 3):
            raise ValueError("dimension must be 2 or 3")
        if self.max_vertices < self.dim + 1:
            raise ValueError("max_vertices must be at least dim + 1")


def primitive_box_points(bound: int) -> list[tuple[int, int, int]]:
    """Primitive points of [-bound, bound]^3 in lexicographic order."""
    return [
        p
        for p in product(range(-bound, bound + 1), repeat=3)
        if p != (0, 0, 0) and math.gcd(*p) == 1
    ]


def box_points_2d(bound: int) -> list[tuple[int, int]]:
    return list(product(range(-bound, bound + 1), repeat=2))


def _segment_ok(a, b, allow_origin_midpoint: bool) -> bool:
    """No lattice point strictly between a and b (except possibly the origin)."""
    d = vsub(b, a)
    g = math.gcd(*d)
    if g == 1:
        return True
    if allow_origin_midpoint and g == 2 and all(x + y == 0 for x, y in zip(a, b)):
        return True
    return False


def _compat_masks(points, allow_origin_midpoint):
    n = len(points)
    compat = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if _segment_ok(points[i], points[j], allow_origin_midpoint):
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    return compat


def _signed_permutation_tables(points):
    """Index action of the 48 signed coordinate permutations on the box."""
    index = {p: i for i, p in enumerate(points)}
    tables = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            tables.append(
                tuple(
                    index[(signs[0] * p[perm[0]], signs[1] * p[perm[1]], signs[2] * p[perm[2]])]
                    for p in points
                )
            )
    return tables


# ---------------------------------------------------------------------------
# incremental hull machinery for the 3D search


def _face_plane(a, b, c):
    outward = cross(vsub(b, a), vsub(c, a))
    n = primitivize((-outward[0], -outward[1], -outward[2]))
    return n, -dot(n, a)


def _insert_point(faces, plane_count, points, p_idx):
    """One beneath-beyond insertion step.  Returns None when the point is
    weakly inside the current hull (so it can never become a vertex)."""
    p = points[p_idx]
    visible = []
    for f in faces:
        n, off = f[3]
        if n[0] * p[0] + n[1] * p[1] + n[2] * p[2] < -off:
            visible.append(f)
    if not visible:
        return None
    visible_set = set(visible)
    edge_owner = {}
    for f in faces:
        edge_owner[(f[0], f[1])] = f
        edge_owner[(f[1], f[2])] = f
        edge_owner[(f[2], f[0])] = f
    new_faces = [f for f in faces if f not in visible_set]
    new_count = dict(plane_count)
    for f in visible:
        pl = f[3]
        new_count[pl] -= 1
        if not new_count[pl]:
            del new_count[pl]
    for f in visible:
        for u, v in ((f[0], f[1]), (f[1], f[2]), (f[2], f[0])):
            if edge_owner[(v, u)] not in visible_set:
                pl = _face_plane(points[u], points[v], p)
                new_faces.append((u, v, p_idx, pl))
                new_count[pl] = new_count.get(pl, 0) + 1
    return new_faces, new_count


def _seed_hull(points, chosen):
    """Triangulate the hull of an affinely spanning chosen set from scratch."""
    sel = chosen
    i0 = sel[0]
    i1 = sel[1]
    a, b = points[i0], points[i1]
    i2 = next(i for i in sel[2:] if cross(vsub(b, a), vsub(points[i], a)) != (0, 0, 0))
    nrm = cross(vsub(b, a), vsub(points[i2], a))
    i3 = next(i for i in sel[2:] if dot(nrm, vsub(points[i], a)) != 0)
    c, d = i2, i3
    if dot(cross(vsub(points[i1], points[i0]), vsub(points[c], points[i0])), vsub(points[d], points[i0])) < 0:
        c, d = d, c
    quad = [
        (i0, c, i1),
        (i0, i1, d),
        (i1, c, d),
        (i0, d, c),
    ]
    faces = []
    plane_count: dict = {}
    for t in quad:
        pl = _face_plane(points[t[0]], points[t[1]], points[t[2]])
        faces.append((t[0], t[1], t[2], pl))
        plane_count[pl] = plane_count.get(pl, 0) + 1
    seeded = {i0, i1, c, d}
    for i in sel:
        if i in seeded:
            continue
        step = _insert_point(faces, plane_count, points, i)
        if step is None:
            return None
        faces, plane_count = step
    return faces, plane_count


def _vertices_ok(sel_points, planes):
    """Every chosen point must lie on facets whose normals span 3-space."""
    for p in sel_points:
        n1 = None
        c12 = None
        ok = False
        for n, off in planes:
            if n[0] * p[0] + n[1] * p[1] + n[2] * p[2] == -off:
                if n1 is None:
                    n1 = n
                elif c12 is None:
                    c = cross(n1, n)
                    if c != (0, 0, 0):
                        c12 = c
                elif dot(c12, n) != 0:
                    ok = True
                    break
        if not ok:
            return False
    return True


def _lattice_ok(planes, box_pts, chosen_set):
    """Every lattice point of the hull must be a chosen vertex or the origin."""
    for q in box_pts:
        if q in chosen_set or q == (0, 0, 0):
            continue
        inside = True
        for n, off in planes:
            if n[0] * q[0] + n[1] * q[1] + n[2] * q[2] < -off:
                inside = False
                break
        if inside:
            return False
    return True


# ---------------------------------------------------------------------------
# coplanar-stage pruning


def _hull2d_cycle(points):
    pts = sorted(points)

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2:
                ux, uy = out[-1][0] - out[-2][0], out[-1][1] - out[-2][1]
                vx, vy = p[0] - out[-2][0], p[1] - out[-2][1]
                if ux * vy - uy * vx <= 0:
                    out.pop()
                else:
                    break
            out.append(p)
        return out

    lower = half(pts)
    upper = half(pts[::-1])
    return lower[:-1] + upper[:-1]


def _point_in_polygon(cycle, q) -> bool:
    k = len(cycle)
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        if (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]) < 0:
            return False
    return True


def _coplanar_ok(sel, normal, level, origin_allowed: bool) -> bool:
    axis = max(range(3), key=lambda i: abs(normal[i]))

    def proj(p):
        return tuple(p[i] for i in range(3) if i != axis)

    projected = [proj(p) for p in sel]
    cycle = _hull2d_cycle(projected)
    cycle_set = set(cycle)
    if any(q not in cycle_set for q in projected):
        return False
    lo = [min(p[i] for p in sel) for i in range(3)]
    hi = [max(p[i] for p in sel) for i in range(3)]
    selset = set(sel)
    for q in product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        if dot(normal, q) != level or q in selset:
            continue
        if origin_allowed and q == (0, 0, 0):
            continue
        if _point_in_polygon(cycle, proj(q)):
            return False
    return True


# ---------------------------------------------------------------------------
# the 3D search


def _search_3d_from(points, compat, box_pts, first, max_vertices):
    """All terminal Fano vertex sets whose lowest chosen index is `first`.

    Returns a dict mapping chosen index tuples to nothing in particular;
    callers canonicalise and deduplicate.
    """
    records = []

    # state: None for size <= 2, ("plane", n, level), ("full", faces, counts)
    def recurse(chosen, chosen_pts, chosen_set, state, allowed):
        k = len(chosen)
        if k == 3:
            a, b, c = chosen_pts
            cr = cross(vsub(b, a), vsub(c, a))
            if cr == (0, 0, 0):
                return  # collinear; unreachable past the segment filter
            n = primitivize(cr)
            new_state = ("plane", n, dot(n, a))
            if not _coplanar_ok(chosen_pts, n, new_state[2], True):
                return
        elif k > 3 and state[0] == "plane":
            _, n, level = state
            p = chosen_pts[-1]
            if dot(n, p) == level:
                new_state = state
                if not _coplanar_ok(chosen_pts, n, level, True):
                    return
            else:
                seeded = _seed_hull(points, chosen)
                if seeded is None:
                    return
                new_state = ("full", seeded[0], seeded[1])
        elif k > 3:
            step = _insert_point(state[1], state[2], points, chosen[-1])
            if step is None:
                return
            new_state = ("full", step[0], step[1])
        else:
            new_state = None

        if new_state is not None and new_state[0] == "full":
            planes = new_state[2].keys()
            if not _vertices_ok(chosen_pts, planes):
                return
            if not _lattice_ok(planes, box_pts, chosen_set):
                return
            if all(off > 0 for _, off in planes):
                records.append(tuple(chosen))

        if k >= max_vertices:
            return
        m = allowed
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            recurse(
                chosen + [j],
                chosen_pts + [points[j]],
                chosen_set | {points[j]},
                new_state,
                allowed & compat[j] & ~((1 << (j + 1)) - 1),
            )

    recurse(
        [first],
        [points[first]],
        {points[first]},
        None,
        compat[first] & ~((1 << (first + 1)) - 1),
    )
    return records


def _facet_canonical_form(p) -> Mat:
    """Canonical form minimised over facet-anchored vertex triples.

    Same invariance and separation guarantees as normal_form (the triple
    family is equivariant under unimodular maps), but far fewer
    candidates; used internally for deduplication of Fano classes, where
    every facet triple is linearly independent.
    """
    verts = p.vertices
    best = None
    for fs in p.facet_vertex_sets:
        for combo in permutations(fs, 3):
            cols = [verts[i] for i in combo]
            _, u = hnf(transpose(cols))
            cand = tuple(sorted(mat_vec(u, v) for v in verts))
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def _dedupe_3d(points, record_lists):
    tables = _signed_permutation_tables(points)
    unique_sets = {}
    for records in record_lists:
        for chosen in records:
            key = min(tuple(sorted(t[i] for i in chosen)) for t in tables)
            unique_sets.setdefault(key, chosen)
    classes = {}
    for chosen in unique_sets.values():
        p = convex_hull([points[i] for i in chosen])
        classes.setdefault(_facet_canonical_form(p), p)
    return classes


def _worker_3d(args):
    bound, max_vertices, first = args
    points = primitive_box_points(bound)
    compat = _compat_masks(points, allow_origin_midpoint=True)
    box_pts = [q for q in product(range(-bound, bound + 1), repeat=3)]
    return _search_3d_from(points, compat, box_pts, first, max_vertices)


def enumerate_terminal_fano(cfg: EnumConfig, jobs: int = 1) -> set[Mat]:
    """All unimodular classes of terminal Fano polytopes with vertices in
    the box, as normal forms (rows = canonical vertex coordinates).

    Every class is re-verified from scratch before being returned.
    """
    if cfg.dim != 3:
        raise ValueError("terminal Fano enumeration runs in dimension 3")
    points = primitive_box_points(cfg.box_bound)
    tasks = [(cfg.box_bound, cfg.max_vertices, i) for i in range(len(points))]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            record_lists = pool.map(_worker_3d, tasks)
    else:
        compat = _compat_masks(points, allow_origin_midpoint=True)
        box_pts = [q for q in product(range(-cfg.box_bound, cfg.box_bound + 1), repeat=3)]
        record_lists = [
            _search_3d_from(points, compat, box_pts, i, cfg.max_vertices)
            for i in range(len(points))
        ]

    classes = _dedupe_3d(points, record_lists)
    out = set()
    for p in classes.values():
        flags = classify(p)
        if not (flags.is_terminal and flags.is_fano):
            raise AssertionError("enumerated class failed re-verification")
        out.add(normal_form(p))
    if len(out) != len(classes):
        raise AssertionError("canonical forms disagree on class count")
    return out


# ---------------------------------------------------------------------------
# the 2D search


def _evaluate_2d(sel):
    k = len(sel)
    if k <= 2:
        return True, None
    base = sel[0]
    diffs = [vsub(p, base) for p in sel[1:]]
    first = next((d for d in diffs if d != (0, 0)), None)
    if first is None or all(first[0] * d[1] - first[1] * d[0] == 0 for d in diffs):
        return False, None
    cycle = _hull2d_cycle(sel)
    if len(cycle) != k:
        return False, None
    lo = [min(p[i] for p in sel) for i in range(2)]
    hi = [max(p[i] for p in sel) for i in range(2)]
    selset = set(sel)
    for q in product(range(lo[0], hi[0] + 1), range(lo[1], hi[1] + 1)):
        if q in selset:
            continue
        if _point_in_polygon(cycle, q):
            return False, None
    return True, tuple(cycle)


def _search_2d_from(points, compat, first, max_vertices):
    found = {}

    def recurse(chosen, allowed):
        sel = [points[i] for i in chosen]
        viable, cycle = _evaluate_2d(sel)
        if not viable:
            return
        if cycle is not None:
            found.setdefault(frozenset(cycle), sel)
        if len(chosen) >= max_vertices:
            return
        m = allowed
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            recurse(chosen + [j], allowed & compat[j] & ~((1 << (j + 1)) - 1))

    recurse([first], compat[first] & ~((1 << (first + 1)) - 1))
    return found


def _worker_2d(args):
    bound, max_vertices, first = args
    points = box_points_2d(bound)
    compat = _compat_masks(points, allow_origin_midpoint=False)
    return _search_2d_from(points, compat, first, max_vertices)


def enumerate_empty_polygons(cfg: EnumConfig, jobs: int = 1) -> set[Mat]:
    """All affine unimodular classes of lattice polygons whose only lattice
    points are their vertices, with vertices in the box."""
    if cfg.dim != 2:
        raise ValueError("empty polygon enumeration runs in dimension 2")
    points = box_points_2d(cfg.box_bound)
    tasks = [(cfg.box_bound, cfg.max_vertices, i) for i in range(len(points))]
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_worker_2d, tasks)
    else:
        compat = _compat_masks(points, allow_origin_midpoint=False)
        parts = [
            _search_2d_from(points, compat, i, cfg.max_vertices)
            for i in range(len(points))
        ]
    reps = {}
    for part in parts:
        reps.update(part)
    out = set()
    for sel in reps.values():
        p = convex_hull(sel)
        if set(lattice_points(p)) != set(p.vertices):
            raise AssertionError("enumerated polygon failed emptiness re-verification")
        out.add(affine_normal_form(p))
    return out
