"""Cross-cutting invariants over the box-1 enumeration and the fixtures."""

import random
from collections import Counter

from tfano.fixtures import theorem1_fixtures
from tfano.linalg import mat_vec
from tfano.polytope import classify, convex_hull, facet_vertex_counts, lattice_points
from tfano.symmetry import automorphism_group, is_vertex_transitive, vertex_orbits
from tfano.toric import anticanonical_degree, class_group_rank, genus


def random_unimodular(rng, steps=8):
    m = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.sample(range(3), 2)
        if op == 0:
            m[i], m[j] = m[j], m[i]
        elif op == 1:
            m[i] = [-x for x in m[i]]
        else:
            q = rng.choice([-2, -1, 1, 2])
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    return tuple(tuple(row) for row in m)


def test_degree_genus_rank_invariant_under_gl3z_all_fixtures():
    rng = random.Random(5150)
    for e in theorem1_fixtures():
        p = e.polytope()
        for _ in range(3):
            u = random_unimodular(rng)
            q = convex_hull([mat_vec(u, v) for v in p.vertices])
            assert anticanonical_degree(q) == e.degree, e.id
            assert genus(q) == e.genus, e.id
            assert class_group_rank(q) == e.rk_cl, e.id


def test_vertex_transitive_classes_have_6_8_or_12_vertices(box1_enumeration):
    # consequence of the classification of finite subgroups of GL(3,Z):
    # a vertex count between 5 and 14 dividing a group order is 6, 8 or 12
    classes, _ = box1_enumeration
    transitive_counts = Counter()
    for nf in classes:
        p = convex_hull(nf)
        if 5 <= p.n_vertices <= 14 and is_vertex_transitive(p):
            transitive_counts[p.n_vertices] += 1
            assert p.n_vertices in (6, 8, 12), nf
    assert transitive_counts  # the octahedron at least


def test_vertex_bound_over_box1(box1_enumeration):
    classes, _ = box1_enumeration
    assert classes
    assert max(len(nf) for nf in classes) <= 14


def test_triangle_or_quadrangle_facets_over_box1(box1_enumeration):
    classes, _ = box1_enumeration
    for nf in classes:
        assert set(facet_vertex_counts(convex_hull(nf))) <= {3, 4}


def test_hull_idempotence_over_sampled_classes(box1_enumeration):
    classes, _ = box1_enumeration
    rng = random.Random(7)
    for nf in rng.sample(sorted(classes), 25):
        p = convex_hull(nf)
        assert convex_hull(lattice_points(p)).vertices == p.vertices


def test_orbit_counts_bounded_by_vertices(box1_enumeration):
    classes, _ = box1_enumeration
    rng = random.Random(11)
    for nf in rng.sample(sorted(classes), 25):
        p = convex_hull(nf)
        orbits = vertex_orbits(p, automorphism_group(p))
        assert 1 <= orbits.n_orbits <= p.n_vertices
        assert classify(p).is_terminal
