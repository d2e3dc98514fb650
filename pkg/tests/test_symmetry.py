import random
from itertools import permutations, product

import pytest

from tfano.linalg import identity, mat_mul, mat_vec
from tfano.polytope import convex_hull
from tfano.symmetry import (
    PointGroup,
    affine_normal_form,
    automorphism_group,
    fixed_subspace_dim,
    group_closure,
    invariant_class_rank,
    is_gfano,
    is_vertex_transitive,
    normal_form,
    vertex_orbits,
)

SIMPLEX = convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)])
OCTAHEDRON = convex_hull(
    [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
)
PYRAMID_32 = convex_hull(
    [(1, 0, 0), (0, 1, 0), (1, 1, 1), (-1, -1, 0), (0, 0, -1)]
)
ANTIPRISM_47 = convex_hull(
    [(1, 1, 0), (-1, -1, 0), (1, 0, 1), (-1, 0, -1), (0, 1, 1), (0, -1, -1)]
)
CUBE_297 = convex_hull(
    [
        (1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1),
        (1, 1, 1), (-1, -1, -1), (0, 1, 0), (0, -1, 0),
    ]
)
P1XP2 = convex_hull([(1, 0, 0), (0, 1, 0), (-1, -1, 0), (0, 0, 1), (0, 0, -1)])

W2 = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
GEN_32 = ((1, 0, -1), (1, 0, 0), (1, -1, 0))
GEN_297 = ((0, -1, 1), (0, 0, 1), (-1, 0, 1))


def signed_permutation_matrices():
    mats = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            mats.append(
                tuple(
                    tuple(signs[i] if j == perm[i] else 0 for j in range(3))
                    for i in range(3)
                )
            )
    return mats


def burnside_rank(p, g):
    """Independent computation of the invariant class rank.

    Averages (#fixed vertices - trace) over the group; this is the
    dimension of the invariant part of divisors modulo characters.
    """
    vset = set(p.vertices)
    total = 0
    for a in g:
        fixed = sum(1 for v in p.vertices if mat_vec(a, v) == v)
        assert {mat_vec(a, v) for v in p.vertices} == vset
        total += fixed - sum(a[i][i] for i in range(3))
    assert total % g.order == 0
    return total // g.order


def random_unimodular(rng, dim=3, steps=8):
    m = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.sample(range(dim), 2)
        if op == 0:
            m[i], m[j] = m[j], m[i]
        elif op == 1:
            m[i] = [-x for x in m[i]]
        else:
            q = rng.choice([-2, -1, 1, 2])
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
    return tuple(tuple(row) for row in m)


class TestAutomorphismGroup:
    def test_octahedron_is_signed_permutations(self):
        g = automorphism_group(OCTAHEDRON)
        assert g.order == 48
        assert set(g.elements) == set(signed_permutation_matrices())

    def test_simplex_realises_all_vertex_permutations(self):
        g = automorphism_group(SIMPLEX)
        assert g.order == 24
        perms = set()
        for a in g:
            perms.add(tuple(SIMPLEX.vertices.index(mat_vec(a, v)) for v in SIMPLEX.vertices))
        assert len(perms) == 24  # faithful S4 action

    def test_pyramid_contains_printed_order_four_element(self):
        g = automorphism_group(PYRAMID_32)
        assert GEN_32 in g
        m = GEN_32
        m2 = mat_mul(m, m)
        m4 = mat_mul(m2, m2)
        assert m4 == identity(3)
        assert m2 != identity(3)

    def test_group_axioms(self):
        for p in (SIMPLEX, OCTAHEDRON, PYRAMID_32, CUBE_297):
            g = automorphism_group(p)
            elems = set(g.elements)
            assert identity(3) in elems
            for a in g:
                for b in g:
                    assert mat_mul(a, b) in elems

    def test_closure_helper(self):
        g = group_closure([W2])
        assert g.order == 3
        g4 = group_closure([GEN_297])
        assert g4.order == 4


class TestOrbitsAndFixedSpace:
    def test_octahedron_with_coordinate_cycle(self):
        g = group_closure([W2])
        orbits = vertex_orbits(OCTAHEDRON, g)
        assert orbits.n_orbits == 2
        verts = OCTAHEDRON.vertices
        orbit_sets = {frozenset(verts[i] for i in o) for o in orbits.orbits}
        assert orbit_sets == {
            frozenset({(1, 0, 0), (0, 1, 0), (0, 0, 1)}),
            frozenset({(-1, 0, 0), (0, -1, 0), (0, 0, -1)}),
        }

    def test_trivial_group_gives_singletons(self):
        g = PointGroup(elements=(identity(3),))
        orbits = vertex_orbits(PYRAMID_32, g)
        assert orbits.n_orbits == PYRAMID_32.n_vertices

    def test_full_group_octahedron_transitive(self):
        orbits = vertex_orbits(OCTAHEDRON, automorphism_group(OCTAHEDRON))
        assert orbits.n_orbits == 1

    def test_non_preserving_element_rejected(self):
        shear = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
        with pytest.raises(ValueError, match="preserve"):
            vertex_orbits(OCTAHEDRON, PointGroup(elements=(identity(3), shear)))

    def test_fixed_dims(self):
        assert fixed_subspace_dim(PointGroup(elements=(identity(3),))) == 3
        assert fixed_subspace_dim(group_closure([W2])) == 1
        neg = tuple(tuple(-1 if i == j else 0 for j in range(3)) for i in range(3))
        assert fixed_subspace_dim(group_closure([neg])) == 0


class TestInvariantRank:
    def test_octahedron_with_w2(self):
        assert invariant_class_rank(OCTAHEDRON, group_closure([W2])) == 1

    def test_cube_with_printed_generator(self):
        assert invariant_class_rank(CUBE_297, group_closure([GEN_297])) == 1

    def test_p1xp2_full_group(self):
        g = automorphism_group(P1XP2)
        r = invariant_class_rank(P1XP2, g)
        assert r == 2
        assert r == burnside_rank(P1XP2, g)

    def test_burnside_agreement(self):
        pairs = 0
        for p in (SIMPLEX, OCTAHEDRON, PYRAMID_32, CUBE_297, ANTIPRISM_47, P1XP2):
            full = automorphism_group(p)
            subgroups = [PointGroup(elements=(identity(3),)), full]
            for a in full.elements[:4]:
                subgroups.append(group_closure([a]))
            for g in subgroups:
                assert invariant_class_rank(p, g) == burnside_rank(p, g)
                pairs += 1
        assert pairs >= 30

    def test_rank_at_least_one(self):
        for p in (SIMPLEX, OCTAHEDRON, PYRAMID_32, CUBE_297, ANTIPRISM_47, P1XP2):
            assert invariant_class_rank(p, automorphism_group(p)) >= 1

    def test_monotone_in_group(self):
        for p in (OCTAHEDRON, CUBE_297, P1XP2):
            full = automorphism_group(p)
            r_full = invariant_class_rank(p, full)
            for a in full.elements[:6]:
                r_sub = invariant_class_rank(p, group_closure([a]))
                assert r_full <= r_sub


class TestGFano:
    def test_octahedron_true(self):
        assert is_gfano(OCTAHEDRON)

    def test_p1xp2_false(self):
        assert not is_gfano(P1XP2)

    def test_every_four_vertex_terminal_fano_true(self):
        for p in (SIMPLEX, convex_hull([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -2, -3)])):
            assert p.n_vertices == 4
            assert is_gfano(p)


class TestVertexTransitive:
    def test_octahedron(self):
        assert is_vertex_transitive(OCTAHEDRON)

    def test_pyramid_not(self):
        assert not is_vertex_transitive(PYRAMID_32)

    def test_antiprism_47(self):
        assert is_vertex_transitive(ANTIPRISM_47)


class TestNormalForm:
    def test_invariant_under_unimodular_maps(self):
        rng = random.Random(42)
        for p in (SIMPLEX, OCTAHEDRON, PYRAMID_32, CUBE_297, ANTIPRISM_47):
            nf = normal_form(p)
            for _ in range(10):
                u = random_unimodular(rng)
                q = convex_hull([mat_vec(u, v) for v in p.vertices])
                assert normal_form(q) == nf

    def test_separates_distinct_classes(self):
        assert normal_form(OCTAHEDRON) != normal_form(ANTIPRISM_47)

    def test_output_is_a_representative(self):
        for p in (SIMPLEX, OCTAHEDRON, CUBE_297):
            nf = normal_form(p)
            assert normal_form(convex_hull(nf)) == nf

    def test_affine_normal_form_2d(self):
        rng = random.Random(3)
        tri = convex_hull([(0, 0), (1, 0), (0, 1)])
        shifted = convex_hull([(5, 7), (6, 7), (5, 8)])
        assert affine_normal_form(tri) == affine_normal_form(shifted)
        square = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert affine_normal_form(square) != affine_normal_form(tri)
        for _ in range(10):
            u = random_unimodular(rng, dim=2)
            t = (rng.randint(-4, 4), rng.randint(-4, 4))
            moved = convex_hull(
                [tuple(x + dx for x, dx in zip(mat_vec(u, v), t)) for v in square.vertices]
            )
            assert affine_normal_form(moved) == affine_normal_form(square)
