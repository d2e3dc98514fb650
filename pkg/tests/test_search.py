import math
import random
from itertools import combinations

import pytest

from tfano.linalg import vsub
from tfano.polytope import (
    classify,
    contains_strictly,
    convex_hull,
    facet_vertex_counts,
    lattice_points,
    polygon_counts,
)
from tfano.search import (
    EnumConfig,
    box_points_2d,
    enumerate_empty_polygons,
    enumerate_terminal_fano,
    primitive_box_points,
)
from tfano.symmetry import affine_normal_form, normal_form

OCTAHEDRON = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
ANTIPRISM_47 = [(1, 1, 0), (-1, -1, 0), (1, 0, 1), (-1, 0, -1), (0, 1, 1), (0, -1, -1)]
SIMPLEX = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]


def segment_has_bad_point(a, b, allow_origin):
    d = vsub(b, a)
    g = math.gcd(*d)
    for t in range(1, g):
        q = tuple(a[i] + t * d[i] // g for i in range(len(a)))
        if allow_origin and all(x == 0 for x in q):
            continue
        return True
    return False


def subset_oracle_3d(bound, max_v):
    """Brute-force reference: classify the hull of every candidate subset."""
    points = primitive_box_points(bound)
    classes = set()
    for k in range(4, max_v + 1):
        for combo in combinations(points, k):
            if any(
                segment_has_bad_point(a, b, allow_origin=True)
                for a, b in combinations(combo, 2)
            ):
                continue
            try:
                p = convex_hull(combo)
            except ValueError:
                continue
            if set(p.vertices) != set(combo):
                continue
            flags = classify(p)
            if flags.is_terminal and flags.is_fano:
                classes.add(normal_form(p))
    return classes


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            EnumConfig(box_bound=0, dim=3)
        with pytest.raises(ValueError):
            EnumConfig(box_bound=1, dim=4)
        with pytest.raises(ValueError):
            EnumConfig(box_bound=1, dim=3, max_vertices=3)

    def test_candidate_points(self):
        pts = primitive_box_points(1)
        assert len(pts) == 26
        assert all(math.gcd(*p) == 1 for p in pts)
        assert len(box_points_2d(2)) == 25


class TestEmptyPolygons:
    def test_exactly_two_classes_at_bound_two(self):
        classes = enumerate_empty_polygons(EnumConfig(box_bound=2, dim=2))
        assert len(classes) == 2

    def test_exactly_two_classes_at_bound_one(self):
        classes = enumerate_empty_polygons(EnumConfig(box_bound=1, dim=2))
        assert len(classes) == 2
        tri = affine_normal_form(convex_hull([(0, 0), (1, 0), (0, 1)]))
        sq = affine_normal_form(convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)]))
        assert classes == {tri, sq}

    def test_output_polygons_are_empty(self):
        for nf in enumerate_empty_polygons(EnumConfig(box_bound=2, dim=2)):
            p = convex_hull(nf)
            twice_area, interior, boundary = polygon_counts(p)
            assert interior == 0
            assert boundary == p.n_vertices
            assert twice_area > 0

    def test_jobs_agree(self):
        cfg = EnumConfig(box_bound=2, dim=2)
        assert enumerate_empty_polygons(cfg, jobs=1) == enumerate_empty_polygons(cfg, jobs=2)


class TestTerminalFano:
    def test_restricted_run_matches_subset_oracle(self):
        cfg = EnumConfig(box_bound=1, dim=3, max_vertices=5)
        got = enumerate_terminal_fano(cfg)
        expected = subset_oracle_3d(1, 5)
        assert got == expected

    def test_contains_simplex_class_in_restricted_run(self):
        cfg = EnumConfig(box_bound=1, dim=3, max_vertices=6)
        classes = enumerate_terminal_fano(cfg)
        assert normal_form(convex_hull(SIMPLEX)) in classes
        assert normal_form(convex_hull(OCTAHEDRON)) in classes
        assert normal_form(convex_hull(ANTIPRISM_47)) in classes

    def test_classes_reverify(self):
        cfg = EnumConfig(box_bound=1, dim=3, max_vertices=6)
        for nf in enumerate_terminal_fano(cfg):
            p = convex_hull(nf)
            flags = classify(p)
            assert flags.is_terminal and flags.is_fano
            assert p.n_vertices <= 6
            assert set(facet_vertex_counts(p)) <= {3, 4}

    def test_jobs_agree(self):
        cfg = EnumConfig(box_bound=1, dim=3, max_vertices=5)
        assert enumerate_terminal_fano(cfg, jobs=1) == enumerate_terminal_fano(cfg, jobs=2)

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            enumerate_terminal_fano(EnumConfig(box_bound=1, dim=2))
        with pytest.raises(ValueError):
            enumerate_empty_polygons(EnumConfig(box_bound=1, dim=3))


class TestMonotonePruning:
    def test_interior_point_stays_interior(self):
        rng = random.Random(99)
        done = 0
        while done < 50:
            pts = [
                tuple(rng.randint(-3, 3) for _ in range(3))
                for _ in range(rng.randint(4, 8))
            ]
            try:
                p = convex_hull(pts)
            except ValueError:
                continue
            inner = [q for q in lattice_points(p) if contains_strictly(p, q)]
            if not inner:
                continue
            q = rng.choice(inner)
            extra = pts + [
                tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(3)
            ]
            try:
                bigger = convex_hull(extra)
            except ValueError:
                continue
            assert contains_strictly(bigger, q)
            done += 1
