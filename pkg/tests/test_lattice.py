import itertools
import random

import pytest

from fanotoric.catalog import (
    bl_p2_p5,
    bl_point_p2,
    product_of_simplices,
    standard_simplex,
    unit_square,
)
from fanotoric.errors import DimensionMismatchError, FanoToricError
from fanotoric.lattice import (
    LatticePolytope,
    PointConfiguration,
    faces,
    facets,
    facets_containing,
    is_smooth,
    normalize_configuration,
    normalized_mixed_volume,
    normalized_volume,
    vertex_cone,
)
from fanotoric.intlinalg import vdot, vsub


def brute_force_facets(pts):
    """Oracle: supporting hyperplanes from all codim-1 point subsets."""
    d = len(pts[0])
    found = {}
    for subset in itertools.combinations(range(len(pts)), d):
        chosen = [pts[i] for i in subset]
        base = chosen[0]
        rows = [vsub(p, base) for p in chosen[1:]]
        from fanotoric.intlinalg import rational_kernel, fraction_vector_to_primitive, mat_rank

        if mat_rank(rows) != d - 1:
            continue
        kernel = rational_kernel(rows) if rows else rational_kernel([(0,) * d])
        if len(kernel) != 1:
            continue
        normal = fraction_vector_to_primitive(kernel[0])
        values = [vdot(normal, p) for p in pts]
        c = vdot(normal, base)
        if all(v >= c for v in values):
            pass
        elif all(v <= c for v in values):
            normal = tuple(-x for x in normal)
            values = [-v for v in values]
            c = -c
        else:
            continue
        members = frozenset(i for i, v in enumerate(values) if v == c)
        found[(normal, c)] = members
    return {(n, c, m) for (n, c), m in found.items()}


@pytest.mark.parametrize(
    "config",
    [
        standard_simplex(2),
        standard_simplex(3),
        unit_square(),
        bl_point_p2(),
        product_of_simplices(2, 2),
        bl_p2_p5(),
    ],
)
def test_hull_facets_match_brute_force(config):
    got = {(f[0], f[1], f[2]) for f in config.hull_facet_data}
    assert got == brute_force_facets(list(config.points))


def test_hull_facets_random_configs():
    rng = random.Random(11)
    for _ in range(25):
        d = rng.randint(2, 3)
        n = rng.randint(d + 1, d + 5)
        while True:
            pts = list({tuple(rng.randint(-3, 3) for _ in range(d)) for _ in range(n)})
            cfg = PointConfiguration.from_points(pts)
            if cfg.dim == d:
                break
        got = {(f[0], f[1], f[2]) for f in cfg.hull_facet_data}
        assert got == brute_force_facets(list(cfg.points))


def test_normalize_scaled_segment():
    cfg = PointConfiguration.from_points([(0,), (2,)])
    norm, amap = normalize_configuration(cfg)
    assert norm.points == ((0,), (1,))
    assert not amap.is_identity


def test_normalize_identity_on_simplex():
    cfg = standard_simplex(2)
    norm, amap = normalize_configuration(cfg)
    assert norm is cfg
    assert amap.is_identity


def test_normalize_bl_p2_p5_is_identity():
    cfg = bl_p2_p5()
    norm, amap = normalize_configuration(cfg)
    assert norm is cfg
    assert amap.is_identity


def test_normalize_idempotent_and_face_count_invariant():
    rng = random.Random(5)
    for _ in range(10):
        pts = list({(2 * rng.randint(0, 2), 4 * rng.randint(0, 2)) for _ in range(6)})
        cfg = PointConfiguration.from_points(pts)
        norm, _ = normalize_configuration(cfg)
        again, amap2 = normalize_configuration(norm)
        assert again is norm and amap2.is_identity


def test_faces_simplex():
    cfg = standard_simplex(2)
    fs = faces(cfg)
    assert len(fs) == 7
    dims = sorted(f.dim for f in fs)
    assert dims == [0, 0, 0, 1, 1, 1, 2]


def test_faces_unit_square():
    assert len(faces(unit_square())) == 9


def test_faces_bl_p2_p5_contains_tau():
    cfg = bl_p2_p5()
    tau_members = frozenset(
        i for i, p in enumerate(cfg.points) if p[0] + p[1] + p[2] == 1
    )
    assert len(tau_members) == 9
    fs = faces(cfg)
    assert any(f.member_set == tau_members for f in fs)
    tau = cfg.face_from_members(tau_members)
    assert tau.dim == 4


def test_faces_closed_under_intersection():
    for cfg in (unit_square(), bl_point_p2(), product_of_simplices(1, 2)):
        sets = {f.member_set for f in faces(cfg)}
        for a in sets:
            for b in sets:
                inter = a & b
                if inter:
                    assert inter in sets


def test_supporting_normals():
    cfg = unit_square()
    for f in faces(cfg):
        if f.is_full:
            assert f.supporting_normal is None
            continue
        normal = f.supporting_normal
        values = [vdot(normal, p) for p in cfg.points]
        low = min(values)
        members = frozenset(i for i, v in enumerate(values) if v == low)
        assert members == f.member_set


def test_facets_containing_vertex_counts():
    cfg = standard_simplex(2)
    vert = next(f for f in faces(cfg) if f.dim == 0)
    incident = facets_containing(cfg, vert)
    assert len(incident) == 2

    square = unit_square()
    edge = next(f for f in faces(square) if f.dim == 1)
    assert len(facets_containing(square, edge)) == 1


def test_facets_containing_smooth_count_bl():
    cfg = bl_p2_p5()
    for vi in cfg.vertex_indices:
        vert = cfg.face_from_members([vi])
        assert len(facets_containing(cfg, vert)) == 5


def test_is_smooth():
    assert is_smooth(standard_simplex(1))
    assert is_smooth(standard_simplex(3))
    assert is_smooth(unit_square())
    assert is_smooth(bl_point_p2())
    assert is_smooth(bl_p2_p5())
    # vertex cone of determinant 2
    assert not is_smooth(PointConfiguration.from_points([(0, 0), (1, 0), (1, 2)]))
    # non-normal segment configuration: semigroup {0, 2, 3}
    assert not is_smooth(PointConfiguration.from_points([(0,), (2,), (3,)]))


def test_vertex_cone_unimodular_on_smooth():
    cfg = bl_point_p2()
    for vi in cfg.vertex_indices:
        cone = vertex_cone(cfg, vi)
        assert cone.is_unimodular()


def test_normalized_volume():
    assert normalized_volume([(0, 0), (1, 0), (0, 1)]) == 1
    assert normalized_volume([(0, 0), (2, 0), (0, 2), (1, 1), (2, 2)]) == 8
    assert normalized_volume([(0, 0), (1, 0)]) == 0  # degenerate
    assert normalized_volume([(0,), (5,)]) == 5


def test_mixed_volume_basics():
    simplex = LatticePolytope.from_points([(0, 0), (1, 0), (0, 1)])
    assert normalized_mixed_volume(simplex, simplex) == 1
    seg_x = LatticePolytope.from_points([(0, 0), (1, 0)])
    seg_y = LatticePolytope.from_points([(0, 0), (0, 1)])
    assert normalized_mixed_volume(seg_x, seg_y) == 1
    assert normalized_mixed_volume(seg_x, seg_x) == 0
    two = 2 * simplex
    three = 3 * simplex
    assert normalized_mixed_volume(two, three) == 6
    with pytest.raises(DimensionMismatchError):
        normalized_mixed_volume(simplex)


def test_mixed_volume_translation_and_unimodular_invariance():
    rng = random.Random(2)
    simplex = LatticePolytope.from_points([(0, 0), (1, 0), (0, 1)])
    square = LatticePolytope.from_points([(0, 0), (1, 0), (0, 1), (1, 1)])
    base = normalized_mixed_volume(simplex, square)
    for _ in range(5):
        t1 = (rng.randint(-4, 4), rng.randint(-4, 4))
        t2 = (rng.randint(-4, 4), rng.randint(-4, 4))
        assert normalized_mixed_volume(simplex.translate(t1), square.translate(t2)) == base
    # shear by a unimodular matrix applied to both
    shear = lambda p: (p[0] + 3 * p[1], p[1])
    s1 = LatticePolytope.from_points([shear(p) for p in simplex.vertices])
    s2 = LatticePolytope.from_points([shear(p) for p in square.vertices])
    assert normalized_mixed_volume(s1, s2) == base


def test_lattice_points_of_polytope():
    simplex2 = LatticePolytope.from_points([(0, 0), (2, 0), (0, 2)])
    assert len(simplex2.lattice_points()) == 6
    seg = LatticePolytope.from_points([(0, 0), (2, 2)])
    assert seg.lattice_points() == [(0, 0), (1, 1), (2, 2)]


def test_config_validation():
    with pytest.raises(FanoToricError):
        PointConfiguration.from_points([(0, 0), (0, 0)])
    with pytest.raises(FanoToricError):
        PointConfiguration.from_points([])
    with pytest.raises(FanoToricError):
        PointConfiguration.from_points([(0, 0.5)])
