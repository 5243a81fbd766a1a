import io
import math

import numpy as np
import pytest

from archtrop import (
    ConvergenceFailure,
    DegenerateFiber,
    EmptySet,
    FiberGrid,
    NotPlanar,
    amoeba_1d,
    amoeba_point_near,
    archtrop_2d,
    directed_hausdorff,
    fiber_roots,
    hausdorff,
    parse_laurent,
    roots_1d,
    sample_amoeba_2d,
)

from conftest import EX12, G62


def test_golden_ratio_roots():
    rs = roots_1d(parse_laurent("x1^2 - x1 - 1"))
    phi = (1 + 5**0.5) / 2
    vals = sorted(r.value.real for r in rs.roots)
    assert vals == pytest.approx([-1 / phi, phi], abs=1e-14)
    assert rs.meets_target and rs.degree_accounted == 2


def test_double_root_cluster():
    rs = roots_1d(parse_laurent("x1^2 + 2*x1 + 1"))
    assert len(rs.roots) == 1 and rs.roots[0].multiplicity == 2
    assert abs(rs.roots[0].value + 1) <= rs.roots[0].error_radius + 1e-12


@pytest.mark.parametrize("scale", ["10^-9", "16^-18", "10^-200"])
def test_extreme_coefficient_scales(scale):
    f = parse_laurent(f"{scale}*x1^3 - x1 + 1")
    for r in roots_1d(f).roots:
        assert abs(f([r.value])) <= 1e-6 * max(1.0, abs(r.value)) ** 3 or r.error_radius < 1e-9 * abs(r.value)


def test_radii_contain_true_roots():
    # roots of (x - 1)(x - 2)(x - 3)
    rs = roots_1d(parse_laurent("x1^3 - 6*x1^2 + 11*x1 - 6"))
    for z in (1, 2, 3):
        assert any(abs(r.value - z) <= r.error_radius + 1e-15 for r in rs.roots)


def test_high_degree_binomial():
    pts = amoeba_1d(parse_laurent("1 - x1^100"))
    assert len(pts) == 1 and pts[0].multiplicity == 100 and abs(pts[0].log_norm) < 1e-12


def test_fiber_roots_of_line():
    rs = fiber_roots(parse_laurent("1 + x1 + x2"), [0.0], [math.pi / 2])
    assert [r.log_norm for r in rs.roots] == pytest.approx([0.5 * math.log(2)])


def test_degenerate_fiber():
    with pytest.raises(DegenerateFiber):
        fiber_roots(parse_laurent("1 + x1 + x2"), [0.0], [math.pi])


def test_cloud_and_csv():
    cloud = sample_amoeba_2d(parse_laurent("1 + x1 + x2"), FiberGrid((0.0,), 4))
    assert cloud.skipped == 1 and len(cloud) == 3
    text = cloud.to_csv()
    assert text.splitlines()[0] == "x1,x2,err,fiber_id"
    assert len(text.splitlines()) == 4
    with pytest.raises(NotPlanar):
        sample_amoeba_2d(parse_laurent("x1 + 1"))


def test_default_grid_covers_vertices():
    f = parse_laurent(EX12)
    g = FiberGrid.default_for(f)
    ys = [float(v.coords[1]) for v in archtrop_2d(f).vertices]
    assert min(g.log_moduli) <= min(ys) and max(g.log_moduli) >= max(ys)


def test_amoeba_point_near_on_and_off():
    f = parse_laurent(EX12)
    res = amoeba_point_near(f, (0.0, -math.log(10)))
    assert res is not None and np.linalg.norm(res[0] - (0.0, -math.log(10))) < 1e-9
    # far from the curve the three dominant terms cannot cancel
    assert amoeba_point_near(f, (-8.0, -8.0)) is None


def test_simplex_phase_construction():
    f = parse_laurent("2 + 3*x1^2*x2 - x1^-1*x2^3")
    C = archtrop_2d(f)
    for v in [C.vertices[0].floats(), C.vertices[0].floats() + np.array(C.rays[0].direction) * 5.0]:
        w, err = amoeba_point_near(f, v)
        assert np.linalg.norm(w - v) <= 1e-9 + err


def test_hausdorff_helpers():
    A = np.array([0.0, 1.0])
    B = np.array([0.5])
    assert directed_hausdorff(A, B).value == pytest.approx(0.5)
    assert hausdorff(A, B).value == pytest.approx(0.5)
    with pytest.raises(EmptySet):
        directed_hausdorff(np.array([]), B)


def test_ray_distance_matches_quartic_offset():
    f = parse_laurent(G62)
    cloud = sample_amoeba_2d(f, FiberGrid(tuple(np.linspace(-12, -10, 5)), 8))
    pts = np.array([[math.log(4), y] for y in np.linspace(-12, -10, 5)])
    d = directed_hausdorff(pts, cloud.points).value
    assert abs(d - math.log(4)) < 0.06
