import math

import pytest

import cutdepth as cd

SQUARE_A = [[-1, 0], [1, 0], [0, -1], [0, 1]]


def test_point_depth():
    assert cd.point_depth(SQUARE_A, [0, 1, 0, 1], [0.2, 0.7]) == pytest.approx(0.2)
    seg = cd.point_depth([[-1, 0], [1, 0]], [0, 1], [0.3, 0.7], L=[[1, 1]], xi=[1])
    assert seg == pytest.approx(math.sqrt(0.18))


def test_cut_depth_box():
    r = cd.cut_depth(SQUARE_A, [-0.25, 1, 0, 1], [1, 0], 1)
    assert r["kind"] == "Finite"
    assert r["value"] == pytest.approx(0.375)
    assert len(r["point"]) == 2


def test_unbounded_and_not_violated():
    assert cd.cut_depth([[0, -1]], [0], [1, 0], 1)["kind"] == "Unbounded"
    assert cd.cut_depth(SQUARE_A, [0, 1, 0, 1], [-1, -1], -10)["kind"] == "NotViolated"


def test_corner_matches_standard_form():
    closed = cd.corner_cut_depth([0.5], [[1, -1]], [2, 2], 1)
    inf = math.inf
    lp = cd.cut_depth_standard_form([[1, -1, 1]], [0.5], [-inf, 0, 0], [inf, inf, inf], [0, 2, 2], 1)
    assert closed["value"] == pytest.approx(math.sqrt(6) / 8, abs=1e-12)
    assert lp["value"] == pytest.approx(closed["value"], abs=1e-9)


def test_bounds():
    assert cd.split_depth_bound([1, 1], 0) == pytest.approx(1 / math.sqrt(2))
    assert cd.split_depth_bound([1, 1], 0, L=[[1, 1]], xi=[0]) is None
    assert cd.split_point_depth_bound([2, 1], 0, [0.25, 0]) == pytest.approx(0.5 / math.sqrt(5))
    assert cd.intersection_cut_bound([[1, -1]], [2, 2]) == pytest.approx(math.sqrt(2) / 2)
    assert cd.integer_hull_depth_bound(4) == pytest.approx(math.sqrt(2.5))
    assert cd.lattice_integer_hull_bound([[2, 0], [0, 2]]) == pytest.approx(2 * math.sqrt(1.5))
    assert cd.volume_lower_bound(2, 0.375) == pytest.approx(0.5 * math.pi * 0.375**2)
    assert cd.max_distance_bruteforce(4) == cd.max_distance_greedy(4) == 1.75


def test_errors_surface_as_value_errors():
    with pytest.raises(cd.CutDepthError):
        cd.point_depth(SQUARE_A, [0, 1, 0, 1], [2.0, 0.5])
    with pytest.raises(ValueError, match="DimensionTooSmall"):
        cd.integer_hull_depth_bound(1)
