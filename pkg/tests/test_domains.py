import numpy as np
import pytest

from zolo.domains import (CATALOG, is_conjugate_closed, make_example, split_left_right,
                          two_circles)
from zolo.errors import InvalidGeometry, TooFewPoints, UnknownExample


def test_two_circles_geometry():
    inst = two_circles(0.5, 1.0, 64)
    assert np.allclose(np.abs(inst.e_points + 1), 0.5)
    assert np.allclose(np.abs(inst.f_points - 1), 0.5)
    assert inst.conjugate_symmetric
    assert -0.5 in inst.e_points and 1.5 in inst.f_points
    with pytest.raises(InvalidGeometry):
        two_circles(1.0, 0.5)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_is_deterministic_and_disjoint(name):
    a = make_example(name, 64)
    b = make_example(name, 64)
    assert np.array_equal(a.points, b.points)
    assert len(a.e_points) == len(a.f_points) == 64
    assert np.min(np.abs(a.e_points[:, None] - a.f_points[None, :])) > 1e-3
    assert len(np.unique(a.points)) == 128
    if a.conjugate_symmetric:
        assert is_conjugate_closed(a.e_points) and is_conjugate_closed(a.f_points)


def test_unknown_and_small():
    with pytest.raises(UnknownExample):
        make_example("nope")
    with pytest.raises(TooFewPoints):
        make_example("1a", 4)


def test_split_alternates_within_each_set():
    inst = make_example("1a", 16)
    d = split_left_right(inst)
    assert np.array_equal(d.right_points[:8], inst.e_points[0::2])
    assert np.array_equal(d.left_points[8:], inst.f_points[1::2])
    assert np.all(d.right_values[:8] == -1) and np.all(d.left_values[8:] == 1)
    # each side keeps conjugate closure
    assert is_conjugate_closed(d.right_points) and is_conjugate_closed(d.left_points)


def test_signs_and_json():
    inst = make_example("2a", 8)
    assert list(inst.signs) == [-1] * 8 + [1] * 8
    js = inst.to_json()
    assert js["name"] == "2a" and len(js["e_points"]) == 8
