import numpy as np
import pytest

from zolo.domains import PartitionedData, make_example, split_left_right
from zolo.errors import CoincidentPoints, RankDeficientPencil
from zolo.loewner import (build_pencil, detect_order, interpolation_residual,
                          normalized_singular_values, reduce)
from zolo.rational import PolynomialRatio, to_polynomial_ratio


def _data(f, n=40, seed=3):
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(2 * n) + 1j * rng.standard_normal(2 * n)
    return PartitionedData(z[:n], f(z[:n]), z[n:], f(z[n:]))


def test_pencil_entries():
    d = PartitionedData(np.array([1.0, 2.0]), np.array([1.0, 0.5]),
                        np.array([3.0]), np.array([1 / 3]))
    P = build_pencil(d, real=False)
    assert np.isclose(P.L[0, 0], (1 / 3 - 1) / (3 - 1))
    assert np.isclose(P.Ls[0, 1], (3 * (1 / 3) - 0.5 * 2) / (3 - 2))


def test_coincident_points():
    d = PartitionedData(np.array([1.0]), np.array([1.0]), np.array([1.0]), np.array([1.0]))
    with pytest.raises(CoincidentPoints):
        build_pencil(d)


def test_recovers_low_order_rational():
    R = PolynomialRatio([1.0, -2.0, 0.5], [1.0, 0.3, 1.0, -0.2])
    d = _data(R)
    P = build_pencil(d)
    assert detect_order(P) == 3
    h = reduce(P)
    assert h.order == 3
    assert interpolation_residual(h, d) < 1e-10
    got = to_polynomial_ratio(h)
    assert np.allclose(got.denominator, R.denominator, atol=1e-8)


def test_order_detection_on_two_circles():
    P = build_pencil(split_left_right(make_example("1a")))
    s = normalized_singular_values(P)
    assert s[0] == 1.0 and np.all(np.diff(s) <= 1e-15)
    assert detect_order(P, 1e-14) == 26
    assert P.real      # conjugate-closed data get the real form


def test_fixed_order_beyond_rank():
    R = PolynomialRatio([1.0], [1.0, 0.5])
    P = build_pencil(_data(R, n=10))
    with pytest.raises(RankDeficientPencil):
        reduce(P, fixed_order=8)


def test_real_form_gives_same_interpolant():
    inst = make_example("2a", 128)
    d = split_left_right(inst)
    a = reduce(build_pencil(d, real=False), fixed_order=6)
    b = reduce(build_pencil(d), fixed_order=6)
    z = np.array([0.1 + 0.3j, -0.4, 2.0 - 1j])
    assert np.allclose(a(z), b(z), rtol=1e-8)
    assert np.isrealobj(b.A) or not np.any(b.A.imag)


def test_constant_model_residual():
    d = split_left_right(make_example("1a", 32))
    assert interpolation_residual(lambda z: np.zeros_like(z), d) == 1.0
