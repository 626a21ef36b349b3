import numpy as np
import pytest

from zolo.errors import DegenerateSigma, DivideByZeroWeightSum, IllConditioned, SingularAtPoint
from zolo.numerics import match_sets
from zolo.rational import (BarycentricForm, DescriptorRealization, PolynomialRatio,
                           ZeroPoleGain, eval_barycentric, eval_descriptor, mobius_z3_to_z4,
                           mobius_z4_to_z3, poles, to_descriptor, to_polynomial_ratio,
                           to_zero_pole_gain, zeros)

rng = np.random.default_rng(7)
PROBES = rng.standard_normal(20) + 1j * rng.standard_normal(20)


def _cubic():
    zs = np.array([0.3, -1 + 0.5j, 2.0])
    ps = np.array([1j, -1j, -2.5 + 0.2j])
    return ZeroPoleGain(zs, ps, 1.5 - 0.5j)


def test_representations_agree():
    R = _cubic()
    P = to_polynomial_ratio(R)
    D = to_descriptor(R)
    Dp = to_descriptor(P)
    for other in (P, D, Dp):
        assert np.allclose(other(PROBES), R(PROBES), rtol=1e-10)


def test_poles_and_zeros_from_pencils():
    R = _cubic()
    for form in (to_descriptor(R), to_descriptor(to_polynomial_ratio(R))):
        assert match_sets(poles(form), R.poles) < 1e-8
        assert match_sets(zeros(form), R.zeros) < 1e-8


def test_barycentric_interpolates_and_converts():
    lam = np.array([0.0, 1.0, 2j, -1.5])
    w = np.array([1.0, -2.0, 0.5j, 3.0])
    a = np.array([1.0, -0.5, 0.2 + 0.1j, 0.7])
    f = BarycentricForm(lam, w, a)
    assert np.array_equal(f(lam), w)
    assert f.order == 3 and f.degree == (3, 3)
    D = to_descriptor(f)
    P = to_polynomial_ratio(f)
    assert np.allclose(D(PROBES), f(PROBES), rtol=1e-10)
    assert np.allclose(P(PROBES), f(PROBES), rtol=1e-10)
    assert len(poles(D)) == 3


def test_eval_barycentric_errors():
    f = BarycentricForm([1.0, -1.0], [1.0, 1.0], [1.0, 1.0])
    assert eval_barycentric(f, 1.0) == 1.0
    with pytest.raises(DivideByZeroWeightSum):
        eval_barycentric(f, 0.0)    # 1/(0-1) + 1/(0+1) = 0


def test_eval_descriptor_singular_point():
    D = DescriptorRealization(np.eye(2), np.diag([1.0, 2.0]), [1.0, 1.0], [1.0, 1.0])
    assert np.isclose(eval_descriptor(D, 0.0), -1.5)
    with pytest.raises(SingularAtPoint):
        eval_descriptor(D, 2.0)
    assert D.degree == (1, 2)


def test_polynomial_ratio_normalization():
    P = PolynomialRatio([0, 0, 2.0, 4.0], [2.0, 0.0, 2.0])
    assert np.allclose(P.denominator, [1, 0, 1])
    assert np.allclose(P.numerator, [1, 2])
    assert P.degree == (1, 2)
    with pytest.raises(ValueError):
        PolynomialRatio([1, 0, 0], [1, 0])


def test_constant_polynomial_realization():
    P = PolynomialRatio([3.0], [1.0])
    D = to_descriptor(P)
    assert np.allclose(D(PROBES), 3.0)
    assert len(poles(D)) == 0


def test_zero_pole_gain_log_abs_survives_underflow():
    R = ZeroPoleGain(np.full(60, -0.5), np.full(60, 0.5), 1.0)
    z = np.array([-0.45])
    expect = 60 * np.log10(0.05 / 0.95)
    assert np.isclose(R.log_abs(z)[0], expect)


def test_to_zero_pole_gain_fits_gain():
    R = _cubic()
    Z = to_zero_pole_gain(to_descriptor(R))
    assert np.allclose(Z(PROBES), R(PROBES), rtol=1e-8)


def test_monomial_conversion_guard():
    R = ZeroPoleGain(np.zeros(0), np.arange(70) + 0.0, 1.0)
    with pytest.raises(IllConditioned):
        to_polynomial_ratio(to_descriptor(R))


def test_factored_ratio_uses_factors():
    zpk = ZeroPoleGain(np.full(26, -0.866), np.full(26, 0.866), 1e-15)
    P = PolynomialRatio(zpk.gain * np.poly(zpk.zeros), np.poly(zpk.poles), factors=zpk)
    z = np.array([-0.9])
    assert np.isclose(P(z)[0], zpk(z)[0], rtol=1e-12)
    assert np.allclose(zeros(P), -0.866)


@pytest.mark.parametrize("sigma", [0.5, 0.0052, 1e-9])
def test_mobius_round_trip(sigma):
    h4 = to_descriptor(PolynomialRatio([2.0, 0.0], [1.0, 0.0, 0.977]))
    back = mobius_z3_to_z4(mobius_z4_to_z3(h4, sigma), sigma)
    assert np.allclose(back(PROBES), h4(PROBES), rtol=1e-10)


def test_mobius_definition():
    sigma = 0.01
    p = (1 - sigma) / (1 + sigma)
    h4 = to_descriptor(PolynomialRatio([1.0, 0.2], [1.0, 0.5, 2.0]))
    h3 = mobius_z4_to_z3(h4, sigma)
    v = h4(PROBES)
    assert np.allclose(h3(PROBES), np.sqrt(sigma) * (p + v) / (p - v), rtol=1e-10)


@pytest.mark.parametrize("sigma", [0.0, -0.1, 1.5, np.nan])
def test_mobius_rejects_bad_sigma(sigma):
    with pytest.raises(DegenerateSigma):
        mobius_z4_to_z3(to_descriptor(PolynomialRatio([1.0], [1.0, 1.0])), sigma)
