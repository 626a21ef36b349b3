import numpy as np
from hypothesis import given, settings, strategies as st

from zolo.rational import PolynomialRatio, mobius_z3_to_z4, mobius_z4_to_z3, to_descriptor
from zolo.zolotarev import optimal_two_circles, sigma_from_tau, tau_from_sigma

PROBES = np.linspace(-2, 2, 7) + 0.37j


@given(st.floats(1e-9, 0.999))
def test_tau_sigma_round_trip(tau):
    s = sigma_from_tau(tau)
    assert 0 < s < 1
    assert np.isclose(tau_from_sigma(s), tau, rtol=1e-12, atol=0)


@given(st.floats(1e-9, 0.9), st.floats(-3, 3), st.floats(0.1, 3))
@settings(max_examples=40, deadline=None)
def test_mobius_round_trip(sigma, b, c):
    h4 = to_descriptor(PolynomialRatio([1.0, b], [1.0, c, 2.0]))
    back = mobius_z3_to_z4(mobius_z4_to_z3(h4, sigma), sigma)
    assert np.allclose(back(PROBES), h4(PROBES), rtol=1e-9, atol=1e-12)


@given(st.floats(0.05, 0.9), st.integers(1, 29))
@settings(max_examples=40, deadline=None)
def test_oracle_decreases_with_order(rho, r):
    assert optimal_two_circles(rho, 1.0, r + 1)[1] < optimal_two_circles(rho, 1.0, r)[1]


@given(st.floats(0.05, 0.85), st.floats(0.01, 0.1), st.integers(1, 12))
@settings(max_examples=40, deadline=None)
def test_oracle_increases_with_radius(rho, d, r):
    assert optimal_two_circles(rho, 1.0, r)[1] < optimal_two_circles(rho + d, 1.0, r)[1]
