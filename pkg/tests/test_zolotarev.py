import numpy as np
import pytest

from zolo.domains import make_example, two_circles
from zolo.errors import (ConfigError, DegenerateTau, InvalidGeometry, MethodFailure,
                         NormalizationDrift, UndefinedOutsideSets, ZeroOnF)
from zolo.rational import PolynomialRatio, ZeroPoleGain, to_descriptor
from zolo.zolotarev import (SolvePolicy, extremal_sets, measure_sigma, optimal_sign_two_circles,
                            optimal_two_circles, sigma_from_tau, sign_of, solve_z4,
                            tau_from_sigma, z4_to_z3)


@pytest.fixture(scope="module")
def circles():
    return make_example("1a")


def test_sign_of(circles):
    assert sign_of(circles, -0.5) == -1
    assert sign_of(circles, 1.5) == 1
    with pytest.raises(UndefinedOutsideSets):
        sign_of(circles, 0.0)


def test_sigma_tau_hand_values():
    assert np.isclose(sigma_from_tau(0.6), 1 / 9)
    assert np.isclose((1 - 1 / 9) / (1 + 1 / 9), 0.8)
    assert np.isclose(sigma_from_tau(1e-8), (1e-8 / 2) ** 2, rtol=1e-12)
    assert np.isclose(tau_from_sigma(0.0052), 0.1436, rtol=1e-3)


def test_oracle_values():
    assert np.isclose(optimal_two_circles(0.5, 1, 2)[1], 5.155e-3, rtol=1e-3)
    s6, s8 = optimal_two_circles(0.5, 1, 6)[1], optimal_two_circles(0.5, 1, 8)[1]
    assert np.isclose(s6, 1.4e-7, rtol=0.03) and np.isclose(s8, 7.1e-10, rtol=0.03)
    sig = [optimal_two_circles(0.5, 1, r)[1] for r in range(1, 31)]
    assert np.all(np.diff(sig) < 0)
    # rho -> 0: the Moebius map (z+1)/(z-1), sigma -> 0
    h, s = optimal_two_circles(1e-6, 1, 1)
    assert s < 1e-12
    assert np.isclose(h(0.3) / np.sqrt(s), 1.3 / -0.7)
    with pytest.raises(InvalidGeometry):
        optimal_two_circles(1.0, 1.0, 2)


def test_oracle_forms():
    h, _ = optimal_two_circles(0.5, 1, 26)
    assert isinstance(h, PolynomialRatio) and h.factors is not None
    h40, _ = optimal_two_circles(0.5, 1, 40)
    assert isinstance(h40, ZeroPoleGain)
    h4, sigma = optimal_sign_two_circles(0.5, 1, 2)
    assert np.allclose(h4.padded_numerator(), [0, 1.7142857, 0], atol=1e-6)
    assert np.allclose(h4.denominator, [1, 0, 0.75])
    inst = two_circles(0.5, 1, 256)
    tau = np.abs(h4(inst.points) - inst.signs).max()
    assert np.isclose(tau, tau_from_sigma(sigma), rtol=1e-10)


def test_measure_sigma_constant_and_zero(circles):
    const = to_descriptor(PolynomialRatio([2.5], [1.0]))
    assert np.isclose(measure_sigma(const, circles), 1.0)
    # vanishes at the F sample 1.5
    with pytest.raises(ZeroOnF):
        measure_sigma(PolynomialRatio([1.0, -1.5], [1.0, 5.0]), circles)


def test_z4_to_z3_relations(circles):
    h4, _ = optimal_sign_two_circles(0.5, 1, 2)
    h3, p, sigma, tau = z4_to_z3(h4, circles)
    assert abs(tau - 2 * np.sqrt(sigma) / (1 + sigma)) <= 1e-10 * tau
    assert abs(p - (1 - sigma) / (1 + sigma)) <= 1e-12
    assert np.isclose(sigma, 0.005155, rtol=1e-3)
    assert np.isclose(measure_sigma(h3, circles), sigma, rtol=1e-6)
    # balanced error: the strict band holds too
    z4_to_z3(h4, circles, band=(0.5, 2.0))


def test_z4_to_z3_degenerate(circles):
    zero = to_descriptor(PolynomialRatio([0.0], [1.0]))
    with pytest.raises(DegenerateTau):
        z4_to_z3(zero, circles)


def test_strict_band_flags_unbalanced_error():
    inst = make_example("pm2", 128)
    sol = solve_z4(inst, "loewner", SolvePolicy(order=4))
    with pytest.raises(NormalizationDrift):
        z4_to_z3(sol.h4, inst, band=(0.5, 2.0))


def test_extremal_sets(circles):
    h, s = optimal_two_circles(0.5, 1, 2)
    m1, m2 = extremal_sets(h, circles, s, 1e-3)
    assert len(m1) > 0 and len(m2) > 0
    const = to_descriptor(PolynomialRatio([np.sqrt(0.01)], [1.0]))
    m1, m2 = extremal_sets(const, circles, 0.01, 1e-3)
    assert len(m1) == len(circles.e_points) and len(m2) == 0


def test_solve_loewner_low_order(circles):
    sol = solve_z4(circles, "loewner", SolvePolicy(order=2))
    assert abs(sol.sigma - 0.0095) <= 0.3 * 0.0095
    assert sol.order == 2 and sol.degree == (1, 2)
    assert sol.elapsed_seconds > 0 and sol.method_tag == "loewner"


def test_solve_aaa_orders_match(circles):
    a = solve_z4(circles, "aaa", SolvePolicy(order=4))
    b = solve_z4(circles, "aaa-lawson", SolvePolicy(order=4, lawson_iterations=20))
    assert a.order == b.order == 4
    assert a.degree == (4, 4)
    assert b.sigma <= a.sigma


def test_solve_errors(circles):
    with pytest.raises(ConfigError):
        solve_z4(circles, "remez")
    with pytest.raises(ConfigError):
        SolvePolicy(order=2, tol=1e-10)
    with pytest.raises(MethodFailure) as info:
        solve_z4(make_example("1a", 16), "loewner", SolvePolicy(order=40))
    assert info.value.stage == "loewner"


def test_degenerate_tau_reported():
    # nested circles: a single pole cannot separate them in the LF truncation
    with pytest.raises(DegenerateTau):
        solve_z4(make_example("3a", 128), "loewner", SolvePolicy(order=2))


SANE = ["1a", "1b", "1c", "2a", "2c", "2d", "7", "pm2"]


@pytest.mark.parametrize("name", SANE)
def test_method_sanity(name):
    inst = make_example(name)
    for method in ("loewner", "aaa", "aaa_lawson"):
        sig = []
        for r in (2, 4, 8):
            sol = solve_z4(inst, method, SolvePolicy(order=r, lawson_iterations=40))
            assert sol.tau < 1
            sig.append(sol.sigma)
        assert sig[0] >= sig[1] >= sig[2], (method, sig)
