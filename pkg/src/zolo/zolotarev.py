"""Sign approximation (Z4) and ratio minimization (Z3) on two sample sets.

A Z4 solution h4 ~ sign (-1 on E, +1 on F) with sup error tau maps to a Z3
solution

    h3 = sqrt(sigma) (p + h4) / (p - h4),   p = (1 - sigma) / (1 + sigma),

with tau = 2 sqrt(sigma) / (1 + sigma). Normalized this way |h3| is about
sigma on E and about 1 on F.
"""
from dataclasses import dataclass
from math import comb
import time

import numpy as np

from .aaa import AAAConfig, aaa_fit, lawson_refine
from .domains import split_left_right
from .errors import (ConfigError, DegenerateTau, InvalidGeometry, MethodFailure,
                     NormalizationDrift, UndefinedOutsideSets, ZeroOnF, ZoloError)
from .loewner import DEFAULT_TOL, build_pencil, detect_order, reduce
from .rational import (PolynomialRatio, ZeroPoleGain, mobius_z4_to_z3,
                       to_zero_pole_gain)

METHODS = ("loewner", "aaa", "aaa_lawson")
MAX_EXPANDED_ORDER = 30
# below this the ratio of sampled moduli is re-measured from the factored form
LOG_SPACE_THRESHOLD = 1e-15


def sigma_from_tau(tau):
    tau = np.asarray(tau, dtype=float)
    return (tau / (1 + np.sqrt(1 - tau ** 2))) ** 2


def tau_from_sigma(sigma):
    sigma = np.asarray(sigma, dtype=float)
    return 2 * np.sqrt(sigma) / (1 + sigma)


@dataclass(frozen=True)
class SolvePolicy:
    """Exactly one of `order` / `tol`; neither means tol = 1e-14.

    With a tolerance, AAA methods take the order that the Loewner singular
    values select on the same instance.
    """
    order: int = None
    tol: float = None
    lawson_iterations: int = 200
    damping: float = 0.95
    sign_mode: bool = True

    def __post_init__(self):
        if self.order is not None and self.tol is not None:
            raise ConfigError("give either order or tol, not both")
        if self.order is not None and self.order < 1:
            raise ConfigError("order must be >= 1")
        if self.tol is not None and not 0 < self.tol < 1:
            raise ConfigError("tol must lie in (0, 1)")
        if not 0 < self.damping <= 1:
            raise ConfigError("damping must lie in (0, 1]")
        if self.lawson_iterations < 1:
            raise ConfigError("lawson_iterations must be >= 1")


@dataclass(frozen=True, eq=False)
class ZolotarevSolution:
    h4: object
    h3: object
    tau: float
    sigma: float
    p: float
    method_tag: str
    order: int
    elapsed_seconds: float

    @property
    def degree(self):
        """(numerator, denominator) degree of h4: (r-1, r) for LF, (r, r) for AAA."""
        return self.h4.degree


def sign_of(inst, z, tol=1e-12):
    z = complex(z)
    if len(inst.e_points) and np.min(np.abs(inst.e_points - z)) <= tol:
        return -1
    if len(inst.f_points) and np.min(np.abs(inst.f_points - z)) <= tol:
        return 1
    raise UndefinedOutsideSets(f"{z} is not a sample of E or F")


def _tau(h4, inst):
    with np.errstate(all="ignore"):
        err = np.abs(np.asarray(h4(inst.points)) - inst.signs)
    err[~np.isfinite(err)] = np.inf
    return float(err.max())


def _check_tau(tau):
    if not np.isfinite(tau) or tau >= 1:
        raise DegenerateTau(f"tau = {tau:.6g} >= 1")
    if tau == 0:
        raise DegenerateTau("tau = 0: sigma would vanish")


def z4_to_z3(h4, inst, band=(0.5, np.inf)):
    """Return (h3, p, sigma, tau) for a sign approximation h4.

    The map sends |h4 - 1| <= tau onto |h3| >= 1, so min over F of |h3| below
    1 means the conversion went wrong. Values well above 1 only say that the
    error on F is smaller than tau; pass band=(0.5, 2) to reject those too.
    """
    tau = _tau(h4, inst)
    _check_tau(tau)
    sigma = float(sigma_from_tau(tau))
    p = (1 - sigma) / (1 + sigma)
    h3 = mobius_z4_to_z3(h4, sigma)
    # |h3| on F straight from h4 values: no cancellation there
    v = np.asarray(h4(inst.f_points))
    with np.errstate(divide="ignore", invalid="ignore"):   # p == 1.0 once sigma < eps
        min_f = float(np.min(np.sqrt(sigma) * np.abs(p + v) / np.abs(p - v)))
    if not band[0] <= min_f <= band[1]:
        raise NormalizationDrift(f"min |h3| over F is {min_f:.4g}, outside {band}")
    return h3, p, sigma, tau


def _exact_factors(h):
    if isinstance(h, ZeroPoleGain):
        return h
    if isinstance(h, PolynomialRatio) and h.factors is not None:
        return h.factors
    return None


def measure_log10_sigma(h3, inst):
    """log10 of max_E |h3| / min_F |h3|."""
    zpk = _exact_factors(h3)
    if zpk is None:
        with np.errstate(all="ignore"):
            e = np.abs(np.asarray(h3(inst.e_points)))
            f = np.abs(np.asarray(h3(inst.f_points)))
        if np.min(f) == 0:
            raise ZeroOnF("h3 vanishes on F")
        ratio = np.max(e) / np.min(f)
        if np.isfinite(ratio) and ratio >= LOG_SPACE_THRESHOLD:
            return float(np.log10(ratio)) if ratio > 0 else -np.inf
        zpk = to_zero_pole_gain(h3)
    le = zpk.log_abs(inst.e_points)
    lf = zpk.log_abs(inst.f_points)
    if np.min(lf) == -np.inf:
        raise ZeroOnF("h3 vanishes on F")
    return float(np.max(le) - np.min(lf))


def measure_sigma(h3, inst):
    """max_E |h3| / min_F |h3| over the instance samples."""
    return float(10.0 ** measure_log10_sigma(h3, inst))


def optimal_two_circles(rho, alpha, r):
    """Closed-form optimum for E = circle(-alpha, rho), F = circle(alpha, rho).

    h3(z) = sqrt(sigma) ((z + c)/(z - c))^r with c = sqrt(alpha^2 - rho^2), so
    |h3| = sigma on E and 1 on F; sigma_r = ((alpha - c)/(alpha + c))^r.
    """
    if not (0 < rho < alpha):
        raise InvalidGeometry(f"need 0 < rho < alpha, got rho={rho}, alpha={alpha}")
    if int(r) != r or r < 1:
        raise InvalidGeometry(f"order must be a positive integer, got {r}")
    r = int(r)
    c = np.sqrt(alpha ** 2 - rho ** 2)
    sigma = float(((alpha - c) / (alpha + c)) ** r)
    zpk = ZeroPoleGain(np.full(r, -c), np.full(r, c), np.sqrt(sigma))
    if r > MAX_EXPANDED_ORDER:
        return zpk, sigma
    k = np.arange(r + 1)
    binom = np.array([comb(r, int(j)) for j in k], dtype=float)
    num = np.sqrt(sigma) * binom * c ** k
    den = binom * (-c) ** k
    return PolynomialRatio(num, den, factors=zpk), sigma


def optimal_sign_two_circles(rho, alpha, r):
    """The matching sign approximant h4 = p (u - v)/(u + v), u = (z+c)^r, v = (z-c)^r.

    Returned as a PolynomialRatio with exact factors: zeros -i c cot(pi k / r),
    k = 1..r-1, and poles -i c cot(pi (2k+1) / (2r)), k = 0..r-1.
    """
    _, sigma = optimal_two_circles(rho, alpha, r)
    r = int(r)
    c = np.sqrt(alpha ** 2 - rho ** 2)
    p = (1 - sigma) / (1 + sigma)
    zs = -1j * c / np.tan(np.pi * np.arange(1, r) / r)
    ps = -1j * c / np.tan(np.pi * (2 * np.arange(r) + 1) / (2 * r))
    # cot(pi/2) is 0 only up to rounding
    zs = np.where(np.abs(zs) < 1e-15 * c, 0, zs)
    ps = np.where(np.abs(ps) < 1e-15 * c, 0, ps)
    zpk = ZeroPoleGain(zs, ps, p * r * c)
    if r > MAX_EXPANDED_ORDER:
        return zpk, sigma
    k = np.arange(r + 1)
    binom = np.array([comb(r, int(j)) for j in k], dtype=float)
    u, v = binom * c ** k, binom * (-c) ** k
    return PolynomialRatio(p * (u - v), u + v, factors=zpk), sigma


def extremal_sets(h, inst, sigma, tol):
    """Samples where |h| attains sigma on E (from below) and 1 on F.

    M1 = E samples with |h| >= sigma (1 - tol);
    M2 = F samples with |h| within tol of 1.
    """
    zpk = _exact_factors(h)
    if zpk is not None:
        ae = 10.0 ** zpk.log_abs(inst.e_points)
        af = 10.0 ** zpk.log_abs(inst.f_points)
    else:
        ae = np.abs(np.asarray(h(inst.e_points)))
        af = np.abs(np.asarray(h(inst.f_points)))
    m1 = inst.e_points[ae >= sigma * (1 - tol)]
    m2 = inst.f_points[np.abs(af - 1) <= tol]
    return m1, m2


def _aaa_order(inst, policy):
    if policy.order is not None:
        return policy.order
    return detect_order(build_pencil(split_left_right(inst)), policy.tol or DEFAULT_TOL)


def solve_z4(inst, method, policy=None):
    """Approximate sign on E u F with the chosen method and map the result to Z3."""
    policy = policy or SolvePolicy()
    method = method.replace("-", "_")
    if method not in METHODS:
        raise ConfigError(f"unknown method {method!r}; choose from {METHODS}")
    try:
        if method == "loewner":
            data = split_left_right(inst)
            t0 = time.perf_counter()
            pencil = build_pencil(data)
            if policy.order is not None:
                h4 = reduce(pencil, fixed_order=policy.order)
            else:
                h4 = reduce(pencil, relative_tolerance=policy.tol or DEFAULT_TOL)
            elapsed = time.perf_counter() - t0
        else:
            order = _aaa_order(inst, policy)
            cfg = AAAConfig(max_order=order, convergence_tolerance=0.0,
                            lawson_iterations=policy.lawson_iterations if method == "aaa_lawson" else 0,
                            damping=policy.damping, sign_mode=policy.sign_mode)
            t0 = time.perf_counter()
            h4 = aaa_fit(inst.points, inst.signs, cfg)
            if method == "aaa_lawson":
                h4 = lawson_refine(h4, inst.points, inst.signs, cfg)
            elapsed = time.perf_counter() - t0
    except (ZoloError, np.linalg.LinAlgError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise MethodFailure(method, exc) from exc
    h3, p, sigma, tau = z4_to_z3(h4, inst)
    return ZolotarevSolution(h4, h3, tau, sigma, p, method, h4.order, elapsed)
