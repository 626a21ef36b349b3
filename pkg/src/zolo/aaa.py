"""AAA greedy barycentric fitting and damped Lawson refinement.

Sign mode
---------
For data taking only the values -1 (set E) and +1 (set F) the linearized
least-squares problem of AAA splits into two independent blocks: columns of
E-support points only act on F rows and vice versa. Its minimal singular
vector then puts all weight on one block and the fit collapses to a constant.
With ``sign_mode`` on, the two blocks are solved separately, giving
coefficient vectors x (small on E) and y (small on F), and the approximant is
taken as

    r = (k X - Y) / (k X + Y),    X = C x,  Y = C y,

with the complex scale k chosen to minimize the maximum sample error. Sample
values are also clamped to their sign (+-1) before use.
"""
from dataclasses import dataclass, field
import warnings

import numpy as np
from scipy.optimize import minimize

from .errors import InsufficientSamples, StagnationAtMachinePrecision
from .numerics import min_right_singular_vector
from .rational import BarycentricForm


@dataclass(frozen=True)
class AAAConfig:
    max_order: int = 10
    convergence_tolerance: float = 1e-13
    lawson_iterations: int = 0
    damping: float = 0.95
    sign_mode: bool = False

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")
        if not 0 < self.damping <= 1:
            raise ValueError("damping must lie in (0, 1]")
        if self.convergence_tolerance < 0:
            raise ValueError("convergence_tolerance must be >= 0")
        if self.lawson_iterations < 0:
            raise ValueError("lawson_iterations must be >= 0")


@dataclass
class LawsonState:
    gamma: np.ndarray
    weights: np.ndarray
    residual_history: list = field(default_factory=list)
    best_iteration: int = -1      # -1: the input form was never improved on


def _cauchy(z, lam):
    return 1.0 / (z[:, None] - lam[None, :])


def _reference(values, sign_mode):
    values = np.asarray(values, dtype=complex)
    if sign_mode:
        return np.where(values.real < 0, -1.0, 1.0).astype(complex)
    return values


def _fit_scale(X, Y, ref):
    """Complex k minimizing max |(kX - Y)/(kX + Y) - ref|."""
    on_e = ref.real < 0

    def err(k):
        with np.errstate(all="ignore"):
            e = np.max(np.abs((k * X - Y) / (k * X + Y) - ref))
        return e if np.isfinite(e) else np.inf

    with np.errstate(all="ignore"):
        top = np.max(np.abs(Y[~on_e] / X[~on_e])) if (~on_e).any() else 1.0
        bot = np.max(np.abs(X[on_e] / Y[on_e])) if on_e.any() else 1.0
    mag = np.sqrt(top / bot) if np.isfinite(top / bot) and top > 0 and bot > 0 else 1.0
    phases = np.exp(2j * np.pi * np.arange(16) / 16)
    trial = [err(mag * ph) for ph in phases]
    k0 = mag * phases[int(np.argmin(trial))]
    res = minimize(lambda t: err(np.exp(t[0] + 1j * t[1])),
                   [np.log(abs(k0)), np.angle(k0)], method="Nelder-Mead",
                   options={"xatol": 1e-10, "fatol": 1e-16, "maxiter": 200})
    k = np.exp(res.x[0] + 1j * res.x[1])
    return k if err(k) <= err(k0) else k0


def _interpolatory_weights(C, f, lam_vals, sqrt_gamma, sign_mode):
    """Barycentric weights for fixed support values (rows = non-support samples)."""
    A = sqrt_gamma[:, None] * (f[:, None] * C - C * lam_vals[None, :])
    if not sign_mode:
        return min_right_singular_vector(A)
    on_e = f.real < 0
    sup_e = lam_vals.real < 0
    if sup_e.all() or (~sup_e).all() or on_e.all() or (~on_e).all():
        return min_right_singular_vector(A)
    x = min_right_singular_vector(sqrt_gamma[on_e, None] * C[on_e][:, ~sup_e])
    y = min_right_singular_vector(sqrt_gamma[~on_e, None] * C[~on_e][:, sup_e])
    k = _fit_scale(C[:, ~sup_e] @ x, C[:, sup_e] @ y, f)
    alpha = np.zeros(len(lam_vals), dtype=complex)
    alpha[~sup_e] = k * x
    alpha[sup_e] = y
    return alpha


def _free_coefficients(C, f, sqrt_gamma, sign_mode):
    """Numerator/denominator weights (a, b) of a non-interpolatory fit."""
    m = C.shape[1]
    if sign_mode:
        on_e = f.real < 0
        if on_e.any() and (~on_e).any():
            x = min_right_singular_vector(sqrt_gamma[on_e, None] * C[on_e])
            y = min_right_singular_vector(sqrt_gamma[~on_e, None] * C[~on_e])
            k = _fit_scale(C @ x, C @ y, f)
            return k * x - y, k * x + y
    M = sqrt_gamma[:, None] * np.hstack([f[:, None] * C, -C])
    v = min_right_singular_vector(M)
    return v[m:], v[:m]


def residual_curve(form, points, values):
    """|r(z_j) - f_j| for every sample, in sample order."""
    with np.errstate(all="ignore"):
        err = np.abs(np.asarray(form(np.asarray(points, dtype=complex))) - np.asarray(values))
    err[~np.isfinite(err)] = np.inf
    return err


def aaa_fit(points, values, cfg):
    """Greedy AAA: add the worst sample as support point until converged.

    Ties in the greedy choice go to the lowest sample index. The returned
    form has order l = (number of support points) - 1 <= cfg.max_order.
    """
    z = np.asarray(points, dtype=complex).ravel()
    f_in = np.asarray(values, dtype=complex).ravel()
    if len(z) != len(f_in):
        raise ValueError("points and values must have the same length")
    if len(z) <= cfg.max_order + 1:
        raise InsufficientSamples(f"{len(z)} samples cannot support order {cfg.max_order}")
    if len(np.unique(z)) != len(z):
        raise ValueError("sample points must be distinct")
    f = _reference(f_in, cfg.sign_mode)
    scale = np.max(np.abs(f)) or 1.0
    free = np.ones(len(z), dtype=bool)
    chosen = []
    R = np.full(len(z), np.mean(f))
    prev = np.inf
    form = None
    for _ in range(cfg.max_order + 1):
        err = np.abs(f - R)
        err[~free] = -1.0
        j = int(np.argmax(err))
        chosen.append(j)
        free[j] = False
        lam = z[chosen]
        C = _cauchy(z[free], lam)
        alpha = _interpolatory_weights(C, f[free], f[chosen], np.ones(free.sum()), cfg.sign_mode)
        if not np.any(alpha != 0):
            alpha = np.ones(len(chosen), dtype=complex)
        form = BarycentricForm(lam, f[chosen], alpha)
        with np.errstate(all="ignore"):
            R = np.asarray(form(z))
        R[~np.isfinite(R)] = np.inf
        max_err = float(np.max(np.abs(f - R)))
        if max_err <= cfg.convergence_tolerance * scale:
            break
        if max_err <= 1e-12 * scale and max_err >= prev:
            warnings.warn(f"AAA stagnated at residual {max_err:.2e} with order {form.order}",
                          StagnationAtMachinePrecision, stacklevel=2)
            break
        prev = min(prev, max_err)
    return form


def lawson_refine(form, points, values, cfg, return_state=False):
    """Damped Lawson iteration on the numerator and denominator weights.

    Each step solves the sqrt(gamma)-weighted linearized least-squares problem
    over the non-support samples, measures e_j = |r(z_j) - f_j| and updates
    gamma_j <- gamma_j * e_j**damping (renormalized). Support points are kept;
    the iterate with the smallest maximum residual over all samples is
    returned, counting the input form as iterate -1.
    """
    if cfg.lawson_iterations < 1:
        raise ValueError("lawson_iterations must be >= 1")
    z = np.asarray(points, dtype=complex).ravel()
    f = _reference(values, cfg.sign_mode)
    lam = form.support_points
    free = ~np.isin(z, lam)
    zf, ff = z[free], f[free]
    C = _cauchy(zf, lam)
    gamma = np.full(len(zf), 1.0 / len(zf))
    state = LawsonState(gamma, form.weights.copy())

    best_form = form
    best_err = float(residual_curve(form, z, f).max())
    scale = np.max(np.abs(f)) or 1.0
    if best_err <= 1e-14 * scale:
        return (form, state) if return_state else form

    for it in range(cfg.lawson_iterations):
        a, b = _free_coefficients(C, ff, np.sqrt(gamma), cfg.sign_mode)
        with np.errstate(all="ignore"):
            e = np.abs((C @ a) / (C @ b) - ff)
        if np.all(b != 0) and np.all(np.isfinite(e)):
            cand = BarycentricForm(lam, a / b, b)
            max_err = float(residual_curve(cand, z, f).max())
        else:
            max_err = np.inf
        state.residual_history.append(max_err)
        if max_err < best_err:
            best_err, best_form = max_err, cand
            state.best_iteration = it
        if not np.all(np.isfinite(e)) or not np.any(e > 0):
            break
        gamma = gamma * e ** cfg.damping
        gamma = gamma / gamma.sum()
        state.gamma = gamma
        state.weights = b
    return (best_form, state) if return_state else best_form
