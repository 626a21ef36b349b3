"""Scalar rational functions in four interchangeable representations.

* :class:`BarycentricForm` -- support points, values and weights (AAA output).
* :class:`DescriptorRealization` -- ``gain * (D + C (zE - A)^{-1} B)`` (Loewner output).
* :class:`PolynomialRatio` -- monomial coefficients, monic denominator.
* :class:`ZeroPoleGain` -- factored form, accurate where |r| is tiny.

Every class is callable on scalars or arrays and exposes ``order`` and
``degree``. Conversions, pole/zero extraction and the sign-to-ratio Moebius
map are module-level functions.
"""
from dataclasses import dataclass, field
import warnings

import numpy as np
import scipy.linalg

from .errors import (DegenerateSigma, DivideByZeroWeightSum, IllConditioned,
                     SingularAtPoint)
from .numerics import generalized_eigenvalues

_PROBE_SEED = 20240917
MAX_POLY_ORDER = 64


def _as_points(z):
    return np.asarray(z, dtype=complex)


def _reshape_like(values, z):
    if np.ndim(z) == 0:
        return values.reshape(())[()]
    return values.reshape(np.shape(z))


@dataclass(frozen=True, eq=False)
class BarycentricForm:
    """r(z) = sum(a_k w_k / (z - l_k)) / sum(a_k / (z - l_k))."""
    support_points: np.ndarray
    support_values: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        lam = np.atleast_1d(np.asarray(self.support_points, dtype=complex))
        w = np.atleast_1d(np.asarray(self.support_values, dtype=complex))
        a = np.atleast_1d(np.asarray(self.weights, dtype=complex))
        if not (len(lam) == len(w) == len(a)) or len(lam) == 0:
            raise ValueError("support points, values and weights must have equal nonzero length")
        if len(np.unique(lam)) != len(lam):
            raise ValueError("support points must be distinct")
        if not np.any(a != 0):
            raise ValueError("at least one weight must be nonzero")
        object.__setattr__(self, "support_points", lam)
        object.__setattr__(self, "support_values", w)
        object.__setattr__(self, "weights", a)

    @property
    def order(self):
        return len(self.support_points) - 1

    @property
    def degree(self):
        return (self.order, self.order)

    def __call__(self, z):
        zv = _as_points(z).ravel()
        lam, w, a = self.support_points, self.support_values, self.weights
        if len(lam) == 1:       # the constant w_0, without rounding from num/den
            return _reshape_like(np.full(len(zv), w[0]), z)
        diff = zv[:, None] - lam[None, :]
        hit_row, hit_col = np.nonzero(diff == 0)
        diff[hit_row, hit_col] = 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            C = 1.0 / diff
            C[hit_row, hit_col] = 0.0
            num = C @ (a * w)
            den = C @ a
            out = num / den
        out[hit_row] = w[hit_col]
        return _reshape_like(out, z)


def eval_barycentric(f, z):
    """Evaluate at a single finite point; raises if the denominator vanishes."""
    z = complex(z)
    if not np.isfinite(z):
        raise ValueError("z must be finite")
    hit = np.nonzero(f.support_points == z)[0]
    if len(hit):
        return complex(f.support_values[hit[0]])
    c = f.weights / (z - f.support_points)
    den = c.sum()
    if den == 0:
        raise DivideByZeroWeightSum(f"barycentric denominator vanishes at {z}")
    return complex((c @ f.support_values) / den)


@dataclass(frozen=True, eq=False)
class DescriptorRealization:
    """gain * (D + C (zE - A)^{-1} B) with square E, A of size r."""
    E: np.ndarray
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: complex = 0.0
    gain: complex = 1.0

    def __post_init__(self):
        E = np.atleast_2d(np.asarray(self.E, dtype=complex))
        A = np.atleast_2d(np.asarray(self.A, dtype=complex))
        B = np.asarray(self.B, dtype=complex).ravel()
        C = np.asarray(self.C, dtype=complex).ravel()
        r = A.shape[0]
        if r < 1 or A.shape != (r, r) or E.shape != (r, r) or len(B) != r or len(C) != r:
            raise ValueError(f"inconsistent realization blocks: E{E.shape} A{A.shape} "
                             f"B{B.shape} C{C.shape}")
        object.__setattr__(self, "E", E)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "D", complex(self.D))
        object.__setattr__(self, "gain", complex(self.gain))

    @property
    def order(self):
        return self.A.shape[0]

    @property
    def degree(self):
        r = self.order
        return (r, r) if self.D != 0 else (r - 1, r)

    def is_regular(self, seed=_PROBE_SEED):
        rng = np.random.default_rng(seed)
        z0 = complex(*rng.standard_normal(2))
        return abs(np.linalg.det(z0 * self.E - self.A)) > 0

    def __call__(self, z, chunk=2048):
        zv = _as_points(z).ravel()
        out = np.empty(len(zv), dtype=complex)
        E, A, B, C = self.E, self.A, self.B, self.C
        for start in range(0, len(zv), chunk):
            zc = zv[start:start + chunk]
            M = zc[:, None, None] * E[None] - A[None]
            try:
                X = np.linalg.solve(M, np.broadcast_to(B[:, None], (len(zc), len(B), 1)))
                out[start:start + chunk] = X[:, :, 0] @ C
            except np.linalg.LinAlgError:
                for i, zi in enumerate(zc):
                    try:
                        out[start + i] = C @ np.linalg.solve(zi * E - A, B)
                    except np.linalg.LinAlgError:
                        out[start + i] = complex(np.inf, 0.0)
        out = self.gain * (self.D + out)
        return _reshape_like(out, z)


def eval_descriptor(R, z):
    """Evaluate a realization at one point; raises at a pole."""
    z = complex(z)
    if not np.isfinite(z):
        raise ValueError("z must be finite")
    M = z * R.E - R.A
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            lu = scipy.linalg.lu_factor(M, check_finite=False)
    except (ValueError, np.linalg.LinAlgError) as exc:
        raise SingularAtPoint(str(exc)) from exc
    piv = np.abs(np.diag(lu[0]))
    if piv.min() <= np.finfo(float).eps * max(piv.max(), 1e-300) * 0.5:
        raise SingularAtPoint(f"pencil singular at z={z}")
    x = scipy.linalg.lu_solve(lu, R.B, check_finite=False)
    return complex(R.gain * (R.D + R.C @ x))


@dataclass(frozen=True, eq=False)
class PolynomialRatio:
    """num(z)/den(z), coefficients in descending degree, den monic.

    ``factors`` optionally carries the same function as a ZeroPoleGain; when
    present it is used for evaluation and for poles/zeros, since expanded
    coefficients of clustered roots lose most of their digits.
    """
    numerator: np.ndarray
    denominator: np.ndarray
    factors: "ZeroPoleGain" = None

    def __post_init__(self):
        num = np.atleast_1d(np.asarray(self.numerator, dtype=complex))
        den = np.atleast_1d(np.asarray(self.denominator, dtype=complex))
        den = np.trim_zeros(den, "f")
        if len(den) == 0:
            raise ValueError("denominator must be nonzero")
        num = num / den[0]
        den = den / den[0]
        nz = np.flatnonzero(num)
        num = num[nz[0]:] if len(nz) else np.zeros(1, dtype=complex)
        if len(num) > len(den):
            raise ValueError("numerator degree exceeds denominator degree")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def order(self):
        return len(self.denominator) - 1

    @property
    def degree(self):
        return (len(self.numerator) - 1, self.order)

    def padded_numerator(self):
        """Numerator coefficients padded to the denominator's length."""
        out = np.zeros(len(self.denominator), dtype=complex)
        out[len(out) - len(self.numerator):] = self.numerator
        return out

    def __call__(self, z):
        if self.factors is not None:
            return self.factors(z)
        zv = _as_points(z)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.polyval(self.numerator, zv) / np.polyval(self.denominator, zv)


@dataclass(frozen=True, eq=False)
class ZeroPoleGain:
    """gain * prod(z - zeros) / prod(z - poles)."""
    zeros: np.ndarray
    poles: np.ndarray
    gain: complex = 1.0

    def __post_init__(self):
        object.__setattr__(self, "zeros", np.atleast_1d(np.asarray(self.zeros, dtype=complex)))
        object.__setattr__(self, "poles", np.atleast_1d(np.asarray(self.poles, dtype=complex)))
        object.__setattr__(self, "gain", complex(self.gain))

    @property
    def order(self):
        return max(len(self.zeros), len(self.poles))

    @property
    def degree(self):
        return (len(self.zeros), len(self.poles))

    def log_abs(self, z):
        """log10 |r(z)|, robust for values far below the double range."""
        zv = _as_points(z)[..., None]
        with np.errstate(divide="ignore"):
            num = np.log10(np.abs(zv - self.zeros)).sum(axis=-1)
            den = np.log10(np.abs(zv - self.poles)).sum(axis=-1)
            return np.log10(abs(self.gain)) + num - den

    def __call__(self, z):
        zv = _as_points(z)[..., None]
        nz, npl = len(self.zeros), len(self.poles)
        m = min(nz, npl)
        with np.errstate(divide="ignore", invalid="ignore"):
            # pair zeros with poles so that intermediate products stay O(1)
            out = np.prod((zv - self.zeros[:m]) / (zv - self.poles[:m]), axis=-1)
            out = out * np.prod(zv - self.zeros[m:], axis=-1)
            out = out / np.prod(zv - self.poles[m:], axis=-1)
        return self.gain * out


# ---------------------------------------------------------------- conversions

def barycentric_to_descriptor(f):
    """Realization of dimension l+1 whose finite pencil eigenvalues are the poles.

    Row 0 enforces sum(a_k x_k) = 1; rows k >= 1 enforce
    (z - l_0) x_0 = (z - l_k) x_k, so that x_k = 1 / ((z - l_k) D(z)).
    """
    lam, w, a = f.support_points, f.support_values, f.weights
    n = len(lam)
    E = np.zeros((n, n), dtype=complex)
    A = np.zeros((n, n), dtype=complex)
    A[0] = -a
    for k in range(1, n):
        E[k, 0], E[k, k] = 1.0, -1.0
        A[k, 0], A[k, k] = lam[0], -lam[k]
    B = np.zeros(n, dtype=complex)
    B[0] = 1.0
    return DescriptorRealization(E, A, B, a * w)


def polynomial_to_descriptor(R):
    """Controllable companion realization of a PolynomialRatio."""
    den = R.denominator
    n = len(den) - 1
    num = R.padded_numerator()
    if n == 0:
        # E = 0: a regular 1x1 pencil whose only eigenvalue is infinite
        return DescriptorRealization(np.zeros((1, 1)), -np.eye(1), np.zeros(1), np.zeros(1), D=num[0])
    d = num[0]
    rem = num - d * den              # degree < n
    c_ascending = rem[1:][::-1]
    A = np.zeros((n, n), dtype=complex)
    A[:-1, 1:] = np.eye(n - 1)
    A[-1] = -den[1:][::-1]
    B = np.zeros(n, dtype=complex)
    B[-1] = 1.0
    return DescriptorRealization(np.eye(n), A, B, c_ascending, D=d)


def _series(first, second):
    """Realization of second(first(.)) for scalar systems (gain 1)."""
    n1, n2 = first.order, second.order
    E = scipy.linalg.block_diag(first.E, second.E)
    A = np.zeros((n1 + n2, n1 + n2), dtype=complex)
    A[:n1, :n1] = first.A
    A[n1:, n1:] = second.A
    A[n1:, :n1] = np.outer(second.B, first.C)
    B = np.concatenate([first.B, second.B * first.D])
    C = np.concatenate([second.D * first.C, second.C])
    return DescriptorRealization(E, A, B, C, D=second.D * first.D)


def zpk_to_descriptor(R):
    """Cascade of first-order sections; avoids expanding into monomials."""
    zs, ps = R.zeros, R.poles
    if len(zs) > len(ps):
        raise ValueError("improper zero-pole-gain form has no descriptor realization")
    if len(ps) == 0:
        return DescriptorRealization(np.zeros((1, 1)), -np.eye(1), np.zeros(1), np.zeros(1), D=1.0,
                                     gain=R.gain)
    sections = []
    for i, p in enumerate(ps):
        if i < len(zs):
            sections.append(DescriptorRealization([[1.0]], [[p]], [1.0], [p - zs[i]], D=1.0))
        else:
            sections.append(DescriptorRealization([[1.0]], [[p]], [1.0], [1.0], D=0.0))
    out = sections[0]
    for s in sections[1:]:
        out = _series(out, s)
    return DescriptorRealization(out.E, out.A, out.B, out.C, D=out.D, gain=R.gain)


def to_descriptor(R):
    if isinstance(R, DescriptorRealization):
        return R
    if isinstance(R, BarycentricForm):
        return barycentric_to_descriptor(R)
    if isinstance(R, PolynomialRatio):
        if R.factors is not None:
            return zpk_to_descriptor(R.factors)
        return polynomial_to_descriptor(R)
    if isinstance(R, ZeroPoleGain):
        return zpk_to_descriptor(R)
    raise TypeError(f"not a rational function: {type(R).__name__}")


def _finite_sorted(values):
    return np.sort_complex(values[np.isfinite(values)])


def poles(R):
    """Finite poles sorted by (real, imag)."""
    if isinstance(R, PolynomialRatio):
        if R.factors is not None:
            return np.sort_complex(R.factors.poles)
        return np.sort_complex(np.roots(R.denominator).astype(complex))
    if isinstance(R, ZeroPoleGain):
        return np.sort_complex(R.poles)
    R = to_descriptor(R)
    return _finite_sorted(generalized_eigenvalues(R.A, R.E))


def zeros(R):
    """Finite zeros from the augmented pencil ([A B; C D], blkdiag(E, 0))."""
    if isinstance(R, PolynomialRatio):
        if R.factors is not None:
            return zeros(R.factors)
        return np.sort_complex(np.roots(R.numerator).astype(complex))
    if isinstance(R, ZeroPoleGain):
        return np.sort_complex(R.zeros) if R.gain != 0 else np.zeros(0, dtype=complex)
    R = to_descriptor(R)
    if R.gain == 0:
        return np.zeros(0, dtype=complex)
    r = R.order
    M = np.zeros((r + 1, r + 1), dtype=complex)
    M[:r, :r] = R.A
    M[:r, r] = R.B
    M[r, :r] = R.C
    M[r, r] = R.D
    N = np.zeros_like(M)
    N[:r, :r] = R.E
    return _finite_sorted(generalized_eigenvalues(M, N))


def _reference_points(roots, count=8):
    scale = max(1.0, float(np.max(np.abs(roots)))) if len(roots) else 1.0
    return 2.0 * scale * np.exp(2j * np.pi * (np.arange(count) + 0.5) / count)


def to_zero_pole_gain(R):
    """Factored form; the gain is fitted on a circle enclosing all roots."""
    if isinstance(R, ZeroPoleGain):
        return R
    if isinstance(R, PolynomialRatio) and R.factors is not None:
        return R.factors
    zs, ps = zeros(R), poles(R)
    ref = _reference_points(np.concatenate([zs, ps]))
    vals = np.asarray(R(ref))
    base = ZeroPoleGain(zs, ps, 1.0)(ref)
    gain = np.median((vals / base).real) + 1j * np.median((vals / base).imag)
    return ZeroPoleGain(zs, ps, gain)


def _poly_from_terms(points, coeffs):
    """sum_k c_k prod_{j != k} (z - p_j) in descending monomial coefficients."""
    n = len(points)
    out = np.zeros(n, dtype=complex)
    for k in range(n):
        out += coeffs[k] * np.poly(np.delete(points, k)) if n > 1 else coeffs[k]
    return out


def _circle_radius(ps, scale):
    candidates = scale * np.array([1.0, 1.1, 0.9, 1.2, 0.8, 1.3, 0.7, 1.5])
    if len(ps) == 0:
        return candidates[0]
    gaps = [np.min(np.abs(np.abs(ps) - c)) for c in candidates]
    return candidates[int(np.argmax(gaps))]


def to_polynomial_ratio(R, rtol=1e-8):
    """Monic-denominator monomial coefficients, verified on seeded probes."""
    if isinstance(R, PolynomialRatio):
        return R
    if R.order > MAX_POLY_ORDER:
        raise IllConditioned(f"order {R.order} exceeds monomial limit {MAX_POLY_ORDER}")
    if isinstance(R, BarycentricForm):
        lam, w, a = R.support_points, R.support_values, R.weights
        out = PolynomialRatio(_poly_from_terms(lam, a * w), _poly_from_terms(lam, a))
    elif isinstance(R, ZeroPoleGain):
        out = PolynomialRatio(R.gain * np.poly(R.zeros), np.poly(R.poles))
    else:
        ps = poles(R)
        den = np.poly(ps) if len(ps) else np.ones(1, dtype=complex)
        m = len(den)
        scale = max(1.0, float(np.median(np.abs(ps)))) if len(ps) else 1.0
        rho = _circle_radius(ps, scale)
        nodes = rho * np.exp(2j * np.pi * np.arange(m) / m)
        samples = np.asarray(R(nodes)) * np.polyval(den, nodes)
        # samples[j] = sum_k c_k rho^k w^{jk}, w = exp(2 pi i / m)
        c_asc = np.fft.fft(samples) / m / rho ** np.arange(m)
        out = PolynomialRatio(c_asc[::-1], den)
    _check_probes(R, out, rtol)
    return out


def _check_probes(R, P, rtol):
    rng = np.random.default_rng(_PROBE_SEED)
    count = 4 * max(R.order, 1)
    ps = poles(P)
    # poles pushed out towards infinity would put every probe next to them
    scale = float(np.clip(np.median(np.abs(ps)), 1.0, 1e3)) if len(ps) else 1.0
    z = scale * np.sqrt(rng.uniform(0, 4, count)) * np.exp(2j * np.pi * rng.uniform(0, 1, count))
    ref = np.asarray(R(z))
    got = P(z)
    ok = np.isfinite(ref) & np.isfinite(got)
    err = np.abs(got[ok] - ref[ok]) / (1 + np.abs(ref[ok]))
    if not ok.any() or err.max() > rtol:
        worst = err.max() if ok.any() else np.inf
        raise IllConditioned(f"monomial form misses probes by {worst:.2e} (order {R.order})")


# ---------------------------------------------------------------- Moebius maps

def _linear_fractional(R, a, b, c, e):
    """Realization of (a + b R)/(c + e R)."""
    R = to_descriptor(R)
    C = R.gain * R.C
    d = R.gain * R.D
    if e == 0:
        return DescriptorRealization(R.E, R.A, R.B, b * C / c, D=(a + b * d) / c)
    delta = c + e * d
    if delta == 0:
        raise DegenerateSigma("linear fractional map is singular at infinity")
    k = a - b * c / e
    A2 = R.A - np.outer(R.B, e * C / delta)
    return DescriptorRealization(R.E, A2, R.B, -(k * e / delta ** 2) * C, D=b / e + k / delta)


def _check_sigma(sigma):
    if not (0 < sigma <= 1) or not np.isfinite(sigma):
        raise DegenerateSigma(f"sigma must lie in (0, 1], got {sigma}")


def mobius_z4_to_z3(h4, sigma):
    """r(z) = sqrt(sigma) (p + h4(z)) / (p - h4(z)) with p = (1-sigma)/(1+sigma).

    The sqrt(sigma) factor is kept in ``gain`` so the pencil stays O(1).
    """
    _check_sigma(sigma)
    p = (1 - sigma) / (1 + sigma)
    T = _linear_fractional(h4, p, 1.0, p, -1.0)
    return DescriptorRealization(T.E, T.A, T.B, T.C, D=T.D, gain=np.sqrt(sigma))


def mobius_z3_to_z4(h3, sigma):
    """Inverse map: h4(z) = p (r(z) - sqrt(sigma)) / (r(z) + sqrt(sigma))."""
    _check_sigma(sigma)
    p = (1 - sigma) / (1 + sigma)
    R = to_descriptor(h3)
    G = DescriptorRealization(R.E, R.A, R.B, R.C, D=R.D, gain=R.gain / np.sqrt(sigma))
    return _linear_fractional(G, -p, p, 1.0, 1.0)
