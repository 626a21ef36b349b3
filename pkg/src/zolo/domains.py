"""Catalog of two-set sign problems: boundary samples of E (label -1) and F (+1).

Only '1a' (two circles) has geometry fixed by the literature; every other
topology uses the constants written out below. Closed curves are sampled at
``t = k/n`` for ``k = 0..n-1``. Curves symmetric about the real axis are
generated on the upper half and mirrored, so point ``k`` and point ``n-k`` are
exact conjugates.
"""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidGeometry, TooFewPoints, UnknownExample

DEFAULT_N = 512


@dataclass(frozen=True, eq=False)
class SignProblemInstance:
    name: str
    e_points: np.ndarray
    f_points: np.ndarray
    conjugate_symmetric: bool
    bounding_box: tuple

    @property
    def points(self):
        return np.concatenate([self.e_points, self.f_points])

    @property
    def signs(self):
        return np.concatenate([-np.ones(len(self.e_points)), np.ones(len(self.f_points))])

    def to_json(self):
        return {
            "name": self.name,
            "e_points": [[float(z.real), float(z.imag)] for z in self.e_points],
            "f_points": [[float(z.real), float(z.imag)] for z in self.f_points],
        }


@dataclass(frozen=True, eq=False)
class PartitionedData:
    right_points: np.ndarray   # lambda_i
    right_values: np.ndarray   # w_i
    left_points: np.ndarray    # mu_j
    left_values: np.ndarray    # v_j

    @property
    def points(self):
        return np.concatenate([self.right_points, self.left_points])

    @property
    def values(self):
        return np.concatenate([self.right_values, self.left_values])


def _box(points, pad=0.15):
    re, im = points.real, points.imag
    w = max(re.max() - re.min(), im.max() - im.min(), 1e-3)
    return (float(re.min() - pad * w), float(re.max() + pad * w),
            float(im.min() - pad * w), float(im.max() + pad * w))


def _instance(name, e, f, symmetric):
    e = np.asarray(e, dtype=complex)
    f = np.asarray(f, dtype=complex)
    if np.min(np.abs(e[:, None] - f[None, :])) <= 1e-14:
        raise InvalidGeometry(f"{name}: E and F share a point")
    return SignProblemInstance(name, e, f, symmetric, _box(np.concatenate([e, f])))


def _mirrored(curve, n):
    """Sample a real-axis-symmetric closed curve so that z[n-k] = conj(z[k])."""
    k = np.arange(n // 2 + 1)
    upper = np.asarray(curve(k / n), dtype=complex)
    upper[0] = upper[0].real
    out = np.empty(n, dtype=complex)
    out[: len(upper)] = upper
    if n % 2 == 0:
        out[n // 2] = upper[n // 2].real
    rest = np.arange(len(upper), n)
    out[rest] = np.conj(out[n - rest])
    return out


def _circle(center, radius):
    return lambda t: center + radius * np.exp(2j * np.pi * t)


def _polygon(vertices):
    """Closed polygon traversed at unit speed; t in [0, 1)."""
    v = np.asarray(vertices, dtype=complex)
    seg = np.roll(v, -1) - v
    lengths = np.abs(seg)
    cum = np.concatenate([[0.0], np.cumsum(lengths)])

    def curve(t):
        s = np.asarray(t) * cum[-1]
        i = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(v) - 1)
        return v[i] + seg[i] * ((s - cum[i]) / lengths[i])
    return curve


def _interval(a, b, n):
    """Chebyshev-clustered samples of [a, b] (endpoints included)."""
    x = np.cos(np.pi * np.arange(n)[::-1] / (n - 1))
    return (a + b) / 2 + (b - a) / 2 * x + 0j


def _uniform(curve, n):
    return np.asarray(curve(np.arange(n) / n), dtype=complex)


def two_circles(rho, alpha, n_per_set=DEFAULT_N, name="1a"):
    """E: circle radius rho at -alpha; F: circle radius rho at +alpha."""
    if not (0 < rho < alpha):
        raise InvalidGeometry(f"need 0 < rho < alpha, got rho={rho}, alpha={alpha}")
    if n_per_set < 4:
        raise TooFewPoints("n_per_set must be at least 4")
    e = _mirrored(_circle(-alpha, rho), n_per_set)
    f = _mirrored(_circle(alpha, rho), n_per_set)
    return _instance(name, e, f, True)


# --- catalog ---------------------------------------------------------------

def _ex_1b(n):
    # classical sign function on [-1, -a] U [a, 1]
    a = 0.35    # Loewner order 18 at tolerance 1e-14 with 512 points per set
    return _interval(-1, -a, n), _interval(a, 1, n), True


def _ex_1c(n):
    e = _uniform(_circle(-1.0 + 0.2j, 0.5), n)
    ellipse = lambda t: 1.1 - 0.3j + (0.7 * np.cos(2 * np.pi * t) + 0.3j * np.sin(2 * np.pi * t)) * np.exp(0.5j)
    return e, _uniform(ellipse, n), False


def _yin(t, gap=0.25):
    """Upper yin half of the unit disk, shifted up by `gap`; t in [0, 1)."""
    t = np.asarray(t)
    out = np.empty(t.shape, dtype=complex)
    a = t < 0.5                       # outer arc from 1 to -1 through i
    out[a] = np.exp(1j * np.pi * (t[a] / 0.5))
    b = (t >= 0.5) & (t < 0.75)       # -1 -> 0 dipping below the axis
    s = (t[b] - 0.5) / 0.25
    out[b] = -0.5 + 0.5 * np.exp(1j * np.pi * (1 + s))
    c = t >= 0.75                     # 0 -> 1 bulging above the axis
    s = (t[c] - 0.75) / 0.25
    out[c] = 0.5 + 0.5 * np.exp(1j * np.pi * (1 - s))
    return out + 1j * gap


def _ex_1d(n):
    e = _uniform(_yin, n)
    return e, -e, False


def _ex_2a(n):
    ellipse = lambda t: 1.3 + 0.8 * np.cos(2 * np.pi * t) + 0.4j * np.sin(2 * np.pi * t)
    return _mirrored(_circle(-1.0, 0.5), n), _mirrored(ellipse, n), True


def _ex_2b(n):
    m = n // 2
    e = np.concatenate([_interval(-1, -0.6, m), _interval(0.6, 1, n - m)])
    return e, _interval(-0.4, 0.4, n), True


def _ex_2c(n):
    square = _polygon([-0.8 + 0.7j, -1.6 + 0.7j, -1.6 - 0.1j, -0.8 - 0.1j])
    return _uniform(square, n), _uniform(_circle(0.9 - 0.3j, 0.6), n), False


def _ex_2d(n):
    ellipse = lambda t: -1.0 + 0.3j + (0.3 * np.cos(2 * np.pi * t) + 0.8j * np.sin(2 * np.pi * t)) * np.exp(-0.4j)
    triangle = _polygon([0.4 - 0.2j, 1.6 - 0.6j, 1.2 + 0.8j])
    return _uniform(ellipse, n), _uniform(triangle, n), False


def _ex_3a(n):
    return _mirrored(_circle(0.0, 0.5), n), _mirrored(_circle(0.0, 1.5), n), True


def _ex_3b(n):
    return _uniform(_circle(0.3 + 0.2j, 0.4), n), _uniform(_circle(0.0, 1.5), n), False


def _ex_3c(n):
    square = _polygon([0.4 + 0.4j, -0.4 + 0.4j, -0.4 - 0.4j, 0.4 - 0.4j])
    return _uniform(lambda t: square(t) + 0.1, n), _uniform(_circle(0.0, 1.4), n), False


def _ex_3d(n):
    segment = lambda t: -0.6 + 0.3j + 1.2 * np.asarray(t) * np.exp(-0.3j)
    return segment(np.linspace(0, 1, n)), _uniform(_circle(0.0, 1.5), n), False


def _ex_7(n):
    h = 0.5
    left = _polygon([-0.5 + 0j, -0.5 + 1j * h, -2 + 1j * h, -2 - 1j * h, -0.5 - 1j * h])
    right = _polygon([2 + 0j, 2 + 1j * h, 0.5 + 1j * h, 0.5 - 1j * h, 2 - 1j * h])
    return _mirrored(left, n), _mirrored(right, n), True


def _ex_spiral1(n):
    t = np.linspace(0.0, 1.0, n)
    theta = 0.5 + 3 * np.pi * t
    e = 0.15 * theta * np.exp(1j * theta)
    return e, -e, False


def _ex_pm2(n):
    # Pac-Man: disk radius 0.6 at -1 with a 60-degree wedge opening to the right
    c, r, half = -1.0, 0.6, np.pi / 6

    def pacman(t):
        t = np.asarray(t)
        arc_len = r * (2 * np.pi - 2 * half)
        total = arc_len + 2 * r
        s = t * total
        out = np.empty(t.shape, dtype=complex)
        a = s < r                                  # mouth corner -> upper lip
        out[a] = c + s[a] * np.exp(1j * half)
        b = (s >= r) & (s < r + arc_len)
        ang = half + (s[b] - r) / r
        out[b] = c + r * np.exp(1j * ang)
        d = s >= r + arc_len                       # lower lip -> mouth corner
        out[d] = c + (total - s[d]) * np.exp(-1j * half)
        return out

    e = _mirrored(pacman, n)
    f = _mirrored(_circle(0.8, 0.25), n)
    return e, f, True


CATALOG = {
    "1a": None,
    "1b": _ex_1b,
    "1c": _ex_1c,
    "1d": _ex_1d,
    "2a": _ex_2a,
    "2b": _ex_2b,
    "2c": _ex_2c,
    "2d": _ex_2d,
    "3a": _ex_3a,
    "3b": _ex_3b,
    "3c": _ex_3c,
    "3d": _ex_3d,
    "7": _ex_7,
    "spiral1": _ex_spiral1,
    "pm2": _ex_pm2,
}


def make_example(name, n_per_set=DEFAULT_N):
    """Deterministic samples of the named topology (see CATALOG)."""
    if name not in CATALOG:
        raise UnknownExample(f"unknown example {name!r}; choose from {sorted(CATALOG)}")
    if n_per_set < 8:
        raise TooFewPoints("n_per_set must be at least 8")
    if name == "1a":
        return two_circles(0.5, 1.0, n_per_set)
    e, f, symmetric = CATALOG[name](n_per_set)
    return _instance(name, e, f, symmetric)


def split_left_right(inst):
    """Alternating split within E and within F: even indices right, odd left."""
    e, f = inst.e_points, inst.f_points
    if len(e) + len(f) < 4 or len(e) < 2 or len(f) < 2:
        raise TooFewPoints("need at least two points in each of E and F")
    la = np.concatenate([e[0::2], f[0::2]])
    w = np.concatenate([-np.ones(len(e[0::2])), np.ones(len(f[0::2]))])
    mu = np.concatenate([e[1::2], f[1::2]])
    v = np.concatenate([-np.ones(len(e[1::2])), np.ones(len(f[1::2]))])
    return PartitionedData(la, w.astype(complex), mu, v.astype(complex))


def is_conjugate_closed(points, tol=1e-14):
    """Every point has its conjugate in the set (within `tol`)."""
    pts = np.asarray(points, dtype=complex)
    d = np.abs(np.conj(pts)[:, None] - pts[None, :])
    return bool(np.all(d.min(axis=1) <= tol))
