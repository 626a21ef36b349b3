"""Loewner framework: pencil assembly, order detection and SVD projection."""
from dataclasses import dataclass

import numpy as np

from .errors import CoincidentPoints, RankDeficientPencil
from .numerics import svd_truncate
from .rational import DescriptorRealization

DEFAULT_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class LoewnerPencil:
    L: np.ndarray        # (k, q)
    Ls: np.ndarray       # (k, q)
    V: np.ndarray        # (k,)
    W: np.ndarray        # (q,)
    left_points: np.ndarray
    right_points: np.ndarray
    real: bool = False   # matrices were rotated to real form

    @property
    def shape(self):
        return self.L.shape


def _conjugate_pairing(points, values, tol=1e-12):
    """Index j with (z_j, f_j) = conj(z_i, f_i) for every i, or None."""
    d = np.abs(points[:, None] - np.conj(points)[None, :])
    j = np.argmin(d, axis=1)
    scale = 1 + np.abs(points)
    ok = (d[np.arange(len(points)), j] <= tol * scale) & (j[j] == np.arange(len(points)))
    ok &= np.abs(values[j] - np.conj(values)) <= tol * (1 + np.abs(values))
    return j if ok.all() else None


def _real_basis(pairing):
    """Unitary T with conj(T) = P T for the pair-swapping permutation P."""
    n = len(pairing)
    T = np.zeros((n, n), dtype=complex)
    col = 0
    for i, j in enumerate(pairing):
        if j == i:
            T[i, col] = 1.0
            col += 1
        elif i < j:
            T[i, col], T[j, col] = 1 / np.sqrt(2), 1 / np.sqrt(2)
            T[i, col + 1], T[j, col + 1] = 1j / np.sqrt(2), -1j / np.sqrt(2)
            col += 2
    return T


def build_pencil(data, real="auto"):
    """L[j, i] = (v_j - w_i)/(mu_j - l_i), Ls[j, i] = (mu_j v_j - w_i l_i)/(mu_j - l_i).

    When both the left and the right data are closed under conjugation (and
    real="auto" or True), the pencil is rotated by unitary T_l, T_r into real
    matrices T_l* L T_r, T_l* Ls T_r, T_l* V, W T_r. The interpolant is the
    same; rounding then respects the symmetry, so poles and zeros come out in
    exact conjugate pairs.
    """
    la = np.asarray(data.right_points, dtype=complex)
    w = np.asarray(data.right_values, dtype=complex)
    mu = np.asarray(data.left_points, dtype=complex)
    v = np.asarray(data.left_values, dtype=complex)
    D = mu[:, None] - la[None, :]
    if np.any(D == 0):
        j, i = np.argwhere(D == 0)[0]
        raise CoincidentPoints(f"left point {j} equals right point {i}: {mu[j]}")
    L = (v[:, None] - w[None, :]) / D
    Ls = ((mu * v)[:, None] - (la * w)[None, :]) / D
    if real is False:
        return LoewnerPencil(L, Ls, v, w, mu, la)
    pr, pl = _conjugate_pairing(la, w), _conjugate_pairing(mu, v)
    if pr is None or pl is None:
        if real is True:
            raise ValueError("data are not closed under conjugation")
        return LoewnerPencil(L, Ls, v, w, mu, la)
    Tr, Tl = _real_basis(pr), _real_basis(pl)
    Th = Tl.conj().T
    return LoewnerPencil((Th @ L @ Tr).real, (Th @ Ls @ Tr).real, (Th @ v).real,
                         (w @ Tr).real, mu, la, real=True)


def normalized_singular_values(pencil):
    """Singular values of [L, Ls] divided by the largest one."""
    s = np.linalg.svd(np.hstack([pencil.L, pencil.Ls]), compute_uv=False)
    return s / s[0]


def detect_order(pencil, tol=DEFAULT_TOL):
    """Number of normalized singular values of [L, Ls] at or above `tol`."""
    return svd_truncate(np.hstack([pencil.L, pencil.Ls]), relative_tolerance=tol).effective_rank


def reduce(pencil, relative_tolerance=None, fixed_order=None):
    """Project onto the dominant singular subspaces of the pencil.

    X comes from the row-concatenated [L, Ls] and Y from the column-stacked
    [L; Ls]. Returns E = -X* L Y, A = -X* Ls Y, B = X* V, C = W Y.
    """
    if relative_tolerance is None and fixed_order is None:
        relative_tolerance = DEFAULT_TOL
    row = svd_truncate(np.hstack([pencil.L, pencil.Ls]),
                       relative_tolerance=relative_tolerance, fixed_rank=fixed_order)
    r = row.effective_rank
    s = row.all_singular_values
    numerical_rank = int(np.count_nonzero(s > s[0] * np.finfo(float).eps))
    if fixed_order is not None and fixed_order > numerical_rank:
        raise RankDeficientPencil(f"order {fixed_order} exceeds numerical rank {numerical_rank}")
    col = svd_truncate(np.vstack([pencil.L, pencil.Ls]), fixed_rank=r)
    X = row.left_vectors
    Y = col.right_vectors
    Xh = X.conj().T
    return DescriptorRealization(E=-Xh @ pencil.L @ Y, A=-Xh @ pencil.Ls @ Y,
                                 B=Xh @ pencil.V, C=pencil.W @ Y)


def interpolation_residual(R, data):
    """max |R(z) - value| over all left and right data points."""
    with np.errstate(all="ignore"):
        vals = np.asarray(R(data.points))
    err = np.abs(vals - data.values)
    err[~np.isfinite(err)] = np.inf
    return float(err.max())
