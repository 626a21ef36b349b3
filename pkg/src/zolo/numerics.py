"""Dense linear-algebra kernels: truncated SVD, pencil eigenvalues and the
minimum right singular vector.

All routines are thin, validated wrappers around LAPACK (via scipy) and are
deterministic for a given input.
"""
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (ConvergenceFailure, DimensionMismatch, EmptyMatrix,
                     NonFiniteEntry, RankOutOfRange)

#: |beta| below this multiple of ||E|| marks an infinite eigenvalue.
INFINITE_EIG_TOL = 1e-14


def as_matrix(M, name="M"):
    """Return `M` as a 2-D array after checking shape and finiteness.

    Real input (or complex input with zero imaginary part) comes back as
    float64 so that LAPACK runs in real arithmetic; anything else as complex.
    """
    M = np.asarray(M)
    if M.ndim == 1:
        M = M[None, :]
    if M.ndim != 2 or M.size == 0:
        raise EmptyMatrix(f"{name} must be a nonempty 2-D matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise NonFiniteEntry(f"{name} contains NaN or Inf")
    if np.iscomplexobj(M):
        return M.real.astype(float) if not np.any(M.imag) else M.astype(complex, copy=False)
    return M.astype(float, copy=False)


@dataclass(frozen=True)
class TruncatedSVD:
    left_vectors: np.ndarray      # (k, r)
    singular_values: np.ndarray   # (r,), descending
    right_vectors: np.ndarray     # (q, r)
    all_singular_values: np.ndarray

    @property
    def effective_rank(self):
        return len(self.singular_values)

    def reconstruct(self):
        return (self.left_vectors * self.singular_values) @ self.right_vectors.conj().T


def svd_truncate(M, relative_tolerance=None, fixed_rank=None):
    """Truncated SVD of `M`.

    Exactly one of `relative_tolerance` or `fixed_rank` must be given. With a
    tolerance, the retained rank is the number of singular values with
    ``s_i / s_1 >= relative_tolerance``.
    """
    M = as_matrix(M)
    if (relative_tolerance is None) == (fixed_rank is None):
        raise ValueError("give exactly one of relative_tolerance or fixed_rank")
    U, s, Vh = scipy.linalg.svd(M, full_matrices=False, lapack_driver="gesdd")
    nmax = len(s)
    if fixed_rank is not None:
        r = int(fixed_rank)
        if not 1 <= r <= nmax:
            raise RankOutOfRange(f"rank {r} outside [1, {nmax}]")
    else:
        if not 0 < relative_tolerance < 1:
            raise ValueError("relative_tolerance must lie in (0, 1)")
        if s[0] == 0:
            r = 1
        else:
            r = max(1, int(np.count_nonzero(s / s[0] >= relative_tolerance)))
    return TruncatedSVD(U[:, :r], s[:r], Vh[:r].conj().T, s)


def generalized_eigenvalues(A, E):
    """Eigenvalues of the pencil (A, E), i.e. z with det(A - zE) = 0.

    Infinite eigenvalues (|beta| < 1e-14 ||E||) are returned as ``inf``
    so that callers can drop them with ``np.isfinite``.
    """
    A = as_matrix(A, "A")
    E = as_matrix(E, "E")
    n = A.shape[0]
    if A.shape != (n, n) or E.shape != (n, n):
        raise DimensionMismatch(f"pencil shapes {A.shape} and {E.shape}")
    try:
        ab = scipy.linalg.eigvals(A, E, homogeneous_eigvals=True)
    except (scipy.linalg.LinAlgError, ValueError) as exc:
        raise ConvergenceFailure(str(exc)) from exc
    alpha, beta = ab
    infinite = np.abs(beta) < INFINITE_EIG_TOL * max(np.linalg.norm(E, 2), np.finfo(float).tiny)
    out = np.full(n, complex(np.inf, 0.0))
    out[~infinite] = alpha[~infinite] / beta[~infinite]
    return out


def min_right_singular_vector(M):
    """Unit vector v minimizing ||M v||_2."""
    M = as_matrix(M)
    if M.shape[1] == 1:
        return np.ones(1, dtype=complex)
    # full_matrices so that wide matrices still expose their null space
    _, _, Vh = scipy.linalg.svd(M, full_matrices=True, lapack_driver="gesdd")
    return Vh[-1].conj()


def match_sets(a, b):
    """Optimal one-to-one matching distance between two complex point sets.

    Returns the largest pairwise distance in the assignment minimizing the
    total distance.
    """
    from scipy.optimize import linear_sum_assignment

    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if len(a) != len(b):
        raise DimensionMismatch(f"cannot match {len(a)} points with {len(b)}")
    if len(a) == 0:
        return 0.0
    cost = np.abs(a[:, None] - b[None, :])
    i, j = linear_sum_assignment(cost)
    return float(cost[i, j].max())
