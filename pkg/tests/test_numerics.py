import numpy as np
import pytest

from zolo.errors import (DimensionMismatch, EmptyMatrix, NonFiniteEntry, RankOutOfRange)
from zolo.numerics import (as_matrix, generalized_eigenvalues, match_sets,
                           min_right_singular_vector, svd_truncate)


def test_svd_truncate_tolerance_counts_relative_singular_values():
    M = np.diag([1.0, 1e-3, 1e-9, 1e-16])
    assert svd_truncate(M, relative_tolerance=1e-6).effective_rank == 2
    assert svd_truncate(M, relative_tolerance=1e-10).effective_rank == 3


def test_svd_truncate_fixed_rank_and_reconstruct():
    rng = np.random.default_rng(0)
    M = rng.standard_normal((8, 3)) @ rng.standard_normal((3, 6))
    t = svd_truncate(M, fixed_rank=3)
    assert t.left_vectors.shape == (8, 3) and t.right_vectors.shape == (6, 3)
    assert np.allclose(t.reconstruct(), M, atol=1e-12)


def test_svd_truncate_errors():
    with pytest.raises(RankOutOfRange):
        svd_truncate(np.eye(3), fixed_rank=4)
    with pytest.raises(ValueError):
        svd_truncate(np.eye(3))
    with pytest.raises(EmptyMatrix):
        svd_truncate(np.zeros((0, 3)), fixed_rank=1)
    with pytest.raises(NonFiniteEntry):
        svd_truncate(np.array([[1.0, np.nan]]), fixed_rank=1)


def test_as_matrix_keeps_real_input_real():
    assert as_matrix(np.eye(2)).dtype == float
    assert as_matrix(np.eye(2) + 0j).dtype == float
    assert as_matrix(np.eye(2) * 1j).dtype == complex


def test_generalized_eigenvalues_flags_infinite():
    A = np.diag([2.0, 3.0])
    E = np.diag([1.0, 0.0])
    ev = generalized_eigenvalues(A, E)
    assert np.isinf(ev).sum() == 1
    assert np.isclose(ev[np.isfinite(ev)][0], 2.0)
    with pytest.raises(DimensionMismatch):
        generalized_eigenvalues(np.eye(2), np.eye(3))


def test_min_right_singular_vector_finds_null_space():
    M = np.array([[1.0, 1.0, 0.0], [0.0, 1.0, 1.0]])
    v = min_right_singular_vector(M)
    assert np.isclose(np.linalg.norm(v), 1.0)
    assert np.linalg.norm(M @ v) < 1e-14
    assert np.allclose(min_right_singular_vector(np.ones((4, 1))), [1.0])


def test_match_sets():
    a = np.array([1, 2j, -3])
    assert match_sets(a, a[::-1] + 1e-9) < 2e-9
    with pytest.raises(DimensionMismatch):
        match_sets(a, a[:2])
