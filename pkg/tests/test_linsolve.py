"""Tests for the dense complex LU wrapper."""

import numpy as np
import pytest

from helmbem import LUFactor, SingularMatrixError, lu_factor, lu_solve


def _random_system(rng, n, cond):
    """A dense complex matrix with prescribed 2-norm condition number."""
    q1, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    q2, _ = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    s = np.logspace(0.0, -np.log10(cond), n)
    return q1 * s @ q2.conj().T


def test_identity():
    b = np.array([1.0 + 1j, -2.0, 3.5j])
    assert np.array_equal(lu_solve(np.eye(3), b), b)


def test_known_2x2():
    A = np.array([[1j, 0.0], [0.0, 2.0]])
    x = lu_solve(A, np.array([1j, 4.0]))
    assert np.abs(x - np.array([1.0, 2.0])).max() <= 1e-15


def test_random_residual(rng):
    n = 60
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x = lu_solve(A, b)
    assert np.linalg.norm(A @ x - b) <= 1e-12 * np.linalg.norm(b)


def test_conditioned_recovery(rng):
    """100 systems with condition <= 1e6: tiny residual, small forward error."""
    n = 24
    for trial in range(100):
        cond = 10.0 ** (6.0 * trial / 99.0)
        A = _random_system(rng, n, cond)
        x_true = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        b = A @ x_true
        x = lu_solve(A, b)
        rel_res = np.linalg.norm(A @ x - b) / np.linalg.norm(b)
        rel_err = np.linalg.norm(x - x_true) / np.linalg.norm(x_true)
        assert rel_res <= 1e-12, f"trial {trial}: residual {rel_res:.3e}"
        assert rel_err <= 1e-8, f"trial {trial}: error {rel_err:.3e} at cond {cond:.1e}"


def test_matrix_right_hand_side(rng):
    A = rng.standard_normal((10, 10)) + 1j * rng.standard_normal((10, 10))
    B = rng.standard_normal((10, 3)) + 1j * rng.standard_normal((10, 3))
    X = lu_solve(A, B)
    assert X.shape == (10, 3)
    assert np.abs(A @ X - B).max() <= 1e-12 * np.abs(B).max()


def test_factor_structure(rng):
    """permutation/triangles reconstruct the factored matrix."""
    n = 15
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    fac = lu_factor(A)
    assert isinstance(fac, LUFactor)
    assert fac.n == n
    perm = fac.permutation()
    assert sorted(perm.tolist()) == list(range(n))
    L, U = fac.triangles()
    assert np.abs(np.diag(L) - 1.0).max() == 0.0
    assert np.abs(np.triu(L, 1)).max() == 0.0
    assert np.abs(np.tril(U, -1)).max() == 0.0
    assert np.abs(A[perm] - L @ U).max() <= 1e-13 * np.abs(A).max()
    # The factorization is reusable for several right-hand sides.
    b = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    assert np.linalg.norm(A @ fac.solve(b) - b) <= 1e-12 * np.linalg.norm(b)


def test_cond_estimate_tracks_truth(rng):
    A = _random_system(rng, 20, 1e5)
    fac = lu_factor(A)
    true_cond = np.linalg.cond(A, 1)
    assert true_cond / 100.0 <= fac.cond <= true_cond * 100.0
    assert lu_factor(np.eye(4)).cond == 1.0


def test_singular_matrix_raises():
    A = np.eye(4, dtype=complex)
    A[:, 2] = 0.0
    with pytest.raises(SingularMatrixError) as info:
        lu_factor(A)
    assert info.value.pivot_step == 3
    assert "resonance" in str(info.value)
    # SingularMatrixError is a LinAlgError, so generic handlers catch it.
    with pytest.raises(np.linalg.LinAlgError):
        lu_solve(A, np.zeros(4))


def test_near_singular_warns():
    A = np.diag([1.0, 1e-14]).astype(complex)
    with pytest.warns(RuntimeWarning, match="condition"):
        fac = lu_factor(A)
    assert fac.warnings
    assert fac.cond > 1e12


def test_validation():
    with pytest.raises(ValueError):
        lu_factor(np.ones((3, 2)))
    with pytest.raises(ValueError):
        lu_factor(np.ones(3))
    bad = np.eye(3)
    bad = bad.copy()
    bad[1, 1] = np.nan
    with pytest.raises(ValueError):
        lu_factor(bad)
    with pytest.raises(ValueError):
        lu_solve(np.eye(3), np.ones(4))
