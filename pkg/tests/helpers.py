"""Shared oracle builders for the test suite.

These construct the dense operator algebra straight on numpy so the
structured closed forms under test are checked against an independent
route.
"""

import numpy as np

import toepcert as tc

EXACT = tc.Tolerance(0.0, 0.0)


def dense_shift(k: int) -> np.ndarray:
    return np.eye(k, k=-1, dtype=complex)


def dense_eye(n: int, m: int) -> np.ndarray:
    return np.eye(n, m, dtype=complex)


def dense_flip(k: int) -> np.ndarray:
    return np.fliplr(np.eye(k, dtype=complex))


def basis(i: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[i] = 1.0
    return v


def outer(x, y) -> np.ndarray:
    return np.outer(np.asarray(x, dtype=complex), np.conj(np.asarray(y, dtype=complex)))


def corner_free_dense(A: tc.AsymToeplitz) -> np.ndarray:
    """Dense realization of A minus its corner times the rectangular identity."""
    return A.to_dense() - A.a0 * dense_eye(A.n, A.m)


def unit_isometry_dense() -> np.ndarray:
    """The 3x2 matrix with orthonormal columns used as a worked example."""
    s7 = np.sqrt(7.0)
    return np.array([
        [0.5j, 0.25 - (s7 / 4) * 1j],
        [0.5, 0.5j],
        [s7 / 4 + 0.25j, 0.5],
    ])


def product_example_dense() -> tuple[np.ndarray, np.ndarray]:
    """The worked 4x5 / 5x3 factor pair, instantiated with
    a=1, b=2, c=3, d=4, e=5 and scalar 2 (all real)."""
    A = np.array([
        [1, 2, 2, 4, 6],
        [3, 1, 2, 2, 4],
        [2, 3, 1, 2, 2],
        [1, 2, 3, 1, 2],
    ], dtype=complex)
    B = np.array([
        [3, 10, 8],
        [4, 3, 10],
        [5, 4, 3],
        [4, 5, 4],
        [5, 4, 5],
    ], dtype=complex)
    return A, B


def nonzero_fill(rng: np.random.Generator, count: int) -> np.ndarray:
    """Gaussian-integer entries in [-5, 5] with zeros remapped to 1."""
    out = (rng.integers(-5, 6, size=count)
           + 1j * rng.integers(-5, 6, size=count)).astype(complex)
    out[out == 0] = 1.0
    return out
