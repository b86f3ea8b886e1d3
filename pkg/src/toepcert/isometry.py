"""Isometry certification for compact Toeplitz and Hankel matrices.

An n x m matrix is an isometry when its conjugate transpose times itself
is the m x m identity (orthonormal columns).  For a compact Toeplitz
matrix this reduces to a rank-one self-match of the row parameters
against a comparison vector (with unimodular scalar) plus one residual
vector equation; no dense product is formed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import DEFAULT_TOL, AsymHankel, AsymToeplitz, Tolerance
from .product import RankOneOutcome, _hat, rank_one_equal, sharp

__all__ = [
    "IsometryCertificate",
    "a_hat",
    "hankel_is_isometry",
    "is_isometry",
    "isometry_residual",
    "unit_column_check",
]


def a_hat(A: AsymToeplitz) -> np.ndarray:
    """Self-comparison vector in C^m built from A's column tail.

    Reads the column tail backwards, conjugated; when the matrix is wide
    (n < m) the read-out continues into the row parameters after a
    structural zero.  Equals the shifted last column of the corner-free
    adjoint.
    """
    return _hat(A.a, A.alpha, A.m)


def isometry_residual(A: AsymToeplitz) -> np.ndarray:
    """First-row defect vector of A* A - I_m.

    Zero (along with the rank-one self-match) exactly when A is an
    isometry.
    """
    A0 = replace(A, a0=0.0).to_dense()
    tail_norm_sq = float(np.sum(np.abs(A.a) ** 2))
    r = (A0.conj().T @ A.a
         + np.conj(A.a0) * sharp(A.a, A.m)
         + A.a0 * A.alpha)
    r[0] += (abs(A.a0) ** 2 - tail_norm_sq - 1.0) / 2.0
    return r


def unit_column_check(A: AsymToeplitz) -> float:
    """Squared norm of the full first column (corner plus tail).

    Every accepted isometry has value 1: a necessary condition.
    """
    return float(abs(A.a0) ** 2 + np.sum(np.abs(A.a) ** 2))


@dataclass(frozen=True)
class IsometryCertificate:
    """Outcome of the structured check A* A == I_m.

    ``wide`` records which comparison branch applied (n < m adds the
    conjugated corner to ``w`` at index n).  ``match`` is the rank-one
    self-match of the row parameters against ``w``, or ``None`` when it
    fails.  Acceptance requires the match to be degenerate or unimodular
    and the residual to vanish.
    """

    accepted: bool
    wide: bool
    w: np.ndarray
    match: RankOneOutcome | None
    residual_norm: float
    column_norm_sq: float

    @property
    def lam(self) -> complex | None:
        return None if self.match is None else self.match.lam


def is_isometry(A: AsymToeplitz, tol: Tolerance = DEFAULT_TOL) -> IsometryCertificate:
    """Certify whether A* A equals the identity, without forming A* A.

    Accepts iff the rank-one self-match of the row parameters against the
    comparison vector holds with |lam| = 1 (or degenerates to zero on both
    sides) and the residual vector vanishes, all within ``tol``.  Agrees
    with the dense oracle on A* A - I_m.
    """
    n, m = A.n, A.m
    w = a_hat(A)
    if n < m:
        w[n] += np.conj(A.a0)
    match = rank_one_equal(A.alpha, A.alpha, w, w, tol)
    residual_norm = float(np.max(np.abs(isometry_residual(A))))
    match_ok = match is not None and (
        match.is_both_zero or abs(abs(match.lam) - 1.0) <= tol.atol)
    accepted = match_ok and residual_norm <= tol.atol
    return IsometryCertificate(accepted, n < m, w, match,
                               residual_norm, unit_column_check(A))


def hankel_is_isometry(H: AsymHankel, tol: Tolerance = DEFAULT_TOL) -> IsometryCertificate:
    """Certify whether a compact Hankel matrix has orthonormal columns.

    Row-flipping is unitary, so H is an isometry exactly when its
    row-flipped Toeplitz form is.
    """
    return is_isometry(H.row_flip_core(), tol)
