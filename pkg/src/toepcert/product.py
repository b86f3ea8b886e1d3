"""Product-structure certification for compact Toeplitz factor pairs.

Whether the product of an n x m and an m x l Toeplitz matrix is again
Toeplitz reduces to one rank-one identity between four vectors read
directly off the factors' parameters: the left column tail, the right row
parameters, and two size-regime comparison vectors.  The decision runs in
O(n + m + l) and returns a certificate that can be re-verified on its own
and cross-checked against the dense product.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .core import (
    CDTYPE,
    DEFAULT_TOL,
    AsymToeplitz,
    DimensionMismatch,
    Tolerance,
    shift_down,
    shift_up,
    tensor,
    unit_vector,
)

__all__ = [
    "ProductCertificate",
    "RankOneOutcome",
    "Regime",
    "alpha_hat",
    "b_hat",
    "classify_regime",
    "comparison_vectors",
    "delta_product_parts",
    "delta_product_structured",
    "product_is_toeplitz",
    "rank_one_equal",
    "sharp",
]


class Regime(enum.Enum):
    """Order relation among the dimensions (n, m, l) of a factor pair."""

    R1 = "max(n,l) <= m"
    R2 = "m < min(n,l)"
    R3 = "n <= m < l"
    R4 = "l <= m < n"


def classify_regime(n: int, m: int, l: int) -> Regime:
    """The unique size regime of a triple of positive dimensions."""
    if n < 1 or m < 1 or l < 1:
        raise ValueError(f"dimensions must be positive, got ({n}, {m}, {l})")
    if n <= m:
        return Regime.R1 if l <= m else Regime.R3
    return Regime.R4 if l <= m else Regime.R2


# ---------------------------------------------------------------------------
# comparison vectors
# ---------------------------------------------------------------------------

def _hat(primary: np.ndarray, continuation: np.ndarray, out_dim: int) -> np.ndarray:
    """Reversed-conjugate read-out of trailing parameters, shifted by one.

    With p = len(primary): out[i] = conj(primary[p - i]) for
    1 <= i <= min(out_dim, p) - 1; when out_dim > p a structural zero sits
    at index p and continuation[1:] fills the rest.
    """
    p = len(primary)
    out = np.zeros(out_dim, dtype=CDTYPE)
    head = min(out_dim, p)
    if head > 1:
        out[1:head] = np.conj(primary[p - 1:p - head:-1])
    if out_dim > p + 1:
        out[p + 1:] = continuation[1:out_dim - p]
    return out


def alpha_hat(A: AsymToeplitz) -> np.ndarray:
    """Left-factor comparison vector in C^n.

    Reads A's row parameters backwards; when the factor is tall (m < n) the
    read-out continues into the column tail after a structural zero.
    Equals the shifted last column of A's corner-free part.
    """
    return _hat(A.alpha, A.a, A.n)


def b_hat(B: AsymToeplitz) -> np.ndarray:
    """Right-factor comparison vector in C^l (B is m x l, so l = ``B.m``).

    Reads B's column tail backwards; when the factor is wide (m < l) the
    read-out continues into the row parameters after a structural zero.
    """
    return _hat(B.a, B.alpha, B.m)


def sharp(x, to_dim: int) -> np.ndarray:
    """Truncate or zero-pad a leading-zero vector to ``to_dim`` entries.

    This is multiplication by the rectangular identity.
    """
    x = np.asarray(x, dtype=CDTYPE)
    if x[0] != 0:
        raise ValueError("sharp expects a structural zero at index 0")
    out = np.zeros(to_dim, dtype=CDTYPE)
    k = min(len(x), to_dim)
    out[:k] = x[:k]
    return out


# ---------------------------------------------------------------------------
# rank-one matching
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankOneOutcome:
    """How two rank-one outer products x (x) y and xp (x) yp coincide.

    Either both sides vanish (``lam is None``; ``vanished`` names the zero
    vectors among "x", "y", "xp", "yp") or the sides match through a
    nonzero scalar with x = lam * xp and yp = conj(lam) * y.
    """

    lam: complex | None
    vanished: tuple[str, ...] = ()

    @property
    def is_proportional(self) -> bool:
        return self.lam is not None

    @property
    def is_both_zero(self) -> bool:
        return self.lam is None


def rank_one_equal(x, y, xp, yp, tol: Tolerance = DEFAULT_TOL) -> RankOneOutcome | None:
    """Decide whether x (x) y == xp (x) yp without forming either matrix.

    Returns a :class:`RankOneOutcome` when the products coincide, ``None``
    on mismatch.  When neither side vanishes the scalar is extracted at the
    largest entry of ``xp`` and verified entrywise.  O(len x + len y).
    """
    x = np.asarray(x, dtype=CDTYPE)
    xp = np.asarray(xp, dtype=CDTYPE)
    y = np.asarray(y, dtype=CDTYPE)
    yp = np.asarray(yp, dtype=CDTYPE)
    if x.shape != xp.shape:
        raise DimensionMismatch(f"x and xp lengths differ: {x.shape} vs {xp.shape}")
    if y.shape != yp.shape:
        raise DimensionMismatch(f"y and yp lengths differ: {y.shape} vs {yp.shape}")
    lhs_zero = tol.is_zero(x) or tol.is_zero(y)
    rhs_zero = tol.is_zero(xp) or tol.is_zero(yp)
    if lhs_zero and rhs_zero:
        vanished = tuple(name for name, vec in
                         (("x", x), ("y", y), ("xp", xp), ("yp", yp))
                         if tol.is_zero(vec))
        return RankOneOutcome(None, vanished)
    if lhs_zero != rhs_zero:
        return None
    pivot = int(np.argmax(np.abs(xp)))
    lam = complex(x[pivot] / xp[pivot])
    if tol.allclose(x, lam * xp) and tol.allclose(yp, np.conj(lam) * y):
        return RankOneOutcome(lam)
    return None


# ---------------------------------------------------------------------------
# the product decision
# ---------------------------------------------------------------------------

def comparison_vectors(A: AsymToeplitz, B: AsymToeplitz):
    """The four vectors whose rank-one match decides Toeplitzness of A B.

    Returns ``(x, y, u, v, regime)``: x is A's column tail, y is B's row
    parameter vector, u and v are the regime comparison vectors.  The
    corner values enter u (at index m) when m < n and v (conjugated, at
    index m) when m < l.
    """
    if A.m != B.n:
        raise DimensionMismatch(
            f"inner dimensions differ: {A.shape} times {B.shape}")
    n, m, l = A.n, A.m, B.m
    regime = classify_regime(n, m, l)
    u = alpha_hat(A)
    if m < n:
        u[m] += A.a0
    v = b_hat(B)
    if m < l:
        v[m] += np.conj(B.a0)
    return A.a, B.alpha, u, v, regime


@dataclass(frozen=True)
class ProductCertificate:
    """Witness that a compact Toeplitz product is itself Toeplitz.

    Records the rank-one identity x (x) y == u (x) v that makes every
    interior displacement entry of the product vanish.  When proportional,
    x = lam * u and v = conj(lam) * y entrywise (this convention is used
    uniformly across regimes).  ``k`` and ``k_prime`` are the block counts
    k*m < n <= (k+1)*m and k'*m < l <= (k'+1)*m.
    """

    regime: Regime
    x: np.ndarray
    y: np.ndarray
    u: np.ndarray
    v: np.ndarray
    outcome: RankOneOutcome
    k: int
    k_prime: int

    @property
    def lam(self) -> complex | None:
        return self.outcome.lam

    def verify(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        """Re-check the certified equations from the stored vectors alone."""
        if self.outcome.is_proportional:
            lam = self.outcome.lam
            return (tol.allclose(self.x, lam * self.u)
                    and tol.allclose(self.v, np.conj(lam) * self.y))
        return ((tol.is_zero(self.x) or tol.is_zero(self.y))
                and (tol.is_zero(self.u) or tol.is_zero(self.v)))


def product_is_toeplitz(A: AsymToeplitz, B: AsymToeplitz,
                        tol: Tolerance = DEFAULT_TOL) -> ProductCertificate | None:
    """Decide whether the product A B is Toeplitz, in O(n + m + l).

    Returns a :class:`ProductCertificate` when it is, ``None`` when it is
    not.  Zero factors are accepted (the zero product is Toeplitz) with a
    degenerate certificate.  Agrees with the dense diagonal-constancy
    oracle on the realized product.
    """
    x, y, u, v, regime = comparison_vectors(A, B)
    outcome = rank_one_equal(x, y, u, v, tol)
    if outcome is None:
        return None
    n, m, l = A.n, A.m, B.m
    return ProductCertificate(regime, x, y, u, v, outcome,
                              (n - 1) // m, (l - 1) // m)


# ---------------------------------------------------------------------------
# structured displacement of a product
# ---------------------------------------------------------------------------

def delta_product_structured(A: AsymToeplitz, B: AsymToeplitz) -> np.ndarray:
    """Displacement of A B assembled from the factors, without forming A B.

    Equals ``displacement_dense(to_dense(A) @ to_dense(B))``.
    """
    matrix, _, _ = delta_product_parts(A, B)
    return matrix


def delta_product_parts(A: AsymToeplitz, B: AsymToeplitz):
    """Assembly of the product displacement: ``(matrix, gamma1, gamma2)``.

    ``gamma1``/``gamma2`` are the first-column/first-row aggregate vectors
    of the assembly; they are returned for verification and are not part
    of the stable API.
    """
    if A.m != B.n:
        raise DimensionMismatch(
            f"inner dimensions differ: {A.shape} times {B.shape}")
    n, m, l = A.n, A.m, B.m
    a0, b0 = A.a0, B.a0
    A0 = replace(A, a0=0.0).to_dense()
    B0 = replace(B, a0=0.0).to_dense()
    ah = alpha_hat(A)
    bh = b_hat(B)
    e0 = unit_vector(0, n)
    zeta0 = unit_vector(0, l)

    gamma1 = A0 @ B.a + a0 * sharp(B.a, n) + b0 * A.a + a0 * b0 * e0
    gamma2 = (shift_down(B0.conj().T @ shift_up(A.alpha))
              + np.conj(a0) * B.alpha + np.conj(b0) * sharp(A.alpha, l))

    out = (tensor(A.a, B.alpha) - tensor(ah, bh)
           + tensor(gamma1, zeta0) + tensor(e0, gamma2))
    # edge corrections when a comparison vector spills past the inner size
    if m < n:
        out -= tensor(a0 * unit_vector(m, n), bh)
    if m < l:
        out -= tensor(b0 * ah, unit_vector(m, l))
    if m < n and m < l:
        out -= tensor(a0 * b0 * unit_vector(m, n), unit_vector(m, l))
    return out, gamma1, gamma2
