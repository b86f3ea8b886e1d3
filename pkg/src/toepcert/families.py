"""Constructive generators for factor pairs with guaranteed Toeplitz products.

``gen_pair`` builds a pair satisfying the proportional rank-one identity
for a chosen scalar; ``gen_degenerate`` builds the banded/one-sided forms
whose comparison vectors vanish outright; ``perturb_to_break`` bumps one
parameter of a certified pair so the identity provably fails, for negative
testing.  Random fill uses Gaussian-integer values so the dense oracle
comparisons stay exact in double precision.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .core import CDTYPE, DEFAULT_TOL, AsymToeplitz, DimensionMismatch, Tolerance
from .product import Regime, classify_regime, product_is_toeplitz

__all__ = [
    "DEGENERATE_FORMS",
    "FamilySpec",
    "SpecificationError",
    "gen_degenerate",
    "gen_pair",
    "perturb_to_break",
    "random_toeplitz",
]


class SpecificationError(ValueError):
    """A family request is internally inconsistent."""


def _fill(rng: np.random.Generator, count: int) -> np.ndarray:
    """Gaussian-integer entries with parts in [-5, 5] (exact in doubles)."""
    parts = rng.integers(-5, 6, size=(2, count))
    return (parts[0] + 1j * parts[1]).astype(CDTYPE)


def random_toeplitz(rng: np.random.Generator, n: int, m: int) -> AsymToeplitz:
    """Compact matrix with seeded Gaussian-integer parameters in [-5, 5]."""
    a = np.zeros(n, dtype=CDTYPE)
    a[1:] = _fill(rng, n - 1)
    alpha = np.zeros(m, dtype=CDTYPE)
    alpha[1:] = _fill(rng, m - 1)
    return AsymToeplitz(n, m, complex(_fill(rng, 1)[0]), a, alpha)


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for one guaranteed product-Toeplitz factor pair.

    ``a_free`` holds the m - 1 free parameters of the left factor: its row
    parameters alpha_1..alpha_{m-1} when n <= m (R1/R3), its column tail
    a_1..a_{m-1} when m < n (R2/R4); the other side is derived from the
    rank-one identity.  ``b_free`` is always the right factor's column
    tail b_1..b_{m-1}.  Parameters left as ``None`` are filled from
    ``seed`` with Gaussian-integer values.
    """

    regime: Regime
    n: int
    m: int
    l: int
    lam: complex = 2.0 + 0.0j
    a0: complex | None = None
    b0: complex | None = None
    a_free: np.ndarray | None = None
    b_free: np.ndarray | None = None
    seed: int = 0


def gen_pair(spec: FamilySpec) -> tuple[AsymToeplitz, AsymToeplitz]:
    """Construct (A, B) whose product is certified Toeplitz with scalar ``lam``.

    The derived entries obey a = lam * u and v = conj(lam) * beta exactly;
    when the left factor is tall its column tail repeats in geometric
    blocks (a[m] = lam * a0, a[m + i] = lam * a[i]), and symmetrically for
    a wide right factor with ratio 1 / conj(lam).
    """
    n, m, l = spec.n, spec.m, spec.l
    actual = classify_regime(n, m, l)
    if actual is not spec.regime:
        raise SpecificationError(
            f"sizes ({n}, {m}, {l}) fall in {actual.name}, not {spec.regime.name}")
    lam = complex(spec.lam)
    if lam == 0:
        raise SpecificationError(
            "lam must be nonzero; degenerate families have dedicated constructors")
    rng = np.random.default_rng(spec.seed)
    a_free = (np.asarray(spec.a_free, dtype=CDTYPE) if spec.a_free is not None
              else _fill(rng, m - 1))
    b_free = (np.asarray(spec.b_free, dtype=CDTYPE) if spec.b_free is not None
              else _fill(rng, m - 1))
    if len(a_free) != m - 1 or len(b_free) != m - 1:
        raise SpecificationError(f"free parameter vectors must have length {m - 1}")
    a0 = complex(spec.a0) if spec.a0 is not None else complex(_fill(rng, 1)[0])
    b0 = complex(spec.b0) if spec.b0 is not None else complex(_fill(rng, 1)[0])

    a = np.zeros(n, dtype=CDTYPE)
    alpha = np.zeros(m, dtype=CDTYPE)
    if n <= m:
        alpha[1:] = a_free
        for i in range(1, n):
            a[i] = lam * np.conj(alpha[m - i])
    else:
        a[1:m] = a_free
        for j in range(1, m):
            alpha[j] = np.conj(a[m - j]) / np.conj(lam)
        for i in range(m, n):
            a[i] = lam * (a0 if i == m else a[i - m])

    b = np.zeros(m, dtype=CDTYPE)
    b[1:] = b_free
    beta = np.zeros(l, dtype=CDTYPE)
    for j in range(1, min(l, m)):
        beta[j] = np.conj(b[m - j]) / np.conj(lam)
    if m < l:
        beta[m] = np.conj(b0) / np.conj(lam)
        for j in range(m + 1, l):
            beta[j] = beta[j - m] / np.conj(lam)

    return AsymToeplitz(n, m, a0, a, alpha), AsymToeplitz(m, l, b0, b, beta)


DEGENERATE_FORMS = ("row_band_a", "col_band_b", "lambda_zero", "lambda_infinity")


def gen_degenerate(form: str, n: int, m: int, l: int, *,
                   a0: complex | None = None, b0: complex | None = None,
                   seed: int = 0) -> tuple[AsymToeplitz, AsymToeplitz]:
    """Construct a pair whose rank-one comparison degenerates to zero.

    * ``row_band_a``     -- left column tail and comparison vector vanish
      (needs n <= m); the right factor is arbitrary.
    * ``col_band_b``     -- right row parameters and comparison vector
      vanish (needs l <= m); the left factor is arbitrary.
    * ``lambda_zero``    -- left column tail vanishes and the right
      comparison vector vanishes.
    * ``lambda_infinity``-- right row parameters vanish and the left
      comparison vector vanishes.

    The product is Toeplitz for any values of the remaining free
    parameters, which are filled from ``seed``.
    """
    if form not in DEGENERATE_FORMS:
        raise SpecificationError(f"unknown degenerate form {form!r}")
    if n < 1 or m < 1 or l < 1:
        raise SpecificationError(f"dimensions must be positive, got ({n}, {m}, {l})")
    rng = np.random.default_rng(seed)
    a0 = complex(a0) if a0 is not None else complex(_fill(rng, 1)[0])
    b0 = complex(b0) if b0 is not None else complex(_fill(rng, 1)[0])

    if form == "row_band_a":
        if n > m:
            raise SpecificationError("row_band_a requires n <= m")
        alpha = np.zeros(m, dtype=CDTYPE)
        alpha[1:m - n + 1] = _fill(rng, m - n)
        A = AsymToeplitz(n, m, a0, np.zeros(n, dtype=CDTYPE), alpha)
        B = replace(random_toeplitz(rng, m, l), a0=b0)
    elif form == "col_band_b":
        if l > m:
            raise SpecificationError("col_band_b requires l <= m")
        b = np.zeros(m, dtype=CDTYPE)
        b[1:m - l + 1] = _fill(rng, m - l)
        B = AsymToeplitz(m, l, b0, b, np.zeros(l, dtype=CDTYPE))
        A = replace(random_toeplitz(rng, n, m), a0=a0)
    elif form == "lambda_zero":
        alpha = np.zeros(m, dtype=CDTYPE)
        alpha[1:] = _fill(rng, m - 1)
        A = AsymToeplitz(n, m, a0, np.zeros(n, dtype=CDTYPE), alpha)
        b = np.zeros(m, dtype=CDTYPE)
        beta = np.zeros(l, dtype=CDTYPE)
        if l <= m:
            b[1:m - l + 1] = _fill(rng, m - l)
            beta[1:] = _fill(rng, l - 1)
        else:
            # the comparison vector covers b, the corner and beta[1:l-m-1];
            # only the last m row parameters stay free
            b0 = 0.0
            beta[l - m:] = _fill(rng, m)
        B = AsymToeplitz(m, l, b0, b, beta)
    else:  # lambda_infinity
        b = np.zeros(m, dtype=CDTYPE)
        b[1:] = _fill(rng, m - 1)
        B = AsymToeplitz(m, l, b0, b, np.zeros(l, dtype=CDTYPE))
        a = np.zeros(n, dtype=CDTYPE)
        alpha = np.zeros(m, dtype=CDTYPE)
        if n <= m:
            alpha[1:m - n + 1] = _fill(rng, m - n)
            a[1:] = _fill(rng, n - 1)
        else:
            a0 = 0.0
            a[n - m:] = _fill(rng, m)
        A = AsymToeplitz(n, m, a0, a, alpha)
    return A, B


def perturb_to_break(pair: tuple[AsymToeplitz, AsymToeplitz],
                     tol: Tolerance = DEFAULT_TOL) -> tuple[AsymToeplitz, AsymToeplitz]:
    """Copy of (A, B) with one left-factor parameter bumped so the product
    is no longer Toeplitz.

    Requires the rank-one identity to be active: A's column tail and B's
    row parameters must both be nonzero, so the bump lands where the
    mismatch cannot cancel.  The result is verified before returning.
    """
    A, B = pair
    if A.m != B.n:
        raise DimensionMismatch(
            f"inner dimensions differ: {A.shape} times {B.shape}")
    if not np.any(A.a):
        raise ValueError("cannot perturb: left column tail is zero")
    if not np.any(B.alpha):
        raise ValueError("cannot perturb: right row parameters are zero")
    n, m = A.n, A.m
    candidates = [p for p in range(1, min(n, m)) if A.a[p] != 0]

    def bumped(delta: float) -> AsymToeplitz:
        if candidates:
            alpha = A.alpha.copy()
            alpha[m - candidates[0]] += delta
            return replace(A, alpha=alpha)
        # tail nonzero only through the geometric blocks: bump the corner,
        # which feeds the comparison vector at index m
        return replace(A, a0=A.a0 + delta)

    for delta in (1.0, 2.0, 3.0):
        broken = bumped(delta)
        if product_is_toeplitz(broken, B, tol) is None:
            return broken, B
    raise ValueError("perturbation failed to break the pair")
