"""Compact rectangular Toeplitz/Hankel matrices and their dense oracles.

A rectangular Toeplitz matrix is constant along every diagonal and is
therefore determined by its first row and first column; a rectangular
Hankel matrix is constant along every anti-diagonal and is a column flip
of a Toeplitz matrix.  This module stores that data compactly, converts
to and from dense complex matrices, and provides the small dense operator
algebra (shifts, flips, rectangular identities, outer products) that the
structured predicates elsewhere in the package are cross-checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

CDTYPE = np.complex128

__all__ = [
    "CDTYPE",
    "DEFAULT_TOL",
    "AsymHankel",
    "AsymToeplitz",
    "DimensionMismatch",
    "StructureError",
    "Tolerance",
    "as_cvector",
    "as_dense",
    "dense_is_hankel",
    "dense_is_toeplitz",
    "dense_mul",
    "exchange",
    "flip_cols",
    "flip_rows_of",
    "lower_shift",
    "rect_identity",
    "shift_down",
    "shift_up",
    "tensor",
    "unit_vector",
]


class StructureError(ValueError):
    """A dense matrix does not have the structure a conversion requires.

    Carries the first violating position (row-major scan) as ``.row`` and
    ``.col`` when known.
    """

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        super().__init__(message)
        self.row = row
        self.col = col


class DimensionMismatch(ValueError):
    """Operand shapes are incompatible."""


@dataclass(frozen=True)
class Tolerance:
    """Float comparison policy: |x - y| <= atol + rtol * scale.

    ``scale`` is the largest absolute entry among the operands compared.
    Tests against zero use ``atol`` alone.  ``Tolerance(0, 0)`` demands
    exact equality.
    """

    atol: float = 1e-9
    rtol: float = 1e-9

    def threshold(self, scale: float) -> float:
        return self.atol + self.rtol * scale

    def is_zero(self, values) -> bool:
        """Whether every entry has modulus at most ``atol``."""
        values = np.asarray(values, dtype=CDTYPE)
        if values.size == 0:
            return True
        return bool(np.max(np.abs(values)) <= self.atol)

    def allclose(self, x, y) -> bool:
        """Entrywise closeness, scaled by the largest entry of either side."""
        x = np.asarray(x, dtype=CDTYPE)
        y = np.asarray(y, dtype=CDTYPE)
        if x.shape != y.shape:
            raise DimensionMismatch(f"cannot compare shapes {x.shape} and {y.shape}")
        if x.size == 0:
            return True
        scale = float(max(np.max(np.abs(x)), np.max(np.abs(y))))
        return bool(np.max(np.abs(x - y)) <= self.threshold(scale))


DEFAULT_TOL = Tolerance()


def as_cvector(x, length: int | None = None, name: str = "vector") -> np.ndarray:
    """Coerce to a read-only 1-D complex array, checking finiteness."""
    v = np.array(x, dtype=CDTYPE)
    if v.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional, got shape {v.shape}")
    if length is not None and len(v) != length:
        raise DimensionMismatch(f"{name} must have length {length}, got {len(v)}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite entries")
    v.setflags(write=False)
    return v


def as_dense(M, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2-D complex array with positive dimensions, checking finiteness."""
    A = np.asarray(M, dtype=CDTYPE)
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise ValueError(f"{name} must be 2-D and nonempty, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError(f"{name} contains non-finite entries")
    return A


# ---------------------------------------------------------------------------
# dense operator algebra
# ---------------------------------------------------------------------------

def rect_identity(n: int, m: int) -> np.ndarray:
    """The n x m rectangular identity: ones on the main diagonal."""
    return np.eye(n, m, dtype=CDTYPE)


def exchange(k: int) -> np.ndarray:
    """The k x k flip matrix: ones on the anti-diagonal."""
    return np.fliplr(np.eye(k, dtype=CDTYPE))


def lower_shift(k: int) -> np.ndarray:
    """The k x k lower shift: ones on the first subdiagonal."""
    return np.eye(k, k=-1, dtype=CDTYPE)


def unit_vector(i: int, dim: int) -> np.ndarray:
    """Standard basis vector with a one at index ``i``."""
    out = np.zeros(dim, dtype=CDTYPE)
    out[i] = 1.0
    return out


def tensor(x, y) -> np.ndarray:
    """Outer product with the second slot conjugated: (x (x) y)[i, j] = x[i] * conj(y[j])."""
    return np.outer(np.asarray(x, dtype=CDTYPE), np.conj(np.asarray(y, dtype=CDTYPE)))


def shift_down(x) -> np.ndarray:
    """Apply the lower shift to a vector: drop the last entry, prepend zero."""
    x = np.asarray(x, dtype=CDTYPE)
    out = np.zeros_like(x)
    out[1:] = x[:-1]
    return out


def shift_up(x) -> np.ndarray:
    """Apply the adjoint shift to a vector: drop the first entry, append zero."""
    x = np.asarray(x, dtype=CDTYPE)
    out = np.zeros_like(x)
    out[:-1] = x[1:]
    return out


# ---------------------------------------------------------------------------
# compact representations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AsymToeplitz:
    """n x m complex matrix constant along every diagonal.

    Storage is the corner value ``a0`` plus two parameter vectors that both
    carry a structural zero at index 0, so vector indices line up with the
    offsets they fill:

    * ``a[i]``     holds entry (i, 0) for i >= 1 (the first-column tail);
    * ``alpha[j]`` holds the conjugate of entry (0, j) for j >= 1.

    entry(i, j) = a0 if i == j, a[i - j] if i > j, conj(alpha[j - i]) if j > i.

    Instances are immutable; the backing arrays are read-only.
    """

    n: int
    m: int
    a0: complex
    a: np.ndarray
    alpha: np.ndarray

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"dimensions must be positive, got {self.n}x{self.m}")
        a0 = complex(self.a0)
        if not (np.isfinite(a0.real) and np.isfinite(a0.imag)):
            raise ValueError("corner value must be finite")
        a = as_cvector(self.a, self.n, "a")
        alpha = as_cvector(self.alpha, self.m, "alpha")
        if a[0] != 0 or alpha[0] != 0:
            raise ValueError("a[0] and alpha[0] are structural zeros and must be 0")
        object.__setattr__(self, "a0", a0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "alpha", alpha)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_first_row_col(cls, first_row, first_col) -> "AsymToeplitz":
        """Build from the literal first row and first column (shared corner)."""
        row = as_cvector(first_row, name="first_row")
        col = as_cvector(first_col, name="first_col")
        if row[0] != col[0]:
            raise ValueError(
                f"first_row[0] = {row[0]} and first_col[0] = {col[0]} must agree")
        a = np.concatenate([np.zeros(1, dtype=CDTYPE), col[1:]])
        alpha = np.concatenate([np.zeros(1, dtype=CDTYPE), np.conj(row[1:])])
        return cls(len(col), len(row), complex(col[0]), a, alpha)

    @classmethod
    def from_dense(cls, M, tol: Tolerance = DEFAULT_TOL) -> "AsymToeplitz":
        """Compact form of a dense Toeplitz matrix.

        Every diagonal must be constant within ``tol``; the stored entries
        are read from row 0 and column 0.  Raises :class:`StructureError`
        at the first violating position (row-major scan).
        """
        M = as_dense(M)
        n, m = M.shape
        if n > 1 and m > 1:
            thr = tol.threshold(float(np.max(np.abs(M))))
            bad = np.argwhere(np.abs(M[1:, 1:] - M[:-1, :-1]) > thr)
            if bad.size:
                i, j = int(bad[0][0]) + 1, int(bad[0][1]) + 1
                raise StructureError(
                    f"not Toeplitz: entry ({i}, {j}) = {M[i, j]} differs from "
                    f"entry ({i - 1}, {j - 1}) = {M[i - 1, j - 1]}",
                    row=i, col=j)
        return cls.from_first_row_col(M[0, :], M[:, 0])

    @classmethod
    def eye(cls, n: int, m: int) -> "AsymToeplitz":
        """The compact n x m rectangular identity."""
        return cls(n, m, 1.0, np.zeros(n, dtype=CDTYPE), np.zeros(m, dtype=CDTYPE))

    @classmethod
    def zero(cls, n: int, m: int) -> "AsymToeplitz":
        """The compact n x m zero matrix."""
        return cls(n, m, 0.0, np.zeros(n, dtype=CDTYPE), np.zeros(m, dtype=CDTYPE))

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n, self.m)

    def entry(self, i: int, j: int) -> complex:
        """Entry (i, j), in O(1)."""
        if not (0 <= i < self.n and 0 <= j < self.m):
            raise IndexError(f"index ({i}, {j}) out of range for {self.n}x{self.m}")
        if i == j:
            return self.a0
        if i > j:
            return complex(self.a[i - j])
        return complex(np.conj(self.alpha[j - i]))

    def first_row(self) -> np.ndarray:
        """Literal first-row entries (conjugates of ``alpha``, corner first)."""
        out = np.conj(self.alpha)
        out[0] = self.a0
        return out

    def first_col(self) -> np.ndarray:
        """Literal first-column entries (corner first)."""
        out = self.a.copy()
        out[0] = self.a0
        return out

    def to_dense(self) -> np.ndarray:
        """Realize all n x m entries."""
        # one value per diagonal offset i - j in [-(m-1), n-1]
        vals = np.concatenate([np.conj(self.alpha[:0:-1]),
                               np.array([self.a0], dtype=CDTYPE),
                               self.a[1:]])
        idx = np.arange(self.n)[:, None] - np.arange(self.m)[None, :] + (self.m - 1)
        return vals[idx]

    # -- structure-preserving maps ------------------------------------------

    def adjoint(self) -> "AsymToeplitz":
        """Conjugate transpose; swaps the roles of ``a`` and ``alpha``."""
        return AsymToeplitz(self.m, self.n, np.conj(self.a0), self.alpha, self.a)

    def rot180(self) -> "AsymToeplitz":
        """Flip both axes (P_n A P_m); diagonals map to diagonals."""
        n, m = self.n, self.m
        col = [self.entry(n - 1 - i, m - 1) for i in range(n)]
        row = [self.entry(n - 1, m - 1 - j) for j in range(m)]
        return AsymToeplitz.from_first_row_col(row, col)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AsymToeplitz):
            return NotImplemented
        return (self.n == other.n and self.m == other.m and self.a0 == other.a0
                and np.array_equal(self.a, other.a)
                and np.array_equal(self.alpha, other.alpha))


@dataclass(frozen=True, eq=False)
class AsymHankel:
    """n x m complex matrix constant along every anti-diagonal.

    Stored as the Toeplitz matrix whose column flip it is:
    ``H(i, j) = core(i, m - 1 - j)``, i.e. H = core P_m.
    """

    core: AsymToeplitz

    @property
    def n(self) -> int:
        return self.core.n

    @property
    def m(self) -> int:
        return self.core.m

    @property
    def shape(self) -> tuple[int, int]:
        return self.core.shape

    def entry(self, i: int, j: int) -> complex:
        if not (0 <= i < self.n and 0 <= j < self.m):
            raise IndexError(f"index ({i}, {j}) out of range for {self.n}x{self.m}")
        return self.core.entry(i, self.m - 1 - j)

    def to_dense(self) -> np.ndarray:
        return self.core.to_dense()[:, ::-1]

    def row_flip_core(self) -> AsymToeplitz:
        """The Toeplitz matrix A with H = P_n A (row-flip decomposition)."""
        return self.core.rot180()

    @classmethod
    def from_dense(cls, M, tol: Tolerance = DEFAULT_TOL) -> "AsymHankel":
        """Compact form of a dense Hankel matrix.

        Raises :class:`StructureError` at the first anti-diagonal violation.
        """
        M = as_dense(M)
        n, m = M.shape
        if n > 1 and m > 1:
            thr = tol.threshold(float(np.max(np.abs(M))))
            bad = np.argwhere(np.abs(M[1:, :-1] - M[:-1, 1:]) > thr)
            if bad.size:
                i, j = int(bad[0][0]) + 1, int(bad[0][1])
                raise StructureError(
                    f"not Hankel: entry ({i}, {j}) = {M[i, j]} differs from "
                    f"entry ({i - 1}, {j + 1}) = {M[i - 1, j + 1]}",
                    row=i, col=j)
        return cls(AsymToeplitz.from_dense(M[:, ::-1], tol))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AsymHankel):
            return NotImplemented
        return self.core == other.core


def flip_cols(A: AsymToeplitz) -> AsymHankel:
    """The Hankel matrix A P_m (columns of A in reverse order)."""
    return AsymHankel(A)


def flip_rows_of(A: AsymToeplitz) -> AsymHankel:
    """The Hankel matrix P_n A (rows of A in reverse order)."""
    return AsymHankel(A.rot180())


# ---------------------------------------------------------------------------
# dense brute-force oracles
# ---------------------------------------------------------------------------

def dense_mul(X, Y) -> np.ndarray:
    """Plain dense matrix product, with an explicit dimension check."""
    X = as_dense(X, "left operand")
    Y = as_dense(Y, "right operand")
    if X.shape[1] != Y.shape[0]:
        raise DimensionMismatch(
            f"inner dimensions differ: {X.shape} times {Y.shape}")
    return X @ Y


def dense_is_toeplitz(M, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether every diagonal of M is constant within ``tol``."""
    M = as_dense(M)
    if min(M.shape) == 1:
        return True
    thr = tol.threshold(float(np.max(np.abs(M))))
    return bool(np.all(np.abs(M[1:, 1:] - M[:-1, :-1]) <= thr))


def dense_is_hankel(M, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether every anti-diagonal of M is constant within ``tol``."""
    M = as_dense(M)
    if min(M.shape) == 1:
        return True
    thr = tol.threshold(float(np.max(np.abs(M))))
    return bool(np.all(np.abs(M[1:, :-1] - M[:-1, 1:]) <= thr))
