"""Product-structure decisions for Hankel factors, by flip reduction.

Every compact Hankel matrix is a flipped Toeplitz matrix and the flip is
an involution, so Hankel product questions reduce to the Toeplitz product
predicate on recovered cores.
"""

from __future__ import annotations

from .core import DEFAULT_TOL, AsymHankel, AsymToeplitz, DimensionMismatch, Tolerance
from .product import ProductCertificate, product_is_toeplitz

__all__ = ["hankel_product_is_toeplitz", "hankel_times_toeplitz_is_hankel"]


def hankel_product_is_toeplitz(H1: AsymHankel, H2: AsymHankel,
                               tol: Tolerance = DEFAULT_TOL) -> ProductCertificate | None:
    """Decide whether the product of two Hankel matrices is Toeplitz.

    With H1 = A P_m (stored core) and H2 = P_m B (row-flip core), the inner
    flips cancel: H1 H2 = A B, so the Toeplitz predicate on (A, B) decides.
    """
    if H1.m != H2.n:
        raise DimensionMismatch(
            f"inner dimensions differ: {H1.shape} times {H2.shape}")
    return product_is_toeplitz(H1.core, H2.row_flip_core(), tol)


def hankel_times_toeplitz_is_hankel(H: AsymHankel, B: AsymToeplitz,
                                    tol: Tolerance = DEFAULT_TOL) -> ProductCertificate | None:
    """Decide whether a Hankel-times-Toeplitz product is Hankel.

    With H = P_n A (row-flip core), H B = P_n (A B) is a row flip of the
    Toeplitz-or-not product, so H B is Hankel exactly when A B is Toeplitz.
    """
    if H.m != B.n:
        raise DimensionMismatch(
            f"inner dimensions differ: {H.shape} times {B.shape}")
    return product_is_toeplitz(H.row_flip_core(), B, tol)
