"""Compact rectangular Toeplitz/Hankel matrices with certified product and
isometry structure checks.

The structured predicates run in linear time in the dimensions and every
decision can be cross-validated against a dense brute-force oracle.
"""

from .core import (
    CDTYPE,
    DEFAULT_TOL,
    AsymHankel,
    AsymToeplitz,
    DimensionMismatch,
    StructureError,
    Tolerance,
    dense_is_hankel,
    dense_is_toeplitz,
    dense_mul,
    exchange,
    flip_cols,
    flip_rows_of,
    lower_shift,
    rect_identity,
    tensor,
    unit_vector,
)
from .displacement import (
    DisplacementPair,
    displacement_dense,
    displacement_structured,
    is_toeplitz_by_displacement,
    reconstruct,
)
from .families import (
    DEGENERATE_FORMS,
    FamilySpec,
    SpecificationError,
    gen_degenerate,
    gen_pair,
    perturb_to_break,
    random_toeplitz,
)
from .hankel import hankel_product_is_toeplitz, hankel_times_toeplitz_is_hankel
from .io import MatrixFileError, load_matrix, save_matrix
from .isometry import (
    IsometryCertificate,
    a_hat,
    hankel_is_isometry,
    is_isometry,
    isometry_residual,
    unit_column_check,
)
from .product import (
    ProductCertificate,
    RankOneOutcome,
    Regime,
    alpha_hat,
    b_hat,
    classify_regime,
    comparison_vectors,
    delta_product_structured,
    product_is_toeplitz,
    rank_one_equal,
    sharp,
)

__all__ = [
    "CDTYPE",
    "DEFAULT_TOL",
    "DEGENERATE_FORMS",
    "AsymHankel",
    "AsymToeplitz",
    "DimensionMismatch",
    "DisplacementPair",
    "FamilySpec",
    "IsometryCertificate",
    "MatrixFileError",
    "ProductCertificate",
    "RankOneOutcome",
    "Regime",
    "SpecificationError",
    "StructureError",
    "Tolerance",
    "a_hat",
    "alpha_hat",
    "b_hat",
    "classify_regime",
    "comparison_vectors",
    "delta_product_structured",
    "dense_is_hankel",
    "dense_is_toeplitz",
    "dense_mul",
    "displacement_dense",
    "displacement_structured",
    "exchange",
    "flip_cols",
    "flip_rows_of",
    "gen_degenerate",
    "gen_pair",
    "hankel_is_isometry",
    "hankel_product_is_toeplitz",
    "hankel_times_toeplitz_is_hankel",
    "is_isometry",
    "is_toeplitz_by_displacement",
    "isometry_residual",
    "load_matrix",
    "lower_shift",
    "perturb_to_break",
    "product_is_toeplitz",
    "random_toeplitz",
    "rank_one_equal",
    "reconstruct",
    "rect_identity",
    "save_matrix",
    "sharp",
    "tensor",
    "unit_column_check",
    "unit_vector",
]

__version__ = "0.1.0"
