"""Command-line front end for JSON matrix files.

Subcommands: ``check`` (structure detection), ``product`` (is the product
Toeplitz/Hankel, with optional dense-oracle cross-validation),
``generate`` (families with guaranteed Toeplitz products), ``isometry``
and ``displacement``.  Exit codes: 0 predicate true, 1 predicate false,
2 input error, 3 structured verdict disagrees with the dense oracle.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .core import (
    AsymHankel,
    AsymToeplitz,
    StructureError,
    Tolerance,
    dense_is_hankel,
    dense_is_toeplitz,
    dense_mul,
)
from .displacement import displacement_dense, is_toeplitz_by_displacement
from .families import FamilySpec, gen_degenerate, gen_pair
from .hankel import hankel_product_is_toeplitz, hankel_times_toeplitz_is_hankel
from .io import MatrixFileError, load_matrix, matrix_to_text, save_matrix
from .isometry import hankel_is_isometry, is_isometry
from .product import Regime, product_is_toeplitz

__all__ = ["main"]

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_ERROR = 2
EXIT_DISAGREE = 3

_GENERATE_FORMS = {
    "form-a": "row_band_a",
    "form-b": "col_band_b",
    "lambda-zero": "lambda_zero",
    "lambda-infinity": "lambda_infinity",
}


def _parse_complex(text: str) -> complex:
    """Parse 're,im' (or a bare real part) into a complex number."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ValueError(f"expected a complex number as 're,im', got {text!r}")


def _cpair(z: complex | None):
    return None if z is None else [z.real, z.imag]


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True))


def _tolerance(args) -> Tolerance:
    return Tolerance(atol=args.tol, rtol=args.tol)


def _as_structured(obj, tol: Tolerance, name: str):
    """Promote a dense operand to its compact form, Toeplitz first."""
    if not isinstance(obj, np.ndarray):
        return obj
    try:
        return AsymToeplitz.from_dense(obj, tol)
    except StructureError:
        pass
    try:
        return AsymHankel.from_dense(obj, tol)
    except StructureError:
        raise ValueError(f"{name}: dense matrix is neither Toeplitz nor Hankel")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_check(args) -> int:
    obj = load_matrix(args.file)
    tol = _tolerance(args)
    if isinstance(obj, AsymToeplitz):
        verdict = {"structure": "toeplitz", "via": "direct"}
    elif isinstance(obj, AsymHankel):
        verdict = {"structure": "hankel", "via": "direct"}
    else:
        by_displacement = is_toeplitz_by_displacement(obj, tol)
        direct = dense_is_toeplitz(obj, tol)
        if by_displacement != direct:
            print("internal error: detection routes disagree", file=sys.stderr)
            return EXIT_DISAGREE
        if by_displacement:
            verdict = {"structure": "toeplitz", "via": "displacement"}
        elif dense_is_hankel(obj, tol):
            verdict = {"structure": "hankel", "via": "direct"}
        else:
            verdict = {"structure": "none", "via": "direct"}
    _emit(verdict)
    return EXIT_TRUE if verdict["structure"] != "none" else EXIT_FALSE


def _cmd_product(args) -> int:
    tol = _tolerance(args)
    left = _as_structured(load_matrix(args.file_a), tol, args.file_a)
    right = _as_structured(load_matrix(args.file_b), tol, args.file_b)

    if isinstance(left, AsymToeplitz) and isinstance(right, AsymToeplitz):
        product_kind = "toeplitz"
        cert = product_is_toeplitz(left, right, tol)
    elif isinstance(left, AsymHankel) and isinstance(right, AsymHankel):
        product_kind = "toeplitz"
        cert = hankel_product_is_toeplitz(left, right, tol)
    elif isinstance(left, AsymHankel):
        product_kind = "hankel"
        cert = hankel_times_toeplitz_is_hankel(left, right, tol)
    else:
        # toeplitz times hankel: A (C P_l) = (A C) P_l, Hankel iff A C Toeplitz
        product_kind = "hankel"
        cert = product_is_toeplitz(left, right.core, tol)

    structured = cert is not None
    oracle_agrees = None
    if args.oracle:
        dense = dense_mul(left.to_dense(), right.to_dense())
        dense_ok = (dense_is_toeplitz(dense, tol) if product_kind == "toeplitz"
                    else dense_is_hankel(dense, tol))
        oracle_agrees = dense_ok == structured

    verdict = {
        "product": product_kind,
        "structured": structured,
        "regime": cert.regime.name if cert else None,
        "case": (None if cert is None
                 else "proportional" if cert.outcome.is_proportional
                 else "both_zero"),
        "lambda": _cpair(cert.lam) if cert else None,
        "k": cert.k if cert else None,
        "k_prime": cert.k_prime if cert else None,
        "oracle_agrees": oracle_agrees,
    }
    if args.json:
        _emit(verdict)
    else:
        outcome = "yes" if structured else "no"
        detail = "" if cert is None else f" ({verdict['regime']}, {verdict['case']})"
        print(f"product {product_kind}: {outcome}{detail}")
    if oracle_agrees is False:
        print("structured verdict disagrees with the dense oracle", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_TRUE if structured else EXIT_FALSE


def _cmd_generate(args) -> int:
    lam = _parse_complex(args.lam)
    a0 = _parse_complex(args.a0) if args.a0 is not None else None
    b0 = _parse_complex(args.b0) if args.b0 is not None else None
    if args.regime in _GENERATE_FORMS:
        A, B = gen_degenerate(_GENERATE_FORMS[args.regime], args.n, args.m, args.l,
                              a0=a0, b0=b0, seed=args.seed)
    else:
        spec = FamilySpec(Regime[args.regime.upper()], args.n, args.m, args.l,
                          lam=lam, a0=a0, b0=b0, seed=args.seed)
        A, B = gen_pair(spec)
    save_matrix(args.out_a, A)
    save_matrix(args.out_b, B)
    _emit({"out_a": args.out_a, "out_b": args.out_b, "regime": args.regime,
           "lambda": _cpair(lam), "seed": args.seed})
    return EXIT_TRUE


def _cmd_isometry(args) -> int:
    obj = load_matrix(args.file)
    tol = _tolerance(args)
    if isinstance(obj, AsymToeplitz):
        cert = is_isometry(obj, tol)
    elif isinstance(obj, AsymHankel):
        cert = hankel_is_isometry(obj, tol)
    else:
        raise ValueError(
            "isometry check needs a toeplitz or hankel file; "
            "convert the dense file first (see 'check')")
    _emit({
        "accepted": cert.accepted,
        "lambda": _cpair(cert.lam),
        "residual_norm": cert.residual_norm,
        "column_norm_sq": cert.column_norm_sq,
    })
    return EXIT_TRUE if cert.accepted else EXIT_FALSE


def _cmd_displacement(args) -> int:
    obj = load_matrix(args.file)
    dense = obj if isinstance(obj, np.ndarray) else obj.to_dense()
    sys.stdout.write(matrix_to_text(displacement_dense(dense)))
    return EXIT_TRUE


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, metavar="T",
                        help="comparison tolerance, used as both atol and rtol "
                             "(default 1e-9)")
    common.add_argument("--json", action="store_true",
                        help="emit a machine-readable JSON verdict")

    parser = argparse.ArgumentParser(
        prog="toepcert",
        description="Structure checks and certificates for rectangular "
                    "Toeplitz/Hankel matrix files.",
        epilog="Exit codes: 0 predicate true, 1 predicate false, 2 input "
               "error, 3 structured/oracle disagreement.  Reported lambda "
               "always satisfies x = lambda * u and v = conj(lambda) * y "
               "for the certificate vectors.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common],
                       help="detect toeplitz/hankel structure in a matrix file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("product", parents=[common],
                       help="decide whether the product of two matrix files "
                            "is Toeplitz (Hankel for mixed kinds)")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--oracle", action="store_true",
                   help="cross-validate against the dense product")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("generate", parents=[common],
                       help="write a factor pair whose product is Toeplitz")
    p.add_argument("--regime", required=True,
                   choices=["r1", "r2", "r3", "r4", *_GENERATE_FORMS],
                   help="size regime for proportional pairs, or a degenerate "
                        "form")
    p.add_argument("-n", type=int, required=True, help="rows of the left factor")
    p.add_argument("-m", type=int, required=True,
                   help="inner dimension (left cols = right rows)")
    p.add_argument("-l", type=int, required=True, help="cols of the right factor")
    p.add_argument("--lambda", dest="lam", default="2,0", metavar="RE,IM",
                   help="certificate scalar for proportional pairs (default 2,0)")
    p.add_argument("--a0", metavar="RE,IM", help="left corner value (default: seeded)")
    p.add_argument("--b0", metavar="RE,IM", help="right corner value (default: seeded)")
    p.add_argument("--seed", type=int, default=0, help="fill seed (default 0)")
    p.add_argument("--out-a", required=True, help="output file for the left factor")
    p.add_argument("--out-b", required=True, help="output file for the right factor")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("isometry", parents=[common],
                       help="certify orthonormal columns of a toeplitz/hankel file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_isometry)

    p = sub.add_parser("displacement", parents=[common],
                       help="print the displacement of a matrix file as a "
                            "dense matrix file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_displacement)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return args.func(args)
    except (MatrixFileError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
