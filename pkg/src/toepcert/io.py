"""JSON matrix files: kinds ``toeplitz``, ``hankel`` and ``dense``.

Numbers are stored as ``[re, im]`` pairs.  Toeplitz files carry the
literal first row and first column, Hankel files the first row and last
column, dense files the row-major entries.  Writing is canonical (sorted
keys, floats with 17 significant digits), so rewriting a canonical file
reproduces it byte for byte.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .core import CDTYPE, AsymHankel, AsymToeplitz, as_dense

__all__ = ["MatrixFileError", "load_matrix", "save_matrix", "parse_matrix", "matrix_to_text"]

_KIND_KEYS = {
    "toeplitz": {"cols", "first_col", "first_row", "kind", "rows"},
    "hankel": {"cols", "first_row", "kind", "last_col", "rows"},
    "dense": {"cols", "data", "kind", "rows"},
}


class MatrixFileError(ValueError):
    """Malformed or inconsistent matrix file."""


def _require_dim(doc: dict, key: str) -> int:
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise MatrixFileError(f"'{key}' must be a positive integer, got {value!r}")
    return value


def _parse_entries(items, count: int, where: str) -> np.ndarray:
    if not isinstance(items, list) or len(items) != count:
        raise MatrixFileError(f"'{where}' must be a list of {count} [re, im] pairs")
    out = np.zeros(count, dtype=CDTYPE)
    for pos, item in enumerate(items):
        if (not isinstance(item, list) or len(item) != 2
                or any(isinstance(part, bool) or not isinstance(part, (int, float))
                       for part in item)):
            raise MatrixFileError(f"'{where}[{pos}]' must be a [re, im] number pair")
        re, im = float(item[0]), float(item[1])
        if not (math.isfinite(re) and math.isfinite(im)):
            raise MatrixFileError(f"'{where}[{pos}]' contains a non-finite number")
        out[pos] = complex(re, im)
    return out


def parse_matrix(doc) -> AsymToeplitz | AsymHankel | np.ndarray:
    """Validate a decoded matrix document and build the typed value.

    Unknown keys are rejected; the corner-sharing invariants are enforced
    exactly.
    """
    if not isinstance(doc, dict):
        raise MatrixFileError("matrix file must contain a JSON object")
    kind = doc.get("kind")
    if kind not in _KIND_KEYS:
        raise MatrixFileError(
            f"'kind' must be one of {sorted(_KIND_KEYS)}, got {kind!r}")
    expected = _KIND_KEYS[kind]
    if set(doc) != expected:
        unknown = sorted(set(doc) - expected)
        missing = sorted(expected - set(doc))
        parts = []
        if unknown:
            parts.append(f"unknown keys {unknown}")
        if missing:
            parts.append(f"missing keys {missing}")
        raise MatrixFileError(f"{kind} file: " + ", ".join(parts))
    rows = _require_dim(doc, "rows")
    cols = _require_dim(doc, "cols")

    if kind == "dense":
        data = _parse_entries(doc["data"], rows * cols, "data")
        return data.reshape(rows, cols)

    if kind == "toeplitz":
        first_row = _parse_entries(doc["first_row"], cols, "first_row")
        first_col = _parse_entries(doc["first_col"], rows, "first_col")
        if first_row[0] != first_col[0]:
            raise MatrixFileError(
                "toeplitz file: first_row[0] and first_col[0] must be identical")
        return AsymToeplitz.from_first_row_col(first_row, first_col)

    first_row = _parse_entries(doc["first_row"], cols, "first_row")
    last_col = _parse_entries(doc["last_col"], rows, "last_col")
    if first_row[cols - 1] != last_col[0]:
        raise MatrixFileError(
            "hankel file: first_row[cols - 1] and last_col[0] must be identical")
    # H = core P_m: the core's first row is H's first row reversed and the
    # core's first column is H's last column
    core = AsymToeplitz.from_first_row_col(first_row[::-1], last_col)
    return AsymHankel(core)


def load_matrix(path) -> AsymToeplitz | AsymHankel | np.ndarray:
    """Read and validate a matrix file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"{path}: invalid JSON: {exc}") from exc
    try:
        return parse_matrix(doc)
    except MatrixFileError as exc:
        raise MatrixFileError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------------------
# canonical writing
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _pairs(values) -> str:
    return "[" + ", ".join(f"[{_fmt(z.real)}, {_fmt(z.imag)}]" for z in values) + "]"


def matrix_to_text(obj) -> str:
    """Canonical file text for a compact or dense matrix."""
    if isinstance(obj, AsymToeplitz):
        body = (f'  "cols": {obj.m},\n'
                f'  "first_col": {_pairs(obj.first_col())},\n'
                f'  "first_row": {_pairs(obj.first_row())},\n'
                f'  "kind": "toeplitz",\n'
                f'  "rows": {obj.n}\n')
    elif isinstance(obj, AsymHankel):
        first_row = obj.core.first_row()[::-1]
        last_col = obj.core.first_col()
        body = (f'  "cols": {obj.m},\n'
                f'  "first_row": {_pairs(first_row)},\n'
                f'  "kind": "hankel",\n'
                f'  "last_col": {_pairs(last_col)},\n'
                f'  "rows": {obj.n}\n')
    else:
        M = as_dense(obj)
        body = (f'  "cols": {M.shape[1]},\n'
                f'  "data": {_pairs(M.ravel())},\n'
                f'  "kind": "dense",\n'
                f'  "rows": {M.shape[0]}\n')
    return "{\n" + body + "}\n"


def save_matrix(path, obj) -> None:
    """Write a matrix file in canonical form."""
    Path(path).write_text(matrix_to_text(obj), encoding="utf-8")
