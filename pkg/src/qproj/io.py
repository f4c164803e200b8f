"""JSON file formats and number formatting used by the CLI.

Complex numbers are stored as ``[re, im]`` pairs; matrices are lists of rows.
A measurement-set file looks like::

    {"dim": 2,
     "operators": [[[[1, 0], [0, 0]], [[0, 0], [0, 0]]], ...],
     "labels": ["z+", ...]}          # optional
"""

from __future__ import annotations

import json
import math
import numbers

import numpy as np

from .errors import ParseError, SchemaError
from .frame import MeasurementSet

__all__ = [
    "parse_measurement_set",
    "dump_measurement_set",
    "parse_matrix",
    "parse_pvector",
    "fmt_real",
    "fmt_complex",
    "real_value",
]


def _reject_constant(name):
    raise ParseError(f"non-finite literal {name} is not allowed")


def _load(text: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def _number(value, path) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise SchemaError(path, f"expected a number, got {type(value).__name__}")
    return float(value)


def _complex_entry(value, path) -> complex:
    if not isinstance(value, list) or len(value) != 2:
        raise SchemaError(path, "expected an [re, im] pair")
    return complex(_number(value[0], f"{path}[0]"), _number(value[1], f"{path}[1]"))


def _matrix(value, path, dim=None) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise SchemaError(path, "expected a non-empty list of rows")
    n = len(value) if dim is None else dim
    if len(value) != n:
        raise SchemaError(path, f"expected {n} rows, got {len(value)}")
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise SchemaError(f"{path}[{i}]", f"expected {n} entries (square matrix), got {got}")
        for j, entry in enumerate(row):
            out[i, j] = _complex_entry(entry, f"{path}[{i}][{j}]")
    return out


def parse_measurement_set(text: str) -> MeasurementSet:
    """Read a measurement-set file.

    Raises
    ------
    ParseError
        Malformed JSON, with line and column.
    SchemaError
        Valid JSON with the wrong layout, naming the offending field.
    """
    doc = _load(text)
    if not isinstance(doc, dict):
        raise SchemaError("$", "expected an object")
    dim = doc.get("dim")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim", "expected a positive integer")
    ops = doc.get("operators")
    if not isinstance(ops, list) or not ops:
        raise SchemaError("operators", "expected a non-empty list of matrices")
    mats = [_matrix(op, f"operators[{k}]", dim) for k, op in enumerate(ops)]
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise SchemaError("labels", "expected a list of strings")
        if len(labels) != len(mats):
            raise SchemaError("labels", f"{len(labels)} labels for {len(mats)} operators")
    return MeasurementSet(mats, labels=tuple(labels) if labels else ())


def _pairs(m: np.ndarray):
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def dump_measurement_set(mset: MeasurementSet) -> str:
    doc = {
        "dim": mset.dim,
        "operators": [_pairs(op) for op in mset.operators],
        "labels": list(mset.labels),
    }
    return json.dumps(doc) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    """A square matrix, either bare or as ``{"matrix": ...}``."""
    doc = _load(text)
    if isinstance(doc, dict):
        if "matrix" not in doc:
            raise SchemaError("matrix", "missing field")
        return _matrix(doc["matrix"], "matrix")
    return _matrix(doc, "$")


def parse_pvector(text: str) -> tuple[np.ndarray, float | None]:
    """A coefficient vector: a bare ``[[re, im], ...]`` array or an object
    ``{"entries": [...], "sigma": s}``.  Returns ``(entries, sigma or None)``."""
    doc = _load(text)
    sigma = None
    path = "$"
    if isinstance(doc, dict):
        if "sigma" in doc:
            sigma = _number(doc["sigma"], "sigma")
        doc = doc.get("entries")
        path = "entries"
    if not isinstance(doc, list) or not doc:
        raise SchemaError(path, "expected a non-empty list of [re, im] pairs")
    return np.array([_complex_entry(v, f"{path}[{i}]") for i, v in enumerate(doc)]), sigma


def _g(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s in ("-0", "0") else s


def real_value(x: float) -> float:
    """Round to 12 significant digits for JSON output."""
    return float(_g(float(x)))


def fmt_real(x: float) -> str:
    if math.isinf(x) or math.isnan(x):
        return repr(float(x))
    return _g(float(x))


def fmt_complex(z: complex) -> str:
    z = complex(z)
    im = _g(abs(z.imag))
    sign = "-" if z.imag < 0 and im != "0" else "+"
    return f"{_g(z.real)}{sign}{im}i"
