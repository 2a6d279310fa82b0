"""JSON field files.

A field file is a single JSON document:

    {
      "format_version": 1,
      "rank": 0 | 1 | 2,
      "dims": [N1, N2, N3, N4],
      "boundary": "periodic" | "zero",
      "metric": "euclid" | "mink" | null,
      "algebra": "su2" | "sl2c" | "general",
      "data": [[re, im], [re, im], ...]
    }

Data entries are float-64 pairs in canonical order: sites row-major over
(k1, k2, k3, k4), then the component axis (rank 1) or the canonical plane
order 12, 13, 14, 23, 24, 34 (rank 2), then row-major 2x2 matrix entries.
Round-trips are bitwise exact (Python's JSON float text is shortest
round-trip decimal).
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .cochain import ALGEBRA_KINDS, ConnectionField, CurvatureField, Field, GaugeField
from .hodge import METRICS
from .lattice import BOUNDARIES, Window

FORMAT_VERSION = 1

_RANK_TO_CLASS = {0: GaugeField, 1: ConnectionField, 2: CurvatureField}


class FieldIOError(Exception):
    """Base class for field file errors."""


class FieldFormatError(FieldIOError):
    """Malformed document: missing or ill-typed metadata."""


class FieldVersionError(FieldIOError):
    """Unsupported format_version."""


class FieldShapeError(FieldIOError):
    """Metadata and data length disagree."""


def save(field: Field, path) -> None:
    flat = field.data.reshape(-1)
    doc = {
        "format_version": FORMAT_VERSION,
        "rank": field.rank,
        "dims": list(field.window.dims),
        "boundary": field.window.boundary,
        "metric": field.metric,
        "algebra": field.algebra,
        "data": [[z.real, z.imag] for z in flat],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load(path) -> Field:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FieldFormatError(f"not valid JSON: {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise FieldFormatError("document root must be a JSON object")

    version = _require(doc, "format_version")
    if version != FORMAT_VERSION:
        raise FieldVersionError(
            f"format_version {version!r} unsupported (expected {FORMAT_VERSION})"
        )
    rank = _require(doc, "rank")
    if rank not in _RANK_TO_CLASS:
        raise FieldFormatError(f"rank must be 0, 1 or 2, got {rank!r}")
    dims = _require(doc, "dims")
    if (
        not isinstance(dims, list)
        or len(dims) != 4
        or not all(isinstance(n, int) and n > 0 for n in dims)
    ):
        raise FieldFormatError(f"dims must be four positive integers, got {dims!r}")
    boundary = _require(doc, "boundary")
    if boundary not in BOUNDARIES:
        raise FieldFormatError(f"boundary must be one of {BOUNDARIES}, got {boundary!r}")
    metric = doc.get("metric")
    if metric is not None and metric not in METRICS:
        raise FieldFormatError(f"metric must be one of {METRICS} or null, got {metric!r}")
    algebra = _require(doc, "algebra")
    if algebra not in ALGEBRA_KINDS:
        raise FieldFormatError(
            f"algebra must be one of {ALGEBRA_KINDS}, got {algebra!r}"
        )
    raw = _require(doc, "data")
    if not isinstance(raw, list):
        raise FieldFormatError("data must be a list of [re, im] pairs")

    cls = _RANK_TO_CLASS[rank]
    slots = cls.slots if cls.slots else 1
    n_expected = dims[0] * dims[1] * dims[2] * dims[3] * slots * 4
    if len(raw) != n_expected:
        raise FieldShapeError(
            f"data length {len(raw)} does not match dims {dims} for rank {rank} "
            f"(expected {n_expected} entries)"
        )
    try:
        pairs = np.asarray(raw, dtype=float)
    except (TypeError, ValueError) as exc:
        raise FieldFormatError(f"data entries must be numeric pairs: {exc}") from exc
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise FieldFormatError("data entries must be [re, im] pairs")
    values = pairs[:, 0] + 1j * pairs[:, 1]
    shape = tuple(dims) + ((cls.slots, 2, 2) if cls.slots else (2, 2))
    window = Window(tuple(dims), boundary)
    field = cls(window, values.reshape(shape), algebra=algebra, metric=metric)
    return field


def _require(doc: dict, key: str):
    if key not in doc:
        raise FieldFormatError(f"missing metadata key {key!r}")
    return doc[key]


def load_rank(path, rank: int) -> Field:
    """Load and insist on a specific cochain rank."""
    field = load(Path(path))
    if field.rank != rank:
        raise FieldIOError(f"expected a rank-{rank} field, got rank {field.rank}: {path}")
    return field
