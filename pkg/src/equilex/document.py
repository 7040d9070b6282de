"""Point-set interchange format: JSON documents and headerless CSV export.

The JSON payload round-trips losslessly: floats are serialized as shortest
round-trip decimals, so parse(serialize(x)) is bit-identical.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import ValidationError
from .lp_core import LpSpace, PointSet

FORMAT_VERSION = 1


def to_document(S: PointSet, provenance: dict | None = None) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "p": S.space.p,
        "dim": S.space.dim,
        "claimed_scale": S.claimed_scale,
        "points": [[float(x) for x in row] for row in S.points],
        "provenance": provenance or {},
    }


def from_document(doc: dict) -> tuple[PointSet, dict]:
    """Parse a document dict back into (PointSet, provenance)."""
    if not isinstance(doc, dict):
        raise ValidationError("point-set document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(f"unsupported format_version {version!r}")
    for key in ("p", "dim", "points"):
        if key not in doc:
            raise ValidationError(f"document missing required key {key!r}")
    dim = doc["dim"]
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise ValidationError("'points' must be a non-empty array of coordinate rows")
    for row in points:
        if not isinstance(row, list) or len(row) != dim:
            raise ValidationError(f"every point must have length dim={dim}")
    space = LpSpace(float(doc["p"]), int(dim))
    claimed = doc.get("claimed_scale")
    ps = PointSet(space, np.array(points, dtype=np.float64), claimed)
    provenance = doc.get("provenance") or {}
    return ps, provenance


def dumps(S: PointSet, provenance: dict | None = None, indent: int | None = 2) -> str:
    return json.dumps(to_document(S, provenance), indent=indent)


def loads(text: str) -> tuple[PointSet, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from None
    return from_document(doc)


def save(S: PointSet, path, provenance: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(S, provenance))
        fh.write("\n")


def load(path) -> tuple[PointSet, dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def save_csv(S: PointSet, path) -> None:
    """Headerless CSV, one point per row, shortest round-trip decimals."""
    with open(path, "w", encoding="utf-8") as fh:
        for row in S.points:
            fh.write(",".join(repr(float(x)) for x in row))
            fh.write("\n")
