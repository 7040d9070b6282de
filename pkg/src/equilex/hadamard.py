"""Exact integer Hadamard matrices of order 2^n and their reduced rows.

Entries are stored as int64, never floats, so the defining identity
H H^T = k I can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SizeError, ValidationError

_MAX_SYLVESTER_N = 20


@dataclass(frozen=True)
class HadamardMatrix:
    order: int
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=np.int64)
        if e.ndim != 2 or e.shape[0] != e.shape[1] or e.shape[0] != self.order:
            raise ValidationError(f"entries must be {self.order}x{self.order}, got shape {e.shape}")
        if not np.all(np.abs(e) == 1):
            raise ValidationError("entries must all be +1 or -1")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)


@dataclass(frozen=True)
class ReducedRows:
    """Rows of a normalized Hadamard matrix with the all-ones column deleted."""

    order: int
    rows: np.ndarray

    def __post_init__(self):
        r = np.array(self.rows, dtype=np.int64)
        if r.shape != (self.order, self.order - 1):
            raise ValidationError(f"expected shape {(self.order, self.order - 1)}, got {r.shape}")
        r.setflags(write=False)
        object.__setattr__(self, "rows", r)


def validate(H: HadamardMatrix) -> None:
    """Raise unless H H^T = k I holds in exact integer arithmetic."""
    k = H.order
    prod = H.entries @ H.entries.T
    if not np.array_equal(prod, k * np.eye(k, dtype=np.int64)):
        raise ValidationError(f"matrix of order {k} fails H H^T = k I")


def sylvester(n: int) -> HadamardMatrix:
    """Order-2^n matrix from the doubling construction [[H,H],[H,-H]]."""
    if int(n) != n or n < 0:
        raise SizeError(f"n must be a nonnegative integer, got {n!r}")
    if n > _MAX_SYLVESTER_N:
        raise SizeError(f"n={n} exceeds the supported limit {_MAX_SYLVESTER_N}")
    H = np.array([[1]], dtype=np.int64)
    for _ in range(int(n)):
        H = np.block([[H, H], [H, -H]])
    return HadamardMatrix(order=2 ** int(n), entries=H)


def normalize_first_column(H: HadamardMatrix) -> HadamardMatrix:
    """Negate rows whose first entry is -1; validates the input first."""
    validate(H)
    signs = H.entries[:, :1]
    return HadamardMatrix(order=H.order, entries=H.entries * signs)


def reduced_rows(H: HadamardMatrix) -> ReducedRows:
    """Delete the first column of a normalized matrix.

    Any two of the resulting k rows differ in exactly k/2 of their k-1
    coordinates, which is what the lifted constructions rely on.
    """
    if not np.all(H.entries[:, 0] == 1):
        raise ValidationError("matrix must be normalized (first column all +1)")
    return ReducedRows(order=H.order, rows=H.entries[:, 1:])


def write_text(H: HadamardMatrix) -> str:
    """Serialize to the plain text interchange format."""
    lines = [f"order {H.order}"]
    for row in H.entries:
        lines.append(" ".join("+1" if x == 1 else "-1" for x in row))
    return "\n".join(lines) + "\n"


def read_text(text: str) -> HadamardMatrix:
    """Parse the plain text format: 'order k' then k lines of k +1/-1 entries.

    The parsed matrix is validated exactly before being returned.
    """
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValidationError("empty Hadamard text")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise ValidationError(f"first line must be 'order k', got {lines[0]!r}")
    try:
        k = int(head[1])
    except ValueError:
        raise ValidationError(f"bad order value {head[1]!r}") from None
    if k < 1:
        raise ValidationError(f"order must be >= 1, got {k}")
    if len(lines) != k + 1:
        raise ValidationError(f"expected {k} entry rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != k:
            raise ValidationError(f"row has {len(toks)} entries, expected {k}")
        try:
            rows.append([int(t) for t in toks])
        except ValueError:
            raise ValidationError(f"non-integer entry in row {ln!r}") from None
    H = HadamardMatrix(order=k, entries=np.array(rows, dtype=np.int64))
    validate(H)
    return H


def read_text_file(path) -> HadamardMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return read_text(fh.read())
