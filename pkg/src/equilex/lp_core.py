"""Core vector arithmetic in finite-dimensional l_p spaces, 1 < p < infinity.

Points are plain 1-D float arrays; point sets are (n, dim) arrays wrapped in
an immutable PointSet together with their ambient space.  All operations are
pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, DomainError

# Inputs are O(1) in this toolkit; rescale only to dodge genuine overflow.
_OVERFLOW_GUARD = 1e100


@dataclass(frozen=True)
class LpSpace:
    """Ambient space: R^dim with the p-norm, p strictly between 1 and infinity."""

    p: float
    dim: int

    def __post_init__(self):
        p = float(self.p)
        if not math.isfinite(p) or p <= 1.0:
            raise DomainError(f"p must be finite and > 1, got {self.p!r}")
        if int(self.dim) != self.dim or self.dim < 1:
            raise DomainError(f"dim must be a positive integer, got {self.dim!r}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "dim", int(self.dim))


def as_point(x, dim: int | None = None) -> np.ndarray:
    """Coerce x to a 1-D float64 vector, optionally checking its length."""
    v = np.asarray(x, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionMismatchError(f"point must be a 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise DomainError("point coordinates must be finite")
    if dim is not None and v.shape[0] != dim:
        raise DimensionMismatchError(f"point has length {v.shape[0]}, expected {dim}")
    return v


@dataclass(frozen=True)
class PointSet:
    """An immutable list of points in a common LpSpace.

    claimed_scale, when present, is the pairwise distance the set is supposed
    to realize; the verifier reports the deviation from it.
    """

    space: LpSpace
    points: np.ndarray
    claimed_scale: float | None = None

    def __post_init__(self):
        pts = np.array(self.points, dtype=np.float64)
        if pts.ndim != 2:
            raise DimensionMismatchError(f"points must form a 2-D array, got shape {pts.shape}")
        if pts.shape[1] != self.space.dim:
            raise DimensionMismatchError(
                f"points have dimension {pts.shape[1]}, space has {self.space.dim}"
            )
        if not np.all(np.isfinite(pts)):
            raise DomainError("point coordinates must be finite")
        if self.claimed_scale is not None and not self.claimed_scale > 0:
            raise DomainError(f"claimed_scale must be positive, got {self.claimed_scale!r}")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return self.points.shape[0]


def _pnorm(v: np.ndarray, p: float) -> float:
    """p-norm of a raw vector; |t|^p with the t=0 branch exactly 0."""
    a = np.abs(v)
    if a.size == 0:
        return 0.0
    m = float(a.max())
    if m > _OVERFLOW_GUARD:
        return m * float(np.sum((a / m) ** p)) ** (1.0 / p)
    return float(np.sum(a**p)) ** (1.0 / p)


def lp_norm(x, space: LpSpace) -> float:
    """Return (sum_i |x_i|^p)^(1/p); zero iff x is the zero vector."""
    v = as_point(x, space.dim)
    return _pnorm(v, space.p)


def lp_dist(x, y, space: LpSpace) -> float:
    """p-norm distance between two points of the same space."""
    vx = as_point(x, space.dim)
    vy = as_point(y, space.dim)
    return _pnorm(vx - vy, space.p)


def kronecker(a, b) -> np.ndarray:
    """Kronecker product of vectors: (a_1*b, a_2*b, ..., a_m*b)."""
    va = np.asarray(a, dtype=np.float64)
    vb = np.asarray(b, dtype=np.float64)
    if va.ndim != 1 or vb.ndim != 1:
        raise DimensionMismatchError("kronecker expects 1-D vectors")
    return np.kron(va, vb)


def scale_set(S: PointSet, c: float) -> PointSet:
    """Scale every point (and the claimed scale) by c > 0."""
    if not c > 0:
        raise DomainError(f"scale factor must be positive, got {c!r}")
    claimed = None if S.claimed_scale is None else S.claimed_scale * c
    return PointSet(S.space, S.points * c, claimed)
