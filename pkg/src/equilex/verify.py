"""Numerical verification of the equilateral and unit-sphere properties.

The pass criterion is relative spread of the pairwise distances, so reports
are scale-free; sets at scale 2^(1/p), 2 or 1 verify identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSetError, DomainError
from .lp_core import PointSet

# Below root-finder noise, above float noise.
_DUPLICATE_EPS = 1e-14


@dataclass(frozen=True)
class EquilateralReport:
    n: int
    min_dist: float
    max_dist: float
    max_rel_dev: float
    scale_estimate: float
    tol: float
    passed: bool
    sphere_max_dev: float | None = None
    claimed_scale_rel_dev: float | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min_dist": self.min_dist,
            "max_dist": self.max_dist,
            "max_rel_dev": self.max_rel_dev,
            "scale_estimate": self.scale_estimate,
            "tol": self.tol,
            "pass": self.passed,
            "sphere_max_dev": self.sphere_max_dev,
            "claimed_scale_rel_dev": self.claimed_scale_rel_dev,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def distance_matrix(S: PointSet) -> np.ndarray:
    """Symmetric matrix of pairwise p-norm distances with a zero diagonal."""
    if len(S) < 2:
        raise DomainError(f"need at least 2 points, got {len(S)}")
    X = S.points
    p = S.space.p
    diff = np.abs(X[:, None, :] - X[None, :, :])
    D = (diff**p).sum(axis=2) ** (1.0 / p)
    np.fill_diagonal(D, 0.0)
    return D


def check_equilateral(S: PointSet, tol: float = 1e-9, check_sphere: bool = False) -> EquilateralReport:
    """Measure how far S is from being equilateral (and unit-norm if asked)."""
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    D = distance_matrix(S)
    iu = np.triu_indices(len(S), 1)
    dists = D[iu]
    d_min = float(dists.min())
    d_max = float(dists.max())
    if d_min < _DUPLICATE_EPS:
        raise DegenerateSetError(f"duplicate points: minimum pairwise distance {d_min:.3e}")
    scale = float(dists.mean())
    rel = (d_max - d_min) / d_min

    sphere_dev = None
    if check_sphere:
        norms = (np.abs(S.points) ** S.space.p).sum(axis=1) ** (1.0 / S.space.p)
        sphere_dev = float(np.abs(norms - 1.0).max())

    claimed_dev = None
    if S.claimed_scale is not None:
        claimed_dev = abs(scale - S.claimed_scale) / S.claimed_scale

    passed = rel <= tol and (sphere_dev is None or sphere_dev <= tol)
    return EquilateralReport(
        n=len(S),
        min_dist=d_min,
        max_dist=d_max,
        max_rel_dev=rel,
        scale_estimate=scale,
        tol=tol,
        passed=passed,
        sphere_max_dev=sphere_dev,
        claimed_scale_rel_dev=claimed_dev,
    )
