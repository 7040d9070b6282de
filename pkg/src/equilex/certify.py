"""Rank certificates for the polynomial family attached to an equilateral set.

For an even integer exponent p and a set S rescaled to common distance 1,
each point a contributes the polynomial

    -1 + ||x - a||_p^p
      = (-1 + ||a||_p^p) + sum_i x_i^p + sum_i sum_{m<p} C(p,m)(-a_i)^(p-m) x_i^m

whose coefficients live in the span of the basis

    [ 1 | x_1^1 .. x_1^(p-1) | ... | x_d^1 .. x_d^(p-1) | sum_i x_i^p ]

of dimension (p-1)d + 2.  The family of all these polynomials, the constant
1, and the pure monomials x_i^m for m <= k (k = p/2 when 4 | p, else p/2 - 1)
is stacked into a matrix; full numerical row rank certifies its linear
independence, which caps |S| at (p-1)d + 2 - 1 - k d for sets of this kind.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSetError, DomainError, ValidationError
from .lp_core import PointSet, as_point
from .verify import distance_matrix

_EQUILATERAL_TOL = 1e-8
_DUPLICATE_EPS = 1e-14
_DEFAULT_SVD_TOL = 1e-8


@dataclass(frozen=True)
class PolyCoeffVector:
    """Coefficients of one -1 + ||x-a||_p^p over the fixed monomial basis."""

    constant: float
    power_sum_coeff: float
    mono: np.ndarray  # (d, p-1); mono[i, m-1] multiplies x_i^m

    def __post_init__(self):
        m = np.array(self.mono, dtype=np.float64)
        m.setflags(write=False)
        object.__setattr__(self, "mono", m)

    def flatten(self) -> np.ndarray:
        """Basis order: constant, then x_i^m grouped by i, then the p-power sum."""
        return np.concatenate(([self.constant], self.mono.ravel(), [self.power_sum_coeff]))


@dataclass(frozen=True)
class RankCertificate:
    family_size: int
    ambient_dim: int
    numerical_rank: int
    k_used: int
    singular_value_gap: float
    certified: bool
    implied_bound: int
    singular_values: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "family_size": self.family_size,
            "ambient_dim": self.ambient_dim,
            "numerical_rank": self.numerical_rank,
            "k_used": self.k_used,
            "singular_value_gap": self.singular_value_gap,
            "certified": self.certified,
            "implied_bound": self.implied_bound,
            "singular_values": list(self.singular_values),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _even_p(p) -> int:
    if float(p) != int(p):
        raise DomainError(f"p must be an even integer >= 4, got {p!r}")
    q = int(p)
    if q % 2 != 0 or q < 4:
        raise DomainError(f"p must be an even integer >= 4, got {p!r}")
    return q


def monomial_k(p: int) -> int:
    """How many pure monomial degrees join the family: p/2 when 4 | p, else p/2 - 1."""
    return p // 2 if p % 4 == 0 else p // 2 - 1


def pa_coefficients(a, p) -> PolyCoeffVector:
    """Expand -1 + ||x-a||_p^p over the monomial basis (even integer p)."""
    q = _even_p(p)
    av = as_point(a)
    d = av.shape[0]
    mono = np.empty((d, q - 1))
    for m in range(1, q):
        mono[:, m - 1] = math.comb(q, m) * (-av) ** (q - m)
    return PolyCoeffVector(
        constant=-1.0 + float(np.sum(av**q)),
        power_sum_coeff=1.0,
        mono=mono,
    )


def evaluate_basis(x, p) -> np.ndarray:
    """Monomial basis evaluated at x, in the same order as flatten()."""
    q = _even_p(p)
    xv = as_point(x)
    powers = np.stack([xv**m for m in range(1, q)], axis=1)  # (d, p-1)
    return np.concatenate(([1.0], powers.ravel(), [float(np.sum(xv**q))]))


def _rescaled_to_unit_distance(S: PointSet) -> np.ndarray:
    """Scale S so its common distance is 1, tolerating exact duplicates.

    Duplicate points are allowed through: they produce identical coefficient
    rows and the certificate comes back uncertified, which is the honest
    verdict.  A genuinely non-equilateral set is rejected instead, since the
    expansion above assumes nothing else.
    """
    D = distance_matrix(S)
    iu = np.triu_indices(len(S), 1)
    dists = D[iu]
    positive = dists[dists >= _DUPLICATE_EPS]
    if positive.size == 0:
        raise DegenerateSetError("all points coincide; no distance scale to certify at")
    d_min = float(positive.min())
    d_max = float(positive.max())
    if (d_max - d_min) / d_min > _EQUILATERAL_TOL:
        raise ValidationError(
            f"set is not equilateral within {_EQUILATERAL_TOL}: "
            f"relative distance spread {(d_max - d_min) / d_min:.3e}"
        )
    return S.points / float(positive.mean())


def family_matrix(S: PointSet, p) -> np.ndarray:
    """Stack the coefficient rows of the full polynomial family.

    Rows: one per point of S (after internal rescaling to distance 1), one
    for the constant 1, and one per pure monomial x_i^m with m <= monomial_k(p).
    Columns follow the flatten() basis order; shape (|S|+1+kd, (p-1)d+2).
    """
    q = _even_p(p)
    X = _rescaled_to_unit_distance(S)
    n, d = X.shape
    k = monomial_k(q)
    cols = (q - 1) * d + 2
    rows = np.zeros((n + 1 + k * d, cols))
    for idx in range(n):
        rows[idx] = pa_coefficients(X[idx], q).flatten()
    rows[n, 0] = 1.0
    at = n + 1
    for i in range(d):
        for m in range(1, k + 1):
            rows[at, 1 + i * (q - 1) + (m - 1)] = 1.0
            at += 1
    return rows


def certify_rank(S: PointSet, p, tol: float = _DEFAULT_SVD_TOL) -> RankCertificate:
    """SVD rank certificate: certified iff the family has full row rank.

    Rank counts singular values above tol * sigma_max.  A certified result
    witnesses that this configuration cannot be extended past the implied
    point-count bound.
    """
    q = _even_p(p)
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    M = family_matrix(S, q)
    d = S.space.dim
    k = monomial_k(q)
    sv = np.linalg.svd(M, compute_uv=False)
    s_max = float(sv[0]) if sv.size else 0.0
    rank = int(np.sum(sv > tol * s_max)) if s_max > 0 else 0
    if rank == 0:
        gap = 0.0
    elif rank == sv.size:
        gap = math.inf
    else:
        gap = float(sv[rank - 1] / sv[rank])
    family_size = M.shape[0]
    ambient = M.shape[1]
    return RankCertificate(
        family_size=family_size,
        ambient_dim=ambient,
        numerical_rank=rank,
        k_used=k,
        singular_value_gap=gap,
        certified=rank == family_size,
        implied_bound=ambient - 1 - k * d,
        singular_values=tuple(float(s) for s in sv),
    )
