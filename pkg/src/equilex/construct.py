"""Equilateral-set constructions.

All constructions return a PointSet whose claimed_scale is the common
pairwise distance as built: 2^(1/p) for the simplex, the Hadamard lift and
its block compositions, and 2 for the six-point set in dimension 4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quadsolve
from .bounds import k_of_p
from .errors import DomainError, RangeError, ValidationError
from .hadamard import HadamardMatrix, normalize_first_column, reduced_rows, sylvester
from .lp_core import LpSpace, PointSet
from .verify import check_equilateral

_LOG52 = math.log(5.0 / 2.0) / math.log(2.0)
_BOUNDARY_SLACK = 1e-12
_BASE_CHECK_TOL = 1e-9


@dataclass(frozen=True)
class Prop2Params:
    """Derived quantities of the Hadamard lift at order k and exponent p.

    lam is the side length requested from the planar solver, mu the
    magnitude of the leading coordinate, p_lo/p_hi the admissible exponent
    interval for this order.
    """

    k: int
    p: float
    lam: float
    mu: float
    p_lo: float
    p_hi: float


@dataclass(frozen=True)
class CompositionPlan:
    """Block layout for composing a base set in dimension k into dimension d."""

    k: int
    d: int
    m: int
    r: int


def composition_plan(k: int, d: int) -> CompositionPlan:
    if d < k:
        raise RangeError(f"target dimension {d} is below the base dimension {k}", lo=k, hi=None)
    m = d // k
    return CompositionPlan(k=k, d=d, m=m, r=d - k * m)


def simplex_multiplier(p: float, d: int) -> float:
    """The t <= 0 with |1-t|^p + (d-1)|t|^p = 2.

    Appending t*(1,...,1) to the standard basis vectors then keeps every
    pairwise distance at 2^(1/p).
    """
    if not p > 1:
        raise DomainError(f"p must be > 1, got {p!r}")
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d!r}")

    def f(t: float) -> float:
        return abs(1.0 - t) ** p + (d - 1) * abs(t) ** p - 2.0

    lo = -1.0
    while f(lo) < 0.0:
        lo *= 2.0
    hi = 0.0  # f(0) = -1 < 0 <= f(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def standard_simplex(p: float, d: int) -> PointSet:
    """d+1 points at pairwise distance 2^(1/p): the basis plus t*(1,...,1)."""
    t = simplex_multiplier(p, d)
    pts = np.vstack([np.eye(d), np.full((1, d), t)])
    return PointSet(LpSpace(p, d), pts, claimed_scale=2.0 ** (1.0 / p))


def prop2_params(p: float, k: int) -> Prop2Params:
    """Side length and leading coordinate for the order-k Hadamard lift."""
    if k < 2 or k % 2 != 0:
        raise ValidationError(f"Hadamard order must be even and >= 2, got {k}")
    p_lo = 2.0 + math.log2(1.0 - 1.0 / k)
    p_hi = 2.0 + math.log2(1.0 - 1.0 / (2.0 * k))
    if not p > 1.0:
        raise DomainError(f"p must be > 1, got {p!r}")
    if p < p_lo - _BOUNDARY_SLACK or p > p_hi + _BOUNDARY_SLACK:
        raise RangeError(
            f"p={p!r} outside the admissible interval [{p_lo}, {p_hi}] for order {k}",
            lo=p_lo,
            hi=p_hi,
        )
    lam = 2.0 * (((3.0 - 2.0 ** (p - 1.0)) * k - 2.0) / (2.0 * (k - 1.0))) ** (1.0 / p)
    mu_rad = (2.0 ** (p - 2.0) - 1.0) * k + 1.0
    if mu_rad < 0.0:
        # only 1-ulp dust at the lower p endpoint survives the range check
        mu_rad = 0.0
    return Prop2Params(k=k, p=p, lam=lam, mu=mu_rad ** (1.0 / p), p_lo=p_lo, p_hi=p_hi)


def prop2_lift(p: float, H: HadamardMatrix) -> PointSet:
    """Lift an order-k Hadamard matrix to 2k unit vectors in dimension 2k-1
    at pairwise distance 2^(1/p).

    Rows are (mu, w_i (x) u) and (-mu, w_i (x) v) where w_i are the reduced
    rows, (u, v) the planar pair at side lam, then everything is scaled by
    (2^(p-2) k)^(-1/p) onto the unit sphere.
    """
    params = prop2_params(p, H.order)
    k = H.order
    W = reduced_rows(normalize_first_column(H)).rows.astype(np.float64)
    sol = quadsolve.solve(p, params.lam)
    top = np.hstack([np.full((k, 1), params.mu), np.kron(W, sol.u.reshape(1, 2))])
    bot = np.hstack([np.full((k, 1), -params.mu), np.kron(W, sol.v.reshape(1, 2))])
    pts = np.vstack([top, bot]) * (2.0 ** (p - 2.0) * k) ** (-1.0 / p)
    return PointSet(LpSpace(p, 2 * k - 1), pts, claimed_scale=2.0 ** (1.0 / p))


def _check_base(base: PointSet) -> None:
    k = base.space.dim
    if len(base) != k + 1:
        raise ValidationError(f"base must have dim+1 = {k + 1} points, got {len(base)}")
    rep = check_equilateral(base, tol=_BASE_CHECK_TOL, check_sphere=True)
    target = 2.0 ** (1.0 / base.space.p)
    if not rep.passed:
        raise ValidationError(
            f"base is not a unit-vector equilateral set at tolerance {_BASE_CHECK_TOL} "
            f"(max_rel_dev={rep.max_rel_dev:.3e}, sphere_max_dev={rep.sphere_max_dev:.3e})"
        )
    if abs(rep.scale_estimate - target) / target > _BASE_CHECK_TOL:
        raise ValidationError(
            f"base pairwise distance {rep.scale_estimate!r} is not 2^(1/p) = {target!r}"
        )


def compose(base: PointSet, d: int) -> PointSet:
    """Tile floor(d/k) copies of a unit-sphere base set of dimension k into
    disjoint coordinate blocks, plus standard unit vectors in the remainder.

    Distinct blocks sit at distance (1+1)^(1/p) = 2^(1/p) automatically, so
    the union of d + floor(d/k) points stays 2^(1/p)-equilateral.
    """
    _check_base(base)
    k = base.space.dim
    plan = composition_plan(k, d)
    p = base.space.p
    n_out = plan.m * (k + 1) + plan.r
    pts = np.zeros((n_out, d))
    row = 0
    for i in range(plan.m):
        pts[row : row + k + 1, i * k : (i + 1) * k] = base.points
        row += k + 1
    for j in range(plan.r):
        pts[row, plan.m * k + j] = 1.0
        row += 1
    return PointSet(LpSpace(p, d), pts, claimed_scale=2.0 ** (1.0 / p))


def theorem2(p: float, d: int) -> PointSet:
    """End-to-end pipeline for 1 < p < 2: Sylvester matrix of order 2^k,
    Hadamard lift, block composition into dimension d.

    The output has exactly floor(2^(k+1) d / (2^(k+1) - 1)) points with
    k = k_of_p(p).
    """
    if not (1.0 < p < 2.0):
        raise DomainError(f"p must lie strictly between 1 and 2, got {p!r}")
    k = k_of_p(p)
    base_dim = 2 ** (k + 1) - 1
    if d < base_dim:
        raise RangeError(
            f"d={d} is too small for one block at p={p}; need d >= {base_dim}",
            lo=base_dim,
            hi=None,
        )
    base = prop2_lift(p, sylvester(k))
    return compose(base, d)


def theorem3(p: float) -> PointSet:
    """Six points in dimension 4 at pairwise distance 2, for
    1 < p <= log(5/2)/log(2).

    The set is (mu, +-u, 0), (-mu, +-v, 0), (0, 0, 0, +-1) with
    mu = (2^p - 2)^(1/p) and the planar pair (u, v) at side 2(3 - 2^p)^(1/p).
    """
    if not (1.0 < p <= _LOG52 + _BOUNDARY_SLACK):
        raise RangeError(
            f"p={p!r} outside the admissible interval (1, {_LOG52}]", lo=1.0, hi=_LOG52
        )
    lam = 2.0 * (3.0 - 2.0**p) ** (1.0 / p)
    mu = (2.0**p - 2.0) ** (1.0 / p)
    sol = quadsolve.solve(p, lam)
    u1, u2 = sol.u
    v1, v2 = sol.v
    pts = np.array(
        [
            [mu, u1, u2, 0.0],
            [mu, -u1, -u2, 0.0],
            [-mu, v1, v2, 0.0],
            [-mu, -v1, -v2, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 0.0, -1.0],
        ]
    )
    return PointSet(LpSpace(p, 4), pts, claimed_scale=2.0)
