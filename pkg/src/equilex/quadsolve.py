"""Planar unit-vector pairs u, v with ||u+v||_p = ||u-v||_p equal to a target.

For 1 < p < 2 the achievable targets form the interval
[2^(1-1/p), 2^(1/p)].  The pair is parametrized by a single number s:

    u(s) = (s, (1 - s^p)^(1/p)),      s in [2^(-1/p), 1]
    v(s) = (-u_2, u_1)

The quarter-turn v makes ||u+v||_p and ||u-v||_p equal identically (both
are (|u_1-u_2|^p + (u_1+u_2)^p)^(1/p)), so hitting a target side length
reduces to a one-dimensional root-find in s.  The endpoint s values give
the two closed-form pairs; intermediate targets are reached by bisection,
which only needs the sign change between the endpoints, not monotonicity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError

# Targets within this distance of an interval endpoint snap to the
# closed-form endpoint pair; also absorbs 1-ulp rounding of computed targets.
_ENDPOINT_TIE = 1e-14

_BISECT_TOL = 1e-13
_BISECT_MAX_ITERS = 200


@dataclass(frozen=True)
class QuadSolution:
    """A realized pair: ||u||_p = ||v||_p = 1 and ||u+v||_p = ||u-v||_p = lam."""

    p: float
    lam: float
    u: np.ndarray
    v: np.ndarray
    s: float

    def __post_init__(self):
        u = np.array(self.u, dtype=np.float64)
        v = np.array(self.v, dtype=np.float64)
        u.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)


def _check_p(p: float) -> None:
    if not (1.0 < p < 2.0):
        raise DomainError(f"p must lie strictly between 1 and 2, got {p!r}")


def lambda_range(p: float) -> tuple[float, float]:
    """Achievable side lengths: [2^(1-1/p), 2^(1/p)]."""
    _check_p(p)
    return 2.0 ** (1.0 - 1.0 / p), 2.0 ** (1.0 / p)


def lambda_of(s: float, p: float) -> float:
    """Side length ||u(s)+v(s)||_p = (|s-y|^p + (s+y)^p)^(1/p), y = (1-s^p)^(1/p)."""
    _check_p(p)
    s_lo = 2.0 ** (-1.0 / p)
    if not (s_lo <= s <= 1.0):
        raise RangeError(f"s={s!r} outside [{s_lo}, 1]", lo=s_lo, hi=1.0)
    y = (1.0 - s**p) ** (1.0 / p)
    return (abs(s - y) ** p + (s + y) ** p) ** (1.0 / p)


def _from_s(p: float, lam: float, s: float) -> QuadSolution:
    y = (1.0 - s**p) ** (1.0 / p)
    u = np.array([s, y])
    v = np.array([-y, s])
    return QuadSolution(p=p, lam=lam, u=u, v=v, s=s)


def solve(p: float, lam: float) -> QuadSolution:
    """Find unit vectors u, v with ||u+v||_p = ||u-v||_p = lam.

    Endpoint targets return the closed-form pairs exactly; anything else is
    bisected to |lambda_of(s) - lam| < 1e-13 (or 200 halvings).
    """
    _check_p(p)
    lo, hi = lambda_range(p)
    if abs(lam - hi) <= _ENDPOINT_TIE:
        return QuadSolution(p=p, lam=lam, u=np.array([1.0, 0.0]), v=np.array([0.0, 1.0]), s=1.0)
    if abs(lam - lo) <= _ENDPOINT_TIE:
        h = 0.5 ** (1.0 / p)
        return QuadSolution(p=p, lam=lam, u=np.array([h, h]), v=np.array([-h, h]), s=h)
    if not (lo <= lam <= hi):
        raise RangeError(
            f"lambda={lam!r} outside the achievable interval [{lo}, {hi}] for p={p}",
            lo=lo,
            hi=hi,
        )
    # g(a) <= 0 <= g(b) by the endpoint values, so a sign change is bracketed.
    a = 2.0 ** (-1.0 / p)
    b = 1.0
    mid = 0.5 * (a + b)
    for _ in range(_BISECT_MAX_ITERS):
        mid = 0.5 * (a + b)
        g = lambda_of(mid, p) - lam
        if abs(g) < _BISECT_TOL:
            break
        if g < 0.0:
            a = mid
        else:
            b = mid
    return _from_s(p, lam, mid)
