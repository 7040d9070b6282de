"""Every explicit bound on the maximum equilateral-set size e(l_p^d).

Sources are tagged so reports stay auditable:

  lower: simplex, theorem2, theorem3, exact_dim2, exact_p2, exact_dim1
  upper: theorem1, galvin, petty, exact_dim2, exact_p2, exact_dim1

Asymptotic bounds whose constants are not pinned down anywhere are carried
as textual notes only and never evaluated to numbers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError

_LOG52 = math.log(5.0 / 2.0) / math.log(2.0)

# Absolute slack on dyadic interval comparisons; keeps boundary exponents
# such as p = log(3)/log(2) (a closed right endpoint) on the closed side
# when 2^(p-2) rounds one ulp past the exact boundary.
_BOUNDARY_SLACK = 1e-12


class Bound(NamedTuple):
    value: int
    source: str


@dataclass(frozen=True)
class BoundsReport:
    p: float
    d: int
    lower_bounds: tuple[Bound, ...]
    upper_bounds: tuple[Bound, ...]
    best_lower: int
    best_upper: int
    exact: bool
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "lower_bounds": [{"value": b.value, "source": b.source} for b in self.lower_bounds],
            "upper_bounds": [{"value": b.value, "source": b.source} for b in self.upper_bounds],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "exact": self.exact,
            "notes": list(self.notes),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _even_integer(p: float) -> int | None:
    """The exact even integer p represents, or None.  No tolerance rounding."""
    if float(p) == int(p) and int(p) % 2 == 0:
        return int(p)
    return None


def k_of_p(p: float) -> int:
    """Block parameter for 1 < p < 2: ceil(log2(1/(1-2^(p-2)))) - 1.

    Evaluated as the smallest k >= 1 with 2^(p-2) <= 1 - 2^(-k-1); the
    comparands are exact dyadics, which avoids compounding rounding through
    the logarithm at interval boundaries.
    """
    if not (1.0 < p < 2.0):
        raise DomainError(f"p must lie strictly between 1 and 2, got {p!r}")
    x = 2.0 ** (p - 2.0)
    for k in range(1, 64):
        if x <= 1.0 - 0.5 ** (k + 1) + _BOUNDARY_SLACK:
            return k
    raise DomainError(f"no block parameter for p={p!r}")  # unreachable for float p < 2


def theorem2_value(p: float, d: int) -> int:
    """floor(2^(k+1) d / (2^(k+1) - 1)) with k = k_of_p(p), in exact integers."""
    k = k_of_p(p)
    block = 2 ** (k + 1) - 1
    return d + d // block


def theorem1_value(p_even: int, d: int) -> int:
    """(p/2-1)d+1 when 4 | p, else (p/2)d+1."""
    half = p_even // 2
    return (half - 1) * d + 1 if p_even % 4 == 0 else half * d + 1


def report(p: float, d: int) -> BoundsReport:
    """Assemble all applicable bounds on e(l_p^d) with source tags."""
    p = float(p)
    if not math.isfinite(p) or p <= 1.0:
        raise DomainError(f"p must be finite and > 1, got {p!r}")
    if int(d) != d or d < 1:
        raise DomainError(f"d must be a positive integer, got {d!r}")
    d = int(d)

    lowers: list[Bound] = [Bound(d + 1, "simplex")]
    uppers: list[Bound] = []
    notes: list[str] = []
    even = _even_integer(p)

    if d == 1:
        lowers.append(Bound(2, "exact_dim1"))
        uppers.append(Bound(2, "exact_dim1"))
    if d == 2:
        lowers.append(Bound(3, "exact_dim2"))
        uppers.append(Bound(3, "exact_dim2"))
    if p == 2.0:
        lowers.append(Bound(d + 1, "exact_p2"))
        uppers.append(Bound(d + 1, "exact_p2"))

    if 1.0 < p < 2.0:
        lowers.append(Bound(theorem2_value(p, d), "theorem2"))
        if d == 4 and p <= _LOG52 + _BOUNDARY_SLACK:
            lowers.append(Bound(6, "theorem3"))

    if d >= 2:
        uppers.append(Bound(2**d - 1, "petty"))
    if even is not None and even >= 2:
        uppers.append(Bound(theorem1_value(even, d), "theorem1"))
        uppers.append(Bound(1 + (even - 1) * d, "galvin"))

    notes.append(
        "Known asymptotic upper bounds with unspecified constants, not evaluated "
        "numerically: c*p*d^((p+1)/(p-1)) and c_p*d^((2p+2)/(2p-1))."
    )
    if float(p) == int(p) and int(p) % 2 == 1:
        notes.append(
            "For odd integer p an upper bound c_p*d*log(d) with unspecified "
            "constant c_p applies; not evaluated numerically."
        )
    if even is None and 2.0 < p and abs(p - 4.0) <= 1.0:
        notes.append(
            "e(l_p^d) = d+1 holds for p in some interval around 4 whose size is "
            "not quantified; exactness at this p is unknown."
        )

    # uppers is never empty: d=1 has exact_dim1, d>=2 has petty
    best_lower = max(b.value for b in lowers)
    best_upper = min(b.value for b in uppers)
    return BoundsReport(
        p=p,
        d=d,
        lower_bounds=tuple(lowers),
        upper_bounds=tuple(uppers),
        best_lower=best_lower,
        best_upper=best_upper,
        exact=best_lower == best_upper,
        notes=tuple(notes),
    )
