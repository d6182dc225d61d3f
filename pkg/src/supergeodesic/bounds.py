"""Distance bounds in terms of intersection number.

Three upper bounds on the curve-complex distance of two curves meeting
``I`` times on a closed genus-g surface are compared:

* the intersection growth inequality (IGI), exponential in distance with a
  genus-dependent base,
* Hempel's genus-free bound ``2 + 2 log2 I``,
* Bowditch's bound, which needs ``|chi| >= 5`` and is strict.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Optional

from .errors import NotApplicable, OutOfRange
from .lip import verify_igi_base

TOLERANCE = 1e-9
CROSSOVER_CEILING = 2**64


def igi_floor(g: int) -> int:
    """Smallest distance at which the growth inequality applies."""
    if g < 2:
        raise OutOfRange("genus must be at least 2")
    return 4 if g == 2 else 3


def igi_min_intersection(g: int, d: int) -> int:
    """Least possible intersection number of two curves at distance ``d``."""
    floor = igi_floor(g)
    if d < floor:
        raise OutOfRange(f"genus {g} needs distance >= {floor}, got {d}")
    return verify_igi_base(g) << (d - floor)


def igi_distance_bound(g: int, intersections: int) -> int:
    """Largest distance compatible with ``intersections`` under the IGI.

    Uses integer doubling only.  Below the base constant the inequality says
    nothing, and ``igi_floor(g) - 1`` is returned; see :func:`igi_below_range`.
    """
    if intersections < 1:
        raise OutOfRange("intersection number must be positive")
    d = igi_floor(g)
    need = verify_igi_base(g)
    if intersections < need:
        return d - 1
    while need * 2 <= intersections:
        need *= 2
        d += 1
    return d


def igi_below_range(g: int, intersections: int) -> bool:
    return intersections < verify_igi_base(g)


def igi_real_bound(g: int, intersections: int) -> float:
    """Real form of the IGI bound: ``2 + log2(I / (g - 1/2))``, or its genus 2 analogue."""
    if g == 2:
        return 4 + math.log2(intersections / 12)
    if g < 2:
        raise OutOfRange("genus must be at least 2")
    return 2 + math.log2(intersections / (g - 0.5))


def hempel_bound(intersections: int) -> float:
    if intersections < 1:
        raise OutOfRange("intersection number must be positive")
    return 2 + 2 * math.log2(intersections)


def bowditch_bound(g: int, p: int, intersections: int) -> float:
    """Bowditch's strict upper bound on distance, for ``S_{g,p}``."""
    chi = abs(2 - 2 * g - p)
    if chi < 5:
        raise NotApplicable(f"|chi(S_{g},{p})| = {chi} < 5")
    denominator = math.log2((chi - 2) / 2)
    if denominator <= 0:
        raise NotApplicable("log2((|chi| - 2) / 2) is not positive")
    if intersections < 1:
        raise OutOfRange("intersection number must be positive")
    return 2 + 2 * math.log2(intersections / 2) / denominator


def strict_to_integer(bound: float) -> int:
    """Largest integer strictly below ``bound``."""
    return math.ceil(bound - TOLERANCE) - 1


@dataclass(frozen=True)
class BoundReport:
    genus: int
    intersections: int
    igi_distance: int
    igi_below_range: bool
    igi_real: float
    hempel_distance: float
    hempel_integer: int
    bowditch_distance: Optional[float]
    bowditch_integer: Optional[int]
    bowditch_reason: Optional[str]
    tightest: str

    def to_json(self) -> dict:
        return asdict(self)


def compare_bounds(g: int, intersections: int) -> BoundReport:
    """Evaluate every applicable bound for a closed surface.

    ``tightest`` names the bound giving the smallest admissible integer
    distance; ties go to the IGI.
    """
    igi = igi_distance_bound(g, intersections)
    hempel = hempel_bound(intersections)
    hempel_int = math.floor(hempel + TOLERANCE)
    try:
        bowditch = bowditch_bound(g, 0, intersections)
        bowditch_int = strict_to_integer(bowditch)
        reason = None
    except NotApplicable as exc:
        bowditch = bowditch_int = None
        reason = str(exc)
    candidates = [("igi", igi), ("hempel", hempel_int)]
    if bowditch_int is not None:
        candidates.append(("bowditch", bowditch_int))
    tightest = min(candidates, key=lambda kv: kv[1])[0]
    return BoundReport(
        genus=g,
        intersections=intersections,
        igi_distance=igi,
        igi_below_range=igi_below_range(g, intersections),
        igi_real=igi_real_bound(g, intersections),
        hempel_distance=hempel,
        hempel_integer=hempel_int,
        bowditch_distance=bowditch,
        bowditch_integer=bowditch_int,
        bowditch_reason=reason,
        tightest=tightest,
    )


def _bowditch_wins(g: int, intersections: int) -> bool:
    return bowditch_bound(g, 0, intersections) < igi_real_bound(g, intersections) - TOLERANCE


def crossover_intersection(g: int) -> Optional[int]:
    """Smallest intersection number where Bowditch's bound beats the IGI.

    Both bounds are affine in ``log2 I``; Bowditch's slope is ``2/log2(g-2)``
    against the IGI's 1, so the gap is monotone and a binary search up to
    ``2**64`` finds the switch.  The search starts at the IGI base constant,
    below which the IGI says nothing.  None means the IGI stays at least as
    good over the whole range.
    """
    if g <= 3:
        raise NotApplicable("Bowditch's bound needs genus >= 4 on a closed surface")
    lo, hi = verify_igi_base(g), CROSSOVER_CEILING
    if not _bowditch_wins(g, hi):
        return None
    if _bowditch_wins(g, lo):
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _bowditch_wins(g, mid):
            hi = mid
        else:
            lo = mid
    return hi
