"""Counting arguments behind the super-efficiency constant.

Cutting the surface along a curve and a reference arc leaves arcs of the
next curve that fall into a bounded number of parallel classes.  With more
crossings than that, the pigeonhole principle forces a stack (a rainbow) of
parallel arcs, and the growth inequality caps how tall such a stack can be
before the geodesic could be shortcut.  This module does the arithmetic:
parallel-class counts, the stacking thresholds, and the resulting bounds.

Every threshold inequality is strict and is evaluated over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import LengthMismatch, OutOfRange
from .lip import verify_igi_base


def _check_genus(g: int, lowest: int = 2) -> None:
    if g < lowest:
        raise OutOfRange(f"genus must be at least {lowest}, got {g}")


def triangulation_edges(g: int) -> int:
    """Edges of a one-vertex triangulation of the closed genus-g surface."""
    _check_genus(g, 1)
    return 6 * g - 3


def parallel_classes(g: int, case: int = 2) -> int:
    """Upper bound C# on the number of parallel classes of arcs.

    Case 1 is the plain count of a triangulation of the genus ``g - 1``
    surface; cases 2 and 3 add the extra classes near the cut, and case 3
    is never larger than case 2.
    """
    _check_genus(g)
    if case == 1:
        return 3 * (2 * (g - 1) - 1)
    if case in (2, 3):
        return 3 * (2 * (g - 1) - 1) + 1
    raise OutOfRange(f"case must be 1, 2 or 3, got {case}")


def min_parallel_count(n: int, c_sharp: int) -> int:
    """Tallest stack of parallel arcs guaranteed among ``n`` arcs in ``c_sharp`` classes."""
    if n < 1:
        raise OutOfRange("need at least one crossing")
    if c_sharp < 1:
        raise OutOfRange("need at least one parallel class")
    return -(-n // c_sharp)


def _stack_ratio(g: int) -> Fraction:
    # IGI base constant over the class count used in the stacking argument
    return Fraction(verify_igi_base(g), parallel_classes(g, 2))


def _shift(g: int) -> int:
    return 4 if g == 2 else 3


def _beats(ratio: Fraction, exponent: int, k: int) -> bool:
    """Strict test ``ratio * 2**exponent > k - 1``."""
    return ratio * Fraction(2) ** exponent > k - 1


def initial_k(g: int) -> int:
    """Smallest stack height ``k`` at which the growth inequality is violated.

    Here ``k`` itself stands in for the distance, so the scan starts where
    the growth inequality first applies.
    """
    ratio, shift = _stack_ratio(g), _shift(g)
    k = shift
    while not _beats(ratio, k - shift, k):
        k += 1
    return k


def s_of_k(k: int) -> int:
    """Index span of the extremal dot pattern with ``k`` middle-level dots."""
    if k < 3:
        raise OutOfRange(f"S(k) needs k >= 3, got {k}")
    p, r = divmod(k, 3)
    return 2 * p + r


def _final_k_for(ratio: Fraction, shift: int) -> tuple[int, int, int]:
    out = []
    for r in range(3):
        p = 1
        while True:
            k = 3 * p + r
            d = s_of_k(k) - 1
            if d >= shift and _beats(ratio, d - shift, k):
                out.append(k)
                break
            p += 1
    return tuple(out)


@dataclass(frozen=True)
class FinalK:
    by_residue: tuple[int, int, int]

    @property
    def overall(self) -> int:
        return max(self.by_residue)


def final_k(g: int) -> FinalK:
    """Thresholds once the span ``S(k) - 1`` replaces ``k`` as the distance.

    One threshold for each residue of ``k`` mod 3, in the order 3p, 3p+1,
    3p+2.
    """
    return FinalK(_final_k_for(_stack_ratio(g), _shift(g)))


def genus_uniform_final_k(g: int) -> int:
    """Threshold that works for every genus in the same regime as ``g``.

    For ``g >= 3`` the stacking ratio ``(2g-1)/(6g-8)`` decreases to 1/3,
    so the threshold at the limiting ratio serves every such genus at once.
    Genus 2 has its own constants and its own threshold.
    """
    if g == 2:
        return final_k(2).overall
    _check_genus(g)
    return max(_final_k_for(Fraction(1, 3), 3))


def super_bound(g: int) -> int:
    """Genus-only cap B(g) on crossings of the first curve with a reference arc."""
    _check_genus(g)
    c = parallel_classes(g, 2)
    value = 44 if g == 2 else 15 * c
    if value != (genus_uniform_final_k(g) - 1) * c:
        raise AssertionError(f"threshold pipeline disagrees with B({g}) = {value}")
    return value


def candidate_bound(g: int) -> int:
    """Size of the box of Dehn-Thurston coordinates holding every candidate."""
    return (super_bound(g) + 1) ** (6 * g - 6)


def webb_bound(g: int, d: int) -> int:
    """Webb's bound on the number of tight geodesic candidates, as printed."""
    _check_genus(g)
    if d < 3:
        raise OutOfRange(f"distance must be at least 3, got {d}")
    return 2 ** ((72 * g + 12) * min(d - 2, 21)) * (2 ** (6 * g - 6) - 1)


def is_sufficiently_long(g: int, d: int) -> bool:
    """Whether ``d`` is past the point where B(g) rather than d - 1 binds."""
    return d > super_bound(g) + 1


@dataclass(frozen=True)
class CoordinateChain:
    """Crossings of a fixed arc with the interior curves of a geodesic."""

    genus: int
    distance: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 0 for v in self.values):
            raise OutOfRange("chain values must be non-negative")


def feasible_chain(chain: CoordinateChain, g: int | None = None) -> bool:
    """Check the super-efficiency constraints along a chain.

    ``values[0]`` is the first interior curve.  Each value may drop by at
    most one from its predecessor and never exceeds the remaining distance
    or B(g).
    """
    g = chain.genus if g is None else g
    d = chain.distance
    if d < 3:
        raise OutOfRange(f"distance must be at least 3, got {d}")
    v: Sequence[int] = chain.values
    if len(v) != d - 1:
        raise LengthMismatch(f"distance {d} needs {d - 1} values, got {len(v)}")
    cap = super_bound(g)
    if v[0] > min(d - 1, cap):
        return False
    for i in range(1, d - 2):
        nxt = v[i]
        if not v[i - 1] - 1 <= nxt <= min(d - (i + 1), cap):
            return False
    return True


@dataclass(frozen=True)
class ThresholdReport:
    genus: int
    c_sharp: int
    initial_k: int
    final_k_by_residue: tuple[int, int, int]
    final_k: int
    super_bound: int
    candidate_bound: int

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "c_sharp": self.c_sharp,
            "initial_k": self.initial_k,
            "final_k_by_residue": list(self.final_k_by_residue),
            "final_k": self.final_k,
            "super_bound": self.super_bound,
            "candidate_bound": str(self.candidate_bound),
        }


def threshold_report(g: int) -> ThresholdReport:
    fk = final_k(g)
    return ThresholdReport(
        genus=g,
        c_sharp=parallel_classes(g, 2),
        initial_k=initial_k(g),
        final_k_by_residue=fk.by_residue,
        final_k=fk.overall,
        super_bound=super_bound(g),
        candidate_bound=candidate_bound(g),
    )
