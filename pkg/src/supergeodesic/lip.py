"""Covering programs built from arc decompositions of a cut surface.

Cutting a closed genus-g surface along a non-separating curve leaves a
surface with two boundary curves.  A maximal family of essential arcs cuts
it into hexagons; the dual graph has one vertex per hexagon and one edge per
arc.  Every closed edge-path of the dual graph that crosses each arc at most
once gives a covering constraint "the weights of the arcs it crosses sum to
at least r".  The smallest total weight meeting all constraints is what the
intersection growth argument needs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Hashable, NamedTuple, Optional, Sequence

from .errors import Infeasible, OutOfRange

#: The six constraints for the standard decomposition, 0-based arc indices.
STANDARD_S12_ROWS = (
    frozenset({0, 3, 4, 5}),
    frozenset({1, 3, 4, 5}),
    frozenset({2, 4}),
    frozenset({0, 1}),
    frozenset({0, 2, 3, 5}),
    frozenset({1, 2, 3, 5}),
)


@dataclass(frozen=True)
class DualEdge:
    faces: tuple[Hashable, Hashable]
    arc: Hashable


@dataclass(frozen=True)
class ArcDecomposition:
    arcs: tuple[Hashable, ...]
    boundary_of_endpoint: tuple[tuple[str, str], ...]
    dual_edges: tuple[DualEdge, ...]

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def faces(self) -> tuple[Hashable, ...]:
        seen = []
        for e in self.dual_edges:
            for f in e.faces:
                if f not in seen:
                    seen.append(f)
        return tuple(seen)

    def arc_index(self, arc: Hashable) -> int:
        return self.arcs.index(arc)

    @classmethod
    def from_json(cls, data: dict) -> "ArcDecomposition":
        arcs = tuple(a["id"] for a in data.get("arcs", []))
        bounds = tuple(tuple(a["boundaries"]) for a in data.get("arcs", []))
        edges = []
        for e in data.get("dual_edges", []):
            f1, f2 = e["faces"]
            if e["arc"] not in arcs:
                raise ValueError(f"dual edge crosses unknown arc {e['arc']!r}")
            edges.append(DualEdge((f1, f2), e["arc"]))
        return cls(arcs, bounds, tuple(edges))

    def to_json(self) -> dict:
        return {
            "arcs": [
                {"id": a, "boundaries": list(b)}
                for a, b in zip(self.arcs, self.boundary_of_endpoint)
            ],
            "dual_edges": [{"faces": list(e.faces), "arc": e.arc} for e in self.dual_edges],
        }


def load_decomposition(path) -> ArcDecomposition:
    with open(path) as fh:
        return ArcDecomposition.from_json(json.load(fh))


def standard_decomposition() -> ArcDecomposition:
    """The shipped six-arc, four-hexagon decomposition of the cut genus 2 surface."""
    text = resources.files("supergeodesic").joinpath("data/s12_decomposition.json").read_text()
    return ArcDecomposition.from_json(json.loads(text))


@dataclass(frozen=True)
class Circuit:
    crossing_set: frozenset
    edge_path: tuple[DualEdge, ...]


def enumerate_circuits(d: ArcDecomposition, max_len: Optional[int] = None) -> list[Circuit]:
    """Closed edge-paths crossing each arc at most once, one per crossing set.

    Each path is generated once per starting edge, taking the lowest-indexed
    edge of the path as the start, then deduplicated by crossing set.
    """
    edges = d.dual_edges
    if max_len is not None and max_len < 1:
        raise ValueError("max_len must be positive")
    limit = len(edges) if max_len is None else max_len
    incident: dict[Hashable, list[int]] = {}
    for i, e in enumerate(edges):
        incident.setdefault(e.faces[0], []).append(i)
        if e.faces[1] != e.faces[0]:
            incident.setdefault(e.faces[1], []).append(i)

    found: dict[frozenset, Circuit] = {}

    def other(i, face):
        f1, f2 = edges[i].faces
        return f2 if face == f1 else f1

    def extend(home, face, path, arcs):
        if len(path) >= limit:
            return
        for i in incident[face]:
            if i <= path[0] or i in path or edges[i].arc in arcs:
                continue
            nxt = other(i, face)
            new_path = path + [i]
            new_arcs = arcs | {edges[i].arc}
            if nxt == home:
                key = frozenset(new_arcs)
                found.setdefault(key, Circuit(key, tuple(edges[j] for j in new_path)))
            extend(home, nxt, new_path, new_arcs)

    for i, e in enumerate(edges):
        home, start = e.faces
        if home == start:
            key = frozenset({e.arc})
            found.setdefault(key, Circuit(key, (e,)))
        extend(home, start, [i], {e.arc})

    return sorted(found.values(), key=lambda c: (len(c.crossing_set), sorted(map(str, c.crossing_set))))


@dataclass(frozen=True)
class LipInstance:
    m: int
    rows: tuple[frozenset, ...]
    rhs: int
    balanced: bool = False
    boundaries: Optional[tuple[tuple[str, str], ...]] = None

    def __post_init__(self):
        if self.rhs < 1:
            raise ValueError("rhs must be a positive integer")
        if not self.rows:
            raise ValueError("a covering program needs at least one row")
        for row in self.rows:
            if not row:
                raise ValueError("rows must be non-empty")
            if any(not 0 <= i < self.m for i in row):
                raise ValueError(f"row {sorted(row)} has an index outside 0..{self.m - 1}")
        if self.balanced:
            if self.boundaries is None or len(self.boundaries) != self.m:
                raise ValueError("a balanced program needs boundary labels for every arc")
            if len({b for pair in self.boundaries for b in pair}) > 2:
                raise ValueError("balanced programs support exactly two boundary curves")

    def with_rhs(self, rhs: int) -> "LipInstance":
        return LipInstance(self.m, self.rows, rhs, self.balanced, self.boundaries)

    def with_balanced(self, balanced: bool) -> "LipInstance":
        return LipInstance(self.m, self.rows, self.rhs, balanced, self.boundaries)

    def balance_coefficients(self) -> tuple[int, ...]:
        """Per-arc contribution to (first boundary sum) - (second boundary sum)."""
        labels = sorted({b for pair in self.boundaries for b in pair})
        first = labels[0]
        return tuple(2 * sum(b == first for b in pair) - 2 for pair in self.boundaries)

    @classmethod
    def from_json(cls, data: dict) -> "LipInstance":
        boundaries = data.get("boundaries")
        return cls(
            m=int(data["m"]),
            rows=tuple(frozenset(int(i) for i in row) for row in data["rows"]),
            rhs=int(data.get("rhs", 1)),
            balanced=bool(data.get("balanced", False)),
            boundaries=None if boundaries is None else tuple(tuple(b) for b in boundaries),
        )

    def to_json(self) -> dict:
        out = {
            "m": self.m,
            "rhs": self.rhs,
            "balanced": self.balanced,
            "rows": [sorted(r) for r in self.rows],
        }
        if self.boundaries is not None:
            out["boundaries"] = [list(b) for b in self.boundaries]
        return out


def standard_s12(rhs: int = 4, balanced: bool = False) -> LipInstance:
    boundaries = standard_decomposition().boundary_of_endpoint
    return LipInstance(6, STANDARD_S12_ROWS, rhs, balanced, boundaries)


def prune_dominated(rows: Sequence[frozenset]) -> tuple[frozenset, ...]:
    """Drop duplicate rows and rows that contain another row."""
    unique = sorted(set(rows), key=lambda r: (len(r), sorted(r)))
    kept: list[frozenset] = []
    for row in unique:
        if not any(k <= row for k in kept):
            kept.append(row)
    return tuple(kept)


def lip_from_decomposition(d: ArcDecomposition, rhs: int, balanced: bool = False,
                           max_len: Optional[int] = None) -> LipInstance:
    rows = [frozenset(d.arc_index(a) for a in c.crossing_set) for c in enumerate_circuits(d, max_len)]
    return LipInstance(d.arc_count, prune_dominated(rows), rhs, balanced, d.boundary_of_endpoint)


@dataclass(frozen=True)
class LipSolution:
    weights: tuple[int, ...]
    objective: int
    search_bound: int
    method: str = field(default="exhaustive")

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "objective": self.objective,
            "search_bound": self.search_bound,
            "method": self.method,
        }


def _cover(m, rows, rhs, caps):
    """Any feasible covering using each variable up to its cap, or None."""
    w = list(caps)
    if any(sum(w[i] for i in row) < rhs for row in rows):
        return None
    return w


def _repair_balance(w, coeffs, caps):
    """Raise weights on the lighter side until both boundary sums agree."""
    diff = sum(c * x for c, x in zip(coeffs, w))
    if diff == 0:
        return w
    want = -1 if diff > 0 else 1
    for i, c in enumerate(coeffs):
        if c * want > 0 and caps[i] > 0:
            w = list(w)
            w[i] += abs(diff) // 2
            return w
    return None


def _search(m, rows, rhs, caps, coeffs, best_w, best_obj):
    """Depth-first branch and bound over integer weights within ``caps``.

    Returns the first optimum met in lexicographic order of the weights.
    An incumbent passed in is only replaced by something strictly better.
    """
    row_members = [[r for r, row in enumerate(rows) if i in row] for i in range(m)]
    # room[r][i]: most that variables i.. can still add to row r
    room = [[sum(caps[j] for j in row if j >= i) for i in range(m + 1)] for row in rows]
    # reach_up[i] / reach_down[i]: how far variables i.. can move the balance
    reach_up = [0] * (m + 1)
    reach_down = [0] * (m + 1)
    if coeffs is not None:
        for i in range(m - 1, -1, -1):
            reach_up[i] = reach_up[i + 1] + max(coeffs[i], 0) * caps[i]
            reach_down[i] = reach_down[i + 1] + max(-coeffs[i], 0) * caps[i]

    deficit = [rhs] * len(rows)
    w = [0] * m
    best = [best_obj, best_w]

    def rec(i, partial, balance):
        if best[0] is not None and partial + max(max(deficit), 0) >= best[0]:
            return
        if i == m:
            if max(deficit) <= 0 and balance == 0:
                best[0], best[1] = partial, tuple(w)
            return
        if any(d > room[r][i] for r, d in enumerate(deficit)):
            return
        if coeffs is not None and not -reach_up[i] <= balance <= reach_down[i]:
            return
        step = coeffs[i] if coeffs is not None else 0
        for v in range(caps[i] + 1):
            w[i] = v
            for r in row_members[i]:
                deficit[r] -= v
            rec(i + 1, partial + v, balance + step * v)
            for r in row_members[i]:
                deficit[r] += v
        w[i] = 0

    rec(0, 0, 0)
    return best[1], best[0]


def solve_lip(inst: LipInstance) -> LipSolution:
    """Exact minimum of the total weight subject to the covering rows.

    Without the balance equation, any optimum stays feasible after lowering
    every weight above ``rhs`` to ``rhs``, so the box ``[0..rhs]^m`` is
    searched.  With it, lowering can break the balance; the search box is
    then widened to the objective of a known balanced solution, which bounds
    every single weight of any better one.
    """
    rows = prune_dominated(inst.rows)
    m, rhs = inst.m, inst.rhs
    caps = [rhs] * m
    coeffs = inst.balance_coefficients() if inst.balanced else None
    incumbent = None
    if coeffs is not None:
        # With no arcs on one side the other side's arcs are forced to zero.
        if not any(c < 0 for c in coeffs):
            caps = [0 if c > 0 else cap for c, cap in zip(coeffs, caps)]
        elif not any(c > 0 for c in coeffs):
            caps = [0 if c < 0 else cap for c, cap in zip(coeffs, caps)]
        start = _cover(m, rows, rhs, caps)
        if start is None:
            raise Infeasible("the covering rows cannot be met with balanced boundary sums")
        base_w, _ = _search(m, rows, rhs, caps, None, None, None)
        incumbent = _repair_balance(base_w, coeffs, caps) or _repair_balance(start, coeffs, caps)
        if incumbent is None:
            raise Infeasible("no balanced weighting exists")
        bound = sum(incumbent)
        caps = [bound if cap else 0 for cap in caps]
        best_w, best_obj = _search(m, rows, rhs, caps, coeffs, tuple(incumbent), sum(incumbent))
    else:
        if _cover(m, rows, rhs, caps) is None:
            raise Infeasible("the covering rows cannot be met")
        best_w, best_obj = _search(m, rows, rhs, caps, None, None, None)
    search_bound = max(caps) if caps else 0
    return LipSolution(
        tuple(best_w),
        best_obj,
        search_bound,
        f"exhaustive branch and bound over [0..{search_bound}]^{m}",
    )


class ScalingFactor(NamedTuple):
    factor: Fraction
    unit_objective: int

    def to_json(self) -> dict:
        return {"factor": str(self.factor), "unit_objective": self.unit_objective}


def scaling_factor(inst: LipInstance) -> ScalingFactor:
    """How the optimum scales with the right-hand side.

    ``factor`` is objective/rhs at the instance's own rhs: the standard
    instance has optimum 8 at rhs 4, so its factor is 2.  The integer
    optimum at rhs 1 is reported separately as ``unit_objective``; it can
    exceed the factor because rounding hurts most at small rhs (3 for the
    standard rows).
    """
    unit = solve_lip(inst.with_rhs(1)).objective
    own = unit if inst.rhs == 1 else solve_lip(inst).objective
    return ScalingFactor(Fraction(own, inst.rhs), unit)


#: Minimal filling-pair intersection number for genus 2 at distance 4,
#: found by an external computer search and used here as a certified input.
GENUS2_DISTANCE4_MIN_INTERSECTION = 12


def verify_igi_base(g: int) -> int:
    """Starting value of the intersection growth inequality for genus ``g``.

    Genus 2 starts at distance 4 with the certified constant 12; every
    higher genus starts at distance 3 with the minimal filling intersection
    number 2g - 1.
    """
    if g < 2:
        raise OutOfRange("genus must be at least 2")
    if g == 2:
        return GENUS2_DISTANCE4_MIN_INTERSECTION
    return 2 * g - 1
