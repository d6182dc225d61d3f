"""Dot graphs of sawtooth sequences and the sigma-polygons they contain.

A sawtooth sequence ``s`` is plotted as the lattice points ``(i, s[i-1])``.
Because consecutive values either rise by one or drop, the maximal slope-1
runs (ascending segments) are exactly the maximal runs of consecutive
positions.

Polygons are located by their ascending edges.  An edge is stored as its
bottom and top dot; an edge whose two dots coincide is a degenerate edge of
length zero.  Hexagon edges are labelled left, middle and right by the
position of their supporting slope-1 lines, which for dots of a sawtooth
graph agrees with the left-to-right order of the segments that carry them.

Only the two hexagon shapes without a 45 degree notch are admitted:

* notch at the upper left: the left-right horizontal edge is at the bottom,
  the middle edge starts at the top of the left edge and ends at the top of
  the right edge;
* notch at the lower right: the left-right horizontal edge is at the top,
  the middle edge starts at the bottom of the left edge and ends at the
  bottom of the right edge.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import PolygonMismatch
from .seqcore import SawtoothWitness, is_sawtooth, normalize_sawtooth, witness


@dataclass(frozen=True, order=True)
class Dot:
    x: int
    y: int


@dataclass(frozen=True, order=True)
class AscendingSegment:
    start: Dot
    length: int

    @property
    def end(self) -> Dot:
        return Dot(self.start.x + self.length - 1, self.start.y + self.length - 1)

    @property
    def bottom(self) -> int:
        return self.start.y

    @property
    def top(self) -> int:
        return self.start.y + self.length - 1

    def dot_at_level(self, y: int) -> Dot:
        return Dot(self.start.x + (y - self.start.y), y)

    def covers(self, lo: int, hi: int) -> bool:
        return self.bottom <= lo <= hi <= self.top


@dataclass(frozen=True)
class DotGraph:
    dots: tuple[Dot, ...]
    segments: tuple[AscendingSegment, ...]

    @property
    def sequence(self) -> tuple[int, ...]:
        return tuple(d.y for d in self.dots)

    def segment_of(self, x: int) -> AscendingSegment:
        for seg in self.segments:
            if seg.start.x <= x < seg.start.x + seg.length:
                return seg
        raise KeyError(x)


def build_dot_graph(w: SawtoothWitness) -> DotGraph:
    if not w.verified:
        w = witness(w.sequence)
    seq = w.sequence
    dots = tuple(Dot(i + 1, v) for i, v in enumerate(seq))
    segments = []
    i = 0
    while i < len(seq):
        j = i
        while j + 1 < len(seq) and seq[j + 1] == seq[j] + 1:
            j += 1
        segments.append(AscendingSegment(dots[i], j - i + 1))
        i = j + 1
    return DotGraph(dots, tuple(segments))


def graph_of(seq: Iterable[int]) -> DotGraph:
    """Dot graph of a sequence that is already in sawtooth form."""
    return build_dot_graph(witness(seq))


class PolygonKind(enum.Enum):
    BOX = "Box"
    HEXAGON1 = "Hexagon1"
    HEXAGON2 = "Hexagon2"


_KIND_ORDER = {PolygonKind.BOX: 0, PolygonKind.HEXAGON1: 1, PolygonKind.HEXAGON2: 2}

Edge = tuple[Dot, Dot]


def _edge(seg: AscendingSegment, lo: int, hi: int) -> Edge:
    return (seg.dot_at_level(lo), seg.dot_at_level(hi))


@dataclass(frozen=True)
class SigmaPolygon:
    kind: PolygonKind
    left_edge: Edge
    right_edge: Edge
    middle_edge: Optional[Edge] = None

    @property
    def degenerate(self) -> bool:
        edges = [self.left_edge, self.right_edge]
        if self.middle_edge is not None:
            edges.append(self.middle_edge)
        return any(bottom == top for bottom, top in edges)

    def sort_key(self):
        middle = self.middle_edge or (Dot(0, 0), Dot(0, 0))
        return (
            _KIND_ORDER[self.kind],
            self.left_edge[0].x,
            self.right_edge[0].x,
            middle[0].x,
            self.left_edge[1].x,
            self.right_edge[1].x,
            middle[1].x,
        )

    def to_json(self) -> dict:
        def enc(edge):
            if edge is None:
                return None
            bottom, top = edge
            return [bottom.x, bottom.y, top.x - bottom.x + 1]

        return {
            "kind": self.kind.value,
            "left": enc(self.left_edge),
            "middle": enc(self.middle_edge),
            "right": enc(self.right_edge),
            "degenerate": self.degenerate,
        }


def find_boxes(g: DotGraph) -> list[SigmaPolygon]:
    """All boxes, including degenerate ones whose edges are single dots.

    For segments ``A`` left of ``B`` a box must end its left edge at the top
    of ``A`` and start its right edge at the bottom of ``B``; equal heights
    then fix the edge length, so each ordered pair gives at most one box.
    """
    boxes = []
    segs = g.segments
    for i, a in enumerate(segs):
        for b in segs[i + 1:]:
            length = a.top - b.bottom
            if 0 <= length <= a.length - 1 and length <= b.length - 1:
                boxes.append(
                    SigmaPolygon(
                        PolygonKind.BOX,
                        _edge(a, a.top - length, a.top),
                        _edge(b, b.bottom, b.bottom + length),
                    )
                )
    boxes.sort(key=SigmaPolygon.sort_key)
    return boxes


def _hexagons_type1(segs) -> set[SigmaPolygon]:
    found = set()
    for j, mid in enumerate(segs):
        m0, m1 = mid.bottom, mid.top
        middle = _edge(mid, m0, m1)
        for a in segs[:j]:
            t = a.top
            for c in segs[j + 1:]:
                # Notch at the lower right: left edge [m0, t], right [m1, t].
                if a.bottom <= m0 <= t and m1 <= t and c.covers(m1, t):
                    found.add(SigmaPolygon(
                        PolygonKind.HEXAGON1, _edge(a, m0, t), _edge(c, m1, t), middle))
                # Notch at the upper left with a point left edge at m0.
                if t == m0 and c.covers(m0, m1):
                    found.add(SigmaPolygon(
                        PolygonKind.HEXAGON1, _edge(a, m0, m0), _edge(c, m0, m1), middle))
    return found


def _hexagons_type2(segs) -> set[SigmaPolygon]:
    found = set()
    for j, mid in enumerate(segs):
        m0, m1 = mid.bottom, mid.top
        middle = _edge(mid, m0, m1)
        for c in segs[j + 1:]:
            b = c.bottom
            for a in segs[:j]:
                # Notch at the upper left: left edge [b, m0], right [b, m1].
                if b <= m0 and a.covers(b, m0) and c.covers(b, m1):
                    found.add(SigmaPolygon(
                        PolygonKind.HEXAGON2, _edge(a, b, m0), _edge(c, b, m1), middle))
                # Notch at the lower right with a point right edge at m1.
                if b == m1 and a.covers(m0, m1):
                    found.add(SigmaPolygon(
                        PolygonKind.HEXAGON2, _edge(a, m0, m1), _edge(c, m1, m1), middle))
    return found


def find_hexagons(g: DotGraph, kind: PolygonKind) -> list[SigmaPolygon]:
    """All hexagons of the requested type.

    The middle edge is always a whole segment, so the scan runs over ordered
    triples of segments with the middle one in the middle.
    """
    if kind is PolygonKind.HEXAGON1:
        found = _hexagons_type1(g.segments)
    elif kind is PolygonKind.HEXAGON2:
        found = _hexagons_type2(g.segments)
    else:
        raise ValueError(f"not a hexagon kind: {kind}")
    return sorted(found, key=SigmaPolygon.sort_key)


def find_polygons(g: DotGraph, kinds: Iterable[PolygonKind] = tuple(PolygonKind)) -> list[SigmaPolygon]:
    out = []
    for kind in kinds:
        if kind is PolygonKind.BOX:
            out.extend(find_boxes(g))
        else:
            out.extend(find_hexagons(g, kind))
    return sorted(out, key=SigmaPolygon.sort_key)


def first_reducible(g: DotGraph) -> Optional[SigmaPolygon]:
    """First polygon in the order box, type 1 hexagon, type 2 hexagon."""
    for kind in PolygonKind:
        found = find_boxes(g) if kind is PolygonKind.BOX else find_hexagons(g, kind)
        if found:
            return found[0]
    return None


@dataclass(frozen=True)
class SurgeryResult:
    """Outcome of a box surgery.

    ``origin[i]`` is the position (1-based) in the input sequence of the
    entry that ends up at output position ``i + 1``.
    """

    sequence: tuple[int, ...]
    origin: tuple[int, ...]


def _track_normalize(entries: list[tuple[int, int]]) -> list[tuple[int, int]]:
    values = [v for v, _ in entries]
    target = normalize_sawtooth(values).sequence
    if tuple(values) == target:
        return entries
    # Replay the rearrangement: equal values never trade places, so the
    # k-th occurrence of a value in the target is its k-th occurrence here.
    buckets: dict[int, list[int]] = {}
    for v, pos in entries:
        buckets.setdefault(v, []).append(pos)
    for v in buckets:
        buckets[v].reverse()
    return [(v, buckets[v].pop()) for v in target]


def box_surgery(w: SawtoothWitness, b: SigmaPolygon) -> SurgeryResult:
    """Delete the crossings on the box's right edge and re-normalize.

    The left run survives at its own heights, as in the standard
    3,4,5,3,4,5 to 3,4,5 example.  When the right edge is only the lower
    part of its segment, the entry before it may sit strictly inside the
    box's levels; the deletion then leaves a rise of two or more that no
    legal swap repairs (5,1,2,3,4,3,2,3,4,5 is the smallest case), and
    NotNormalizable is raised.
    """
    g = build_dot_graph(w)
    if b.kind is not PolygonKind.BOX or b not in find_boxes(g):
        raise PolygonMismatch("polygon is not a box of this dot graph")
    lo, hi = b.right_edge[0].x, b.right_edge[1].x
    kept = [(d.y, d.x) for d in g.dots if not lo <= d.x <= hi]
    if not is_sawtooth([v for v, _ in kept]):
        kept = _track_normalize(kept)
    return SurgeryResult(tuple(v for v, _ in kept), tuple(p for _, p in kept))


def apply_box_surgery(w: SawtoothWitness, b: SigmaPolygon) -> tuple[int, ...]:
    return box_surgery(w, b).sequence
