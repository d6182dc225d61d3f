"""Brute-force reference implementations used only by the tests.

Nothing here imports the code it checks, apart from the plain record types
used to compare answers.
"""

import itertools
import math
from fractions import Fraction

from supergeodesic.dotgraph import Dot, PolygonKind, SigmaPolygon


def sawtooth_sequences(max_len, max_value):
    """Every sawtooth sequence of length <= max_len over 1..max_value."""
    out = []

    def rec(prefix):
        out.append(tuple(prefix))
        if len(prefix) == max_len:
            return
        for v in range(1, max_value + 1):
            if prefix and prefix[-1] <= v and v != prefix[-1] + 1:
                continue
            prefix.append(v)
            rec(prefix)
            prefix.pop()

    rec([])
    return out


# --- dot-graph polygons -----------------------------------------------------


def _segments(dots):
    """Maximal chains of dots joined by slope-1 unit steps, as (first, last)."""
    dotset = set(dots)
    segs = []
    for x, y in dots:
        if (x - 1, y - 1) in dotset:
            continue
        end = (x, y)
        while (end[0] + 1, end[1] + 1) in dotset:
            end = (end[0] + 1, end[1] + 1)
        segs.append(((x, y), end))
    return segs


def _on_segment(point, seg):
    (x0, y0), (x1, y1) = seg
    x, y = point
    return y - x == y0 - x0 and x0 <= x <= x1


def _ascending_edges(dots, segs):
    edges = []
    for p in dots:
        for q in dots:
            dx, dy = q[0] - p[0], q[1] - p[1]
            if dx != dy or dx < 0:
                continue
            if any(_on_segment(p, s) and _on_segment(q, s) for s in segs):
                edges.append((p, q))
    return edges


def _contains_top(edge, segs):
    return any(_on_segment(s[1], (edge[0], edge[1])) for s in segs)


def _contains_bottom(edge, segs):
    return any(_on_segment(s[0], (edge[0], edge[1])) for s in segs)


def _record(kind, left, right, middle=None):
    def e(edge):
        return (Dot(*edge[0]), Dot(*edge[1]))

    return SigmaPolygon(kind, e(left), e(right), None if middle is None else e(middle))


def _turn(u, v):
    return round(math.degrees(math.atan2(u[0] * v[1] - u[1] * v[0], u[0] * v[0] + u[1] * v[1])))


def _no_acute_exterior(directions):
    """Check a closed polygon given its edge directions in traversal order."""
    turns = [_turn(directions[i - 1], directions[i]) for i in range(len(directions))]
    total = sum(turns)
    if abs(total) != 360:
        return False
    sign = 1 if total > 0 else -1
    interior = [180 - sign * t for t in turns]
    return all(angle <= 270 for angle in interior)


def _offset(edge):
    return edge[0][1] - edge[0][0]


def oracle_boxes(seq):
    dots = [(i + 1, v) for i, v in enumerate(seq)]
    segs = _segments(dots)
    edges = _ascending_edges(dots, segs)
    found = set()
    for e1, e2 in itertools.permutations(edges, 2):
        if _offset(e1) <= _offset(e2):
            continue
        left, right = e1, e2
        # Both ways of closing up four vertices with two horizontal edges.
        for a, b in (((0, 0), (1, 1)), ((0, 1), (1, 0))):
            p, q = left[a[0]], right[a[1]]
            r, s = left[b[0]], right[b[1]]
            if p[1] != q[1] or r[1] != s[1] or p[0] == q[0] or r[0] == s[0]:
                continue
            if _contains_top(left, segs) and _contains_bottom(right, segs):
                found.add(_record(PolygonKind.BOX, left, right))
    return found


def oracle_hexagons(seq, kind):
    dots = [(i + 1, v) for i, v in enumerate(seq)]
    segs = _segments(dots)
    edges = _ascending_edges(dots, segs)
    found = set()
    for trio in itertools.combinations(edges, 3):
        offsets = {_offset(e) for e in trio}
        if len(offsets) != 3:
            continue
        left, middle, right = sorted(trio, key=_offset, reverse=True)
        # ends: 0 = bottom, 1 = top.  Traverse left (lx -> ly), across to
        # middle (ma -> mb), across to right (ra -> rb), back to left.
        for ly, ma, ra in itertools.product((0, 1), repeat=3):
            lx, mb, rb = 1 - ly, 1 - ma, 1 - ra
            hops = [
                (left[ly], middle[ma]),
                (middle[mb], right[ra]),
                (right[rb], left[lx]),
            ]
            if any(p[1] != q[1] or p[0] == q[0] for p, q in hops):
                continue
            up, down = (1, 1), (-1, -1)

            def asc(start):
                return up if start == 0 else down

            def hor(p, q):
                return (1 if q[0] > p[0] else -1, 0)

            directions = [
                asc(lx), hor(*hops[0]),
                asc(ma), hor(*hops[1]),
                asc(ra), hor(*hops[2]),
            ]
            if not _no_acute_exterior(directions):
                continue
            if tuple(middle) not in {tuple(s) for s in segs}:
                continue
            if kind is PolygonKind.HEXAGON1:
                ok = middle[0][1] == left[0][1] and _contains_top(left, segs)
            else:
                ok = middle[1][1] == right[1][1] and _contains_bottom(right, segs)
            if ok:
                found.add(_record(kind, left, right, middle))
    return found


# --- linear integer programs ------------------------------------------------


def brute_force_lip(m, rows, rhs, coeffs=None, bound=None):
    """Scan the whole box [0..bound]^m; ``coeffs`` gives the balance equation."""
    bound = rhs if bound is None else bound
    best = None
    for w in itertools.product(range(bound + 1), repeat=m):
        if any(sum(w[i] for i in row) < rhs for row in rows):
            continue
        if coeffs is not None and sum(c * x for c, x in zip(coeffs, w)) != 0:
            continue
        if best is None or sum(w) < best:
            best = sum(w)
    return best


def closed_trail_edge_sets(edges):
    """Edge-index sets that form a closed trail: connected, all degrees even."""
    out = set()
    n = len(edges)
    for r in range(1, n + 1):
        for subset in itertools.combinations(range(n), r):
            degree = {}
            adj = {}
            for i in subset:
                u, v = edges[i]
                degree[u] = degree.get(u, 0) + 1
                degree[v] = degree.get(v, 0) + 1
                adj.setdefault(u, set()).add(v)
                adj.setdefault(v, set()).add(u)
            if any(d % 2 for d in degree.values()):
                continue
            start = next(iter(adj))
            seen, stack = {start}, [start]
            while stack:
                for nxt in adj[stack.pop()]:
                    if nxt not in seen:
                        seen.add(nxt)
                        stack.append(nxt)
            if len(seen) == len(adj):
                out.add(frozenset(subset))
    return out


# --- threshold scans with integer cross-multiplication ----------------------


def growth_lower_bound(g, d):
    """IGI lower bound as a Fraction (no range checks, exponent may be < 0)."""
    if g == 2:
        return Fraction(12) * Fraction(2) ** (d - 4)
    return Fraction(2 * g - 1) * Fraction(2) ** (d - 3)


def oracle_initial_k(g):
    c = 4 if g == 2 else 6 * g - 8
    k = 4 if g == 2 else 3
    while True:
        # base * 2^(k-shift) > (k-1) * c, cross-multiplied to stay in integers
        shift = 4 if g == 2 else 3
        base = 12 if g == 2 else 2 * g - 1
        lhs, rhs = base, (k - 1) * c
        if k - shift >= 0:
            lhs <<= k - shift
        else:
            rhs <<= shift - k
        if lhs > rhs:
            return k
        k += 1


def oracle_final_k(g):
    c = 4 if g == 2 else 6 * g - 8
    shift = 4 if g == 2 else 3
    base = 12 if g == 2 else 2 * g - 1
    out = []
    for r in range(3):
        p = 1
        while True:
            k = 3 * p + r
            span = 2 * p + r  # S(k) from the three-case formula
            d = span - 1
            lhs, rhs = base, (k - 1) * c
            if d - shift >= 0:
                lhs <<= d - shift
            else:
                rhs <<= shift - d
            if d >= (4 if g == 2 else 3) and lhs > rhs:
                out.append(k)
                break
            p += 1
    return tuple(out)
