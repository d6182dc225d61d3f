"""Intersection sequences, sawtooth form, and path complexity.

An intersection sequence lists, in order along a reference arc, the index of
the geodesic curve met at each crossing.  Indices are 1-based; the first and
last curves never appear because the arc avoids them.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, LengthMismatch, NotNormalizable, NotSawtooth

#: Longest non-sawtooth input that ``normalize_sawtooth`` will search.
MAX_NORMALIZE_LENGTH = 12


def as_sequence(entries: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze an intersection sequence."""
    seq = tuple(int(e) for e in entries)
    for e in seq:
        if e < 1:
            raise ValueError(f"curve indices must be >= 1, got {e}")
    return seq


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse ``"3,4,5"`` or ``"[3, 4, 5]"``."""
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
            raise ValueError("expected a JSON array of integers")
        return as_sequence(data)
    if not text:
        return ()
    return as_sequence(int(part) for part in text.split(","))


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(v) for v in seq)


def is_sawtooth(seq: Sequence[int]) -> bool:
    """True iff every non-decreasing step goes up by exactly one."""
    return all(b == a + 1 for a, b in zip(seq, seq[1:]) if a <= b)


@dataclass(frozen=True)
class SawtoothWitness:
    """A sequence that has been checked to be in sawtooth form.

    Build these with :func:`witness` or :func:`normalize_sawtooth`; the
    ``verified`` flag is only ever set by those functions.
    """

    sequence: tuple[int, ...]
    verified: bool = False

    def __len__(self):
        return len(self.sequence)


def witness(seq: Iterable[int]) -> SawtoothWitness:
    """Certify that ``seq`` is already in sawtooth form."""
    seq = as_sequence(seq)
    if not is_sawtooth(seq):
        raise NotSawtooth(f"{format_sequence(seq)} is not in sawtooth form")
    return SawtoothWitness(seq, verified=True)


def _legal_swaps(state: tuple[int, ...]):
    for i in range(len(state) - 1):
        a, b = state[i], state[i + 1]
        if abs(a - b) == 1:
            yield state[:i] + (b, a) + state[i + 2:]


def normalize_sawtooth(seq: Iterable[int]) -> SawtoothWitness:
    """Rearrange ``seq`` into sawtooth form.

    Only adjacent entries whose values differ by exactly one may trade
    places (crossings of consecutive, hence disjoint, curves).  The search is
    breadth-first, so the result uses the fewest swaps; ties go to the
    first state reached when swap positions are tried left to right.
    """
    start = as_sequence(seq)
    if is_sawtooth(start):
        return SawtoothWitness(start, verified=True)
    if len(start) > MAX_NORMALIZE_LENGTH:
        raise NotNormalizable(
            f"refusing to search inputs longer than {MAX_NORMALIZE_LENGTH}"
        )
    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for nxt in _legal_swaps(state):
            if nxt in seen:
                continue
            if is_sawtooth(nxt):
                return SawtoothWitness(nxt, verified=True)
            seen.add(nxt)
            queue.append(nxt)
    raise NotNormalizable(
        f"no sawtooth arrangement of {format_sequence(start)} is reachable "
        f"({len(seen)} states searched)"
    )


@dataclass(frozen=True)
class PathComplexity:
    """Complexity of a path, with the per-term breakdown.

    Instances order by ``terms`` alone, lexicographically; a strict prefix
    is smaller than any extension of it.
    """

    kappa: int
    terms: tuple[int, ...]

    def __lt__(self, other):
        if not isinstance(other, PathComplexity):
            return NotImplemented
        return self.terms < other.terms

    def __le__(self, other):
        if not isinstance(other, PathComplexity):
            return NotImplemented
        return self.terms <= other.terms

    def __gt__(self, other):
        if not isinstance(other, PathComplexity):
            return NotImplemented
        return self.terms > other.terms

    def __ge__(self, other):
        if not isinstance(other, PathComplexity):
            return NotImplemented
        return self.terms >= other.terms


def _check_row(row: Sequence[int], name: str) -> tuple[int, ...]:
    row = tuple(int(v) for v in row)
    if any(v < 0 for v in row):
        raise ValueError(f"{name} entries must be non-negative")
    return row


def path_complexity(v0_row: Sequence[int], vd_row: Sequence[int]) -> PathComplexity:
    """Complexity of a path from its two rows of intersection numbers.

    ``v0_row[k]`` and ``vd_row[k]`` are the intersection numbers of the k-th
    interior vertex with the first and last vertex respectively.
    """
    v0_row = _check_row(v0_row, "v0_row")
    vd_row = _check_row(vd_row, "vd_row")
    if len(v0_row) != len(vd_row):
        raise LengthMismatch(f"rows have lengths {len(v0_row)} and {len(vd_row)}")
    terms = tuple(a + b for a, b in zip(v0_row, vd_row))
    return PathComplexity(sum(terms), terms)


def total_complexity(suffix_kappas: Sequence[int]) -> PathComplexity:
    """Total complexity: the tuple of complexities of the nested sub-paths.

    The last entry is the complexity of the whole path and is reported as
    ``kappa``.
    """
    terms = _check_row(suffix_kappas, "suffix_kappas")
    if not terms:
        raise EmptyInput("total complexity needs at least one sub-path")
    return PathComplexity(terms[-1], terms)


def compare_total(a: PathComplexity, b: PathComplexity) -> int:
    """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
    return (a.terms > b.terms) - (a.terms < b.terms)
