"""Dip, monotonicity, crossing and dominance analysis of exact profiles.

All comparisons are exact (Fraction or int); no floats are ever compared.
Dip intervals are reported as (start, end) index pairs and are
step-disjoint: two intervals may share a single boundary index but never a
consecutive-pair step. This is the convention under which the maximum
number of disjoint dips matches the greedy scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import LengthMismatchError
from .tree_core import Profile

Exact = object  # Fraction or int; anything with exact total order


def _values(p) -> Sequence:
    return p.entries if isinstance(p, Profile) else tuple(p)


def _offset(p) -> int:
    # Profile entries start at k=2; raw sequences are reported 0-based.
    return 2 if isinstance(p, Profile) else 0


@dataclass(frozen=True)
class DipReport:
    count: int
    intervals: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CrossingReport:
    count: int
    witnesses: tuple[int, ...]


def count_dips(p) -> DipReport:
    """Maximum number of disjoint dips, by greedy left-to-right scan.

    A dip is an interval splitting into a non-increasing prefix and a
    non-decreasing suffix that is not monotone as a whole. The scan emits
    the minimal window from the first strict decrease to the first strict
    increase after it, then resumes at the increase's right endpoint.
    """
    seq = _values(p)
    base = _offset(p)
    intervals: list[tuple[int, int]] = []
    i = 0
    n = len(seq)
    while True:
        start = None
        while i < n - 1:
            if seq[i] > seq[i + 1]:
                start = i
                break
            i += 1
        if start is None:
            break
        end = None
        j = start + 1
        while j < n - 1:
            if seq[j] < seq[j + 1]:
                end = j + 1
                break
            j += 1
        if end is None:
            break
        intervals.append((base + start, base + end))
        i = end
    return DipReport(count=len(intervals), intervals=tuple(intervals))


def monotonicity_class(p) -> str:
    """One of: constant, non_decreasing, non_increasing, neither."""
    seq = _values(p)
    non_dec = all(a <= b for a, b in zip(seq, seq[1:]))
    non_inc = all(a >= b for a, b in zip(seq, seq[1:]))
    if non_dec and non_inc:
        return "constant"
    if non_dec:
        return "non_decreasing"
    if non_inc:
        return "non_increasing"
    return "neither"


def is_monotone(p) -> bool:
    return monotonicity_class(p) != "neither"


def count_crossings(pu, pv) -> CrossingReport:
    """Crossings between two equal-length profiles.

    Restricted to indices where the values differ, the count is the number
    of sign alternations; witnesses are the leftmost maximal alternating
    index subsequence (empty when the profiles never differ).
    """
    su, sv = _values(pu), _values(pv)
    if len(su) != len(sv):
        raise LengthMismatchError(f"profile lengths differ: {len(su)} vs {len(sv)}")
    base = _offset(pu)
    witnesses: list[int] = []
    last_sign = 0
    for idx, (a, b) in enumerate(zip(su, sv)):
        if a == b:
            continue
        sign = 1 if a > b else -1
        if sign != last_sign:
            witnesses.append(base + idx)
            last_sign = sign
    if not witnesses:
        return CrossingReport(count=0, witnesses=())
    return CrossingReport(count=len(witnesses) - 1, witnesses=tuple(witnesses))


def dominates(pu, pv) -> bool:
    """True iff pu >= pv pointwise (exact)."""
    su, sv = _values(pu), _values(pv)
    if len(su) != len(sv):
        raise LengthMismatchError(f"profile lengths differ: {len(su)} vs {len(sv)}")
    return all(a >= b for a, b in zip(su, sv))


def vertex_analysis(p: Profile) -> dict:
    dips = count_dips(p)
    return {
        "vertex": p.vertex,
        "dip_count": dips.count,
        "dip_intervals": [list(iv) for iv in dips.intervals],
        "monotone_class": monotonicity_class(p),
    }


def pair_analysis(pu: Profile, pv: Profile) -> dict:
    crossings = count_crossings(pu, pv)
    return {
        "vertices": [pu.vertex, pv.vertex],
        "crossing_count": crossings.count,
        "witnesses": list(crossings.witnesses),
        "dominates": dominates(pu, pv),
    }
