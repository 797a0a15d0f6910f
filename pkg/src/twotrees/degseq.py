"""Degree sequences: graphicality, laying off, and the extremal thresholds.

A degree sequence is a plain tuple of non-negative integers in non-increasing
order.  Indices in the public API are 1-based where they name a term
``d_k`` of the sequence; everything else is 0-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

DegreeSequence = tuple  # tuple[int, ...], non-increasing


class SequenceError(ValueError):
    """Raised for malformed sequences or out-of-range arguments."""


def check_sequence(seq: Iterable[int]) -> tuple:
    """Validate *seq* as a member of NS_n and return it as a tuple."""
    terms = tuple(int(d) for d in seq)
    if not terms:
        raise SequenceError("degree sequence must have at least one term")
    if any(d < 0 for d in terms):
        raise SequenceError(f"negative term in {terms}")
    if any(terms[i] < terms[i + 1] for i in range(len(terms) - 1)):
        raise SequenceError(f"sequence is not non-increasing: {terms}")
    if terms[0] > len(terms) - 1:
        raise SequenceError(f"d_1={terms[0]} exceeds n-1={len(terms) - 1}")
    return terms


_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_sequence(text: str) -> tuple:
    """Parse ``"6,2,2"`` or the run-length form ``"6,2^6"``.

    The terms are sorted into non-increasing order but otherwise not checked.
    """
    terms: list[int] = []
    for chunk in text.split(","):
        m = _TERM.match(chunk)
        if m is None:
            raise SequenceError(f"bad sequence term {chunk!r} in {text!r}")
        value, reps = int(m.group(1)), int(m.group(2) or 1)
        terms.extend([value] * reps)
    if not terms:
        raise SequenceError("empty sequence")
    return tuple(sorted(terms, reverse=True))


def format_sequence(seq: Sequence[int]) -> str:
    return ",".join(str(d) for d in seq)


def sigma(seq: Sequence[int]) -> int:
    return sum(seq)


def erdos_gallai_violation(seq: Sequence[int]) -> int | None:
    """First t (1-based) whose Erdős–Gallai inequality fails, else None.

    Parity is not considered here; see :func:`is_graphic`.
    """
    d = sorted(seq, reverse=True)
    n = len(d)
    left = 0
    for t in range(1, n):
        left += d[t - 1]
        right = t * (t - 1) + sum(min(t, x) for x in d[t:])
        if left > right:
            return t
    return None


def is_graphic(seq: Sequence[int]) -> bool:
    """Erdős–Gallai test.  Total: odd sums and out-of-range terms give False."""
    n = len(seq)
    if n == 0:
        return True
    if any(d < 0 or d > n - 1 for d in seq):
        return False
    if sum(seq) % 2:
        return False
    return erdos_gallai_violation(seq) is None


def layoff_tracked(terms: Sequence[int], index: int):
    """Lay off the term at 0-based *index* and keep track of who is who.

    The term ``d`` at *index* is removed and the ``d`` earliest other terms are
    decremented.  The remainder is stably sorted into non-increasing order.

    Returns ``(residual, origin, decremented)`` where ``origin[j]`` is the input
    position of residual position ``j`` and ``decremented`` lists the input
    positions that lost one unit.  Terms may go negative when the input is not
    graphic.
    """
    n = len(terms)
    if not 0 <= index < n:
        raise SequenceError(f"index {index + 1} out of range 1..{n}")
    d = terms[index]
    others = [p for p in range(n) if p != index]
    if d > len(others):
        raise SequenceError(f"term {d} exceeds the {len(others)} other terms")
    decremented = others[:d]
    values = {p: terms[p] for p in others}
    for p in decremented:
        values[p] -= 1
    origin = sorted(others, key=lambda p: -values[p])  # stable
    return tuple(values[p] for p in origin), origin, decremented


def layoff(seq: Sequence[int], k: int) -> tuple:
    """Residual sequence obtained by laying off ``d_k`` (1-based ``k``)."""
    if not 1 <= k <= len(seq):
        raise SequenceError(f"k={k} out of range 1..{len(seq)}")
    residual, _, _ = layoff_tracked(tuple(seq), k - 1)
    return residual


def yin_li_sufficient(seq: Sequence[int]) -> bool:
    """Sufficient condition for graphicality in terms of d_1 and a bulk of
    large terms: some h >= 1 with ``n_1 * h >= floor((d_1 + h + 1)^2 / 4)``
    where ``n_1`` counts the terms that are at least ``h``.
    """
    if sum(seq) % 2:
        raise SequenceError("sufficient condition needs an even sum")
    if not seq:
        return True
    m = seq[0]
    for h in range(1, m + 2):
        n1 = sum(1 for x in seq if x >= h)
        if n1 >= 1 and n1 * h >= (m + h + 1) ** 2 // 4:
            return True
    return False


# --------------------------------------------------------------------------
# thresholds

_SMALL_N = {3: 6, 4: 7, 5: 24, 7: 93}


def min_order(k: int) -> int:
    """N(k): the smallest n for which the extremal bound is proved."""
    if k < 3:
        raise SequenceError("k must be at least 3")
    if k in _SMALL_N:
        return _SMALL_N[k]
    t = k // 3
    return {0: 20 * t * t - t, 1: 20 * t * t + 23 * t + 5, 2: 20 * t * t + 31 * t + 12}[k % 3]


@dataclass(frozen=True)
class ThresholdReport:
    k: int
    n: int
    residue: int
    bound_a: int
    bound_b: int
    effective: int
    n_min: int

    @property
    def applies(self) -> str:
        """Which bound governs this k: "a" is (k-1)(n-1), "b" the residue formula."""
        return "a" if self.k in (3, 4, 5, 7) else "b"

    def as_dict(self) -> dict:
        return {
            "k": self.k, "n": self.n, "residue": self.residue,
            "bound_a": self.bound_a, "bound_b": self.bound_b,
            "effective": self.effective, "n_min": self.n_min,
            "applies": self.applies,
        }


def thresholds(k: int, n: int) -> ThresholdReport:
    if k < 3:
        raise SequenceError("k must be at least 3")
    if n < 1:
        raise SequenceError("n must be positive")
    i = k % 3
    f = 2 * k // 3
    bound_a = (k - 1) * (n - 1)
    bound_b = 2 * f * n - 2 * n - f * f + f + 1 - (-1) ** i
    return ThresholdReport(k, n, i, bound_a, bound_b, max(bound_a, bound_b), min_order(k))


# --------------------------------------------------------------------------
# realization


def realize_edges(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Edges of a realization in which vertex ``p`` has degree ``seq[p]``.

    Repeatedly lays off the current first term (Havel–Hakimi).  The input
    need not be sorted.
    """
    order = sorted(range(len(seq)), key=lambda p: -seq[p])
    values = [seq[p] for p in order]
    labels = list(order)
    if not is_graphic(values):
        raise SequenceError(f"sequence is not graphic: {tuple(values)}")
    edges = []
    while labels:
        residual, origin, dec = layoff_tracked(values, 0)
        head = labels[0]
        edges.extend((min(head, labels[p]), max(head, labels[p])) for p in dec)
        labels = [labels[p] for p in origin]
        values = list(residual)
    return sorted(edges)


def realize(seq: Sequence[int]):
    """A realization of a graphic sequence as a :class:`SimpleGraph`."""
    from .graphs import SimpleGraph

    seq = check_sequence(seq)
    if not is_graphic(seq):
        raise SequenceError(f"sequence is not graphic: {seq}")
    return SimpleGraph(len(seq), realize_edges(seq))
