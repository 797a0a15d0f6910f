"""Checking the extremal statements: realization-space scans at small n,
seeded sampling at large n, and sharpness examples."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .degseq import check_sequence, is_graphic, thresholds
from .graphs import DEFAULT_REALIZATION_CAP, SimpleGraph, all_realizations, subgraph_contains
from .potential import Falsification, HypothesisError, build_construction, classify_case, min_degree
from .twotree import enumerate_two_trees

STRONG, WEAK = "strong", "weak"


def _contains_all(g: SimpleGraph, trees) -> bool:
    return all(subgraph_contains(g, t) is not None for t in trees)


def strong_witness(seq: Sequence[int], k: int, cap: int = DEFAULT_REALIZATION_CAP) -> SimpleGraph | None:
    """A realization containing every 2-tree on k vertices, or None."""
    seq = check_sequence(seq)
    if len(seq) < k or not is_graphic(seq):
        return None
    trees = enumerate_two_trees(k)
    for g in all_realizations(seq, unlabeled=True, cap=cap):
        if _contains_all(g, trees):
            return g
    return None


def weak_missing(seq: Sequence[int], k: int, cap: int = DEFAULT_REALIZATION_CAP) -> list[SimpleGraph]:
    """The 2-trees on k vertices that no realization of *seq* contains."""
    seq = check_sequence(seq)
    trees = enumerate_two_trees(k)
    if len(seq) < k or not is_graphic(seq):
        return trees
    missing = list(trees)
    for g in all_realizations(seq, unlabeled=True, cap=cap):
        missing = [t for t in missing if subgraph_contains(g, t) is None]
        if not missing:
            break
    return missing


def potential_check(seq: Sequence[int], k: int, mode: str = STRONG,
                    cap: int = DEFAULT_REALIZATION_CAP) -> bool:
    """strong: one realization contains every 2-tree on k vertices.
    weak: every such 2-tree lies in some realization."""
    if mode == STRONG:
        return strong_witness(seq, k, cap) is not None
    if mode == WEAK:
        return not weak_missing(seq, k, cap)
    raise ValueError(f"mode must be {STRONG!r} or {WEAK!r}")


@dataclass(frozen=True)
class ExtremalExample:
    sequence: tuple
    sigma: int
    bound: int          # (k-1)(n-1)
    adjusted: bool      # last term lowered to fix parity
    graphic: bool


def extremal_example(k: int, n: int) -> ExtremalExample:
    """``(n-1, (k-2)^(n-1))``: one vertex of degree at least 3 when k = 4,
    so no realization holds T(k).  Odd sums lower the last term by one."""
    if k < 3 or n <= k:
        raise ValueError("needs k >= 3 and n > k")
    seq = [n - 1] + [k - 2] * (n - 1)
    adjusted = sum(seq) % 2 == 1
    if adjusted:
        seq[-1] -= 1
    seq = tuple(seq)
    return ExtremalExample(seq, sum(seq), (k - 1) * (n - 1), adjusted, is_graphic(seq))


def graphic_sequences(n: int, min_sigma: int | None = None):
    """Graphic members of NS_n (with sum above *min_sigma* if given), in
    decreasing lexicographic order."""
    for combo in combinations_with_replacement(range(n - 1, -1, -1), n):
        if (min_sigma is None or sum(combo) > min_sigma) and is_graphic(combo):
            yield combo


def max_failing_sigma(k: int, n: int, mode: str = STRONG, cap: int = DEFAULT_REALIZATION_CAP):
    """Largest sum of a graphic sequence on n terms failing *mode*, with the
    failing sequences at that sum.  ``(None, [])`` when nothing fails."""
    best, worst = None, []
    for seq in graphic_sequences(n):
        if best is not None and sum(seq) < best:
            continue
        if not potential_check(seq, k, mode, cap):
            if best is None or sum(seq) > best:
                best, worst = sum(seq), [seq]
            else:
                worst.append(seq)
    return best, sorted(worst, reverse=True)


# --------------------------------------------------------------------------
# sampling


def sample_sequence(k: int, n: int, rng: random.Random, strict: bool = True,
                    max_tries: int = 10000) -> tuple:
    """Random graphic sequence on n terms with sum above the threshold.

    A few hubs (biased to n-1 and n-2) sit over a body of terms drawn from
    a short interval; random terms are raised until the sum clears the
    threshold.  With *strict* the last term is at least ``min_degree(k)``
    (and d_2 >= 6 for k = 7), so no layoff of the tail is needed.
    """
    th = thresholds(k, n).effective
    md = min_degree(k)
    for _ in range(max_tries):
        hubs = rng.randint(0, k + 2)
        lo = md if strict else rng.randint(1, md + 1)
        spread = rng.randint(1, 6)
        vals = []
        for _ in range(hubs):
            r = rng.random()
            vals.append(n - 1 if r < 0.35 else n - 2 if r < 0.5 else rng.randint(min(lo + spread, n - 1), n - 1))
        vals += [rng.randint(lo, min(lo + spread, n - 1)) for _ in range(n - hubs)]
        need = th + 1 + rng.choice([0, 0, 1, 2, 5, 20]) - sum(vals)
        open_ = [i for i in range(n) if vals[i] < n - 1]
        while need > 0 and open_:
            i = rng.choice(open_)
            vals[i] += 1
            need -= 1
            if vals[i] >= n - 1:
                open_.remove(i)
        if sum(vals) % 2:
            i = rng.randrange(n)
            vals[i] += 1 if vals[i] < n - 1 else -1
        seq = tuple(sorted(vals, reverse=True))
        if sum(seq) <= th or not is_graphic(seq):
            continue
        if strict and (seq[-1] < md or (k == 7 and seq[1] < 6)):
            continue
        return seq
    raise RuntimeError(f"no admissible sequence found for k={k}, n={n}")


# --------------------------------------------------------------------------
# reports


@dataclass
class Record:
    sequence: tuple
    k: int
    n: int
    sigma: int
    threshold: int
    case: str | None
    result: str                     # pass, fail, skipped
    witness_edges: list | None = None
    falsification: str | None = None

    def as_dict(self) -> dict:
        out = {
            "sequence": list(self.sequence), "k": self.k, "n": self.n, "sigma": self.sigma,
            "threshold": self.threshold, "case": self.case, "result": self.result,
        }
        if self.witness_edges is not None:
            out["witness_edges"] = self.witness_edges
        if self.falsification is not None:
            out["falsification"] = self.falsification
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)


@dataclass
class VerifyReport:
    k: int
    n: int
    mode: str
    records: list = field(default_factory=list)

    @property
    def falsifications(self) -> list:
        return [r for r in self.records if r.result == "fail"]

    @property
    def passed(self) -> int:
        return sum(r.result == "pass" for r in self.records)

    def summary(self) -> dict:
        return {
            "k": self.k, "n": self.n, "mode": self.mode, "checked": len(self.records),
            "passed": self.passed, "skipped": sum(r.result == "skipped" for r in self.records),
            "falsifications": len(self.falsifications),
        }

    def lines(self) -> list[str]:
        return [r.to_json() for r in self.records] + [json.dumps({"summary": self.summary()}, sort_keys=True)]


def _case(seq, k):
    try:
        return classify_case(seq, k)
    except HypothesisError:
        return None


def verify_theorem(k: int, n: int, mode: str = "sampled", samples: int = 100, seed: int = 0,
                   cap: int = DEFAULT_REALIZATION_CAP) -> VerifyReport:
    """Check that sums above ``thresholds(k, n).effective`` force a
    realization containing every 2-tree on k vertices.

    exhaustive: scan every graphic sequence above the threshold with
    :func:`potential_check` (n <= cap).  sampled: run the construction on
    *samples* seeded random sequences.
    """
    th = thresholds(k, n).effective
    report = VerifyReport(k, n, mode)
    if mode == "exhaustive":
        if n > cap:
            raise ValueError(f"exhaustive mode needs n <= {cap}")
        for seq in graphic_sequences(n, th):
            g = strong_witness(seq, k, cap)
            rec = Record(seq, k, n, sum(seq), th, _case(seq, k), "pass" if g else "fail")
            if g is not None:
                rec.witness_edges = [list(e) for e in g.edge_list()]
            else:
                rec.falsification = "no realization contains every 2-tree"
            report.records.append(rec)
    elif mode == "sampled":
        rng = random.Random(seed)
        for i in range(samples):
            seq = sample_sequence(k, n, rng)
            rec = Record(seq, k, n, sum(seq), th, _case(seq, k), "pass")
            try:
                c = build_construction(seq, k, seed=seed + i)
                top = c.graph.induced(list(c.witness))
                rec.witness_edges = [[c.witness[u], c.witness[v]] for u, v in top.edge_list()]
            except HypothesisError as exc:
                rec.result, rec.falsification = "skipped", str(exc)
            except Falsification as exc:
                rec.result, rec.falsification = "fail", str(exc)
            report.records.append(rec)
    else:
        raise ValueError("mode must be 'exhaustive' or 'sampled'")
    report.records.sort(key=lambda r: r.sequence, reverse=True)
    return report
