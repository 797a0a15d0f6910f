"""Realizations containing every 2-tree on k vertices.

The constructive route for a sequence ``d_1 >= ... >= d_n``:

* cases (a)-(c): lay off ``d_1`` and then the image of ``d_2``; the residual
  ``rho`` keeps ``d_3 - 2, ..., d_k - 2`` in front, so a realization of
  ``rho`` rich on its top ``k - 3`` vertices lifts to one rich on the top k;
* cases (d)-(g): either force ``K_k`` on the top vertices (large ``d_k``) or
  run the staged reduction (``pi_chain``) whose graphic final sequence
  rebuilds into a realization with the universal host on the top k vertices;
* small d_n: lay off the last term first and lift afterwards.

Throughout, a realization is a :class:`SimpleGraph` in which vertex ``p``
has degree ``seq[p]``.  Every construction is re-verified by subgraph search
before it is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from .degseq import (
    check_sequence,
    is_graphic,
    layoff_tracked,
    min_order,
    realize_edges,
    thresholds,
)
from .graphs import SimpleGraph, complete, complete_minus_path, disjoint_union, path, subgraph_contains
from .hosts import contains_all_but_T, make_host
from .twotree import DEFAULT_ENUMERATION_CAP, enumerate_two_trees, make_F


class HypothesisError(ValueError):
    """Input outside the hypotheses of the requested construction."""


class Falsification(RuntimeError):
    """A step that the theory guarantees has failed."""


class ChainError(HypothesisError):
    pass


CASES = "abcdefg"


# --------------------------------------------------------------------------
# case classification and rho


def _term(seq: Sequence[int], i: int) -> int:
    """``d_i`` with 1-based i; indices past the end read as 0."""
    return seq[i - 1] if 1 <= i <= len(seq) else 0


def degenerate_indices(seq: Sequence[int]) -> bool:
    n = len(seq)
    return seq[0] + 2 > n or seq[1] + 2 > n


def classify_case(seq: Sequence[int], k: int) -> str:
    n = len(seq)
    if not 2 <= k <= n or seq[0] >= n:
        raise HypothesisError(f"classification needs k <= n and d_1 < n (k={k}, n={n})")
    d1, d2, dk = seq[0], seq[1], seq[k - 1]
    at2, at1 = _term(seq, d2 + 2), _term(seq, d1 + 2)
    if d1 == n - 1 and d2 == n - 1:
        return "a"
    if d1 == n - 1:
        if dk > at2:
            return "b"
        if dk == at2:
            return "f"
    else:
        if dk > at2:
            return "c" if dk - at1 >= 2 else "d"
        if dk == at2:
            return "e" if at2 == at1 else "g"
    raise HypothesisError(f"d_k < d_(d_2+2): no case applies to k={k}")


def rho_tracked(seq: Sequence[int]):
    """``rho`` together with the bookkeeping needed to lift realizations.

    Returns ``(rho, origin, added)``: ``origin[p]`` is the position in *seq*
    of rho's position ``p``; ``added`` lists ``(vertex, neighbours)`` to put
    back, innermost first.
    """
    seq = tuple(seq)
    if len(seq) < 3:
        raise HypothesisError("rho needs n >= 3")
    r1, o1, dec1 = layoff_tracked(seq, 0)
    j = o1.index(1)
    r2, o2, dec2 = layoff_tracked(r1, j)
    origin = [o1[p] for p in o2]
    added = [(1, [o1[p] for p in dec2]), (0, list(dec1))]
    return r2, origin, added


def rho(seq: Sequence[int]) -> tuple:
    return rho_tracked(check_sequence(seq))[0]


def lift(inner: SimpleGraph, n: int, origin: Sequence[int], added) -> SimpleGraph:
    edges = [(origin[u], origin[v]) for u, v in inner.edges]
    for v, nbrs in added:
        edges.extend((v, w) for w in nbrs)
    return SimpleGraph(n, edges)


# --------------------------------------------------------------------------
# staged reduction


def chain_family(k: int) -> str:
    if k == 7:
        return "G7"
    if k % 3 == 0 and k >= 6:
        return "G3t"
    if k % 3 == 1 and k >= 10:
        return "G3t1"
    if k % 3 == 2 and k >= 8:
        return "G3t2"
    raise HypothesisError(f"no staged reduction for k={k}")


def _ceil_half(i: int) -> int:
    return (i + 1) // 2


def chain_hypothesis_failure(seq: Sequence[int], k: int) -> str | None:
    """First violated degree hypothesis of the reduction for k, or None."""
    n = len(seq)
    d = lambda i: _term(seq, i)  # noqa: E731
    family = chain_family(k)
    t = k // 3
    if family == "G7":
        checks = [(n >= 30, "n >= 30"), (d(2) >= 6, "d_2 >= 6"), (d(3) >= 5, "d_3 >= 5"),
                  (d(6) >= 4, "d_6 >= 4"), (d(n) >= 3, "d_n >= 3")]
    elif family == "G3t":
        checks = [(n >= 18 * t, f"n >= {18 * t}")]
        checks += [(d(i) >= 3 * t - _ceil_half(i), f"d_{i} >= {3 * t - _ceil_half(i)}") for i in range(1, 2 * t + 1)]
        checks += [(d(2 * t + 1) >= 2 * t, f"d_{2 * t + 1} >= {2 * t}"), (d(n) >= 2 * t - 1, f"d_n >= {2 * t - 1}")]
    elif family == "G3t1":
        checks = [(n >= 18 * t + 6, f"n >= {18 * t + 6}")]
        checks += [(d(i) >= 3 * t + 1 - _ceil_half(i), f"d_{i} >= {3 * t + 1 - _ceil_half(i)}") for i in range(1, 2 * t - 2)]
        checks += [(d(2 * t - 1) >= 2 * t + 1, f"d_{2 * t - 1} >= {2 * t + 1}"),
                   (d(2 * t + 2) >= 2 * t, f"d_{2 * t + 2} >= {2 * t}"), (d(n) >= 2 * t - 1, f"d_n >= {2 * t - 1}")]
    else:
        checks = [(n >= 18 * t + 12, f"n >= {18 * t + 12}")]
        checks += [(d(i) >= 3 * t + 2 - _ceil_half(i), f"d_{i} >= {3 * t + 2 - _ceil_half(i)}") for i in range(1, 2 * t)]
        checks += [(d(2 * t + 1) >= 2 * t + 1, f"d_{2 * t + 1} >= {2 * t + 1}"), (d(n) >= 2 * t, f"d_n >= {2 * t}")]
    for ok, text in checks:
        if not ok:
            return text
    return None


def protected_steps(seq: Sequence[int], k: int) -> dict[int, int]:
    """Step i -> 1-based position that step i must not decrement."""
    family = chain_family(k)
    t = k // 3
    if family == "G7":
        return {6: 7}
    if family == "G3t1" and _term(seq, 2 * t - 2) == 2 * t + 1:
        return {2 * t - 2: 2 * t}
    if family == "G3t2" and _term(seq, 2 * t) == 2 * t + 1:
        return {2 * t: 2 * t + 2}
    return {}


@dataclass(frozen=True)
class ChainStep:
    removed_index: int                 # 1-based position of the removed term
    removed_value: int
    decremented_positions: tuple       # 1-based positions, in list order
    protected_position: int | None
    presort_snapshot: tuple            # values at positions i+1..n before the tail re-sort
    after: tuple                       # pi_i: values at positions i+1..n
    decremented_vertices: tuple        # vertex ids behind decremented_positions


@dataclass
class ReductionTrace:
    k: int
    family: str
    initial: tuple
    start: tuple                       # pi_0
    pre_edges: tuple
    steps: list = field(default_factory=list)
    final_order: tuple = ()            # vertex id at each position of the final sequence

    @property
    def final(self) -> tuple:
        return self.steps[-1].after if self.steps else self.start

    def value_at(self, i: int, position: int) -> int:
        """``d_position^{(i)}``: value at 1-based *position* in pi_i."""
        if i == 0:
            return self.start[position - 1]
        return self.steps[i - 1].after[position - i - 1]

    def verify_replay(self) -> bool:
        """Rebuild pi_{k-1}, ..., pi_0 backwards from the final sequence."""
        current = list(self.final)
        for idx in range(len(self.steps) - 1, -1, -1):
            step = self.steps[idx]
            cut = self.k - step.removed_index
            pre = list(step.presort_snapshot)
            resorted = pre[:cut] + sorted(pre[cut:], reverse=True)
            if resorted != current:
                return False
            for pos in step.decremented_positions:
                pre[pos - step.removed_index - 1] += 1
            current = [step.removed_value] + pre
            expected = self.start if idx == 0 else self.steps[idx - 1].after
            if tuple(current) != tuple(expected):
                return False
        return True


def pi_chain(seq: Sequence[int], k: int, check_hypotheses: bool = True):
    """Staged reduction of *seq* for the k-vertex host.

    Step i deletes the term at position i and decrements the first that many
    remaining nonzero terms (skipping a protected position if the family
    has one), then re-sorts the terms beyond position k.  Returns
    ``(final, trace)``, where *final* has length ``n - k``.
    """
    seq = check_sequence(seq)
    n = len(seq)
    family = chain_family(k)
    if n < k:
        raise ChainError(f"n={n} < k={k}")
    if check_hypotheses:
        problem = chain_hypothesis_failure(seq, k)
        if problem:
            raise ChainError(f"hypothesis violated: {problem}")
    values = list(seq)
    pre_edges: tuple = ()
    if family == "G7":
        values[5] -= 1
        values[6] -= 1
        pre_edges = ((5, 6),)
        if values[5] < 0 or values[6] < 0:
            raise ChainError("d_6, d_7 must be positive")
    trace = ReductionTrace(k, family, seq, tuple(values), pre_edges)
    protect = protected_steps(seq, k)
    ids = list(range(n))
    for i in range(1, k + 1):
        d, rest_vals, rest_ids = values[0], values[1:], ids[1:]
        guard = protect.get(i)
        chosen = []
        for j, val in enumerate(rest_vals):
            if len(chosen) == d:
                break
            if val > 0 and i + 1 + j != guard:
                chosen.append(j)
        if len(chosen) < d:
            raise ChainError(f"step {i}: only {len(chosen)} nonzero terms for d={d}")
        for j in chosen:
            rest_vals[j] -= 1
        presort = tuple(rest_vals)
        cut = k - i
        tail = sorted(zip(rest_vals[cut:], rest_ids[cut:]), key=lambda p: -p[0])
        dec_vertices = tuple(rest_ids[j] for j in chosen)
        values = rest_vals[:cut] + [v for v, _ in tail]
        ids = rest_ids[:cut] + [u for _, u in tail]
        trace.steps.append(ChainStep(i, d, tuple(i + 1 + j for j in chosen), guard, presort,
                                     tuple(values), dec_vertices))
    trace.final_order = tuple(ids)
    return tuple(values), trace


def reconstruct(trace: ReductionTrace, g_final: SimpleGraph) -> SimpleGraph:
    """Realization of the chain's input from a realization of its final
    sequence (vertex p of *g_final* has degree ``final[p]``)."""
    final = trace.final
    if g_final.n != len(final) or tuple(g_final.degrees()) != tuple(final):
        raise HypothesisError("final graph does not realize the final sequence")
    ids = trace.final_order
    edges = [(ids[u], ids[v]) for u, v in g_final.edges]
    edges.extend(trace.pre_edges)
    for step in trace.steps:
        v = step.removed_index - 1
        edges.extend((v, w) for w in step.decremented_vertices)
    g = SimpleGraph(len(trace.initial), edges)
    if g.m != len(edges) or tuple(g.degrees()) != trace.initial:
        raise Falsification("reconstruction does not realize the input sequence")
    return g


def s_index(trace: ReductionTrace, i: int) -> int:
    """``s_i = max{ j : d_{k+1}^{(i)} - d_{k+j}^{(i)} <= 1 }``."""
    k, n = trace.k, len(trace.initial)
    head = trace.value_at(i, k + 1)
    best = 1
    for j in range(1, n - k + 1):
        if head - trace.value_at(i, k + j) <= 1:
            best = j
    return best


@dataclass(frozen=True)
class TailCheck:
    holds: bool
    applicable: bool
    case: str
    s: int | None = None

    def __bool__(self):
        return self.holds


def tail_preservation_check(seq: Sequence[int], k: int) -> TailCheck:
    """Beyond ``s_k`` the chain leaves the tail untouched: equal to the input
    tail in cases (d), (e) and to the tail of pi_1 in cases (f), (g)."""
    seq = check_sequence(seq)
    case = classify_case(seq, k)
    if case in "abc":
        return TailCheck(True, False, case)
    _, trace = pi_chain(seq, k)
    n = len(seq)
    s = s_index(trace, k)
    ref = 0 if case in "de" else 1
    holds = all(
        trace.value_at(k, k + r) == (seq[k + r - 1] if ref == 0 else trace.value_at(1, k + r))
        for r in range(s + 1, n - k + 1)
    )
    return TailCheck(holds, True, case, s)


# --------------------------------------------------------------------------
# forcing a small pattern onto the top vertices by 2-switches


class _Realization:
    def __init__(self, n: int, edges):
        self.n = n
        self.adj = [set() for _ in range(n)]
        for u, v in edges:
            self.adj[u].add(v)
            self.adj[v].add(u)

    def graph(self) -> SimpleGraph:
        return SimpleGraph(self.n, [(u, v) for u in range(self.n) for v in self.adj[u] if u < v])

    def top(self, r: int) -> SimpleGraph:
        return SimpleGraph(r, [(u, v) for u in range(r) for v in self.adj[u] if u < v < r])

    def swap(self, remove, add):
        for u, v in remove:
            self.adj[u].discard(v)
            self.adj[v].discard(u)
        for u, v in add:
            self.adj[u].add(v)
            self.adj[v].add(u)


def _pair(u, v):
    return (u, v) if u < v else (v, u)


def _targets(top: SimpleGraph, pattern: SimpleGraph, r: int, rng: random.Random):
    """Candidate placements of *pattern* on the top r vertices, best first."""
    if pattern.m == pattern.n * (pattern.n - 1) // 2:
        maps = [tuple(range(pattern.n))]
    elif r <= 6:
        maps = list(permutations(range(r), pattern.n))
    else:
        maps = [tuple(rng.sample(range(r), pattern.n)) for _ in range(2000)]
    scored = []
    for mp in maps:
        edges = [_pair(mp[u], mp[v]) for u, v in pattern.edges]
        missing = [e for e in edges if not top.has_edge(*e)]
        scored.append((len(missing), edges, missing))
    scored.sort(key=lambda x: x[0])
    return scored


def _add_edge(R: _Realization, u: int, v: int, protected: set, rng: random.Random, r: int) -> bool:
    """Insert uv while keeping every degree and every protected edge."""
    nu = [a for a in R.adj[u] if a != v and _pair(u, a) not in protected]
    nv = [b for b in R.adj[v] if b != u and _pair(v, b) not in protected]
    rng.shuffle(nu)
    rng.shuffle(nv)
    nu.sort(key=lambda a: a < r)
    nv.sort(key=lambda b: b < r)
    for a in nu:
        for b in nv:
            if a != b and b not in R.adj[a]:
                R.swap([(u, a), (v, b)], [(u, v), (a, b)])
                return True
    # three-edge moves: {ua, vb, cd} -> {uv, ac, bd}
    edges = [(c, d) for c in range(R.n) for d in R.adj[c] if _pair(c, d) not in protected]
    rng.shuffle(edges)
    for a in nu[:6]:
        for b in nv[:6]:
            for c, d in edges[:400]:
                if len({u, v, a, b, c, d}) < 6 and not (a == b and len({u, v, a, c, d}) == 5):
                    continue
                if a == b:
                    if c in R.adj[a] or d in R.adj[a]:
                        continue
                    R.swap([(u, a), (v, a), (c, d)], [(u, v), (a, c), (a, d)])
                    return True
                if c in R.adj[a] or d in R.adj[b]:
                    continue
                R.swap([(u, a), (v, b), (c, d)], [(u, v), (a, c), (b, d)])
                return True
    return False


def _shake(R: _Realization, protected: set, rng: random.Random, moves: int = 20):
    edges = [(u, v) for u in range(R.n) for v in R.adj[u] if u < v and (u, v) not in protected]
    for _ in range(moves):
        if len(edges) < 2:
            return
        (a, b), (c, d) = rng.sample(edges, 2)
        if len({a, b, c, d}) < 4 or d in R.adj[a] or c in R.adj[b]:
            continue
        R.swap([(a, b), (c, d)], [(a, d), (b, c)])
        edges = [(u, v) for u in range(R.n) for v in R.adj[u] if u < v and (u, v) not in protected]


def force_on_top(seq: Sequence[int], r: int, patterns: Sequence[SimpleGraph],
                 seed: int = 0, rounds: int = 200) -> SimpleGraph:
    """Realization of *seq* whose first r vertices induce a supergraph of one
    of *patterns*.  Starts from the Havel–Hakimi realization and inserts the
    missing pattern edges with degree-preserving switches."""
    rng = random.Random(seed)
    R = _Realization(len(seq), realize_edges(seq))
    for _ in range(rounds):
        top = R.top(r)
        for p in patterns:
            if subgraph_contains(top, p) is not None:
                return R.graph()
        options = []
        for p in patterns:
            options.extend(_targets(top, p, r, rng)[:3])
        options.sort(key=lambda x: x[0])
        _, edges, missing = options[rng.randrange(min(2, len(options)))]
        protected = {e for e in edges if e not in missing}
        progress = False
        for u, v in missing:
            if _add_edge(R, u, v, protected, rng, r):
                protected.add(_pair(u, v))
                progress = True
        if not progress:
            _shake(R, protected, rng)
    raise Falsification(f"could not place pattern on top {r} vertices of {tuple(seq)}")


# --------------------------------------------------------------------------
# A''(k) constructions


def _k3uk2():
    return disjoint_union(complete(3), complete(2))


_BASE_PATTERN = {3: lambda: complete(3), 4: lambda: complete_minus_path(4, 2), 5: lambda: complete_minus_path(5, 3)}


def direct_min_order(k: int) -> int:
    """Smallest n for which the direct construction (d_n >= min_degree(k)) applies."""
    if k in (3, 4, 5):
        return k
    family = chain_family(k)
    t = k // 3
    return {"G7": 30, "G3t": 18 * t, "G3t1": 18 * t + 6, "G3t2": 18 * t + 12}[family]


def min_degree(k: int) -> int:
    """Smallest last term for which the direct construction applies."""
    if k in (3, 4, 5):
        return 0
    family = chain_family(k)
    t = k // 3
    return {"G7": 3, "G3t": 2 * t - 1, "G3t1": 2 * t - 1, "G3t2": 2 * t}[family]


def top_contains_all(g: SimpleGraph, k: int, vertices: Sequence[int] | None = None) -> bool:
    top = g.induced(list(vertices) if vertices is not None else list(range(k)))
    if k <= DEFAULT_ENUMERATION_CAP:
        return all(subgraph_contains(top, t) is not None for t in enumerate_two_trees(k))
    return subgraph_contains(top, make_host(k).graph) is not None


def _relabel_positions(g: SimpleGraph, seq: Sequence[int], preferred: Sequence[int]) -> SimpleGraph:
    """Rename vertices so that vertex p has degree seq[p], placing the
    *preferred* vertices as early as their degrees allow."""
    rank = {v: i for i, v in enumerate(preferred)}
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], rank.get(v, len(rank)), v))
    if [deg[v] for v in order] != list(seq):
        raise Falsification("construction has the wrong degree sequence")
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def realize_seven_except_T(seq: Sequence[int], seed: int = 0) -> SimpleGraph:
    """Realization whose top 7 vertices contain every 7-vertex 2-tree except
    T(7); needs n >= 30, d_n >= 3 and sum > 6n - 10."""
    seq = check_sequence(seq)
    n = len(seq)
    if n < 30 or seq[-1] < 3 or sum(seq) <= 6 * n - 10:
        raise HypothesisError("needs n >= 30, d_n >= 3 and sigma > 6n - 10")
    if seq[1] >= 6:
        return _realize_a2(seq, 7, random.Random(seed), [])
    N = n - 1
    f = make_F(N)
    x = N  # the added vertex
    X = lambda i: i - 1  # noqa: E731  x_i of F(N)
    families = {
        (n - 1,) + (5,) * (n - 1): ([(1, N - 1), (1, N), (2, N)], range(1, N + 1), 1),
        (n - 2,) + (5,) * (n - 2) + (4,): ([(1, N - 1), (1, N), (2, N)], range(1, N), 1),
        (n - 1,) + (5,) * (n - 3) + (4, 4): ([(1, N - 1), (2, N)], range(1, N + 1), 2),
        (n - 1,) + (5,) * (n - 2) + (3,): ([(1, N - 1), (1, N - 2), (2, N - 1)], range(1, N + 1), 1),
        (n - 3,) + (5,) * (n - 1): ([(1, N - 1), (1, N), (2, N - 1), (2, N)],
                                    [1] + list(range(3, N - 1)) + [N], 3),
    }
    if seq not in families:
        raise HypothesisError(f"d_2 <= 5 but {seq} is not one of the five exceptional sequences")
    extra, joined, first = families[seq]
    edges = set(f.edges) | {_pair(X(a), X(b)) for a, b in extra}
    if seq == (n - 1,) + (5,) * (n - 2) + (3,):
        edges.discard(_pair(X(N - 1), X(N - 2)))
    g = SimpleGraph(N + 1, list(edges) + [(x, X(i)) for i in joined])
    witness = [x] + [X(i) for i in range(first, first + 6)]
    g = _relabel_positions(g, seq, witness)
    if not contains_all_but_T(g.induced(list(range(7))), 7):
        raise Falsification("exceptional construction misses a 2-tree")
    return g


def _realize_a2(seq: tuple, k: int, rng: random.Random, route: list) -> SimpleGraph:
    """Realization whose top k vertices contain every 2-tree on k vertices."""
    seed = rng.randrange(1 << 30)
    if k in _BASE_PATTERN:
        route.append(f"k={k}: forced base pattern")
        g = force_on_top(seq, k, [_BASE_PATTERN[k]()], seed=seed)
    else:
        case = classify_case(seq, k)
        if case in "abc":
            route.append(f"k={k}: case ({case}), reduce to rho")
            r, origin, added = rho_tracked(seq)
            if any(r[i] != seq[i + 2] - 2 for i in range(k - 2)) or list(origin[:k - 2]) != list(range(2, k)):
                raise Falsification(f"rho does not keep d_3-2..d_k-2 in front for {seq}")
            if k == 7:
                inner = force_on_top(r, 5, [_k3uk2(), path(5)], seed=seed)
            elif k == 8:
                inner = force_on_top(r, 5, [complete_minus_path(5, 4)], seed=seed)
            elif k == 10:
                inner = realize_seven_except_T(r, seed=seed)
            else:
                inner = _realize_a2(r, k - 3, rng, route)
            g = lift(inner, len(seq), origin, added)
        elif seq[k - 1] >= 2 * k - 3:
            route.append(f"k={k}: case ({case}), clique on top")
            g = force_on_top(seq, k, [complete(k)], seed=seed)
        else:
            route.append(f"k={k}: case ({case}), staged reduction")
            final, trace = pi_chain(seq, k)
            if not is_graphic(final):
                raise Falsification(f"final sequence of the reduction is not graphic for {seq}")
            g = reconstruct(trace, SimpleGraph(len(final), realize_edges(final)))
            if subgraph_contains(g.induced(list(range(k))), make_host(k).graph) is None:
                raise Falsification("reconstruction lacks the host on the top vertices")
    if tuple(g.degrees()) != tuple(seq):
        raise Falsification("construction has the wrong degrees")
    if not top_contains_all(g, k):
        raise Falsification(f"top {k} vertices miss a 2-tree for {seq}")
    return g


@dataclass
class Construction:
    sequence: tuple
    k: int
    graph: SimpleGraph
    witness: tuple          # the k vertices carrying every 2-tree
    on_top: bool            # witness degrees are d_1..d_k
    route: list = field(default_factory=list)


def _realize_stripped(seq: tuple, k: int, rng: random.Random, route: list):
    n = len(seq)
    if seq[-1] < min_degree(k) and n > k:
        route.append(f"lay off d_n={seq[-1]} (n={n})")
        r, origin, dec = layoff_tracked(seq, n - 1)
        inner, witness = _realize_stripped(r, k, rng, route)
        return lift(inner, n, origin, [(n - 1, dec)]), tuple(origin[w] for w in witness)
    if n < direct_min_order(k):
        route.append(f"n={n}: clique on top")
        return force_on_top(seq, k, [complete(k)], seed=rng.randrange(1 << 30)), tuple(range(k))
    return _realize_a2(seq, k, rng, route), tuple(range(k))


def build_construction(seq: Sequence[int], k: int, seed: int = 0, check: bool = True) -> Construction:
    """Realization of *seq* containing every 2-tree on k vertices, with the
    route taken.  ``check`` enforces sigma > threshold and n >= N(k)."""
    seq = check_sequence(seq)
    n = len(seq)
    if not is_graphic(seq):
        raise HypothesisError(f"not graphic: {seq}")
    if check:
        th = thresholds(k, n)
        if sum(seq) <= th.effective:
            raise HypothesisError(f"sigma={sum(seq)} does not exceed {th.effective}")
        if n < min_order(k):
            raise HypothesisError(f"n={n} is below N({k})={min_order(k)}")
    route: list = []
    g, witness = _realize_stripped(seq, k, random.Random(seed), route)
    if tuple(g.degrees()) != seq:
        raise Falsification("construction has the wrong degrees")
    if not top_contains_all(g, k, witness):
        raise Falsification(f"witness vertices miss a 2-tree for {seq}")
    deg = g.degrees()
    on_top = sorted((deg[w] for w in witness), reverse=True) == list(seq[:k])
    return Construction(seq, k, g, witness, on_top, route)


def construct_realization_all_two_trees(seq: Sequence[int], k: int, seed: int = 0) -> SimpleGraph:
    return build_construction(seq, k, seed=seed).graph
