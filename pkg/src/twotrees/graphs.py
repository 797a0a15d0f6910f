"""Labeled simple graphs and the search machinery built on them.

Graphs are immutable.  Adjacency is kept as one integer bitmask per vertex,
which keeps the backtracking searches cheap in pure Python.
"""

from __future__ import annotations

import json
import re
from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .degseq import check_sequence, is_graphic, realize_edges


class GraphError(ValueError):
    pass


class SimpleGraph:
    """Undirected simple graph on vertices ``0 .. n-1``."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(adj)

    # basic queries -------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, SimpleGraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"SimpleGraph({self.n}, {self.edge_list()})"

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        a, out = self.adj[v], []
        while a:
            low = a & -a
            out.append(low.bit_length() - 1)
            a ^= low
        return out

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    # derived graphs ------------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, vertex ``vertices[i]`` becoming ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return SimpleGraph(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges if u in index and v in index],
        )

    def remove_vertices(self, vertices: Iterable[int]) -> "SimpleGraph":
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return SimpleGraph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edges(self, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        return SimpleGraph(self.n, list(self.edges) + list(edges))

    def complement(self) -> "SimpleGraph":
        return SimpleGraph(
            self.n, [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]
        )

    # serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edge_list()]}

    @classmethod
    def from_json(cls, data) -> "SimpleGraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["n"], data["edges"])

    def to_dot(self) -> str:
        body = "".join(f" {u} -- {v};" for u, v in self.edge_list())
        return "graph G {" + body + " }"


def degree_sequence(g: SimpleGraph) -> tuple:
    return tuple(sorted(g.degrees(), reverse=True))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --------------------------------------------------------------------------
# subgraph containment


def _search_order(pattern: SimpleGraph) -> list[int]:
    """Pattern vertices ordered so each one has many already-placed neighbours."""
    deg = pattern.degrees()
    placed: list[int] = []
    rest = set(range(pattern.n))
    placed_mask = 0
    while rest:
        v = max(rest, key=lambda u: (bin(pattern.adj[u] & placed_mask).count("1"), deg[u], -u))
        placed.append(v)
        placed_mask |= 1 << v
        rest.remove(v)
    return placed


def iter_embeddings(host: SimpleGraph, pattern: SimpleGraph, spanning: bool = False) -> Iterator[dict]:
    """All injective edge-preserving maps pattern -> host (not induced)."""
    if pattern.n > host.n or (spanning and pattern.n != host.n) or pattern.m > host.m:
        return
    if pattern.n == 0:
        yield {}
        return
    order = _search_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    full = (1 << host.n) - 1
    allowed = []
    for v in order:
        mask = 0
        for h in range(host.n):
            if hdeg[h] >= pdeg[v]:
                mask |= 1 << h
        allowed.append(mask)
    back = [[u for u in pattern.neighbors(v) if pos[u] < pos[v]] for v in order]
    image = [0] * pattern.n
    depth_count = pattern.n

    def extend(depth: int, used: int):
        if depth == depth_count:
            yield {order[i]: image[i] for i in range(depth_count)}
            return
        cand = allowed[depth] & ~used & full
        for u in back[depth]:
            cand &= host.adj[image[pos[u]]]
            if not cand:
                return
        for h in _bits(cand):
            image[depth] = h
            yield from extend(depth + 1, used | 1 << h)

    yield from extend(0, 0)


def subgraph_contains(host: SimpleGraph, pattern: SimpleGraph, spanning: bool = False) -> dict | None:
    """An embedding of *pattern* into *host* as a (not necessarily induced)
    subgraph, or None.  With ``spanning`` the embedding must be a bijection."""
    for emb in iter_embeddings(host, pattern, spanning):
        return emb
    return None


def is_embedding(host: SimpleGraph, pattern: SimpleGraph, mapping: dict) -> bool:
    if len(set(mapping.values())) != len(mapping) or set(mapping) != set(range(pattern.n)):
        return False
    return all(host.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges)


# --------------------------------------------------------------------------
# canonical labeling


def _refine(g: SimpleGraph, colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition finer than *colors*.

    Colours are ranks of sorted signatures, so the result commutes with
    relabeling the graph.
    """
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == count:
            return colors
        count = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    return [2 * c if u == v else 2 * c + 1 for u, c in enumerate(colors)]


def _certificate(g: SimpleGraph, labels: list[int]) -> int:
    n = g.n
    cert = 0
    for u, v in g.edges:
        a, b = labels[u], labels[v]
        if a > b:
            a, b = b, a
        cert |= 1 << (a * n + b)
    return cert


def _orbit_reps(cell: list[int], generators: list[list[int]]) -> dict[int, int]:
    parent = {v: v for v in cell}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for gen in generators:
        for v in cell:
            w = gen[v]
            if w in parent:
                a, b = find(v), find(w)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


def canonical_labeling(g: SimpleGraph) -> list[int]:
    """Labels ``lab[v]`` such that ``g.relabel(lab)`` depends only on the
    isomorphism class of *g*.

    Individualization-refinement with a full search tree; subtrees equivalent
    under an already known automorphism (found at leaves, or twin
    transpositions) are skipped.  The canonical form is the leaf whose
    adjacency certificate is largest.
    """
    n = g.n
    if n == 0:
        return []
    twins: list[list[int]] = []
    for u, w in combinations(range(n), 2):
        bu, bw = 1 << u, 1 << w
        if g.adj[u] & ~bw == g.adj[w] & ~bu:
            perm = list(range(n))
            perm[u], perm[w] = w, u
            twins.append(perm)
    autos: list[list[int]] = []
    best: list = [None, None]  # certificate, labels

    def visit(colors: list[int], fixed: tuple):
        if len(set(colors)) == n:
            cert = _certificate(g, colors)
            if best[0] is None or cert > best[0]:
                best[0], best[1] = cert, colors
            elif cert == best[0]:
                inv = [0] * n
                for v, c in enumerate(best[1]):
                    inv[c] = v
                autos.append([inv[colors[v]] for v in range(n)])
            return
        sizes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            sizes.setdefault(c, []).append(v)
        target = min(c for c, vs in sizes.items() if len(vs) > 1)
        cell = sizes[target]
        done: set[int] = set()
        for v in cell:
            gens = twins + [a for a in autos if all(a[x] == x for x in fixed)]
            reps = _orbit_reps(cell, gens)
            if reps[v] in {reps[w] for w in done}:
                continue
            done.add(v)
            visit(_refine(g, _individualize(colors, v)), fixed + (v,))

    visit(_refine(g, [0] * n), ())
    return best[1]


def canonical_form(g: SimpleGraph) -> SimpleGraph:
    return g.relabel(canonical_labeling(g))


def canonical_key(g: SimpleGraph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    cert = _certificate(g, canonical_labeling(g)) if g.n else 0
    width = (g.n * g.n + 7) // 8
    return g.n.to_bytes(2, "big") + cert.to_bytes(width, "big")


def is_isomorphic(a: SimpleGraph, b: SimpleGraph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_key(a) == canonical_key(b)


# --------------------------------------------------------------------------
# named graphs


def complete(m: int) -> SimpleGraph:
    return SimpleGraph(m, combinations(range(m), 2))


def empty(m: int) -> SimpleGraph:
    return SimpleGraph(m)


def path(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> SimpleGraph:
    if k < 3:
        raise GraphError("cycles need at least 3 vertices")
    return SimpleGraph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    return SimpleGraph(a.n + b.n, list(a.edges) + [(u + a.n, v + a.n) for u, v in b.edges])


def join(a: SimpleGraph, b: SimpleGraph) -> SimpleGraph:
    u = disjoint_union(a, b)
    return u.add_edges((i, a.n + j) for i in range(a.n) for j in range(b.n))


def complete_minus_path(m: int, k: int) -> SimpleGraph:
    """K_m with the edges of a path on k of its vertices removed."""
    drop = {(i, i + 1) for i in range(k - 1)}
    return SimpleGraph(m, [e for e in combinations(range(m), 2) if e not in drop])


def _split_args(text: str) -> list[str]:
    depth, start, parts = 0, 0, []
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return [p.strip() for p in parts]


_NAMED = [
    (re.compile(r"^K_?\{?(\d+)\}?-e$"), lambda m: complete_minus_path(int(m[1]), 2)),
    (re.compile(r"^K_?\{?(\d+)\}?-E\(P_?\{?(\d+)\}?\)$"), lambda m: complete_minus_path(int(m[1]), int(m[2]))),
    (re.compile(r"^K_?\{(\d+),(\d+)\}$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^K_?(\d+),(\d+)$"), lambda m: complete_bipartite(int(m[1]), int(m[2]))),
    (re.compile(r"^(?:co-?K|Kbar|K̄)_?\{?(\d+)\}?$"), lambda m: empty(int(m[1]))),
    (re.compile(r"^K_?\{?(\d+)\}?$"), lambda m: complete(int(m[1]))),
    (re.compile(r"^P_?\{?(\d+)\}?$"), lambda m: path(int(m[1]))),
    (re.compile(r"^C_?\{?(\d+)\}?$"), lambda m: cycle(int(m[1]))),
]


def make_named(name: str) -> SimpleGraph:
    """Build a graph from a small name language.

    ``K5``, ``K_{2,3}``, ``P4``, ``C6``, ``K4-e``, ``K5-E(P3)``, ``Kbar3``,
    ``K3uK2`` and the combinators ``join(A,B)`` / ``union(A,B)``.
    """
    text = name.strip().replace("−", "-").replace("∪", "u").replace(" ", "")
    for op, fn in (("join", join), ("union", disjoint_union)):
        if text.startswith(op + "(") and text.endswith(")"):
            args = _split_args(text[len(op) + 1:-1])
            if len(args) != 2:
                raise GraphError(f"{op} takes two arguments: {name!r}")
            return fn(make_named(args[0]), make_named(args[1]))
    if "u" in text and not text.startswith(("co", "Kbar")):
        parts = [p for p in text.split("u") if p]
        if len(parts) >= 2:
            g = make_named(parts[0])
            for p in parts[1:]:
                g = disjoint_union(g, make_named(p))
            return g
    for pattern, build in _NAMED:
        m = pattern.match(text)
        if m:
            return build(m)
    raise GraphError(f"unknown graph name {name!r}")


# --------------------------------------------------------------------------
# structural predicates


def perfect_elimination_order(g: SimpleGraph) -> list[int] | None:
    """A perfect elimination ordering, or None if *g* is not chordal.

    Maximum cardinality search, reversed, then the standard check.
    """
    n = g.n
    weight = [0] * n
    visited = [False] * n
    mcs = []
    for _ in range(n):
        v = max((u for u in range(n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        mcs.append(v)
        for u in g.neighbors(v):
            if not visited[u]:
                weight[u] += 1
    peo = mcs[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=lambda u: pos[u])
        for u in later:
            if u != parent and not g.has_edge(parent, u):
                return None
    return peo


def is_chordal(g: SimpleGraph) -> bool:
    return perfect_elimination_order(g) is not None


def has_chordless_cycle_ge4(g: SimpleGraph) -> bool:
    return not is_chordal(g)


def _connected_without(g: SimpleGraph, removed: int) -> bool:
    verts = [v for v in range(g.n) if not removed >> v & 1]
    if not verts:
        return True
    seen = 1 << verts[0]
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        fresh = g.adj[v] & ~seen & ~removed
        for u in _bits(fresh):
            seen |= 1 << u
            stack.append(u)
    return bin(seen).count("1") == len(verts)


def is_connected(g: SimpleGraph) -> bool:
    return _connected_without(g, 0)


def is_two_connected(g: SimpleGraph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    return all(_connected_without(g, 1 << v) for v in range(g.n))


# --------------------------------------------------------------------------
# realization space


DEFAULT_REALIZATION_CAP = 12


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(n), 2))}


def all_realizations(seq: Sequence[int], unlabeled: bool = False,
                     cap: int = DEFAULT_REALIZATION_CAP) -> Iterator[SimpleGraph]:
    """Every labeled realization of *seq* (vertex ``p`` of degree ``seq[p]``).

    Breadth-first closure under 2-switches ``{ab, cd} -> {ac, bd}`` starting
    from the Havel–Hakimi realization.  With ``unlabeled`` only the first
    member of each isomorphism class is yielded.
    """
    seq = check_sequence(seq)
    n = len(seq)
    if n > cap:
        raise GraphError(f"n={n} exceeds the realization cap {cap}")
    if not is_graphic(seq):
        raise GraphError(f"sequence is not graphic: {seq}")
    index = _pair_index(n)
    pairs = list(index)
    start = 0
    for e in realize_edges(seq):
        start |= 1 << index[e]
    seen = {start}
    queue = deque([start])
    keys: set[bytes] = set()
    while queue:
        state = queue.popleft()
        edges = [pairs[i] for i in _bits(state)]
        g = SimpleGraph(n, edges)
        if unlabeled:
            key = canonical_key(g)
            if key not in keys:
                keys.add(key)
                yield g
        else:
            yield g
        for (a, b), (c, d) in combinations(edges, 2):
            if len({a, b, c, d}) < 4:
                continue
            base = state & ~(1 << index[(a, b)]) & ~(1 << index[(c, d)])
            for x, y in (((a, c), (b, d)), ((a, d), (b, c))):
                ix, iy = index[tuple(sorted(x))], index[tuple(sorted(y))]
                if state >> ix & 1 or state >> iy & 1:
                    continue
                nxt = base | 1 << ix | 1 << iy
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
