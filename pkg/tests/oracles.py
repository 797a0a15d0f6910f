"""Independent reference computations used to check the library."""

from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
import numpy as np


@lru_cache(maxsize=None)
def degree_table(n):
    """Degree vector of every labeled graph on n vertices (row = edge mask)."""
    pairs = list(combinations(range(n), 2))
    masks = np.arange(1 << len(pairs), dtype=np.uint32)
    deg = np.zeros((len(masks), n), dtype=np.uint8)
    for i, (a, b) in enumerate(pairs):
        bit = ((masks >> i) & 1).astype(np.uint8)
        deg[:, a] += bit
        deg[:, b] += bit
    return deg


@lru_cache(maxsize=None)
def labeled_counts(n):
    """Non-increasing degree vector -> number of labeled graphs having it."""
    deg = degree_table(n)
    keep = np.all(deg[:, :-1] >= deg[:, 1:], axis=1) if n > 1 else np.ones(len(deg), bool)
    keys, counts = np.unique(deg[keep], axis=0, return_counts=True)
    return {tuple(int(x) for x in k): int(c) for k, c in zip(keys, counts)}


def bounded_sequences(n):
    """Every non-increasing sequence of n terms from 0..n-1."""
    from itertools import combinations_with_replacement

    for combo in combinations_with_replacement(range(n - 1, -1, -1), n):
        yield combo


def brute_canonical(n, edges):
    """Lexicographically least sorted edge tuple over all relabelings."""
    best = None
    for p in permutations(range(n)):
        form = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or form < best:
            best = form
    return best


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


def nx_is_two_tree(h):
    """2-tree test by the chordal characterization: connected, chordal,
    2n-3 edges and clique number 3."""
    n = h.number_of_nodes()
    if n < 3 or h.number_of_edges() != 2 * n - 3 or not nx.is_connected(h):
        return False
    if not nx.is_chordal(h):
        return False
    return max(len(c) for c in nx.find_cliques(h)) == 3


def _dedupe(graphs):
    buckets = {}
    for h in graphs:
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=4)
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(h, o) for o in bucket):
            bucket.append(h)
    return [h for b in buckets.values() for h in b]


def chordal_filter_two_trees(k):
    """Non-isomorphic 2-trees on k vertices.

    k <= 7: filter the graphs with 2k-3 edges.  Larger k: add a vertex
    joined to any two vertices of each (k-1)-vertex class and filter.
    """
    if k <= 7:
        pairs = list(combinations(range(k), 2))
        deg = degree_table(k)
        masks = np.arange(len(deg), dtype=np.uint32)
        ok = (deg.sum(axis=1) == 2 * (2 * k - 3)) & (deg.min(axis=1) >= 2)
        if k >= 7:
            # every 2-tree has a degree-2 vertex; place one at k-1 on edge 01
            need = sum(1 << pairs.index(e) for e in [(0, 1), (0, k - 1), (1, k - 1)])
            ok &= (deg[:, k - 1] == 2) & ((masks & need) == need)
        out = []
        for mask in np.nonzero(ok)[0]:
            h = nx.Graph([pairs[i] for i in range(len(pairs)) if int(mask) >> i & 1])
            if nx_is_two_tree(h):
                out.append(h)
        return _dedupe(out)
    cands = []
    for h in chordal_filter_two_trees(k - 1):
        for a, b in combinations(range(k - 1), 2):
            g = h.copy()
            g.add_edges_from([(a, k - 1), (b, k - 1)])
            if nx_is_two_tree(g):
                cands.append(g)
    return _dedupe(cands)
