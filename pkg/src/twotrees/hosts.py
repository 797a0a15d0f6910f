"""Universal host graphs: fixed k-vertex graphs containing every 2-tree on k
vertices.

Vertex layout of every host: the clique part ``v_1 .. v_c`` comes first (as
``0 .. c-1``), followed by the attached vertices ``x_1 .. x_t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import GraphError, SimpleGraph, canonical_key, complete, complete_minus_path, subgraph_contains
from .twotree import DEFAULT_ENUMERATION_CAP, enumerate_two_trees, make_T


@dataclass(frozen=True)
class HostGraph:
    graph: SimpleGraph
    k: int
    family: str  # G7, G3t, G3t1, G3t2, M, small
    clique_part: tuple = ()
    attach_part: tuple = ()


def _clique_with_attachments(c: int, t: int, missing=(), reach=None, extra=()):
    """K_c on v_1..v_c minus *missing*, plus x_i joined to v_1..v_{reach(i)}."""
    reach = reach or (lambda i: 2 * i)
    drop = {(a - 1, b - 1) for a, b in missing}
    edges = [e for e in combinations(range(c), 2) if e not in drop]
    for i in range(1, t + 1):
        x = c + i - 1
        edges.extend((j, x) for j in range(reach(i)))
    edges.extend(extra)
    return SimpleGraph(c + t, edges)


def host_family(k: int) -> str:
    if k == 7:
        return "G7"
    if k % 3 == 0 and k >= 6:
        return "G3t"
    if k % 3 == 1 and k >= 10:
        return "G3t1"
    if k % 3 == 2 and k >= 8:
        return "G3t2"
    raise GraphError(f"no host family for k={k}")


def make_host(k: int) -> HostGraph:
    family = host_family(k)
    t = k // 3
    if family == "G7":
        # K4 plus x_i joined to v_1..v_{i+1}, and x_1 x_2
        g = _clique_with_attachments(4, 3, reach=lambda i: i + 1, extra=[(4, 5)])
        c = 4
    elif family == "G3t":
        c = 2 * t
        g = _clique_with_attachments(c, t)
    elif family == "G3t1":
        c = 2 * t + 1
        g = _clique_with_attachments(c, t, missing=[(2 * t - 2, 2 * t)])
    else:
        c = 2 * t + 2
        g = _clique_with_attachments(c, t, missing=[(2 * t, 2 * t + 2)])
    return HostGraph(g, k, family, tuple(range(c)), tuple(range(c, k)))


# u_1..u_7 as 0..6.
M_EDGES = (
    (1, 4), (1, 5), (1, 6), (1, 0), (1, 2),      # u2 - u5, u6, u7, u1, u3
    (0, 2), (0, 3), (0, 5), (0, 6), (0, 4),      # u1 - u3, u4, u6, u7, u5
    (2, 3), (2, 5), (2, 6),                      # u3 - u4, u6, u7
    (3, 6), (3, 5),                              # u4 - u7, u6
)


def make_M() -> HostGraph:
    return HostGraph(SimpleGraph(7, M_EDGES), 7, "M")


def universal_host(k: int) -> HostGraph:
    """Host for any k >= 3: the families above, and for k < 6 the small
    graphs K3, K4-e and K5-E(P3)."""
    if k == 3:
        return HostGraph(complete(3), 3, "small", (0, 1, 2))
    if k == 4:
        return HostGraph(complete_minus_path(4, 2), 4, "small")
    if k == 5:
        return HostGraph(complete_minus_path(5, 3), 5, "small")
    return make_host(k)


@dataclass
class UniversalityReport:
    k: int
    host: str
    patterns: int
    embeddings: list = field(default_factory=list)  # (pattern key hex, mapping)
    misses: list = field(default_factory=list)       # pattern key hex

    @property
    def ok(self) -> bool:
        return not self.misses


def verify_universal(k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> UniversalityReport:
    host = universal_host(k)
    trees = enumerate_two_trees(k, cap=cap)
    report = UniversalityReport(k, host.family, len(trees))
    for t in trees:
        key = canonical_key(t).hex()
        emb = subgraph_contains(host.graph, t)
        if emb is None:
            report.misses.append(key)
        else:
            report.embeddings.append((key, emb))
    return report


def delete_top_triple(h: HostGraph) -> SimpleGraph:
    """``host - {v_1, v_2, x_1}`` with the remaining vertices shifted down."""
    x1 = h.attach_part[0]
    return h.graph.remove_vertices((0, 1, x1))


def host_recursion_check(k: int) -> bool:
    """Deleting v_1, v_2, x_1 from the k-vertex host leaves the (k-3)-vertex
    host; for k = 10 the remainder is M."""
    if k < 9:
        raise GraphError("recursion is stated for k >= 9")
    rest = delete_top_triple(make_host(k))
    if k == 10:
        return canonical_key(rest) == canonical_key(make_M().graph)
    return rest == make_host(k - 3).graph


def contains_all_but_T(g: SimpleGraph, k: int) -> bool:
    """True iff *g* contains every 2-tree on k vertices other than T(k)."""
    skip = canonical_key(make_T(k))
    return all(
        subgraph_contains(g, t) is not None
        for t in enumerate_two_trees(k)
        if canonical_key(t) != skip
    )
