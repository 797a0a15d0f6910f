"""2-trees: recognition with certificates, ears, enumeration and the
structural facts used by the host-graph and realization arguments."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from itertools import combinations

from .graphs import (
    GraphError,
    SimpleGraph,
    canonical_form,
    canonical_key,
    complete,
    disjoint_union,
    empty,
    join,
    path,
    subgraph_contains,
)

DEFAULT_ENUMERATION_CAP = 10


class NotATwoTree(GraphError):
    pass


@dataclass(frozen=True)
class TwoTreeCertificate:
    """Construction order of a 2-tree.

    The triangle ``base + (apex,)`` is built first, then every
    ``(vertex, (a, b))`` in ``attachments`` attaches ``vertex`` to edge ``ab``.
    """

    base: tuple[int, int]
    apex: int
    attachments: tuple[tuple[int, tuple[int, int]], ...] = ()

    def replay(self, n: int) -> SimpleGraph:
        a, b = self.base
        edges = {(a, b), (a, self.apex), (b, self.apex)}
        present = {a, b, self.apex}
        for v, (x, y) in self.attachments:
            key = (min(x, y), max(x, y))
            if v in present or not ({key} <= {tuple(sorted(e)) for e in edges}):
                raise NotATwoTree(f"attachment of {v} to {x}{y} is invalid")
            edges |= {(v, x), (v, y)}
            present.add(v)
        return SimpleGraph(n, edges)


@dataclass(frozen=True)
class EarStructure:
    ears: frozenset
    attach_edges: frozenset
    attached: dict = field(default_factory=dict, compare=False)  # ear -> e(ear)


def _is_ear(g: SimpleGraph, v: int, alive: int) -> bool:
    nb = g.adj[v] & alive
    if bin(nb).count("1") != 2:
        return False
    a = (nb & -nb).bit_length() - 1
    b = (nb ^ (1 << a)).bit_length() - 1
    return g.has_edge(a, b)


def is_two_tree(g: SimpleGraph, base: tuple[int, int] | None = None) -> TwoTreeCertificate | None:
    """Certificate if *g* is a 2-tree, else None.

    Ears are peeled lowest index first until a triangle is left.  With
    ``base`` the endpoints of that edge are peeled only as a last resort, so
    the certificate starts from it whenever possible.
    """
    n = g.n
    if n < 3 or g.m != 2 * n - 3:
        return None
    alive = (1 << n) - 1
    keep = set(base) if base else set()
    removed = []
    for _ in range(n - 3):
        ears = [v for v in range(n) if alive >> v & 1 and _is_ear(g, v, alive)]
        if not ears:
            return None
        free = [v for v in ears if v not in keep]
        v = (free or ears)[0]
        nb = g.adj[v] & alive
        a = (nb & -nb).bit_length() - 1
        b = (nb ^ (1 << a)).bit_length() - 1
        removed.append((v, (a, b)))
        alive &= ~(1 << v)
    rest = [v for v in range(n) if alive >> v & 1]
    x, y, z = rest
    if not (g.has_edge(x, y) and g.has_edge(x, z) and g.has_edge(y, z)):
        return None
    if base and set(base) <= set(rest):
        a, b = base
        (c,) = set(rest) - set(base)
    else:
        a, b, c = x, y, z
    return TwoTreeCertificate((a, b), c, tuple(reversed(removed)))


def ear_structure(g: SimpleGraph) -> EarStructure:
    if is_two_tree(g) is None:
        raise NotATwoTree("ear structure is defined for 2-trees only")
    alive = (1 << g.n) - 1
    attached = {}
    for v in range(g.n):
        if _is_ear(g, v, alive):
            a, b = g.neighbors(v)
            attached[v] = (a, b)
    return EarStructure(frozenset(attached), frozenset(attached.values()), attached)


def make_T(k: int) -> SimpleGraph:
    """K_2 joined with k-2 independent vertices; the hub edge is ``0-1``."""
    if k < 3:
        raise GraphError("T(k) needs k >= 3")
    return join(complete(2), empty(k - 2))


def make_F(k: int) -> SimpleGraph:
    """The path-like 2-tree: vertex i is adjacent to i-1 and i-2."""
    if k < 3:
        raise GraphError("F(k) needs k >= 3")
    edges = [(0, 1)] + [(i, j) for i in range(2, k) for j in (i - 2, i - 1)]
    return SimpleGraph(k, edges)


# --------------------------------------------------------------------------
# enumeration

_catalog: dict[int, list[SimpleGraph]] = {}
_catalog_lock = threading.Lock()


def _extend(trees: list[SimpleGraph]) -> list[SimpleGraph]:
    found: dict[bytes, SimpleGraph] = {}
    for t in trees:
        v = t.n
        for a, b in t.edge_list():
            g = SimpleGraph(v + 1, list(t.edges) + [(a, v), (b, v)])
            key = canonical_key(g)
            if key not in found:
                found[key] = canonical_form(g)
    return [found[key] for key in sorted(found)]


def enumerate_two_trees(k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[SimpleGraph]:
    """All 2-trees on k vertices up to isomorphism, in canonical form, sorted
    by canonical key."""
    if k < 3:
        raise GraphError("2-trees have at least 3 vertices")
    if k > cap:
        raise GraphError(f"k={k} exceeds the enumeration cap {cap}")
    with _catalog_lock:
        if 3 not in _catalog:
            _catalog[3] = [canonical_form(complete(3))]
        top = max(i for i in _catalog if i <= k)
        while top < k:
            _catalog[top + 1] = _extend(_catalog[top])
            top += 1
        return list(_catalog[k])


def catalog_record(g: SimpleGraph) -> dict:
    from .graphs import degree_sequence

    es = ear_structure(g)
    return {
        "k": g.n,
        "canonical_key": canonical_key(g).hex(),
        "edges": [list(e) for e in g.edge_list()],
        "degree_sequence": list(degree_sequence(g)),
        "ears": sorted(es.ears),
        "attach_edges": [list(e) for e in sorted(es.attach_edges)],
    }


# --------------------------------------------------------------------------
# reductions used by the host constructions


def reduce_by_ear_triple(g: SimpleGraph, x: int, y: int, z: int) -> SimpleGraph:
    """``G - {x, y, z}`` for an ear ``z`` attached to ``xy``."""
    if g.n < 6:
        raise NotATwoTree("ear-triple reduction needs at least 6 vertices")
    es = ear_structure(g)
    if z not in es.ears or set(es.attached[z]) != {x, y}:
        raise NotATwoTree(f"{z} is not an ear attached to {x}{y}")
    return g.remove_vertices((x, y, z))


def ear_triples(g: SimpleGraph) -> list[tuple[int, int, int]]:
    es = ear_structure(g)
    return sorted((*es.attached[z], z) for z in es.ears)


def embed_in_two_tree(h: SimpleGraph, forbid_T: bool = False) -> SimpleGraph | None:
    """A 2-tree on ``h.n`` vertices containing *h* as a spanning subgraph."""
    if h.n < 3:
        raise GraphError("need at least 3 vertices")
    forbidden = canonical_key(make_T(h.n)) if forbid_T else None
    for t in enumerate_two_trees(h.n, cap=max(h.n, DEFAULT_ENUMERATION_CAP)):
        if forbidden is not None and canonical_key(t) == forbidden:
            continue
        if subgraph_contains(t, h, spanning=True) is not None:
            return t
    return None


@dataclass
class ShrinkWitness:
    path_pair: tuple[int, int]       # t - pair lies inside P5
    clique_pair: tuple[int, int]     # t - pair lies inside K3 u K2
    apex: int | None                 # t - apex lies inside F(6); None for T(7)


def shrink_witnesses(t: SimpleGraph) -> ShrinkWitness:
    """Vertex witnesses that every 7-vertex 2-tree shrinks into P5, K3 u K2
    and (unless it is T(7)) F(6)."""
    if t.n != 7 or is_two_tree(t) is None:
        raise NotATwoTree("expected a 2-tree on 7 vertices")
    p5 = path(5)
    k3k2 = disjoint_union(complete(3), complete(2))
    f6 = make_F(6)

    def pair_into(target):
        for pair in combinations(range(7), 2):
            if subgraph_contains(target, t.remove_vertices(pair)) is not None:
                return pair
        raise GraphError("no witness pair found")

    apex = None
    if canonical_key(t) != canonical_key(make_T(7)):
        for w in range(7):
            if subgraph_contains(f6, t.remove_vertices((w,))) is not None:
                apex = w
                break
        else:
            raise GraphError("no apex witness found")
    return ShrinkWitness(pair_into(p5), pair_into(k3k2), apex)
