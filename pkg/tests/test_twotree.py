import random
from itertools import combinations

import pytest

from twotrees.graphs import GraphError, SimpleGraph, canonical_key, complete, cycle, make_named, path
from twotrees.twotree import (
    NotATwoTree,
    TwoTreeCertificate,
    catalog_record,
    ear_structure,
    ear_triples,
    embed_in_two_tree,
    enumerate_two_trees,
    is_two_tree,
    make_F,
    make_T,
    reduce_by_ear_triple,
    shrink_witnesses,
)

from oracles import chordal_filter_two_trees, nx_is_two_tree, to_nx


def shuffled(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


@pytest.mark.parametrize("n", range(3, 7))
def test_recognition_matches_chordal_oracle(n):
    pairs = list(combinations(range(n), 2))
    for chosen in combinations(pairs, 2 * n - 3):
        g = SimpleGraph(n, chosen)
        assert (is_two_tree(g) is not None) == nx_is_two_tree(to_nx(g))


@pytest.mark.parametrize("k", range(3, 9))
def test_certificates_replay(k):
    for i, t in enumerate(enumerate_two_trees(k)):
        g = shuffled(t, i)
        cert = is_two_tree(g)
        assert cert is not None and cert.replay(g.n) == g


def test_certificate_prefers_requested_base():
    g = make_F(6)
    cert = is_two_tree(g, base=(2, 3))
    assert cert.base == (2, 3)
    assert cert.replay(6) == g


def test_bad_certificates_are_rejected():
    with pytest.raises(NotATwoTree):
        TwoTreeCertificate((0, 1), 2, ((3, (0, 4)),)).replay(5)
    with pytest.raises(NotATwoTree):
        TwoTreeCertificate((0, 1), 2, ((2, (0, 1)),)).replay(4)


@pytest.mark.parametrize("g", [cycle(4), complete(4), make_named("K_{2,3}"), path(3), SimpleGraph(2, [(0, 1)])])
def test_non_two_trees(g):
    assert is_two_tree(g) is None


def test_T_and_F():
    t = make_T(6)
    assert t.m == 9 and sorted(t.degrees()) == [2, 2, 2, 2, 5, 5]
    f = make_F(6)
    assert f.m == 9 and f.degrees() == [2, 3, 4, 4, 3, 2]
    with pytest.raises(GraphError):
        make_T(2)
    with pytest.raises(GraphError):
        make_F(2)


def test_five_vertices_only_F_and_T():
    keys = {canonical_key(t) for t in enumerate_two_trees(5)}
    assert keys == {canonical_key(make_F(5)), canonical_key(make_T(5))}


@pytest.mark.parametrize("k", range(3, 8))
def test_enumeration_matches_oracle(k):
    ours = enumerate_two_trees(k)
    assert len(ours) == len(chordal_filter_two_trees(k))
    assert len({canonical_key(t) for t in ours}) == len(ours)


def test_enumeration_larger_counts():
    # unlabeled 2-trees: 136 on 9 vertices, 529 on 10
    assert len(enumerate_two_trees(9)) == 136
    assert len(enumerate_two_trees(10)) == 529


def test_enumeration_limits():
    with pytest.raises(GraphError):
        enumerate_two_trees(2)
    with pytest.raises(GraphError):
        enumerate_two_trees(11)


def test_ear_structure_of_T():
    es = ear_structure(make_T(6))
    assert es.ears == frozenset({2, 3, 4, 5})
    assert es.attach_edges == frozenset({(0, 1)})
    with pytest.raises(NotATwoTree):
        ear_structure(cycle(4))


def test_ear_structure_of_F():
    es = ear_structure(make_F(7))
    assert es.ears == frozenset({0, 6})
    assert es.attached == {0: (1, 2), 6: (4, 5)}


def test_catalog_record():
    rec = catalog_record(make_T(4))
    assert rec["k"] == 4 and len(rec["edges"]) == 5
    assert rec["degree_sequence"] == [3, 3, 2, 2]
    assert rec["ears"] == [2, 3] and rec["attach_edges"] == [[0, 1]]


def test_reduce_by_ear_triple():
    f = make_F(6)
    h = reduce_by_ear_triple(f, 4, 3, 5)
    assert h == make_F(3)
    with pytest.raises(NotATwoTree):
        reduce_by_ear_triple(f, 0, 1, 2)
    with pytest.raises(NotATwoTree):
        reduce_by_ear_triple(make_F(5), 2, 3, 4)
    assert ear_triples(f) == [(1, 2, 0), (3, 4, 5)]


def test_reduction_that_leaves_T():
    # T(5) on {1,2,4,5,7} (hub 5-7), then 6 on 4-7, 3 on 6-7, ear 0 on 3-6
    edges = [(5, 7), (1, 5), (1, 7), (2, 5), (2, 7), (4, 5), (4, 7),
             (4, 6), (6, 7), (3, 6), (3, 7), (0, 3), (0, 6)]
    g = SimpleGraph(8, edges)
    assert is_two_tree(g) is not None
    h = reduce_by_ear_triple(g, 3, 6, 0)
    assert canonical_key(h) == canonical_key(make_T(5))
    # h has 2*5-3 edges, so T(5) is the only 2-tree containing it
    assert embed_in_two_tree(h) is not None
    assert embed_in_two_tree(h, forbid_T=True) is None


def test_embed_in_two_tree():
    t = embed_in_two_tree(path(5))
    assert t is not None and is_two_tree(t) is not None
    assert embed_in_two_tree(SimpleGraph(5), forbid_T=True) is not None
    assert embed_in_two_tree(complete(4)) is None
    with pytest.raises(GraphError):
        embed_in_two_tree(path(2))


def test_shrink_witnesses():
    T7 = canonical_key(make_T(7))
    for t in enumerate_two_trees(7):
        w = shrink_witnesses(t)
        assert (w.apex is None) == (canonical_key(t) == T7)
        for pair in (w.path_pair, w.clique_pair):
            assert len(set(pair)) == 2
    with pytest.raises(NotATwoTree):
        shrink_witnesses(make_T(6))


@pytest.mark.parametrize("k", range(3, 9))
def test_any_edge_can_start_the_construction(k):
    for g in enumerate_two_trees(k):
        for e in g.edge_list():
            cert = is_two_tree(g, base=e)
            assert cert is not None and set(cert.base) == set(e)
