import itertools
import random

import pytest

from graphfree.errors import (DanglingEndpoint, DuplicateVertexId, LoopEdge,
                              NotAdmissible, UnknownVertex)
from graphfree.graph import (SIMPLE, WALK, PathWord, SimplicialGraph,
                             canonicalize, complete_graph, concat, disjoint,
                             enumerate_semigroupoid, is_admissible, parse_word,
                             path_graph, vertex_key)


def triangle():
    return SimplicialGraph(["1", "2", "3"], [("1", "2"), ("2", "3"), ("3", "1")])


def test_validation():
    SimplicialGraph(["1", "2"], [("1", "2")])
    with pytest.raises(LoopEdge):
        SimplicialGraph(["1"], [("1", "1")])
    with pytest.raises(DanglingEndpoint):
        SimplicialGraph(["1", "2"], [("1", "3")])
    with pytest.raises(DuplicateVertexId):
        SimplicialGraph(["1", "1"], [])
    with pytest.raises(DanglingEndpoint):
        SimplicialGraph(["1", "2"], [("1",)])


def test_multi_edges_collapse():
    g = SimplicialGraph(["1", "2"], [("1", "2"), ("2", "1")])
    assert len(g.edges) == 1


def test_vertex_order_numeric_then_text():
    assert sorted(["10", "b", "2", "a"], key=vertex_key) == ["2", "10", "a", "b"]


def test_admissibility():
    g = path_graph(3)
    assert is_admissible(g, ("1", "2", "3"))
    assert not is_admissible(g, ("1", "3"))
    t = triangle()
    assert not is_admissible(t, ("1", "2", "3", "1"), SIMPLE)
    assert is_admissible(t, ("1", "2", "3", "1"), WALK)
    with pytest.raises(UnknownVertex):
        is_admissible(g, ("1", "9"))


def test_canonicalize():
    g = path_graph(3)
    assert canonicalize(g, ("3", "2", "1")).vertices == ("1", "2", "3")
    assert canonicalize(g, ("1", "2")).vertices == ("1", "2")
    w = canonicalize(g, ("2", "1"))
    assert canonicalize(g, w.vertices) == w
    with pytest.raises(NotAdmissible):
        canonicalize(g, ("1", "3"))
    t = triangle()
    pal = canonicalize(t, ("1", "2", "1"), WALK)
    assert pal == canonicalize(t, ("1", "2", "1")[::-1], WALK)


def test_enumeration_examples():
    words = enumerate_semigroupoid(path_graph(3), 2)
    assert [str(w) for w in words] == ["[1]", "[2]", "[3]", "[1,2]", "[2,3]", "[1,2,3]"]
    lone = SimplicialGraph(["1"], [])
    assert [str(w) for w in enumerate_semigroupoid(lone, 5)] == ["[1]"]
    assert len(enumerate_semigroupoid(triangle(), 2)) == 9
    with pytest.raises(ValueError):
        enumerate_semigroupoid(triangle(), None, WALK)


def _brute_paths(g, max_len, mode):
    found = set()
    for k in range(1, max_len + 2):
        for seq in itertools.product(g.vertices, repeat=k):
            if is_admissible(g, seq, mode):
                found.add(canonicalize(g, seq, mode))
    return found


@pytest.mark.parametrize("mode", [SIMPLE, WALK])
def test_enumeration_matches_bruteforce(mode):
    rng = random.Random(5)
    vs = [str(i) for i in range(1, 6)]
    edges = [e for e in itertools.combinations(vs, 2) if rng.random() < 0.5]
    g = SimplicialGraph(vs, edges)
    words = enumerate_semigroupoid(g, 3, mode)
    assert len(words) == len(set(words))
    assert set(words) == _brute_paths(g, 3, mode)
    assert words == sorted(words, key=PathWord.sort_key)


def test_complete_graph_edge_count():
    for n in range(2, 7):
        words = enumerate_semigroupoid(complete_graph(n), 1)
        assert sum(1 for w in words if len(w) == 1) == n * (n - 1) // 2


def test_concat_examples():
    g = path_graph(3)
    w12, w23, w3, w1 = (parse_word(g, t) for t in ("1,2", "2,3", "3", "1"))
    assert concat(g, w12, w23) == parse_word(g, "1,2,3")
    assert concat(g, w12, w3) is None
    assert concat(g, w1, w12) == w12


def test_disjoint():
    g = path_graph(3)
    w12, w23, w3 = (parse_word(g, t) for t in ("1,2", "2,3", "3"))
    assert disjoint(w12, w3) and disjoint(w3, w12)
    assert not disjoint(w12, w23)
    assert not disjoint(w12, w12)
    assert concat(g, w12, w3) is None


def test_splitting_property():
    g = complete_graph(4)
    words = set(enumerate_semigroupoid(g, 3))
    for w in words:
        for j in range(1, len(w.vertices)):
            assert canonicalize(g, w.vertices[:j]) in words
            assert canonicalize(g, w.vertices[j:]) in words
