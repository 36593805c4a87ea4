from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings

from codegree_lab import (Hypergraph3, InputError, codegree, degree, degree_profile,
                          edge_density, link, neighborhood)
from codegree_lab.h3io import dumps, loads, read_h3, write_h3
from conftest import hypergraphs
from oracles import brute_min_codegree


def test_edges_are_sorted_and_lexicographic():
    H = Hypergraph3(5, [(4, 2, 3), (2, 1, 0), (0, 4, 1)])
    assert H.edges == ((0, 1, 2), (0, 1, 4), (2, 3, 4))


@pytest.mark.parametrize("edges", [[(0, 1, 1)], [(0, 1, 5)], [(0, 1)], [(-1, 0, 1)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(InputError):
        Hypergraph3(5, edges)


def test_duplicate_edges_rejected():
    with pytest.raises(InputError):
        Hypergraph3(4, [(0, 1, 2), (2, 1, 0)])


def test_degree_examples(c5m):
    assert degree(Hypergraph3.complete(5), 3) == 6
    assert degree(c5m, 2) == 3
    assert degree(Hypergraph3(5), 0) == 0
    with pytest.raises(InputError):
        degree(c5m, 5)


def test_codegree_examples(c5, c5m):
    assert all(codegree(Hypergraph3.complete(7), u, v) == 5 for u, v in combinations(range(7), 2))
    assert codegree(c5, 0, 1) == 2
    assert codegree(c5m, 0, 3) == 0
    with pytest.raises(InputError):
        codegree(c5, 2, 2)


def test_neighborhood_examples(c5):
    assert neighborhood(Hypergraph3.complete(4), 0, 1) == {2, 3}
    assert neighborhood(c5, 0, 1) == {4, 2}
    assert neighborhood(Hypergraph3(6), 2, 5) == set()


def test_link_examples(c5):
    L = link(Hypergraph3.complete(4), 0)
    assert L.edges == ((1, 2), (1, 3), (2, 3))
    L = link(c5, 0)
    assert L.edges == ((1, 2), (1, 4), (3, 4))
    assert L.center == 0 and all(0 not in e for e in L.edges)


def test_degree_profile_examples(c5m, mr1):
    assert degree_profile(Hypergraph3.complete(6)).min_codegree == 4
    assert degree_profile(c5m).min_codegree == 0
    assert degree_profile(mr1).min_codegree == brute_min_codegree(mr1.edges, 9) == 1
    prof = degree_profile(Hypergraph3(3))
    assert prof.min_codegree == 0 and prof.min_degree == 0
    with pytest.raises(InputError):
        degree_profile(Hypergraph3(1))


def test_edge_density_examples(mr1):
    assert edge_density(Hypergraph3.complete(5)) == 1
    assert edge_density(mr1) == Fraction(30, 84)
    assert edge_density(Hypergraph3(3, [(0, 1, 2)])) == 1
    with pytest.raises(InputError):
        edge_density(Hypergraph3(2))


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_handshake(H):
    m = len(H.edges)
    assert sum(degree(H, v) for v in range(H.n)) == 3 * m
    if H.n >= 2:
        prof = degree_profile(H)
        assert sum(prof.codegree_table.values()) == 3 * m
        assert prof.min_codegree == min(prof.codegree_table.values())
        assert all(0 <= c <= H.n - 2 for c in prof.codegree_table.values())


@settings(max_examples=200, deadline=None)
@given(hypergraphs(min_n=3))
def test_link_consistency(H):
    profile = degree_profile(H)
    for v in range(H.n):
        L = link(H, v)
        assert len(L.edges) == degree(H, v)
        for u in range(H.n):
            if u != v:
                assert L.degree(u) == codegree(H, u, v)
        assert L.min_degree() >= profile.min_codegree


@settings(max_examples=100, deadline=None)
@given(hypergraphs(min_n=3))
def test_neighborhood_symmetry(H):
    before = H.edges
    for u, v in combinations(range(H.n), 2):
        N = neighborhood(H, u, v)
        assert N == neighborhood(H, v, u)
        for z in range(H.n):
            assert (z in N) == H.has_edge(u, v, z) if z not in (u, v) else z not in N
    assert H.edges == before


@settings(max_examples=100, deadline=None)
@given(hypergraphs())
def test_h3_round_trip(H):
    text = dumps(H)
    assert loads(text) == H
    assert dumps(loads(text)) == text


def test_h3_file_round_trip(tmp_path, mr1):
    path = tmp_path / "mr1.h3"
    write_h3(mr1, path, comment="depth one\nsecond line")
    raw = path.read_text()
    assert raw.startswith("# depth one\n# second line\n9 30\n0 1 2\n")
    assert read_h3(path) == mr1
    write_h3(read_h3(path), tmp_path / "again.h3", comment="depth one\nsecond line")
    assert (tmp_path / "again.h3").read_bytes() == path.read_bytes()


@pytest.mark.parametrize("text", [
    "",
    "5\n",
    "5 1\n0 1\n",
    "5 2\n0 1 2\n",
    "5 1\n2 1 0\n",
    "5 1\n0 1 x\n",
    "4 1\n0 1 7\n",
])
def test_h3_malformed(text):
    with pytest.raises(InputError):
        loads(text)
