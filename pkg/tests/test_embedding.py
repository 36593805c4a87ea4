import random
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from codegree_lab import (BudgetExhausted, Embedding, Hypergraph3, InputError, ResourceLimitError,
                          blow_up, canonical_form, explicit_c7_embedding, find_embedding,
                          inductive_embedding, tight_cycle, tight_cycle_minus, verify_embedding)
from codegree_lab.embedding import find_embedding_through, is_isomorphic
from conftest import hypergraphs
from oracles import brute_contains


def _shuffle(H, seed):
    perm = list(range(H.n))
    random.Random(seed).shuffle(perm)
    return H.relabel(perm)


def test_verify_examples(c5, c5m):
    assert verify_embedding(Embedding(c5m, c5, tuple(range(5))))
    assert not verify_embedding(Embedding(c5, c5m, tuple(range(5))))
    assert verify_embedding(explicit_c7_embedding())


def test_verify_rejects_non_injective_and_out_of_range(c5):
    K = Hypergraph3.complete(6)
    assert not verify_embedding(Embedding(c5, K, (0, 1, 2, 3, 3)))
    assert not verify_embedding(Embedding(c5, K, (0, 1, 2, 3, 9)))
    with pytest.raises(InputError):
        verify_embedding(Embedding(c5, K, (0, 1, 2)))


def test_c6_minus_in_c3_blowup():
    host = blow_up(tight_cycle(3), 2).result
    emb = find_embedding(tight_cycle_minus(6), host)
    assert emb is not None and verify_embedding(emb)
    assert brute_contains(tight_cycle_minus(6).edges, 6, host.edges, 6) is not None


def test_c5_minus_not_in_depth_one(c5m, mr1):
    assert find_embedding(c5m, mr1) is None
    assert brute_contains(c5m.edges, 5, mr1.edges, 9) is None


def test_k4_into_k4():
    K4 = Hypergraph3.complete(4)
    emb = find_embedding(K4, K4)
    assert sorted(emb.mapping) == [0, 1, 2, 3]


def test_budget_is_explicit(c5m, mr1):
    with pytest.raises(BudgetExhausted) as info:
        find_embedding(c5m, mr1, budget=10)
    assert info.value.budget == 10
    with pytest.raises(InputError):
        find_embedding(c5m, mr1, budget=0)


def test_pattern_larger_than_host(c5m):
    assert find_embedding(tight_cycle_minus(7), c5m) is None


def test_fixed_vertices(c5):
    K = Hypergraph3.complete(7)
    emb = find_embedding(c5, K, fixed={0: 6, 3: 2})
    assert emb.mapping[0] == 6 and emb.mapping[3] == 2
    assert find_embedding(c5, K, fixed={0: 1, 1: 1}) is None


def test_search_is_deterministic(mr2, c5):
    H = blow_up(c5, 2).result
    assert find_embedding(c5, H).mapping == find_embedding(c5, H).mapping


@settings(max_examples=150, deadline=None)
@given(hypergraphs(min_n=3, max_n=5), hypergraphs(min_n=3, max_n=7))
def test_search_agrees_with_brute_force(F, H):
    emb = find_embedding(F, H)
    brute = brute_contains(F.edges, F.n, H.edges, H.n) if F.n <= H.n else None
    assert (emb is None) == (brute is None)
    if emb is not None:
        assert verify_embedding(emb)


def test_explicit_c7_embedding_shape():
    emb = explicit_c7_embedding()
    assert emb.pattern == tight_cycle_minus(7)
    assert emb.host.n == 10 and len(emb.pattern.edges) == 6
    part = blow_up(tight_cycle_minus(5), 2).part_of
    # v1, v2, v2', v3, v3', v4, v5 -> base vertices 0..4
    assert Counter(part(x) for x in emb.mapping) == Counter([0, 1, 1, 2, 2, 3, 4])
    # the cyclic sequence v1 v3 v2 v4 v3' v5 v2' read off around the pattern cycle
    seq = [emb.mapping[(p + 1) % 7] for p in range(7)]
    assert seq == [0, 4, 2, 6, 5, 8, 3]


def test_transitivity_through_c7():
    inner = explicit_c7_embedding()
    H = _shuffle(blow_up(tight_cycle_minus(5), 3).result, 7)
    outer = find_embedding(inner.host, H)
    assert outer is not None
    composed = inner.compose(outer)
    assert verify_embedding(composed)
    assert composed.pattern == tight_cycle_minus(7) and composed.host == H


@pytest.mark.parametrize("l", [8, 9, 10])
def test_inductive_embedding(l):
    emb = inductive_embedding(l)
    assert verify_embedding(emb)
    assert emb.host == blow_up(tight_cycle_minus(l - 3), 2).result


def test_inductive_embedding_range():
    with pytest.raises(InputError):
        inductive_embedding(7)


def test_through_edge(c5m):
    G = tight_cycle(5)
    emb = find_embedding_through(c5m, G, (0, 3, 4))
    assert emb is not None and (0, 3, 4) in emb.image_edges()
    with pytest.raises(InputError):
        find_embedding_through(c5m, c5m, (0, 3, 4))


def test_canonical_examples(c5, c5m):
    assert canonical_form(c5) == canonical_form(_shuffle(c5, 1))
    other = tight_cycle(5).without_edge((0, 1, 2))
    assert canonical_form(c5m) == canonical_form(other)
    # confirmed by search: each is contained in the other and edge counts agree
    assert find_embedding(c5m, other) is not None and find_embedding(other, c5m) is not None
    assert canonical_form(c5) != canonical_form(c5m)


def test_canonical_cap():
    with pytest.raises(ResourceLimitError):
        canonical_form(Hypergraph3(9))
    assert canonical_form(Hypergraph3(9), cap=9).code == 0


def test_canonical_representative(c5m):
    cf = canonical_form(c5m)
    rep = cf.hypergraph()
    assert canonical_form(rep) == cf
    assert c5m.relabel(cf.labelling) == rep
    assert len(cf.bitstring()) == 10


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_invariance_and_idempotence(H, rnd):
    perm = list(range(H.n))
    rnd.shuffle(perm)
    cf = canonical_form(H)
    assert canonical_form(H.relabel(perm)) == cf
    assert canonical_form(cf.hypergraph()) == cf


def _brute_isomorphic(G, H):
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    target = set(H.edges)
    return any({tuple(sorted(p[v] for v in e)) for e in G.edges} == target
               for p in permutations(range(G.n)))


@settings(max_examples=200, deadline=None)
@given(hypergraphs(min_n=5, max_n=5), hypergraphs(min_n=5, max_n=5))
def test_canonical_separates_non_isomorphic(G, H):
    assert is_isomorphic(G, H) == _brute_isomorphic(G, H)
