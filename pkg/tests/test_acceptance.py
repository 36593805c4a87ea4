"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary under "acceptance criteria".
"""

import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from codegree_lab import (Hypergraph3, blow_up, canonical_form, codegree, degree, density_sequence,
                          ex2_exact, explicit_c7_embedding, find_c5_minus, find_embedding,
                          inductive_embedding, link, mubayi_rodl, random_hypergraph, tight_cycle,
                          tight_cycle_minus, verify_embedding, verify_nice_picture)
from codegree_lab.nice_picture import FOUND, NOT_FOUND
from oracles import brute_contains

EX2_C5_MINUS = {5: 1, 6: 1}  # frozen from tests/oracles.py::ex2_by_enumeration


def _check(criterion, number, title, limit, body):
    ok, detail = False, ""
    try:
        detail = body() or ""
        ok = True
    finally:
        elapsed = criterion.done(number, title, ok, detail)
    assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s (limit {limit}s)"


def test_criterion_1_embedding_chain(criterion):
    def body():
        assert verify_embedding(find_embedding(tight_cycle_minus(6), blow_up(tight_cycle(3), 2).result))
        c7 = explicit_c7_embedding()
        assert c7.host == blow_up(tight_cycle_minus(5), 2).result
        assert verify_embedding(c7)
        for l in (8, 9, 10, 11, 12):
            emb = inductive_embedding(l)
            assert emb.host == blow_up(tight_cycle_minus(l - 3), 2).result
            assert verify_embedding(emb)
        return "C6-<C3(2), C7-<C5-(2), C_l-<C_{l-3}-(2) for l=8..12"
    _check(criterion, 1, "embedding chain", 10, body)


def test_criterion_2_construction_freeness(criterion):
    def body():
        mr1 = mubayi_rodl(1).result
        for l in (5, 7, 8):
            assert find_embedding(tight_cycle_minus(l), mr1) is None
        mr2 = mubayi_rodl(2).result
        assert find_embedding(tight_cycle_minus(5), mr2, budget=10 ** 8) is None
        return "depth 1 free of C5-,C7-,C8-; depth 2 free of C5-"
    _check(criterion, 2, "construction freeness", 120, body)


def test_criterion_3_density_sequence(criterion):
    def body():
        rows = density_sequence(3)
        expected = [Fraction(1, 1), Fraction(30, 84), Fraction(819, 2925), Fraction(22140, 85320)]
        assert [r.density for r in rows] == expected
        assert [r.ratio for r in rows] == ["1/1", "30/84", "819/2925", "22140/85320"]
        assert all(r.density > Fraction(1, 4) for r in rows)
        assert all(a.density > b.density for a, b in zip(rows[1:], rows[2:]))
        return " ".join(r.ratio for r in rows)
    _check(criterion, 3, "density sequence", 1, body)


def _sample_host(i):
    rng = random.Random(1000 + i)
    n = rng.randint(40, 120)
    target = math.ceil(0.3 * n)
    H = random_hypergraph(n, 0.35, seed=1000 + i, min_codegree_target=target)
    return H


@pytest.fixture(scope="module")
def engine_runs():
    runs = []
    for i in range(100):
        H = _sample_host(i)
        runs.append((H, 0.3, find_c5_minus(H, 0.3, seed=i)))
    return runs


def test_criterion_4_engine_soundness(criterion, engine_runs):
    c5m = tight_cycle_minus(5)

    def body():
        found = 0
        for H, eps, rep in engine_runs:
            assert min(codegree(H, u, v) for u, v in combinations(range(H.n), 2)) >= 0.3 * H.n
            for pic in rep.chain.pictures:
                assert verify_nice_picture(H, pic)
            if rep.outcome == FOUND:
                found += 1
                assert verify_embedding(rep.witness)
                edges = {frozenset(e) for e in H.edges}
                m = rep.witness.mapping
                assert len(set(m)) == 5
                assert all(frozenset((m[a], m[b], m[c])) in edges for a, b, c in c5m.edges)
                assert find_embedding(c5m, H) is not None
        assert found >= 95, f"only {found}/100 found"
        return f"{found}/100 found"
    _check(criterion, 4, "nice-picture engine soundness", 300, body)


def test_criterion_5_negative_control(criterion):
    def body():
        mr2 = mubayi_rodl(2).result
        runs = 0
        for eps in (0.1, 0.2, 0.3):
            for seed in range(10):
                rep = find_c5_minus(mr2, eps, seed=seed)
                assert rep.outcome == NOT_FOUND and rep.witness is None
                runs += 1
        return f"{runs} runs, all not-found"
    _check(criterion, 5, "negative control", 60, body)


def _trace_ok(H, eps, rep):
    n = H.n
    for st in rep.chain.trace:
        # recomputed from the host rather than trusted from the trace
        link_min = link(H, st.v).min_degree()
        assert link_min == st.link_min_degree
        assert link_min >= eps * n
        assert st.size >= eps * (st.size_prev - 1)
        if n >= 20 / eps:
            assert st.num_pairs >= eps ** 2 * n ** 2 / 5
    return len(rep.chain.trace)


def test_criterion_6_trace_inequalities(criterion, engine_runs):
    def body():
        stages = runs = 0
        for H, eps, rep in engine_runs:
            assert rep.codegree_condition
            stages += _trace_ok(H, eps, rep)
            runs += 1
        # longer traces: extended mode, smaller eps, both apex rules
        for i in range(10):
            H = _sample_host(i)
            for eps in (0.15, 0.25):
                for rule in ("min", "max-degree"):
                    rep = find_c5_minus(H, eps, extended=True, apex_rule=rule, seed=i)
                    assert rep.codegree_condition
                    stages += _trace_ok(H, eps, rep)
                    runs += 1
        return f"{runs} runs, {stages} stages checked"
    _check(criterion, 6, "trace inequalities", 300, body)


def test_criterion_7_ex2_stability(criterion):
    c5m = tight_cycle_minus(5)

    def body():
        out = []
        for n in (5, 6):
            res = ex2_exact(n, c5m)
            assert res.method == "exhaustive"
            assert brute_contains(c5m.edges, 5, res.witness.edges, n) is None
            assert res.value == EX2_C5_MINUS[n]
            out.append(f"ex2({n})={res.value}")
        return ", ".join(out)
    _check(criterion, 7, "ex2 oracle stability", 60, body)


def test_criterion_8_core_identities(criterion):
    def body():
        rng = random.Random(8)
        canon_checked = 0
        for _ in range(1000):
            n = rng.randint(0, 12)
            triples = list(combinations(range(n), 3))
            p = rng.random()
            H = Hypergraph3(n, [t for t in triples if rng.random() < p])
            m = len(H.edges)
            assert sum(degree(H, v) for v in range(n)) == 3 * m
            assert sum(codegree(H, u, v) for u, v in combinations(range(n), 2)) == 3 * m
            for v in range(n):
                L = link(H, v)
                assert len(L.edges) == degree(H, v)
                assert all(L.degree(u) == codegree(H, u, v) for u in range(n) if u != v)
            if n <= 6:
                l = rng.randint(1, 3)
                B = blow_up(H, l).result
                assert B.n == l * n and len(B.edges) == l ** 3 * m
            if n <= 8:
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(H.relabel(perm)) == canonical_form(H)
                canon_checked += 1
        return f"1000 hypergraphs, {canon_checked} canonical-form checks"
    _check(criterion, 8, "core identities", 30, body)
