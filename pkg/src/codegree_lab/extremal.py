"""Codegree Turán numbers at small n, freeness certificates and density tables."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Iterable

from .constructions import mubayi_rodl, mubayi_rodl_edge_count, tight_cycle_minus
from .embedding import (DEFAULT_BUDGET, Embedding, canonical_form, find_embedding,
                        find_embedding_through)
from .errors import BudgetExhausted, ConsistencyError, InputError, ResourceLimitError, max_n
from .hypergraph import Hypergraph3, min_codegree

EXACT_MAX_N = 6
HEURISTIC_MAX_N = 40

EXHAUSTIVE = "exhaustive"
HEURISTIC = "heuristic-lower-bound"

CONTAINS = "contains"
FREE = "free"
INDETERMINATE = "indeterminate"


@dataclass
class Ex2Result:
    n: int
    pattern: Hypergraph3
    value: int
    witness: Hypergraph3
    method: str
    num_classes: int | None = None
    iterations: int = 0
    seed: int | None = None

    def records(self) -> list[str]:
        head = (f"record=ex2 n={self.n} value={self.value} method={self.method} "
                f"witness_edges={len(self.witness.edges)}")
        if self.num_classes is not None:
            head += f" extremal_classes={self.num_classes}"
        if self.seed is not None:
            head += f" seed={self.seed} iterations={self.iterations}"
        lines = [head]
        lines += ["record=edge vertices=" + ",".join(map(str, e)) for e in self.witness.edges]
        return lines


def _certify_free(F: Hypergraph3, H: Hypergraph3, budget: int = DEFAULT_BUDGET) -> None:
    if find_embedding(F, H, budget) is not None:
        raise ConsistencyError("witness contains the forbidden pattern")


def _copies_in_complete(F: Hypergraph3, n: int, slot: dict) -> list[int]:
    """Slot bitmasks of every labelled copy of ``F`` in ``K_n``."""
    masks = set()
    for img in permutations(range(n), F.n):
        m = 0
        for a, b, c in F.edges:
            m |= 1 << slot[tuple(sorted((img[a], img[b], img[c])))]
        masks.add(m)
    return sorted(masks)


def ex2_exact(n: int, F: Hypergraph3, cap: int | None = None) -> Ex2Result:
    """Exact ``ex_2(n, F)`` by branch and bound over all edge sets on ``n`` vertices.

    Edge slots are decided in lexicographic order. A branch dies when the
    chosen edges contain a copy of ``F`` (checked against the precomputed
    copies of ``F`` in the complete hypergraph) or when some pair can no
    longer reach the target codegree even if every undecided slot through it
    were added. The target is raised until it becomes infeasible; at the
    optimum every feasible edge set is enumerated and grouped into
    isomorphism classes, and the witness is the class with the least
    canonical code.
    """
    limit = cap if cap is not None else max_n(EXACT_MAX_N)
    if n > limit:
        raise ResourceLimitError(f"exhaustive ex2 capped at n={limit}; use ex2_heuristic")
    if n < 3:
        raise InputError("ex2 needs n >= 3")
    if not F.edges:
        raise InputError("a pattern without edges is contained in every hypergraph")
    if F.n > n:
        K = Hypergraph3.complete(n)
        return Ex2Result(n, F, n - 2, K, EXHAUSTIVE, num_classes=1)

    slots = list(combinations(range(n), 3))
    slot = {t: i for i, t in enumerate(slots)}
    pairs = list(combinations(range(n), 2))
    pair_idx = {p: i for i, p in enumerate(pairs)}
    slot_pairs = [[pair_idx[(a, b)], pair_idx[(a, c)], pair_idx[(b, c)]] for a, b, c in slots]
    copies = _copies_in_complete(F, n, slot)
    copies_by_slot: list[list[int]] = [[] for _ in slots]
    for m in copies:
        # a copy is completed when its last slot (highest index) is added
        copies_by_slot[m.bit_length() - 1].append(m)

    def search(d: int, collect: bool) -> list[int]:
        found: list[int] = []
        codeg = [0] * len(pairs)
        remaining = [n - 2] * len(pairs)

        def rec(s: int, mask: int) -> bool:
            if s == len(slots):
                found.append(mask)
                return not collect
            ps = slot_pairs[s]
            for p in ps:
                remaining[p] -= 1
            # include slot s
            new = mask | (1 << s)
            if all((c & new) != c for c in copies_by_slot[s]):
                for p in ps:
                    codeg[p] += 1
                stop = rec(s + 1, new)
                for p in ps:
                    codeg[p] -= 1
                if stop:
                    for p in ps:
                        remaining[p] += 1
                    return True
            # exclude slot s
            stop = False
            if all(codeg[p] + remaining[p] >= d for p in ps):
                stop = rec(s + 1, mask)
            for p in ps:
                remaining[p] += 1
            return stop

        rec(0, 0)
        return found

    d = 0
    while d + 1 <= n - 2 and search(d + 1, collect=False):
        d += 1
    leaves = search(d, collect=True)
    classes = {}
    for m in leaves:
        H = Hypergraph3(n, (slots[i] for i in range(len(slots)) if m >> i & 1))
        cf = canonical_form(H)
        classes.setdefault(cf, H)
    best = min(classes)
    witness = best.hypergraph()
    if min_codegree(witness) != d:
        # every leaf satisfies delta_2 >= d and none reaches d + 1
        raise ConsistencyError("exhaustive witness codegree mismatch")
    _certify_free(F, witness)
    return Ex2Result(n, F, d, witness, EXHAUSTIVE, num_classes=len(classes))


def _objective(H: Hypergraph3) -> tuple[int, int]:
    return (min_codegree(H), len(H.edges))


def ex2_heuristic(n: int, F: Hypergraph3, iterations: int = 2000, seed: int = 0,
                  initial: Hypergraph3 | None = None, check_budget: int = 10 ** 6,
                  patience: int = 50) -> Ex2Result:
    """Lower bound on ``ex_2(n, F)`` from single-edge local search.

    Starting from ``initial`` (default: no edges), each iteration tries to add
    an edge through a pair of minimum codegree, keeping the move only if no
    copy of ``F`` passes through the new edge. After ``patience`` fruitless
    iterations the search restarts from the best state with a random fraction
    of its edges removed. The best state by ``(delta_2, |E|)`` is returned.
    """
    limit = max_n(HEURISTIC_MAX_N)
    if n > limit:
        raise ResourceLimitError(f"heuristic ex2 capped at n={limit}")
    if n < 3:
        raise InputError("ex2 needs n >= 3")
    if not F.edges:
        raise InputError("a pattern without edges is contained in every hypergraph")
    rng = random.Random(seed)
    if initial is None:
        initial = Hypergraph3(n)
    elif initial.n != n:
        raise InputError(f"initial state has {initial.n} vertices, expected {n}")
    _certify_free(F, initial)

    best = initial
    best_key = _objective(best)
    edges = set(initial.edges)
    stale = 0
    for _ in range(iterations):
        H = Hypergraph3(n, edges)
        pm = H.pair_masks
        low = min(pm[u][v].bit_count() for u, v in combinations(range(n), 2))
        weakest = [(u, v) for u, v in combinations(range(n), 2) if pm[u][v].bit_count() == low]
        u, v = rng.choice(weakest)
        options = [z for z in range(n) if z != u and z != v and not pm[u][v] >> z & 1]
        rng.shuffle(options)
        moved = False
        for z in options:
            e = tuple(sorted((u, v, z)))
            G = H.with_edge(e)
            try:
                if find_embedding_through(F, G, e, check_budget) is not None:
                    continue
            except BudgetExhausted:
                continue
            edges.add(e)
            moved = True
            break
        if moved:
            cur = Hypergraph3(n, edges)
            key = _objective(cur)
            if key > best_key:
                best, best_key = cur, key
                stale = 0
                continue
        stale += 1
        if stale >= patience:
            stale = 0
            keep = [e for e in best.edges if rng.random() > 0.2]
            edges = set(keep)
    _certify_free(F, best)
    return Ex2Result(n, F, min_codegree(best), best, HEURISTIC, iterations=iterations, seed=seed)


@dataclass(frozen=True)
class DensityRow:
    depth: int
    n: int
    edge_count: int
    density: Fraction
    density_decimal: float
    materialized: bool

    @property
    def ratio(self) -> str:
        """Unreduced ``edges/C(n,3)``."""
        return f"{self.edge_count}/{comb(self.n, 3)}"


def density_sequence(max_depth: int, materialize_up_to: int = 3 ** 5) -> list[DensityRow]:
    """Edge densities of the iterated construction for depths ``0..max_depth``.

    Counts come from the recurrence; whenever ``3**(depth+1) <= materialize_up_to``
    the hypergraph is also built and its edges counted directly.
    """
    if max_depth < 0:
        raise InputError("max_depth must be >= 0")
    rows = []
    for depth in range(max_depth + 1):
        n = 3 ** (depth + 1)
        e = mubayi_rodl_edge_count(depth)
        built = n <= materialize_up_to
        if built:
            direct = len(mubayi_rodl(depth).result.edges)
            if direct != e:
                raise ConsistencyError(f"depth {depth}: recurrence gives {e}, construction has {direct}")
        dens = Fraction(e, comb(n, 3))
        rows.append(DensityRow(depth, n, e, dens, float(dens), built))
    return rows


@dataclass
class FreenessEntry:
    length: int
    status: str
    witness: Embedding | None = None


@dataclass
class FreenessReport:
    entries: list[FreenessEntry] = field(default_factory=list)

    def status(self, length: int) -> str:
        for e in self.entries:
            if e.length == length:
                return e.status
        raise KeyError(length)

    def records(self) -> list[str]:
        out = []
        for e in self.entries:
            line = f"record=freeness length={e.length} status={e.status}"
            if e.witness is not None:
                line += " map=" + ",".join(map(str, e.witness.mapping))
            out.append(line)
        return out


def freeness_check(H: Hypergraph3, lengths: Iterable[int], budget: int = DEFAULT_BUDGET) -> FreenessReport:
    """For each length, decide whether ``H`` contains ``C_l`` minus an edge."""
    report = FreenessReport()
    for l in lengths:
        if l < 4:
            raise InputError(f"cycle length must be >= 4, got {l}")
        if l > H.n:
            raise InputError(f"C{l}- has more vertices than the host ({H.n})")
        try:
            emb = find_embedding(tight_cycle_minus(l), H, budget)
        except BudgetExhausted:
            report.entries.append(FreenessEntry(l, INDETERMINATE))
            continue
        report.entries.append(FreenessEntry(l, FREE if emb is None else CONTAINS, emb))
    return report
