"""Non-induced subhypergraph containment, canonical forms, and the blow-up
embeddings used to reduce longer cycles to shorter ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Mapping, Sequence

from .constructions import blow_up, tight_cycle, tight_cycle_minus
from .errors import BudgetExhausted, InputError, ResourceLimitError, max_n
from .hypergraph import Hypergraph3

DEFAULT_BUDGET = 10 ** 8
CANONICAL_MAX_N = 8


@dataclass(frozen=True)
class Embedding:
    """Vertex map ``mapping[p]`` from pattern vertex ``p`` to a host vertex."""

    pattern: Hypergraph3
    host: Hypergraph3
    mapping: tuple[int, ...]

    def image_edges(self) -> list[tuple[int, int, int]]:
        m = self.mapping
        return [tuple(sorted((m[a], m[b], m[c]))) for a, b, c in self.pattern.edges]

    def compose(self, outer: "Embedding") -> "Embedding":
        """``outer . self``: requires ``self.host`` to be ``outer.pattern``."""
        if self.host != outer.pattern:
            raise InputError("cannot compose: host of the inner map is not the outer pattern")
        return Embedding(self.pattern, outer.host, tuple(outer.mapping[x] for x in self.mapping))

    def lines(self) -> list[str]:
        return [f"{p} -> {h}" for p, h in enumerate(self.mapping)]


def verify_embedding(e: Embedding) -> bool:
    """True iff the map is injective and sends every pattern edge to a host edge."""
    m = e.mapping
    if len(m) != e.pattern.n:
        raise InputError(f"map has {len(m)} entries for a pattern on {e.pattern.n} vertices")
    if any(not 0 <= x < e.host.n for x in m):
        return False
    if len(set(m)) != len(m):
        return False
    return all(e.host.has_edge(m[a], m[b], m[c]) for a, b, c in e.pattern.edges)


# ---------------------------------------------------------------------------
# backtracking search


def _search_order(F: Hypergraph3, first: Sequence[int]) -> list[int]:
    """Most-constrained-first ordering of the pattern vertices."""
    order = list(first)
    placed = set(order)
    deg = F.degrees
    pm = F.pair_masks
    while len(order) < F.n:
        best, best_key = -1, None
        for w in range(F.n):
            if w in placed:
                continue
            closed = sum(1 for a, b in combinations(order, 2) if pm[a][b] >> w & 1)
            touching = sum(1 for a in order if pm[w][a])
            key = (closed, touching, deg[w], -w)
            if best_key is None or key > best_key:
                best, best_key = w, key
        order.append(best)
        placed.add(best)
    return order


class _Matcher:
    def __init__(self, F: Hypergraph3, H: Hypergraph3, budget: int, fixed: Mapping[int, int]):
        self.F, self.H = F, H
        self.budget = budget
        self.nodes = 0
        self.fixed = dict(fixed)
        self.order = _search_order(F, sorted(self.fixed))
        pos = {w: i for i, w in enumerate(self.order)}
        fpm = F.pair_masks
        hpm = H.pair_masks
        self.hpm = hpm
        hdeg = H.degrees
        self.shadow = [0] * H.n
        for z in range(H.n):
            s = 0
            for y, mask in enumerate(hpm[z]):
                if mask:
                    s |= 1 << y
            self.shadow[z] = s
        self.deg_ok = []
        self.closing = []   # per step: list of (i, j) earlier steps closing an edge
        self.touching = []  # per step: list of (i, codegree in F) earlier pattern neighbours
        for k, w in enumerate(self.order):
            need = F.degrees[w]
            self.deg_ok.append(sum(1 << z for z in range(H.n) if hdeg[z] >= need))
            self.closing.append([(pos[a], pos[b]) for a, b in combinations(self.order[:k], 2)
                                 if fpm[a][b] >> w & 1])
            self.touching.append([(pos[a], fpm[w][a].bit_count()) for a in self.order[:k] if fpm[w][a]])
        self.image = [0] * F.n

    def candidates(self, k: int, used: int) -> int:
        cand = self.deg_ok[k] & ~used
        img = self.image
        hpm = self.hpm
        for i, j in self.closing[k]:
            cand &= hpm[img[i]][img[j]]
            if not cand:
                return 0
        for i, _ in self.touching[k]:
            cand &= self.shadow[img[i]]
        return cand

    def run(self) -> list[int] | None:
        k = len(self.fixed)
        # pinned vertices come first in the order; validate them like any placement
        used = 0
        for step in range(k):
            z = self.fixed[self.order[step]]
            if not 0 <= z < self.H.n or used >> z & 1:
                return None
            if not (self.candidates(step, used) >> z & 1) or not self._codeg_ok(step, z):
                return None
            self.image[step] = z
            used |= 1 << z
        if self._extend(k, used):
            out = [0] * self.F.n
            for step, w in enumerate(self.order):
                out[w] = self.image[step]
            return out
        return None

    def _codeg_ok(self, k: int, z: int) -> bool:
        row = self.hpm[z]
        img = self.image
        for i, c in self.touching[k]:
            if c > 1 and row[img[i]].bit_count() < c:
                return False
        return True

    def _extend(self, k: int, used: int) -> bool:
        if k == len(self.order):
            return True
        cand = self.candidates(k, used)
        while cand:
            low = cand & -cand
            z = low.bit_length() - 1
            cand ^= low
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExhausted(self.nodes - 1, self.budget)
            if not self._codeg_ok(k, z):
                continue
            self.image[k] = z
            if self._extend(k + 1, used | low):
                return True
        return False


def _search(F: Hypergraph3, H: Hypergraph3, budget: int,
            fixed: Mapping[int, int]) -> tuple[Embedding | None, int]:
    if budget < 1:
        raise InputError("budget must be positive")
    if F.n > H.n or len(F.edges) > len(H.edges):
        return None, 0
    matcher = _Matcher(F, H, budget, fixed)
    mapping = matcher.run()
    if mapping is None:
        return None, matcher.nodes
    emb = Embedding(F, H, tuple(mapping))
    if not verify_embedding(emb):
        raise AssertionError("backtracking produced an invalid embedding")
    return emb, matcher.nodes


def find_embedding(F: Hypergraph3, H: Hypergraph3, budget: int = DEFAULT_BUDGET,
                   fixed: Mapping[int, int] | None = None) -> Embedding | None:
    """Search for a copy of ``F`` in ``H`` (extra host edges allowed).

    Returns a verified :class:`Embedding`, or ``None`` once the search space is
    exhausted. Raises :class:`BudgetExhausted` if more than ``budget``
    candidate placements were tried, in which case nothing is known.
    ``fixed`` pins some pattern vertices to given host vertices.
    """
    return _search(F, H, budget, fixed or {})[0]


def find_embedding_through(F: Hypergraph3, H: Hypergraph3, edge: Sequence[int],
                           budget: int = DEFAULT_BUDGET) -> Embedding | None:
    """A copy of ``F`` in ``H`` that uses ``edge`` as the image of some pattern edge.

    This is the delta check after adding ``edge`` to an ``F``-free host: any
    new copy must pass through it. ``budget`` is shared by all the anchored
    sub-searches.
    """
    if not H.has_edge(*edge):
        raise InputError(f"{tuple(edge)} is not an edge of the host")
    spent = 0
    seen = set()
    for f in F.edges:
        for img in permutations(edge):
            key = tuple(sorted(zip(f, img)))
            if key in seen:
                continue
            seen.add(key)
            try:
                emb, nodes = _search(F, H, budget - spent, dict(key))
            except BudgetExhausted as exc:
                raise BudgetExhausted(spent + exc.nodes, budget) from None
            if emb is not None:
                return emb
            spent += nodes
            if spent >= budget:
                raise BudgetExhausted(spent, budget)
    return None


# ---------------------------------------------------------------------------
# the cycle reductions


def explicit_c7_embedding() -> Embedding:
    """C7 minus an edge inside the 2-blow-up of C5 minus an edge.

    With ``v1..v5`` the cycle vertices (missing edge ``v4 v5 v1``) and
    ``v2', v3'`` the second clones of ``v2, v3``, the sequence
    ``v1 v3 v2 v4 v3' v5 v2'`` runs around a tight 7-cycle whose only absent
    edge is ``v3' v5 v2'``.
    """
    host = blow_up(tight_cycle_minus(5), 2).result
    # base vertex v_i (1-based) has clones 2(i-1) and 2(i-1)+1
    v = {i: 2 * (i - 1) for i in range(1, 6)}
    v2p, v3p = v[2] + 1, v[3] + 1
    cyclic = [v[1], v[3], v[2], v[4], v3p, v[5], v2p]
    # the pattern drops {5, 6, 0}; the sequence above drops positions {4, 5, 6}
    mapping = tuple(cyclic[(p - 1) % 7] for p in range(7))
    emb = Embedding(tight_cycle_minus(7), host, mapping)
    assert verify_embedding(emb)
    return emb


def inductive_embedding(length: int, budget: int = DEFAULT_BUDGET) -> Embedding:
    """Copy of ``C_l`` minus an edge inside the 2-blow-up of ``C_{l-3}`` minus an edge.

    No closed form is used: the copy is found by :func:`find_embedding`.
    Raises :class:`BudgetExhausted` if the search is inconclusive and
    :class:`LookupError` if no copy exists.
    """
    if length < 8:
        raise InputError(f"inductive step applies to length >= 8, got {length}")
    host = blow_up(tight_cycle_minus(length - 3), 2).result
    emb = find_embedding(tight_cycle_minus(length), host, budget)
    if emb is None:
        raise LookupError(f"no copy of C{length}- in C{length - 3}-(2)")
    return emb


def c6_in_c3_blowup(budget: int = DEFAULT_BUDGET) -> Embedding | None:
    return find_embedding(tight_cycle_minus(6), blow_up(tight_cycle(3), 2).result, budget)


# ---------------------------------------------------------------------------
# canonical forms


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant code of a hypergraph.

    ``code`` is the edge-indicator bitstring of the relabelled hypergraph with
    triples in colex order, ``(0,1,2) < (0,1,3) < (0,2,3) < (1,2,3) < (0,1,4) ...``,
    the first triple being the most significant bit; the minimum over all
    relabellings is taken.
    """

    n: int
    code: int
    labelling: tuple[int, ...]

    @property
    def key(self) -> tuple[int, int]:
        return (self.n, self.code)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.key < other.key

    def bitstring(self) -> str:
        total = self.n * (self.n - 1) * (self.n - 2) // 6
        return format(self.code, f"0{total}b") if total else ""

    def hypergraph(self) -> Hypergraph3:
        """The canonical representative."""
        total = self.n * (self.n - 1) * (self.n - 2) // 6
        triples = _colex_triples(self.n)
        return Hypergraph3(self.n, (triples[i] for i in range(total) if self.code >> (total - 1 - i) & 1))


def _colex_triples(n: int) -> list[tuple[int, int, int]]:
    return [(i, j, k) for k in range(n) for j in range(k) for i in range(j)]


def canonical_form(H: Hypergraph3, cap: int | None = None) -> CanonicalForm:
    """Minimum colex bitstring over all relabellings.

    Labels are handed out in blocks of non-decreasing vertex degree, and a
    partial labelling is abandoned as soon as the bits it already fixes
    exceed the best code found.
    """
    limit = cap if cap is not None else max_n(CANONICAL_MAX_N)
    n = H.n
    if n > limit:
        raise ResourceLimitError(f"canonical form capped at {limit} vertices, got {n}")
    if n < 3:
        return CanonicalForm(n, 0, tuple(range(n)))
    deg = H.degrees
    pm = H.pair_masks
    by_deg = sorted(range(n), key=lambda v: deg[v])
    slot_degree = [deg[v] for v in by_deg]

    best_code: list[int | None] = [None]
    best_lab: list[tuple[int, ...]] = [()]
    # block k (label k is the largest in its triples) has C(k, 2) bits
    prefix_len = [k * (k - 1) * (k - 2) // 6 for k in range(n + 1)]
    total = prefix_len[n]
    chosen: list[int] = []

    def rec(k: int, used: int, prefix: int) -> None:
        if k == n:
            if best_code[0] is None or prefix < best_code[0]:
                best_code[0] = prefix
                best_lab[0] = tuple(chosen)
            return
        for v in range(n):
            if used >> v & 1 or deg[v] != slot_degree[k]:
                continue
            block = 0
            for j in range(k):
                row = pm[chosen[j]][v]
                for i in range(j):
                    block = (block << 1) | (row >> chosen[i] & 1)
            new = (prefix << (k * (k - 1) // 2)) | block
            if best_code[0] is not None:
                best_prefix = best_code[0] >> (total - prefix_len[k + 1])
                if new > best_prefix:
                    continue
            chosen.append(v)
            rec(k + 1, used | (1 << v), new)
            chosen.pop()

    rec(0, 0, 0)
    # labelling[v] = new label of original vertex v
    labelling = [0] * n
    for label, v in enumerate(best_lab[0]):
        labelling[v] = label
    return CanonicalForm(n, best_code[0], tuple(labelling))  # type: ignore[arg-type]


def is_isomorphic(G: Hypergraph3, H: Hypergraph3) -> bool:
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    return canonical_form(G) == canonical_form(H)


def contains(F: Hypergraph3, H: Hypergraph3, budget: int = DEFAULT_BUDGET) -> bool:
    """Convenience wrapper: ``True``/``False``, raising on an exhausted budget."""
    return find_embedding(F, H, budget) is not None


__all__ = [
    "Embedding",
    "CanonicalForm",
    "verify_embedding",
    "find_embedding",
    "find_embedding_through",
    "explicit_c7_embedding",
    "inductive_embedding",
    "c6_in_c3_blowup",
    "canonical_form",
    "is_isomorphic",
    "contains",
]
