"""Finding a tight 5-cycle minus an edge by stacking nice pictures.

A nice picture ``(v, S, b, P)`` around an apex ``v`` consists of a set ``S``
of link-neighbours of a pivot ``b`` and a set ``P`` of ordered pairs ``(x, y)``
such that ``u b x y`` is a path in the link of ``v`` for every ``u`` in ``S``.
The driver builds pictures with nested sets ``S_1 ⊇ S_2 ⊇ ...`` and apexes
``v_k ∈ S_{k-1}``. As soon as two pictures ``i < j`` share a pair ``(x, y)``,
the five vertices ``v_j b_i v_i x y`` span four consecutive edges of a tight
5-cycle.

Pair sets are Python int bitsets indexed by ``x * n + y``.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from typing import Iterable

from .constructions import tight_cycle_minus
from .embedding import Embedding, verify_embedding
from .errors import ConsistencyError, InputError
from .hypergraph import Hypergraph3, LinkGraph, iter_bits, mask_of, min_codegree

log = logging.getLogger(__name__)

FOUND = "found"
NOT_FOUND = "not-found"

S_EMPTY = "S_k empty"
NO_COLLISION = "no collision after t pictures"
BUDGET = "budget exhausted"

C5_MINUS = tight_cycle_minus(5)


@dataclass(frozen=True)
class NicePicture:
    v: int
    S: frozenset[int]
    b: int
    n: int
    pairs_mask: int = field(repr=False)

    @property
    def P(self) -> frozenset[tuple[int, int]]:
        return frozenset(divmod(i, self.n) for i in iter_bits(self.pairs_mask))

    @property
    def num_pairs(self) -> int:
        return self.pairs_mask.bit_count()

    @classmethod
    def from_pairs(cls, v: int, S: Iterable[int], b: int, P: Iterable[tuple[int, int]], n: int) -> "NicePicture":
        mask = 0
        for x, y in P:
            if not (0 <= x < n and 0 <= y < n):
                raise InputError(f"pair {(x, y)} outside 0..{n - 1}")
            mask |= 1 << (x * n + y)
        return cls(v, frozenset(S), b, n, mask)


@dataclass(frozen=True)
class StageTrace:
    """Quantities logged while building picture ``k``."""

    k: int
    v: int
    b: int
    size_prev: int
    size: int
    num_pairs: int
    link_min_degree: int


@dataclass
class PictureChain:
    epsilon: float
    t: int
    S0: frozenset[int]
    n: int
    pictures: list[NicePicture] = field(default_factory=list)
    trace: list[StageTrace] = field(default_factory=list)

    def picture(self, k: int) -> NicePicture:
        """Picture ``k``, 1-based."""
        return self.pictures[k - 1]


@dataclass
class SearchReport:
    outcome: str
    witness: Embedding | None
    chain: PictureChain
    failure_stage: tuple[int, str] | None = None
    collision: tuple[int, int, tuple[int, int]] | None = None
    below_threshold: bool = False
    codegree_condition: bool = False
    seed: int | None = None
    warnings: list[str] = field(default_factory=list)

    def cyclic_order(self) -> tuple[int, ...] | None:
        """Witness vertices in cyclic order ``u b v x y`` (missing edge ``y u b``)."""
        if self.witness is None:
            return None
        m = self.witness.mapping
        return (m[4], m[0], m[1], m[2], m[3])

    def records(self) -> list[str]:
        """Line-delimited ``key=value`` records."""
        ch = self.chain
        head = [
            f"outcome={self.outcome}",
            f"n={ch.n}",
            f"epsilon={ch.epsilon!r}",
            f"t={ch.t}",
            f"seed={'none' if self.seed is None else self.seed}",
            f"below_threshold={int(self.below_threshold)}",
            f"codegree_condition={int(self.codegree_condition)}",
            f"s0_size={len(ch.S0)}",
        ]
        lines = [" ".join(["record=summary"] + head)]
        for st in ch.trace:
            lines.append(
                f"record=stage k={st.k} v={st.v} b={st.b} s_prev={st.size_prev} "
                f"s={st.size} p={st.num_pairs} link_min_degree={st.link_min_degree}"
            )
        if self.witness is not None:
            u, b, v, x, y = self.cyclic_order()
            i, j, _ = self.collision
            lines.append(f"record=witness i={i} j={j} cycle={u},{b},{v},{x},{y}")
            for e in _witness_edges(self.cyclic_order()):
                lines.append("record=edge vertices=" + ",".join(map(str, e)))
        if self.failure_stage is not None:
            k, reason = self.failure_stage
            lines.append(f"record=failure k={k} reason={reason.replace(' ', '_')}")
        for w in self.warnings:
            lines.append(f"record=warning message={w.replace(' ', '_')}")
        return lines

    def text(self) -> str:
        ch = self.chain
        out = [
            f"outcome: {self.outcome}",
            f"n = {ch.n}, epsilon = {ch.epsilon}, t = {ch.t}, |S_0| = {len(ch.S0)}, "
            f"seed = {'none' if self.seed is None else self.seed}",
        ]
        for w in self.warnings:
            out.append(f"warning: {w}")
        if self.witness is not None:
            u, b, v, x, y = self.cyclic_order()
            i, j, pair = self.collision
            out.append(f"collision: pictures {i} and {j} share pair {pair}")
            out.append(f"witness (cyclic order): {u} {b} {v} {x} {y}")
            for e in _witness_edges((u, b, v, x, y)):
                out.append(f"  edge {e[0]} {e[1]} {e[2]}")
        if self.failure_stage is not None:
            out.append(f"stopped at stage {self.failure_stage[0]}: {self.failure_stage[1]}")
        out.append("  k      v      b   |S_k-1|   |S_k|     |P_k|  min deg L_v")
        for st in ch.trace:
            out.append(f"{st.k:3d} {st.v:6d} {st.b:6d} {st.size_prev:9d} {st.size:7d} "
                       f"{st.num_pairs:9d} {st.link_min_degree:12d}")
        return "\n".join(out) + "\n"


def _witness_edges(cycle: tuple[int, ...]) -> list[tuple[int, int, int]]:
    u, b, v, x, y = cycle
    return [tuple(sorted(e)) for e in ((u, b, v), (b, v, x), (v, x, y), (x, y, u))]


class StageFailure(Exception):
    """Picture construction cannot continue (``S_{k-1}`` is empty)."""


def picture_count(epsilon: float) -> int:
    """``t = ceil(5 / eps**2) + 1``."""
    return math.ceil(5 / epsilon ** 2) + 1


def below_threshold(n: int, epsilon: float) -> bool:
    """True when ``n < (2/eps) ** (5/eps**2 + 2)``, evaluated in log space."""
    return math.log(n) < (5 / epsilon ** 2 + 2) * math.log(2 / epsilon)


def verify_nice_picture(H: Hypergraph3, p: NicePicture) -> bool:
    """Check every nice-picture condition directly against the edge set of ``H``."""
    v, b, S = p.v, p.b, p.S
    if v == b or v in S or b in S:
        return False
    if not all(0 <= z < H.n for z in (v, b, *S)):
        return False
    for u in S:
        if not H.has_edge(u, b, v):
            return False
    forbidden = set(S) | {b, v}
    for x, y in p.P:
        if x == y or x in forbidden or y in forbidden:
            return False
        if S and not (H.has_edge(b, x, v) and H.has_edge(x, y, v)):
            return False
    return True


def _pairs_mask(adjacency, n: int, b: int, s_mask: int) -> int:
    nb = adjacency[b]
    xs = nb & ~s_mask & ~(1 << b)
    mask = 0
    for x in iter_bits(xs):
        row = adjacency[x] & ~s_mask & ~(1 << b) & ~(1 << x)
        mask |= row << (x * n)
    return mask


def build_pairs(L: LinkGraph, b: int, S: Iterable[int]) -> frozenset[tuple[int, int]]:
    """All ``(x, y)`` with ``x ∈ N(b) - S - b`` and ``y ∈ N(x) - S - {b, x}`` in ``L``."""
    s_mask = mask_of(S)
    if s_mask & ~L.neighbor_mask(b):
        raise InputError("S must lie inside the link neighbourhood of b")
    mask = _pairs_mask(L.adjacency, L.n, b, s_mask)
    return frozenset(divmod(i, L.n) for i in iter_bits(mask))


def _choose_apex(H: Hypergraph3, s_prev: int, rule: str) -> int:
    if rule == "min":
        return (s_prev & -s_prev).bit_length() - 1
    if rule == "max-degree":
        # most edges through u meeting S_{k-1} elsewhere
        pm = H.pair_masks
        best, best_score = -1, -1
        for u in iter_bits(s_prev):
            score = sum(pm[u][w].bit_count() for w in iter_bits(s_prev) if w != u)
            if score > best_score:
                best, best_score = u, score
        return best
    raise InputError(f"unknown apex rule {rule!r}")


def _extend(H: Hypergraph3, s_prev: int, k: int, apex_rule: str) -> tuple[NicePicture, StageTrace]:
    if not s_prev:
        raise StageFailure(k)
    n = H.n
    v = _choose_apex(H, s_prev, apex_rule)
    row = H.pair_masks[v]
    best_b, best = -1, -1
    for b in range(n):
        if b == v:
            continue
        c = (row[b] & s_prev).bit_count()
        if c > best:
            best_b, best = b, c
    b = best_b
    s_mask = row[b] & s_prev
    pairs = _pairs_mask(row, n, b, s_mask)
    pic = NicePicture(v, frozenset(iter_bits(s_mask)), b, n, pairs)
    link_min = min((row[u].bit_count() for u in range(n) if u != v), default=0)
    trace = StageTrace(k, v, b, s_prev.bit_count(), s_mask.bit_count(), pic.num_pairs, link_min)
    return pic, trace


def extend_picture(H: Hypergraph3, S_prev: Iterable[int], k: int, epsilon: float,
                   apex_rule: str = "min") -> NicePicture:
    """Build picture ``k`` from ``S_{k-1}``.

    The apex is taken from ``S_prev`` (smallest id, or ``apex_rule="max-degree"``),
    the pivot maximises ``|N_{L_v}(b) ∩ S_prev|`` with ties to the smallest id.
    Raises :class:`StageFailure` when ``S_prev`` is empty.
    """
    if min_codegree(H) < epsilon * H.n:
        log.warning("minimum codegree below eps*n; picture bounds are not guaranteed")
    pic, _ = _extend(H, mask_of(S_prev), k, apex_rule)
    return pic


def find_collision(chain: PictureChain) -> tuple[int, int, tuple[int, int]] | None:
    """Least ``(i, j, (x, y))`` with ``i < j`` (1-based) and ``(x, y)`` in both pair sets.

    Ordered by ``j`` first, matching incremental detection, then ``i``, then the pair.
    """
    masks = [p.pairs_mask for p in chain.pictures]
    for j in range(1, len(masks)):
        hit = _collision_at(masks, j, chain.n)
        if hit is not None:
            return hit
    return None


def _collision_at(masks: list[int], j: int, n: int) -> tuple[int, int, tuple[int, int]] | None:
    pj = masks[j]
    for i in range(j):
        common = masks[i] & pj
        if common:
            idx = (common & -common).bit_length() - 1
            return i + 1, j + 1, divmod(idx, n)
    return None


def assemble_c5(H: Hypergraph3, chain: PictureChain, i: int, j: int, x: int, y: int) -> Embedding:
    """Copy of ``C5^-`` on ``v_j b_i v_i x y`` (1-based picture indices)."""
    if not 1 <= i < j <= len(chain.pictures):
        raise InputError(f"need 1 <= i < j <= {len(chain.pictures)}, got i={i}, j={j}")
    pi, pj = chain.picture(i), chain.picture(j)
    if pj.v not in pi.S:
        raise InputError(f"apex {pj.v} of picture {j} is not in S_{i}")
    bit = 1 << (x * chain.n + y)
    if not (pi.pairs_mask & bit and pj.pairs_mask & bit):
        raise InputError(f"pair {(x, y)} is not shared by pictures {i} and {j}")
    u, b, v = pj.v, pi.b, pi.v
    cycle = (u, b, v, x, y)
    if len(set(cycle)) != 5:
        raise ConsistencyError(f"assembled vertices {cycle} are not distinct")
    for e in _witness_edges(cycle):
        if not H.has_edge(*e):
            raise ConsistencyError(f"assembled triple {e} is not an edge")
    # pattern vertex p sits at cyclic position p + 1, so the pattern's missing
    # edge {3, 4, 0} lands on {y, u, b}
    emb = Embedding(C5_MINUS, H, tuple(cycle[(p + 1) % 5] for p in range(5)))
    if not verify_embedding(emb):
        raise ConsistencyError("assembled copy failed verification")
    return emb


def initial_set(n: int, epsilon: float, seed: int | None = None) -> frozenset[int]:
    """``ceil(eps*n/2)`` vertices: the lowest ids, or a seeded random sample."""
    size = min(n, math.ceil(epsilon * n / 2))
    if seed is None:
        return frozenset(range(size))
    return frozenset(random.Random(seed).sample(range(n), size))


def _check_bounds(st: StageTrace, n: int, epsilon: float) -> None:
    """Inequalities that must hold whenever ``delta_2(H) >= eps*n``."""
    en = epsilon * n
    if st.link_min_degree < en:
        raise ConsistencyError(f"stage {st.k}: link min degree {st.link_min_degree} < eps*n")
    if st.size < epsilon * (st.size_prev - 1) - 1e-9:
        raise ConsistencyError(f"stage {st.k}: |S_k|={st.size} < eps(|S_k-1|-1)")
    if n >= 20 / epsilon and st.num_pairs < epsilon ** 2 * n ** 2 / 5 - 1e-9:
        raise ConsistencyError(f"stage {st.k}: |P_k|={st.num_pairs} < eps^2 n^2/5")


def find_c5_minus(H: Hypergraph3, epsilon: float, seed: int | None = None, extended: bool = False,
                  apex_rule: str = "min", max_pictures: int | None = None) -> SearchReport:
    """Run the nice-picture driver on ``H``.

    Pictures are built one at a time and each new pair set is checked against
    all earlier ones. On the first collision the copy is assembled and
    re-verified against ``H``. Without ``extended`` the driver stops after
    ``t = ceil(5/eps^2) + 1`` pictures; with it, construction continues until
    ``S_k`` runs dry. ``max_pictures`` caps the number of pictures in either
    mode. ``seed`` selects a random ``S_0`` instead of the lowest ids.

    Small hosts (``n < (2/eps)^(5/eps^2+2)``) and hosts with minimum codegree
    below ``eps*n`` are searched anyway; the report carries a warning.
    """
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    n = H.n
    if n < 5:
        raise InputError(f"need at least 5 vertices, got {n}")
    t = picture_count(epsilon)
    S0 = initial_set(n, epsilon, seed)
    chain = PictureChain(epsilon=epsilon, t=t, S0=S0, n=n)
    report = SearchReport(outcome=NOT_FOUND, witness=None, chain=chain, seed=seed)
    report.below_threshold = below_threshold(n, epsilon)
    if report.below_threshold:
        report.warnings.append("n below the (2/eps)^(5/eps^2+2) regime")
    report.codegree_condition = min_codegree(H) >= epsilon * n
    if not report.codegree_condition:
        report.warnings.append("minimum codegree below eps*n")

    masks: list[int] = []
    union = 0
    s_prev = mask_of(S0)
    k = 0
    while True:
        k += 1
        if max_pictures is not None and k > max_pictures:
            report.failure_stage = (k - 1, BUDGET)
            break
        if not extended and k > t:
            report.failure_stage = (t, NO_COLLISION)
            break
        try:
            pic, st = _extend(H, s_prev, k, apex_rule)
        except StageFailure:
            report.failure_stage = (k - 1, S_EMPTY)
            break
        if report.codegree_condition:
            _check_bounds(st, n, epsilon)
        chain.pictures.append(pic)
        chain.trace.append(st)
        masks.append(pic.pairs_mask)
        if union & pic.pairs_mask:
            i, j, (x, y) = _collision_at(masks, k - 1, n)
            report.witness = assemble_c5(H, chain, i, j, x, y)
            report.collision = (i, j, (x, y))
            report.outcome = FOUND
            break
        union |= pic.pairs_mask
        s_prev = mask_of(pic.S)
    log.debug("find_c5_minus: %s after %d pictures", report.outcome, len(chain.pictures))
    return report
