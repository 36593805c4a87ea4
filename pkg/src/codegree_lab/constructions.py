"""Generators for tight cycles, blow-ups and the tripartite-type constructions.

All generators are deterministic apart from :func:`random_hypergraph`, which
draws from a seeded :class:`random.Random`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .errors import InputError, ResourceLimitError, max_n
from .hypergraph import Hypergraph3, min_codegree

MUBAYI_RODL_MAX_N = 3 ** 5


def tight_cycle(length: int) -> Hypergraph3:
    """Tight cycle on ``length`` vertices: edges ``{i, i+1, i+2}`` mod ``length``.

    For ``length == 3`` all rotations coincide and the result is one edge.
    """
    if length < 3:
        raise InputError(f"tight cycle needs length >= 3, got {length}")
    edges = {tuple(sorted((i, (i + 1) % length, (i + 2) % length))) for i in range(length)}
    return Hypergraph3(length, edges)


def missing_edge(length: int) -> tuple[int, int, int]:
    """The edge dropped by :func:`tight_cycle_minus`: ``{l-2, l-1, 0}``."""
    return tuple(sorted((length - 2, length - 1, 0)))


def tight_cycle_minus(length: int) -> Hypergraph3:
    """Tight cycle on ``length`` vertices with the edge ``{l-2, l-1, 0}`` removed."""
    if length < 4:
        raise InputError(f"C_l minus an edge needs length >= 4, got {length}")
    return tight_cycle(length).without_edge(missing_edge(length))


@dataclass(frozen=True)
class BlowUpMap:
    base: Hypergraph3
    multiplicity: int
    result: Hypergraph3

    def part_of(self, x: int) -> int:
        return x // self.multiplicity

    def part(self, i: int) -> range:
        return range(i * self.multiplicity, (i + 1) * self.multiplicity)


def blow_up(F: Hypergraph3, multiplicity: int) -> BlowUpMap:
    """Replace every vertex of ``F`` by ``multiplicity`` clones.

    Base vertex ``i`` owns the clones ``i*l .. (i+1)*l - 1``; every edge of
    ``F`` becomes the ``l**3`` transversal triples of its three parts.
    """
    if multiplicity < 1:
        raise InputError(f"blow-up multiplicity must be >= 1, got {multiplicity}")
    l = multiplicity
    edges = [
        (a * l + i, b * l + j, c * l + k)
        for a, b, c in F.edges
        for i, j, k in product(range(l), repeat=3)
    ]
    return BlowUpMap(base=F, multiplicity=l, result=Hypergraph3(F.n * l, edges))


@dataclass(frozen=True)
class IteratedConstruction:
    """Result of iterating the three-copies-plus-crossing-edges construction.

    ``part_boundaries[level]`` lists the ``(start, stop)`` vertex ranges of
    the ``3**(level+1)`` blocks at that level; level 0 is the top-level
    tripartition.
    """

    depth: int
    result: Hypergraph3
    part_boundaries: tuple[tuple[tuple[int, int], ...], ...]


def mubayi_rodl_edge_count(depth: int) -> int:
    """``e(3) = 1`` and ``e(3n) = 3 e(n) + n**3``."""
    e, n = 1, 3
    for _ in range(depth):
        e, n = 3 * e + n ** 3, 3 * n
    return e


def mubayi_rodl(depth: int) -> IteratedConstruction:
    """Iterated construction starting from a single edge.

    Built bottom-up: at every level the current hypergraph is copied three
    times onto consecutive blocks and every triple with one vertex in each
    block is added.
    """
    if depth < 0:
        raise InputError(f"depth must be >= 0, got {depth}")
    n_final = 3 ** (depth + 1)
    cap = max_n(MUBAYI_RODL_MAX_N)
    if n_final > cap:
        raise ResourceLimitError(f"depth {depth} needs {n_final} vertices, cap is {cap}")

    edges: list[tuple[int, int, int]] = [(0, 1, 2)]
    n = 3
    for _ in range(depth):
        new = [(a + s, b + s, c + s) for s in (0, n, 2 * n) for a, b, c in edges]
        new.extend(product(range(n), range(n, 2 * n), range(2 * n, 3 * n)))
        edges, n = new, 3 * n

    boundaries = []
    for level in range(depth + 1):
        size = n_final // 3 ** (level + 1)
        boundaries.append(tuple((i * size, (i + 1) * size) for i in range(3 ** (level + 1))))
    return IteratedConstruction(depth=depth, result=Hypergraph3(n_final, edges),
                                part_boundaries=tuple(boundaries))


def tripartite_parts(n: int) -> list[range]:
    """Split ``0..n-1`` into three near-equal blocks, earlier blocks larger."""
    q, r = divmod(n, 3)
    sizes = [q + (1 if i < r else 0) for i in range(3)]
    starts = [0, sizes[0], sizes[0] + sizes[1]]
    return [range(s, s + z) for s, z in zip(starts, sizes)]


def balanced_tripartite_complete(n: int) -> Hypergraph3:
    """All triples meeting each of three near-equal parts exactly once."""
    if n < 3:
        raise InputError(f"tripartite construction needs n >= 3, got {n}")
    x1, x2, x3 = tripartite_parts(n)
    return Hypergraph3(n, product(x1, x2, x3))


def random_hypergraph(n: int, p: float, seed: int = 0, min_codegree_target: int | None = None) -> Hypergraph3:
    """Binomial random hypergraph, optionally repaired up to a codegree floor.

    Each triple is kept with probability ``p``. When ``min_codegree_target``
    is given, pairs whose codegree falls short receive random extra edges
    through them until every pair reaches the target.
    """
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = {t for t in combinations(range(n), 3) if rng.random() < p}
    if min_codegree_target is not None:
        if min_codegree_target > n - 2:
            raise InputError(f"codegree {min_codegree_target} impossible on {n} vertices")
        nbr: dict[tuple[int, int], set[int]] = {pair: set() for pair in combinations(range(n), 2)}
        for a, b, c in edges:
            nbr[a, b].add(c)
            nbr[a, c].add(b)
            nbr[b, c].add(a)
        for (u, v), zs in nbr.items():
            if len(zs) >= min_codegree_target:
                continue
            pool = [z for z in range(n) if z != u and z != v and z not in zs]
            rng.shuffle(pool)
            for z in pool[: min_codegree_target - len(zs)]:
                a, b, c = sorted((u, v, z))
                edges.add((a, b, c))
                nbr[a, b].add(c)
                nbr[a, c].add(b)
                nbr[b, c].add(a)
    H = Hypergraph3(n, edges)
    if min_codegree_target is not None:
        assert min_codegree(H) >= min_codegree_target
    return H
