"""3-uniform hypergraphs with degree, codegree and link queries.

Vertices are the integers ``0..n-1``. Edges are stored as sorted triples in
lexicographic order. Pair neighbourhoods ``N(uv)`` are kept as Python int
bitsets (bit ``z`` set iff ``{u, v, z}`` is an edge), built lazily on first
query, so codegree lookups are a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping

from .errors import InputError

Edge = tuple[int, int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Hypergraph3:
    """An immutable 3-uniform hypergraph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of 3-element iterables
        Each edge must consist of three distinct vertices below ``n``.
        Order inside an edge does not matter; duplicates are rejected.
    """

    __slots__ = ("n", "edges", "_edge_set", "_pair", "_deg")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        norm = []
        for e in edges:
            t = tuple(sorted(int(x) for x in e))
            if len(t) != 3 or t[0] == t[1] or t[1] == t[2]:
                raise InputError(f"edge {tuple(e)} does not have 3 distinct vertices")
            if t[0] < 0 or t[2] >= n:
                raise InputError(f"edge {t} has a vertex outside 0..{n - 1}")
            norm.append(t)
        edge_set = frozenset(norm)
        if len(edge_set) != len(norm):
            raise InputError("duplicate edges")
        self.n = n
        self.edges: tuple[Edge, ...] = tuple(sorted(edge_set))
        self._edge_set = edge_set
        self._pair: list[list[int]] | None = None
        self._deg: list[int] | None = None

    # -- basic protocol -------------------------------------------------

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, triple) -> bool:
        return tuple(sorted(triple)) in self._edge_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, m={len(self.edges)})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, a: int, b: int, c: int) -> bool:
        return tuple(sorted((a, b, c))) in self._edge_set

    # -- indexes --------------------------------------------------------

    def _build_index(self) -> None:
        n = self.n
        pair = [[0] * n for _ in range(n)]
        deg = [0] * n
        for a, b, c in self.edges:
            pair[a][b] |= 1 << c
            pair[b][a] |= 1 << c
            pair[a][c] |= 1 << b
            pair[c][a] |= 1 << b
            pair[b][c] |= 1 << a
            pair[c][b] |= 1 << a
            deg[a] += 1
            deg[b] += 1
            deg[c] += 1
        self._pair = pair
        self._deg = deg

    @property
    def pair_masks(self) -> list[list[int]]:
        """``pair_masks[u][v]`` is the bitset of ``N(uv)`` (0 on the diagonal)."""
        if self._pair is None:
            self._build_index()
        return self._pair  # type: ignore[return-value]

    @property
    def degrees(self) -> list[int]:
        if self._deg is None:
            self._build_index()
        return self._deg  # type: ignore[return-value]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} outside 0..{self.n - 1}")

    def _check_pair(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise InputError(f"codegree needs two distinct vertices, got {u} twice")

    def neighborhood_mask(self, u: int, v: int) -> int:
        self._check_pair(u, v)
        return self.pair_masks[u][v]

    # -- derived structures ---------------------------------------------

    def induced(self, vertices: Iterable[int]) -> "Hypergraph3":
        """Sub-hypergraph induced on ``vertices``, relabelled in increasing order."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(vs)}
        return Hypergraph3(
            len(vs),
            ((pos[a], pos[b], pos[c]) for a, b, c in self.edges if a in pos and b in pos and c in pos),
        )

    def relabel(self, perm: Mapping[int, int] | list[int], n: int | None = None) -> "Hypergraph3":
        """Image of the hypergraph under the vertex map ``v -> perm[v]``."""
        return Hypergraph3(self.n if n is None else n,
                           ((perm[a], perm[b], perm[c]) for a, b, c in self.edges))

    def with_edge(self, e: Iterable[int]) -> "Hypergraph3":
        return Hypergraph3(self.n, list(self.edges) + [tuple(e)])

    def without_edge(self, e: Iterable[int]) -> "Hypergraph3":
        t = tuple(sorted(e))
        if t not in self._edge_set:
            raise InputError(f"{t} is not an edge")
        return Hypergraph3(self.n, (f for f in self.edges if f != t))

    @classmethod
    def complete(cls, n: int) -> "Hypergraph3":
        return cls(n, combinations(range(n), 3))


@dataclass(frozen=True)
class LinkGraph:
    """The link ``L_v``: graph on ``V - v`` with an edge ``xy`` whenever ``vxy`` is an edge."""

    center: int
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(repr=False, compare=False)

    def neighbors(self, u: int) -> set[int]:
        return set(iter_bits(self.adjacency[u]))

    def neighbor_mask(self, u: int) -> int:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return self.adjacency[u].bit_count()

    def min_degree(self) -> int:
        """Minimum degree over the ``n - 1`` vertices other than the center."""
        others = [self.degree(u) for u in range(self.n) if u != self.center]
        return min(others) if others else 0

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.adjacency[x] >> y & 1)


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    min_codegree: int
    codegree_table: dict[tuple[int, int], int]


def degree(H: Hypergraph3, v: int) -> int:
    """Number of edges containing ``v``."""
    H._check_vertex(v)
    return H.degrees[v]


def codegree(H: Hypergraph3, u: int, v: int) -> int:
    """Number of edges containing both ``u`` and ``v``."""
    return H.neighborhood_mask(u, v).bit_count()


def neighborhood(H: Hypergraph3, u: int, v: int) -> set[int]:
    """The set ``N(uv) = {z : uvz is an edge}``."""
    return set(iter_bits(H.neighborhood_mask(u, v)))


def link(H: Hypergraph3, v: int) -> LinkGraph:
    H._check_vertex(v)
    row = H.pair_masks[v]
    edges = tuple(sorted(tuple(x for x in e if x != v) for e in H.edges if v in e))
    return LinkGraph(center=v, n=H.n, edges=edges, adjacency=tuple(row))


def min_codegree(H: Hypergraph3) -> int:
    """``delta_2(H)``; zero when ``n < 2``."""
    pm = H.pair_masks
    best = None
    for u in range(H.n):
        row = pm[u]
        for v in range(u + 1, H.n):
            c = row[v].bit_count()
            if best is None or c < best:
                best = c
                if c == 0:
                    return 0
    return 0 if best is None else best


def degree_profile(H: Hypergraph3) -> DegreeProfile:
    if H.n < 2:
        raise InputError("degree profile needs at least 2 vertices")
    pm = H.pair_masks
    table = {(u, v): pm[u][v].bit_count() for u, v in combinations(range(H.n), 2)}
    return DegreeProfile(
        min_degree=min(H.degrees),
        min_codegree=min(table.values()),
        codegree_table=table,
    )


def edge_density(H: Hypergraph3) -> Fraction:
    """``|E| / C(n, 3)`` as an exact fraction (use ``float()`` for a decimal)."""
    if H.n < 3:
        raise InputError("edge density needs at least 3 vertices")
    return Fraction(len(H.edges), comb(H.n, 3))
