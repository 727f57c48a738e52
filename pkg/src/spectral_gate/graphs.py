"""Loop-free multigraph with the degree, boundary, and component primitives.

Vertices are dense integer indices 0..n-1.  Parallel edges are stored as
integer multiplicities on unordered pairs; self-loops are not representable.
Instances are immutable after construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

import numpy as np

from .errors import (
    EdgeNotPresent,
    InvalidPartition,
    LoopEdge,
    OverlappingSets,
    VertexOutOfRange,
)

EdgePair = tuple[int, int]
EdgeSlot = tuple[int, int, int]  # (u, v, copy index), u < v


class Multigraph:
    """Immutable loop-free multigraph on vertices 0..n-1."""

    __slots__ = ("n", "_pairs", "_adj", "_deg", "_m", "_edge_arrays_cache")

    def __init__(self, n: int, mult: Mapping[EdgePair, int]):
        if n < 0:
            raise VertexOutOfRange(f"vertex count {n} is negative")
        pairs: dict[EdgePair, int] = {}
        for (u, v), w in mult.items():
            if u == v:
                raise LoopEdge(u)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if w < 1:
                raise ValueError(f"multiplicity {w} of ({u}, {v}) must be >= 1")
            key = (u, v) if u < v else (v, u)
            if key in pairs and pairs[key] != w:
                raise ValueError(f"conflicting multiplicities for pair {key}")
            pairs[key] = int(w)
        self.n = n
        self._pairs = pairs
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        deg = [0] * n
        m = 0
        for (u, v), w in pairs.items():
            adj[u][v] = w
            adj[v][u] = w
            deg[u] += w
            deg[v] += w
            m += w
        self._adj = adj
        self._deg = tuple(deg)
        self._m = m
        self._edge_arrays_cache: tuple[np.ndarray, np.ndarray, np.ndarray] | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[EdgePair]) -> "Multigraph":
        """Build from a sequence of (u, v) pairs; repetition raises multiplicity."""
        mult: dict[EdgePair, int] = {}
        for u, v in edges:
            if u == v:
                raise LoopEdge(u)
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + 1
        return cls(n, mult)

    # -- basic queries -----------------------------------------------------

    @property
    def edge_count(self) -> int:
        """Total number of edges, counting multiplicities."""
        return self._m

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def degree(self, v: int) -> int:
        return self._deg[v]

    def mult(self, u: int, v: int) -> int:
        """Multiplicity of the pair {u, v}; 0 if absent."""
        if u == v:
            return 0
        key = (u, v) if u < v else (v, u)
        return self._pairs.get(key, 0)

    def neighbors(self, v: int) -> Mapping[int, int]:
        """Neighbor -> multiplicity view for vertex v."""
        return self._adj[v]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield (u, v, multiplicity) with u < v in sorted order."""
        for u, v in sorted(self._pairs):
            yield u, v, self._pairs[(u, v)]

    def edge_slots(self) -> list[EdgeSlot]:
        """Every parallel copy as a distinct (u, v, copy) slot, sorted."""
        return [(u, v, c) for u, v, w in self.edges() for c in range(w)]

    def simple(self) -> bool:
        return all(w == 1 for w in self._pairs.values())

    def multiplicity(self) -> int:
        """Maximum multiplicity over pairs (1 for edgeless graphs)."""
        return max(self._pairs.values(), default=1)

    def edge_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(u, v, w) int64 arrays over distinct pairs, cached, sorted by (u, v)."""
        if self._edge_arrays_cache is None:
            items = sorted(self._pairs.items())
            if items:
                us = np.array([u for (u, _), _ in items], dtype=np.int64)
                vs = np.array([v for (_, v), _ in items], dtype=np.int64)
                ws = np.array([w for _, w in items], dtype=np.int64)
            else:
                us = np.empty(0, dtype=np.int64)
                vs = np.empty(0, dtype=np.int64)
                ws = np.empty(0, dtype=np.int64)
            self._edge_arrays_cache = (us, vs, ws)
        return self._edge_arrays_cache

    # -- equality / hashing (value semantics) ------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._pairs.items())))

    def __repr__(self) -> str:
        kind = "simple" if self.simple() else f"mult<={self.multiplicity()}"
        return f"Multigraph(n={self.n}, m={self._m}, {kind})"


def from_edge_list(n: int, edges: Iterable[EdgePair]) -> Multigraph:
    return Multigraph.from_edge_list(n, edges)


class DegreeStats(NamedTuple):
    delta: int
    Delta: int
    average: float


def degree_stats(G: Multigraph) -> DegreeStats:
    """(min degree, max degree, average degree 2m/n)."""
    if G.n < 1:
        raise VertexOutOfRange("degree stats need at least one vertex")
    return DegreeStats(min(G.degrees), max(G.degrees), 2 * G.edge_count / G.n)


def _check_subset(G: Multigraph, S: Iterable[int]) -> frozenset[int]:
    fs = frozenset(S)
    for v in fs:
        if not (0 <= v < G.n):
            raise VertexOutOfRange(f"vertex {v} outside 0..{G.n - 1}")
    return fs


def edge_boundary(G: Multigraph, S: Iterable[int], T: Iterable[int]) -> int:
    """Number of edges between disjoint sets S and T, with multiplicities."""
    fs, ft = _check_subset(G, S), _check_subset(G, T)
    if fs & ft:
        raise OverlappingSets(f"sets share vertices {sorted(fs & ft)}")
    if len(ft) < len(fs):
        fs, ft = ft, fs
    total = 0
    for u in fs:
        for v, w in G.neighbors(u).items():
            if v in ft:
                total += w
    return total


def _normalize_edge_multiset(G: Multigraph, X: Mapping[EdgePair, int] | Iterable[EdgePair]) -> dict[EdgePair, int]:
    """Canonicalize an edge multiset and verify it fits inside G."""
    counts: dict[EdgePair, int] = {}
    if isinstance(X, Mapping):
        items: Iterable[tuple[EdgePair, int]] = X.items()
    else:
        items = (((u, v), 1) for u, v in X)
    for (u, v), c in items:
        if u == v:
            raise LoopEdge(u)
        key = (u, v) if u < v else (v, u)
        counts[key] = counts.get(key, 0) + int(c)
    for (u, v), c in counts.items():
        have = G.mult(u, v)
        if c > have:
            raise EdgeNotPresent(f"removing {c} copies of ({u}, {v}); graph has {have}")
        if c < 0:
            raise ValueError("negative edge count")
    return counts


def components_after_deletion(
    G: Multigraph, X: Mapping[EdgePair, int] | Iterable[EdgePair] = ()
) -> tuple[int, tuple[int, ...]]:
    """Component count and per-vertex component labels of G - X.

    X is an edge multiset: a mapping (u, v) -> copies removed, or an iterable
    of pairs each removing one copy.  Removing fewer copies than the stored
    multiplicity keeps the vertices adjacent.
    """
    removed = _normalize_edge_multiset(G, X)
    labels = [-1] * G.n
    comp = 0
    for start in range(G.n):
        if labels[start] != -1:
            continue
        labels[start] = comp
        stack = [start]
        while stack:
            u = stack.pop()
            for v, w in G.neighbors(u).items():
                if labels[v] != -1:
                    continue
                key = (u, v) if u < v else (v, u)
                if w - removed.get(key, 0) > 0:
                    labels[v] = comp
                    stack.append(v)
        comp += 1
    return comp, tuple(labels)


def is_connected(G: Multigraph) -> bool:
    if G.n <= 1:
        return True
    return components_after_deletion(G)[0] == 1


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint cover of 0..n-1 by non-empty blocks."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __init__(self, n: int, blocks: Sequence[Iterable[int]]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", tuple(frozenset(b) for b in blocks))
        seen: set[int] = set()
        for i, block in enumerate(self.blocks):
            if not block:
                raise InvalidPartition(f"block {i} is empty")
            for v in block:
                if not (0 <= v < n):
                    raise InvalidPartition(f"vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise InvalidPartition(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            raise InvalidPartition("blocks do not cover the vertex set")

    def __len__(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_of(self) -> tuple[int, ...]:
        """Vertex -> block index lookup."""
        out = [0] * self.n
        for i, block in enumerate(self.blocks):
            for v in block:
                out[v] = i
        return tuple(out)


def block_average_degrees(G: Multigraph, pi: VertexPartition) -> list[Fraction]:
    """Exact whole-graph average degree of each block of pi."""
    if pi.n != G.n:
        raise InvalidPartition(f"partition is over {pi.n} vertices, graph has {G.n}")
    return [
        Fraction(sum(G.degree(v) for v in block), len(block)) for block in pi.blocks
    ]


def induced_average_degrees(G: Multigraph, pi: VertexPartition) -> list[float]:
    """Average whole-graph degree of each block, as floats."""
    return [float(x) for x in block_average_degrees(G, pi)]


def cross_counts(G: Multigraph, pi: VertexPartition) -> list[list[int]]:
    """Symmetric t x t table of e(V_i, V_j) for i != j (diagonal 0)."""
    t = len(pi)
    block_of = pi.block_of()
    table = [[0] * t for _ in range(t)]
    for u, v, w in G.edges():
        bu, bv = block_of[u], block_of[v]
        if bu != bv:
            table[bu][bv] += w
            table[bv][bu] += w
    return table
