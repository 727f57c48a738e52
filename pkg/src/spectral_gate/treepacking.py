"""Spanning-tree packing: exact tau via matroid-union augmentation, plus the
set-partition oracle and the edge-deletion counting primitives.

Parallel edges are distinct ground-set elements (edge slots), so multigraph
packing works unchanged.  Augmentation searches are breadth-first, which
makes the produced forests deterministic for a fixed slot order.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from . import _kernels
from .errors import Disconnected, TooLarge, TooSmall
from .graphs import (
    EdgePair,
    EdgeSlot,
    Multigraph,
    VertexPartition,
    components_after_deletion,
    edge_boundary,
    _normalize_edge_multiset,
)

PARTITION_ORACLE_CAP = 10  # Bell(10) = 115975 set partitions


@dataclass(frozen=True)
class PartitionWitness:
    """A vertex partition certifying the packing upper bound.

    bound = floor(crossing / (len(parts) - 1)) equals tau at a minimizing
    partition, which is exactly the failure of the counting criterion for
    tau + 1 disjoint spanning trees.
    """

    parts: VertexPartition
    crossing: int
    bound: int


@dataclass(frozen=True)
class PackingCertificate:
    """tau plus the edge-disjoint spanning trees attaining it."""

    tau: int | float  # math.inf for the single-vertex graph
    forests: tuple[tuple[EdgeSlot, ...], ...]
    dual: PartitionWitness | None


class _ForestState:
    """Union-find plus adjacency for one forest of the packing."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.adj: dict[int, list[tuple[int, int]]] = {}  # vertex -> [(nbr, slot)]

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def add(self, u: int, v: int, slot: int) -> None:
        self.parent[self.find(u)] = self.find(v)
        self.adj.setdefault(u, []).append((v, slot))
        self.adj.setdefault(v, []).append((u, slot))

    def path_slots(self, a: int, b: int) -> list[int]:
        """Slots on the unique forest path from a to b (must be connected)."""
        prev: dict[int, tuple[int, int]] = {a: (-1, -1)}
        queue = deque([a])
        while queue:
            u = queue.popleft()
            if u == b:
                break
            for v, slot in self.adj.get(u, ()):
                if v not in prev:
                    prev[v] = (u, slot)
                    queue.append(v)
        out = []
        v = b
        while v != a:
            u, slot = prev[v]
            out.append(slot)
            v = u
        return out


class _MatroidUnion:
    """Incrementally packs edge slots into k forests."""

    def __init__(self, G: Multigraph):
        self.n = G.n
        self.slots = G.edge_slots()
        self.ends = [(u, v) for u, v, _ in self.slots]
        self.color = [-1] * len(self.slots)
        self.k = 0
        self.forests: list[_ForestState] = []
        self.rank = 0

    def _rebuild(self) -> None:
        self.forests = [_ForestState(self.n) for _ in range(self.k)]
        for e, c in enumerate(self.color):
            if c >= 0:
                u, v = self.ends[e]
                self.forests[c].add(u, v, e)

    def _try_place(self, root: int) -> bool:
        pred: dict[int, tuple[int, int] | None] = {root: None}
        queue = deque([root])
        while queue:
            y = queue.popleft()
            a, b = self.ends[y]
            cy = self.color[y]
            for i in range(self.k):
                if i == cy:
                    continue
                forest = self.forests[i]
                if forest.find(a) != forest.find(b):
                    # augmenting sequence found; recolor back to the root
                    cur, place = y, i
                    while True:
                        old = self.color[cur]
                        self.color[cur] = place
                        parent = pred[cur]
                        if parent is None:
                            break
                        cur, place = parent[0], old
                    self._rebuild()
                    return True
                for z in forest.path_slots(a, b):
                    if z not in pred:
                        pred[z] = (y, i)
                        queue.append(z)
        return False

    def extend_to(self, k: int) -> bool:
        """Grow to k forests; True iff all of them span (rank = k(n-1))."""
        self.k = k
        self._rebuild()
        target = k * (self.n - 1)
        progress = True
        while self.rank < target and progress:
            progress = False
            for e in range(len(self.slots)):
                if self.color[e] >= 0:
                    continue
                if self._try_place(e):
                    self.rank += 1
                    progress = True
                    if self.rank == target:
                        return True
        return self.rank == target

    def forest_slots(self) -> tuple[tuple[EdgeSlot, ...], ...]:
        out: list[list[EdgeSlot]] = [[] for _ in range(self.k)]
        for e, c in enumerate(self.color):
            if c >= 0:
                out[c].append(self.slots[e])
        return tuple(tuple(f) for f in out)


def tau(G: Multigraph) -> PackingCertificate:
    """Maximum number of edge-disjoint spanning trees, with the trees.

    Searches k = 1, 2, ... up to m // (n-1), keeping the packing from the
    previous level.  A partition witness is attached for n <= 10.
    """
    if G.n < 1:
        raise TooSmall("packing needs at least one vertex")
    if G.n == 1:
        return PackingCertificate(math.inf, (), None)
    if components_after_deletion(G)[0] != 1:
        raise Disconnected("packing number is defined for connected graphs")

    union = _MatroidUnion(G)
    best: tuple[tuple[EdgeSlot, ...], ...] = ()
    value = 0
    kmax = G.edge_count // (G.n - 1)
    for k_try in range(1, kmax + 1):
        if not union.extend_to(k_try):
            break
        value = k_try
        best = union.forest_slots()

    dual = None
    if G.n <= PARTITION_ORACLE_CAP:
        oracle_value, witness = tau_partition_oracle(G)
        assert oracle_value == value, "packing and partition oracle disagree"
        dual = witness
    return PackingCertificate(value, best, dual)


def tau_partition_oracle(G: Multigraph) -> tuple[int, PartitionWitness]:
    """Minimum of floor(crossing / (parts - 1)) over all vertex partitions."""
    if G.n < 2:
        raise TooSmall("partition oracle needs n >= 2")
    if G.n > PARTITION_ORACLE_CAP:
        raise TooLarge(f"partition enumeration capped at n={PARTITION_ORACLE_CAP}")
    if components_after_deletion(G)[0] != 1:
        raise Disconnected("partition oracle assumes a connected graph")
    eu, ev, ew = G.edge_arrays()
    value, code = _kernels.tnw_min_partition(G.n, eu, ev, ew)
    rgs = [(int(code) >> (4 * i)) & 15 for i in range(G.n)]
    nblocks = max(rgs) + 1
    blocks = [[v for v in range(G.n) if rgs[v] == b] for b in range(nblocks)]
    parts = VertexPartition(G.n, blocks)
    crossing = sum(
        w for u, v, w in G.edges() if rgs[u] != rgs[v]
    )
    bound = crossing // (nblocks - 1)
    assert bound == value
    return int(value), PartitionWitness(parts, crossing, bound)


def check_nash_williams(
    G: Multigraph, k: int, X: Mapping[EdgePair, int] | Iterable[EdgePair]
) -> bool:
    """Does the edge multiset X satisfy |X| >= k * (components(G - X) - 1)?"""
    removed = _normalize_edge_multiset(G, X)
    size = sum(removed.values())
    c, _ = components_after_deletion(G, removed)
    return size >= k * (c - 1)


class CutProfile(NamedTuple):
    r: tuple[int, ...]  # boundary of each component of G - X, ascending
    total: int  # sum of r, twice the cross-component edge count


def component_cut_profile(
    G: Multigraph, X: Mapping[EdgePair, int] | Iterable[EdgePair]
) -> CutProfile:
    """Boundaries (in G) of the components of G - X, sorted ascending."""
    removed = _normalize_edge_multiset(G, X)
    c, labels = components_after_deletion(G, removed)
    everything = frozenset(range(G.n))
    rs = []
    for comp in range(c):
        side = frozenset(v for v in range(G.n) if labels[v] == comp)
        rs.append(edge_boundary(G, side, everything - side))
    rs.sort()
    return CutProfile(tuple(rs), sum(rs))


def validate_packing(G: Multigraph, cert: PackingCertificate) -> bool:
    """Directly recheck forest disjointness, spanning, and acyclicity."""
    if cert.tau == math.inf:
        return G.n == 1
    if len(cert.forests) != cert.tau:
        return False
    seen: set[EdgeSlot] = set()
    for forest in cert.forests:
        if len(forest) != G.n - 1:
            return False
        parent = list(range(G.n))

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, v, copy in forest:
            if (u, v, copy) in seen or copy >= G.mult(u, v):
                return False
            seen.add((u, v, copy))
            ru, rv = find(u), find(v)
            if ru == rv:
                return False  # cycle
            parent[ru] = rv
        roots = {find(v) for v in range(G.n)}
        if len(roots) != 1:
            return False
    return True
