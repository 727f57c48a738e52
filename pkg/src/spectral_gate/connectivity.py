"""Exact edge connectivity with cut witnesses, and the two-minimum-cut
class membership decision.

The class in question collects graphs admitting two disjoint non-empty
proper vertex subsets, with at least one vertex left over, each meeting the
rest of the graph in exactly a minimum cut.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import SingleVertex, TooLarge, TooSmall, UndecidedMembership
from .graphs import Multigraph, components_after_deletion, edge_boundary

MEMBERSHIP_CAP = 24  # bitmask enumeration bound for exact decisions
ORACLE_CAP = 24


@dataclass(frozen=True)
class CutCertificate:
    """A global minimum cut: its weight and one side attaining it."""

    value: int
    side: frozenset[int]


@dataclass(frozen=True)
class GClassWitness:
    """Two disjoint min-cut sides whose union misses at least one vertex."""

    v1: frozenset[int]
    v2: frozenset[int]
    kappa: int


def edge_connectivity(G: Multigraph) -> CutCertificate:
    """Global minimum edge cut by Stoer-Wagner, multiplicities as weights.

    Deterministic: maximum-adjacency ties break toward the lowest vertex
    index.  Disconnected input yields value 0 with the component of vertex 0.
    """
    if G.n < 2:
        raise SingleVertex(f"edge connectivity undefined for n={G.n}")
    ncomp, labels = components_after_deletion(G)
    if ncomp > 1:
        side = frozenset(v for v in range(G.n) if labels[v] == labels[0])
        return CutCertificate(0, side)

    # Supernode state: weight maps between live representatives, and the
    # original vertices merged into each representative.
    weights: dict[int, dict[int, int]] = {v: dict(G.neighbors(v)) for v in range(G.n)}
    merged: dict[int, frozenset[int]] = {v: frozenset([v]) for v in range(G.n)}
    best_value: int | None = None
    best_side: frozenset[int] = frozenset()

    while len(weights) > 1:
        nodes = sorted(weights)
        start = nodes[0]
        in_order = {start}
        attach = dict(weights[start])  # connection weight into the growing set
        last, prev = start, start
        for _ in range(len(nodes) - 1):
            pick, pick_w = -1, -1
            for v in nodes:
                if v in in_order:
                    continue
                w = attach.get(v, 0)
                if w > pick_w or (w == pick_w and v < pick):
                    pick, pick_w = v, w
            in_order.add(pick)
            prev, last = last, pick
            for u, w in weights[pick].items():
                if u not in in_order:
                    attach[u] = attach.get(u, 0) + w
        phase_cut = sum(weights[last].values())
        if best_value is None or phase_cut < best_value:
            best_value = phase_cut
            best_side = merged[last]
        # contract last into prev
        for u, w in weights[last].items():
            if u == prev:
                continue
            weights[prev][u] = weights[prev].get(u, 0) + w
            weights[u][prev] = weights[prev][u]
            del weights[u][last]
        weights[prev].pop(last, None)
        del weights[last]
        merged[prev] = merged[prev] | merged[last]
        del merged[last]

    assert best_value is not None
    return CutCertificate(best_value, best_side)


def min_cut_oracle(G: Multigraph) -> int:
    """Minimum cut by enumerating all 2^(n-1)-1 proper bipartitions."""
    if G.n < 2:
        raise SingleVertex(f"min cut undefined for n={G.n}")
    if G.n > ORACLE_CAP:
        raise TooLarge(f"bitmask enumeration capped at n={ORACLE_CAP}, got {G.n}")
    if G.edge_count == 0:
        return 0
    eu, ev, ew = G.edge_arrays()
    return int(_kernels.min_bipartition_cut(G.n, eu, ev, ew))


def min_cut_sides(G: Multigraph) -> list[frozenset[int]]:
    """Every side of every minimum cut (both sides of each), n <= 24."""
    if G.n < 2:
        raise SingleVertex(f"min cut undefined for n={G.n}")
    if G.n > MEMBERSHIP_CAP:
        raise TooLarge(f"bitmask enumeration capped at n={MEMBERSHIP_CAP}, got {G.n}")
    kappa = edge_connectivity(G).value
    eu, ev, ew = G.edge_arrays()
    cap = max(4 * G.n * G.n, 64)
    while True:
        buf = np.zeros(cap, dtype=np.int64)
        count = _kernels.masks_with_cut_value(G.n, eu, ev, ew, kappa, buf)
        if count < cap:
            break
        cap *= 4  # connected graphs have O(n^2) minimum cuts; disconnected may not
    masks = sorted(int(x) for x in buf[:count])
    return [frozenset(v for v in range(G.n) if (mask >> v) & 1) for mask in masks]


def g_class_membership(G: Multigraph) -> GClassWitness | None:
    """Witness for class membership, or None when no qualifying pair exists.

    Fast path: two distinct vertices of degree kappa' give singleton sides.
    Otherwise all minimum-cut sides are enumerated (n <= 24) and searched
    for a disjoint pair leaving at least one vertex uncovered.
    """
    if G.n < 3:
        raise TooSmall(f"membership needs n >= 3, got {G.n}")
    ncomp, labels = components_after_deletion(G)
    if ncomp >= 2:
        # kappa' = 0; zero-boundary sides are exactly unions of components.
        if ncomp == 2:
            return None
        c0 = frozenset(v for v in range(G.n) if labels[v] == 0)
        c1 = frozenset(v for v in range(G.n) if labels[v] == 1)
        return GClassWitness(c0, c1, 0)

    kappa = edge_connectivity(G).value
    low = [v for v in range(G.n) if G.degree(v) == kappa]
    if len(low) >= 2:
        return GClassWitness(frozenset([low[0]]), frozenset([low[1]]), kappa)
    if G.n > MEMBERSHIP_CAP:
        raise UndecidedMembership(
            f"no fast path and n={G.n} exceeds the enumeration cap {MEMBERSHIP_CAP}"
        )
    sides = min_cut_sides(G)
    masks = [sum(1 << v for v in side) for side in sides]
    full = (1 << G.n) - 1
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j] == 0 and masks[i] | masks[j] != full:
                return GClassWitness(sides[i], sides[j], kappa)
    return None


def validate_witness(G: Multigraph, w: GClassWitness) -> bool:
    """Recount the witness invariants directly."""
    v1, v2 = w.v1, w.v2
    if not v1 or not v2 or v1 & v2:
        return False
    rest = frozenset(range(G.n)) - v1 - v2
    if not rest:
        return False
    for side in (v1, v2):
        complement = frozenset(range(G.n)) - side
        if not complement:
            return False
        if edge_boundary(G, side, complement) != w.kappa:
            return False
    return True
