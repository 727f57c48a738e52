"""Named witness graphs, exhaustive labeled enumeration, and seeded random
graph families (PCG64 generators, deterministic per seed).
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from . import _kernels
from .errors import Infeasible, TooLarge, TooSmall
from .graphs import Multigraph

ENUMERATION_CAP = 8
PAIRING_RESTARTS = 10_000

# Cubic bipartite incidence graph of the classical nine-point configuration:
# an 18-cycle plus chords, chord offsets repeating with period 6.
PAPPUS_LCF = (5, 7, -7, 7, -7, -5)


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, {(i, j): 1 for i in range(n) for j in range(i + 1, n)})


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise TooSmall(f"cycle needs n >= 3, got {n}")
    return Multigraph(n, {(min(i, (i + 1) % n), max(i, (i + 1) % n)): 1 for i in range(n)})


def path_graph(n: int) -> Multigraph:
    return Multigraph(n, {(i, i + 1): 1 for i in range(n - 1)})


def star_graph(leaves: int) -> Multigraph:
    """K_{1,leaves}: vertex 0 is the center."""
    return Multigraph(leaves + 1, {(0, i): 1 for i in range(1, leaves + 1)})


def parallel_edges(mult: int) -> Multigraph:
    """Two vertices joined by `mult` parallel edges."""
    return Multigraph(2, {(0, 1): mult})


def petersen_graph() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Multigraph.from_edge_list(10, outer + inner + spokes)


def lcf_graph(n: int, offsets: tuple[int, ...], repeats: int) -> Multigraph:
    """Hamiltonian cubic graph from LCF notation: an n-cycle plus chords."""
    if n != len(offsets) * repeats:
        raise ValueError("LCF length mismatch")
    pairs = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    for i in range(n):
        j = (i + offsets[i % len(offsets)]) % n
        pairs.add((min(i, j), max(i, j)))
    return Multigraph(n, {pair: 1 for pair in pairs})


def pappus_graph() -> Multigraph:
    return lcf_graph(18, PAPPUS_LCF, 3)


def dumbbell_graph() -> Multigraph:
    """Two complete graphs on four vertices joined by a single bridge."""
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(4 + i, 4 + j) for i in range(4) for j in range(i + 1, 4)]
    edges.append((3, 4))
    return Multigraph.from_edge_list(8, edges)


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """Lexicographic (u, v) pairs; bit p of an edge mask selects pairs[p]."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_edge_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Multigraph:
    pairs = pairs if pairs is not None else vertex_pairs(n)
    return Multigraph(n, {pairs[p]: 1 for p in range(len(pairs)) if (mask >> p) & 1})


def connected_mask_chunk(n: int, start: int, stop: int) -> np.ndarray:
    """Masks in [start, stop) whose labeled graph on n vertices is connected."""
    pairs = vertex_pairs(n)
    pu = np.array([u for u, _ in pairs], dtype=np.int64)
    pv = np.array([v for _, v in pairs], dtype=np.int64)
    out = np.empty(stop - start, dtype=np.int64)
    count = _kernels.connected_edge_masks(n, pu, pv, start, stop, out)
    return out[:count].copy()


def enumerate_connected(n: int, chunk_bits: int = 20) -> Iterator[Multigraph]:
    """All connected labeled simple graphs on n vertices, mask-ascending.

    No isomorphism reduction: labeled duplicates only repeat confirmations
    of universally quantified properties.
    """
    if n < 2:
        raise TooSmall(f"enumeration needs n >= 2, got {n}")
    if n > ENUMERATION_CAP:
        raise TooLarge(f"enumeration capped at n={ENUMERATION_CAP}, got {n}")
    pairs = vertex_pairs(n)
    total = 1 << len(pairs)
    step = 1 << chunk_bits
    for start in range(0, total, step):
        for mask in connected_mask_chunk(n, start, min(start + step, total)):
            yield graph_from_edge_mask(n, int(mask), pairs)


def _rng(seed) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_random_regular(n: int, d: int, seed) -> Multigraph:
    """Simple d-regular graph via the pairing model with restarts."""
    if n * d % 2 != 0 or d >= n or d < 0:
        raise Infeasible(f"no {d}-regular simple graph on {n} vertices")
    rng = _rng(seed)
    points = np.repeat(np.arange(n), d)
    for _ in range(PAIRING_RESTARTS):
        perm = rng.permutation(points)
        edges: dict[tuple[int, int], int] = {}
        ok = True
        for i in range(0, len(perm), 2):
            u, v = int(perm[i]), int(perm[i + 1])
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in edges:
                ok = False
                break
            edges[key] = 1
        if ok:
            return Multigraph(n, edges)
    raise Infeasible(f"pairing model failed after {PAIRING_RESTARTS} restarts")


def gen_gnp(n: int, p: float, seed) -> Multigraph:
    """Erdos-Renyi G(n, p)."""
    rng = _rng(seed)
    pairs = vertex_pairs(n)
    draws = rng.random(len(pairs))
    return Multigraph(n, {pairs[i]: 1 for i in range(len(pairs)) if draws[i] < p})


def gen_random_multigraph(n: int, max_mult: int, edge_factor: float, seed) -> Multigraph:
    """Connected random multigraph: a random spanning tree plus extra slots.

    Total edge slots ~= edge_factor * n; per-pair multiplicity capped at
    max_mult (extra draws that would exceed the cap are dropped).
    """
    if n < 2:
        raise TooSmall(f"multigraph sampling needs n >= 2, got {n}")
    rng = _rng(seed)
    mult: dict[tuple[int, int], int] = {}
    order = rng.permutation(n)
    for i in range(1, n):
        u = int(order[i])
        v = int(order[rng.integers(0, i)])
        key = (u, v) if u < v else (v, u)
        mult[key] = mult.get(key, 0) + 1
    target = max(n - 1, int(round(edge_factor * n)))
    for _ in range(target - (n - 1)):
        u = int(rng.integers(0, n))
        v = int(rng.integers(0, n - 1))
        if v >= u:
            v += 1
        key = (u, v) if u < v else (v, u)
        if mult.get(key, 0) < max_mult:
            mult[key] = mult.get(key, 0) + 1
    return Multigraph(n, mult)


def spawn_seeds(seed, count: int) -> list[np.random.SeedSequence]:
    """Deterministic child seeds for a batch of generated graphs."""
    return np.random.SeedSequence(seed).spawn(count)
