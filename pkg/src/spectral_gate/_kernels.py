"""Hot numeric loops, JIT-compiled when numba is available.

Every kernel is plain nopython-style Python over numpy arrays, so the
uncompiled fallback computes identical results (slower).  Wrappers in the
sibling modules own validation and error reporting.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


@njit(cache=True)
def jacobi_cycle(a: np.ndarray, max_sweeps: int) -> tuple[np.ndarray, bool]:
    """Cyclic Jacobi on a symmetric matrix, in place.

    Converges when the off-diagonal Frobenius norm drops below
    1e-12 * (1 + ||M||_F).  Returns (diagonal, converged).
    """
    n = a.shape[0]
    frob = 0.0
    for i in range(n):
        for j in range(n):
            frob += a[i, j] * a[i, j]
    thresh_sq = (1e-12 * (1.0 + np.sqrt(frob))) ** 2

    converged = False
    for _ in range(max_sweeps):
        off_sq = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off_sq += 2.0 * a[p, q] * a[p, q]
        if off_sq <= thresh_sq:
            converged = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                for i in range(n):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = c * api - s * aqi
                    a[q, i] = s * api + c * aqi
                a[p, q] = 0.0
                a[q, p] = 0.0
    if n <= 1:
        converged = True
    diag = np.empty(n, dtype=np.float64)
    for i in range(n):
        diag[i] = a[i, i]
    return diag, converged


@njit(cache=True)
def min_bipartition_cut(n: int, eu: np.ndarray, ev: np.ndarray, ew: np.ndarray) -> int:
    """Minimum boundary weight over all 2^(n-1)-1 proper bipartitions."""
    m = eu.shape[0]
    best = np.int64(0)
    for i in range(m):
        best += ew[i]
    best += 1  # strictly above any single cut
    top = np.int64(1) << (n - 1)
    for mask in range(1, top):
        cut = np.int64(0)
        for i in range(m):
            if ((mask >> eu[i]) ^ (mask >> ev[i])) & 1:
                cut += ew[i]
        if cut < best:
            best = cut
    return best


@njit(cache=True)
def masks_with_cut_value(
    n: int, eu: np.ndarray, ev: np.ndarray, ew: np.ndarray, target: int, out: np.ndarray
) -> int:
    """Collect every proper non-empty subset mask with boundary == target.

    Both sides of each cut are emitted.  Returns the number written to
    `out`; a result equal to len(out) means the buffer overflowed.
    """
    m = eu.shape[0]
    half = np.int64(1) << (n - 1)
    full = (np.int64(1) << n) - 1
    cap = out.shape[0]
    count = 0
    for mask in range(1, half):
        cut = np.int64(0)
        for i in range(m):
            if ((mask >> eu[i]) ^ (mask >> ev[i])) & 1:
                cut += ew[i]
        if cut == target:
            if count + 2 > cap:
                return cap
            out[count] = mask
            out[count + 1] = full ^ mask
            count += 2
    return count


@njit(cache=True)
def boundary_per_mask(n: int, eu: np.ndarray, ev: np.ndarray, ew: np.ndarray) -> np.ndarray:
    """Boundary weight of every subset mask 0..2^n-1 (n small)."""
    m = eu.shape[0]
    size = 1 << n
    out = np.zeros(size, dtype=np.int64)
    for i in range(m):
        bit_u = np.int64(1) << eu[i]
        bit_v = np.int64(1) << ev[i]
        w = ew[i]
        for mask in range(size):
            if ((mask & bit_u) != 0) != ((mask & bit_v) != 0):
                out[mask] += w
    return out


@njit(cache=True)
def connected_edge_masks(
    n: int, pu: np.ndarray, pv: np.ndarray, start: int, stop: int, out: np.ndarray
) -> int:
    """Filter labeled-graph edge masks in [start, stop) to connected ones.

    Bit p of a mask selects the vertex pair (pu[p], pv[p]).  Returns the
    number of masks written to `out`.
    """
    npairs = pu.shape[0]
    all_visited = (np.int64(1) << n) - 1
    count = 0
    adj = np.zeros(n, dtype=np.int64)
    for mask in range(start, stop):
        for v in range(n):
            adj[v] = 0
        for p in range(npairs):
            if (mask >> p) & 1:
                adj[pu[p]] |= np.int64(1) << pv[p]
                adj[pv[p]] |= np.int64(1) << pu[p]
        visited = np.int64(1)
        frontier = np.int64(1)
        while frontier != 0:
            nxt = np.int64(0)
            for v in range(n):
                if (frontier >> v) & 1:
                    nxt |= adj[v]
            frontier = nxt & ~visited
            visited |= frontier
        if visited == all_visited:
            out[count] = mask
            count += 1
    return count


@njit(cache=True)
def tnw_min_partition(n: int, eu: np.ndarray, ev: np.ndarray, ew: np.ndarray) -> tuple[int, int]:
    """Tutte-Nash-Williams minimum of floor(crossing / (blocks - 1)).

    Enumerates every set partition of 0..n-1 with >= 2 blocks via restricted
    growth strings.  Returns (minimum value, best RGS packed 4 bits per
    vertex); requires n <= 10.
    """
    m = eu.shape[0]
    a = np.zeros(n, dtype=np.int64)  # restricted growth string
    d = np.zeros(n + 1, dtype=np.int64)  # d[j] = max(a[0..j-1]), d[0] unused
    total = np.int64(0)
    for i in range(m):
        total += ew[i]
    best = total + 1
    best_code = np.int64(0)
    while True:
        s = np.int64(0)
        for i in range(n):
            if a[i] > s:
                s = a[i]
        s += 1
        if s >= 2:
            crossing = np.int64(0)
            for i in range(m):
                if a[eu[i]] != a[ev[i]]:
                    crossing += ew[i]
            val = crossing // (s - 1)
            if val < best:
                best = val
                code = np.int64(0)
                for i in range(n):
                    code |= a[i] << (4 * i)
                best_code = code
        # advance to the next restricted growth string
        j = n - 1
        while j > 0 and a[j] > d[j]:
            j -= 1
        if j == 0:
            break
        a[j] += 1
        for i in range(j + 1, n):
            a[i] = 0
        for i in range(j, n):
            d[i + 1] = max(d[i], a[i])
    return best, best_code


def warmup() -> None:
    """Trigger JIT compilation of all kernels (cached on disk afterwards)."""
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    jacobi_cycle(a.copy(), 60)
    eu = np.array([0], dtype=np.int64)
    ev = np.array([1], dtype=np.int64)
    ew = np.array([1], dtype=np.int64)
    min_bipartition_cut(2, eu, ev, ew)
    buf = np.zeros(16, dtype=np.int64)
    masks_with_cut_value(2, eu, ev, ew, 1, buf)
    boundary_per_mask(2, eu, ev, ew)
    connected_edge_masks(2, eu, ev, np.int64(0), np.int64(2), buf)
    tnw_min_partition(2, eu, ev, ew)
