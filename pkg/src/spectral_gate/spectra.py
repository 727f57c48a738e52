"""Adjacency / Laplacian / signless-Laplacian spectra and quotient matrices.

Eigenvalues come from a cyclic Jacobi rotation solver (hard cap 60 sweeps,
convergence at off-diagonal Frobenius norm below 1e-12 * (1 + ||M||_F)).
Quotient matrices are assembled from integer cut counts and exact rational
block average degrees, converted to floating point once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, NamedTuple

import numpy as np

from . import _kernels
from .errors import LengthMismatch, NoConvergence, OrderMismatch
from .graphs import Multigraph, VertexPartition, block_average_degrees, cross_counts

MatrixKind = Literal["adjacency", "laplacian", "signless-laplacian", "degree"]
QuotientKind = Literal["adjacency", "signless-laplacian"]

MAX_SWEEPS = 60


def build_matrix(G: Multigraph, kind: MatrixKind) -> np.ndarray:
    """Dense symmetric matrix of the requested kind, entries exact integers."""
    n = G.n
    a = np.zeros((n, n), dtype=np.float64)
    if kind != "degree":
        for u, v, w in G.edges():
            a[u, v] = w
            a[v, u] = w
    if kind == "adjacency":
        return a
    d = np.diag(np.array(G.degrees, dtype=np.float64)) if n else np.zeros((0, 0))
    if kind == "degree":
        return d
    if kind == "laplacian":
        return d - a
    if kind == "signless-laplacian":
        return d + a
    raise ValueError(f"unknown matrix kind {kind!r}")


def symmetric_eigenvalues(M: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, sorted non-increasing."""
    a = np.asarray(M, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise OrderMismatch(f"matrix shape {a.shape} is not square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    diag, converged = _kernels.jacobi_cycle(a.copy(), MAX_SWEEPS)
    if not converged:
        raise NoConvergence(f"off-diagonal norm above tolerance after {MAX_SWEEPS} sweeps")
    return np.sort(diag)[::-1]


@dataclass(frozen=True)
class SpectralSummary:
    """Sorted spectra of A, L, Q together with the degree data."""

    lam: tuple[float, ...]  # adjacency, non-increasing
    mu: tuple[float, ...]  # Laplacian, non-increasing
    q: tuple[float, ...]  # signless Laplacian, non-increasing
    n: int
    m: int
    delta: int
    Delta: int

    def lambda_(self, i: int) -> float:
        """i-th largest adjacency eigenvalue, 1-based."""
        return self.lam[i - 1]

    def mu_(self, i: int) -> float:
        return self.mu[i - 1]

    def q_(self, i: int) -> float:
        return self.q[i - 1]


def spectral_summary(G: Multigraph) -> SpectralSummary:
    lam = symmetric_eigenvalues(build_matrix(G, "adjacency"))
    mu = symmetric_eigenvalues(build_matrix(G, "laplacian"))
    q = symmetric_eigenvalues(build_matrix(G, "signless-laplacian"))
    return SpectralSummary(
        lam=tuple(float(x) for x in lam),
        mu=tuple(float(x) for x in mu),
        q=tuple(float(x) for x in q),
        n=G.n,
        m=G.edge_count,
        delta=min(G.degrees) if G.n else 0,
        Delta=max(G.degrees) if G.n else 0,
    )


@dataclass(frozen=True)
class QuotientMatrix:
    """t x t quotient of A or Q under a vertex partition.

    `entries` is the (generally asymmetric) quotient itself; the integer cut
    counts and exact block averages are kept so the symmetrizing similarity
    can be formed without round-off surprises.
    """

    kind: QuotientKind
    block_sizes: tuple[int, ...]
    entries: np.ndarray
    cross: tuple[tuple[int, ...], ...]  # e(V_i, V_j), symmetric, zero diagonal
    avg_degrees: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.block_sizes)


def quotient_matrix(G: Multigraph, pi: VertexPartition, kind: QuotientKind) -> QuotientMatrix:
    """Quotient matrix with rows averaging the blocks of A(G) or Q(G)."""
    if kind not in ("adjacency", "signless-laplacian"):
        raise ValueError(f"unknown quotient kind {kind!r}")
    t = len(pi)
    sizes = pi.block_sizes()
    avg = block_average_degrees(G, pi)
    cross = cross_counts(G, pi)
    diag_factor = 2 if kind == "signless-laplacian" else 1
    entries = np.zeros((t, t), dtype=np.float64)
    for i in range(t):
        off_row = Fraction(0)
        for j in range(t):
            if i == j:
                continue
            frac = Fraction(cross[i][j], sizes[i])
            entries[i, j] = float(frac)
            off_row += frac
        entries[i, i] = float(diag_factor * avg[i] - off_row)
    return QuotientMatrix(
        kind=kind,
        block_sizes=tuple(sizes),
        entries=entries,
        cross=tuple(tuple(row) for row in cross),
        avg_degrees=tuple(avg),
    )


def quotient_eigenvalues(Qm: QuotientMatrix) -> np.ndarray:
    """Real spectrum of the quotient via the diag(sqrt(|V_i|)) similarity.

    The similarity sends entry (i, j) to e(V_i, V_j) / sqrt(|V_i| |V_j|),
    which is symmetric by construction, so the one symmetric solver applies.
    """
    t = Qm.order
    sym = np.zeros((t, t), dtype=np.float64)
    for i in range(t):
        sym[i, i] = Qm.entries[i, i]
        for j in range(i + 1, t):
            sym[i, j] = sym[j, i] = Qm.cross[i][j] / math.sqrt(
                Qm.block_sizes[i] * Qm.block_sizes[j]
            )
    return symmetric_eigenvalues(sym)


class InterlacingResult(NamedTuple):
    ok: bool
    violated_index: int | None  # 1-based position of the first failure


def check_interlacing(outer, inner, tol: float) -> InterlacingResult:
    """Does the t-sequence interlace the n-sequence within tol?

    Both sequences must be sorted non-increasing; position i (1-based)
    requires outer[i] + tol >= inner[i] >= outer[n-t+i] - tol.
    """
    outer = list(outer)
    inner = list(inner)
    n, t = len(outer), len(inner)
    if t > n:
        raise LengthMismatch(f"inner length {t} exceeds outer length {n}")
    for i in range(t):
        if not (outer[i] + tol >= inner[i] >= outer[n - t + i] - tol):
            return InterlacingResult(False, i + 1)
    return InterlacingResult(True, None)


def weyl_check(B: np.ndarray, C: np.ndarray, i: int, j: int, tol: float = 1e-8) -> bool:
    """Check the Weyl eigenvalue inequalities for B, C and B + C.

    With eigenvalues sorted non-increasing and 1-based indices:
    upper bound  eig_i(B) + eig_j(C) <= eig_{i+j-n}(B+C)  when i + j >= n + 1,
    lower bound  eig_i(B) + eig_j(C) >= eig_{i+j-1}(B+C)  when i + j <= n + 1;
    both apply when i + j = n + 1.
    """
    B = np.asarray(B, dtype=np.float64)
    C = np.asarray(C, dtype=np.float64)
    if B.shape != C.shape or B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise OrderMismatch(f"orders {B.shape} and {C.shape} do not match")
    n = B.shape[0]
    if not (1 <= i <= n and 1 <= j <= n):
        raise OrderMismatch(f"indices ({i}, {j}) outside 1..{n}")
    eb = symmetric_eigenvalues(B)
    ec = symmetric_eigenvalues(C)
    es = symmetric_eigenvalues(B + C)
    lhs = eb[i - 1] + ec[j - 1]
    ok = True
    if i + j >= n + 1:
        ok = ok and lhs <= es[i + j - n - 1] + tol
    if i + j <= n + 1:
        ok = ok and lhs >= es[i + j - 2] - tol
    return ok
