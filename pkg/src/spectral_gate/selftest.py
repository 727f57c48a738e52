"""Invariant battery runnable from the CLI and reused by the test suite.

Each check returns (name, ok, detail).  The heavy exhaustive scans are
chunked and parallel; sizes here are chosen so the full battery stays under
a couple of minutes on a small desktop.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .codec import encode_auto, parse_graph6
from .connectivity import (
    edge_connectivity,
    g_class_membership,
    min_cut_oracle,
    validate_witness,
)
from .corpus import CorpusSpec, parallel_chunk_map, run_sweep
from .generators import (
    complete_graph,
    cycle_graph,
    gen_gnp,
    gen_random_multigraph,
    gen_random_regular,
    connected_mask_chunk,
    graph_from_edge_mask,
    pappus_graph,
    petersen_graph,
    spawn_seeds,
    star_graph,
    vertex_pairs,
)
from .graphs import Multigraph, VertexPartition, degree_stats
from .spectra import check_interlacing, quotient_eigenvalues, quotient_matrix, spectral_summary
from .theorems import get_condition, lemma_arith_check, threshold_exact
from .treepacking import tau, tau_partition_oracle, validate_packing


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    elapsed: float


# ---------------------------------------------------------------------------
# Closed-form spectra
# ---------------------------------------------------------------------------


def closed_form_spectrum_errors(n_max: int = 30) -> float:
    """Worst absolute eigenvalue error over K_n, C_n, stars, and Petersen."""
    worst = 0.0
    for n in range(2, n_max + 1):
        lam = spectral_summary(complete_graph(n)).lam
        expect = [n - 1.0] + [-1.0] * (n - 1)
        worst = max(worst, max(abs(a - b) for a, b in zip(lam, expect)))
    for n in range(3, n_max + 1):
        lam = spectral_summary(cycle_graph(n)).lam
        expect = sorted((2.0 * math.cos(2.0 * math.pi * k / n) for k in range(n)), reverse=True)
        worst = max(worst, max(abs(a - b) for a, b in zip(lam, expect)))
    for leaves in range(2, n_max + 1):
        lam = spectral_summary(star_graph(leaves)).lam
        root = math.sqrt(leaves)
        expect = [root] + [0.0] * (leaves - 1) + [-root]
        worst = max(worst, max(abs(a - b) for a, b in zip(lam, expect)))
    lam = spectral_summary(petersen_graph()).lam
    expect = [3.0] + [1.0] * 5 + [-2.0] * 4
    worst = max(worst, max(abs(a - b) for a, b in zip(lam, expect)))
    return worst


# ---------------------------------------------------------------------------
# Oracle equivalence scans (chunked, parallel)
# ---------------------------------------------------------------------------


def _oracle_scan_task(task: tuple) -> dict:
    n, start, stop, check_tau = task
    pairs = vertex_pairs(n)
    checked = 0
    mismatches: list[str] = []
    for mask in connected_mask_chunk(n, start, stop):
        g = graph_from_edge_mask(n, int(mask), pairs)
        checked += 1
        kappa = edge_connectivity(g).value
        brute = min_cut_oracle(g)
        if kappa != brute:
            mismatches.append(f"cut n={n} mask={int(mask)}: {kappa} != {brute}")
            continue
        if check_tau:
            cert = tau(g)  # asserts against the partition oracle for n <= 10
            if not validate_packing(g, cert):
                mismatches.append(f"packing certificate invalid n={n} mask={int(mask)}")
    return {"checked": checked, "mismatches": mismatches}


def oracle_equivalence_scan(
    n_values=(2, 3, 4, 5), check_tau: bool = True, threads: int | None = None
) -> tuple[int, list[str]]:
    """Exhaustively compare the cut and packing routes on connected graphs."""
    tasks = []
    step = 1 << 18
    for n in n_values:
        total = 1 << (n * (n - 1) // 2)
        for start in range(0, total, step):
            tasks.append((n, start, min(start + step, total), check_tau))
    checked = 0
    mismatches: list[str] = []
    for result in parallel_chunk_map(_oracle_scan_task, tasks, threads):
        checked += result["checked"]
        mismatches.extend(result["mismatches"])
    return checked, mismatches


def random_oracle_trials(
    cut_trials: int = 100,
    packing_trials: int = 60,
    seed: int = 20260810,
    n_cut: int = 20,
    n_pack: int = 10,
) -> list[str]:
    """Randomized cut / packing cross-checks on larger instances."""
    problems: list[str] = []
    for i, child in enumerate(spawn_seeds(seed, cut_trials)):
        rng = np.random.Generator(np.random.PCG64(child))
        n = int(rng.integers(4, n_cut + 1))
        g = gen_gnp(n, float(rng.uniform(0.15, 0.8)), child.spawn(1)[0])
        if g.n > 24 or g.edge_count == 0:
            continue
        kappa = edge_connectivity(g).value
        brute = min_cut_oracle(g)
        if kappa != brute:
            problems.append(f"cut trial {i}: {kappa} != {brute} on {encode_auto(g)}")
    for i, child in enumerate(spawn_seeds(seed + 1, packing_trials)):
        rng = np.random.Generator(np.random.PCG64(child))
        n = int(rng.integers(3, n_pack + 1))
        g = gen_random_multigraph(n, 3, float(rng.uniform(1.0, 3.0)), child.spawn(1)[0])
        cert = tau(g)
        value, witness = tau_partition_oracle(g)
        if cert.tau != value:
            problems.append(f"packing trial {i}: {cert.tau} != {value} on {encode_auto(g)}")
        if not validate_packing(g, cert):
            problems.append(f"packing trial {i}: invalid certificate on {encode_auto(g)}")
        if witness.bound != value:
            problems.append(f"packing trial {i}: witness bound {witness.bound} != {value}")
    return problems


# ---------------------------------------------------------------------------
# Spectral lemma battery
# ---------------------------------------------------------------------------


def random_graph_partition(seed) -> tuple[Multigraph, VertexPartition]:
    rng = np.random.Generator(np.random.PCG64(seed))
    n = int(rng.integers(3, 13))
    if rng.random() < 0.3:
        g = gen_random_multigraph(n, 3, float(rng.uniform(1.0, 2.5)), seed)
    else:
        g = gen_gnp(n, float(rng.uniform(0.25, 0.9)), seed)
    t = int(rng.integers(2, min(n, 5) + 1))
    assignment = [int(rng.integers(0, t)) for _ in range(n)]
    for b in range(t):  # keep every block non-empty
        if b not in assignment:
            assignment[int(rng.integers(0, n))] = b
    blocks = [[v for v in range(n) if assignment[v] == b] for b in sorted(set(assignment))]
    return g, VertexPartition(n, blocks)


def interlacing_trials(count: int = 200, seed: int = 77, tol: float = 1e-7) -> list[str]:
    problems: list[str] = []
    for i, child in enumerate(spawn_seeds(seed, count)):
        g, pi = random_graph_partition(child)
        summary = spectral_summary(g)
        for kind, outer in (("adjacency", summary.lam), ("signless-laplacian", summary.q)):
            qm = quotient_matrix(g, pi, kind)
            inner = quotient_eigenvalues(qm)
            res = check_interlacing(outer, inner, tol)
            if not res.ok:
                problems.append(f"trial {i} kind={kind}: violated at {res.violated_index}")
            trace = sum(qm.entries[j, j] for j in range(qm.order))
            if abs(sum(inner) - trace) > 1e-9 * max(1.0, abs(trace)):
                problems.append(f"trial {i} kind={kind}: trace mismatch")
            # spectral radius of the quotient sits between the extreme block averages
            avgs = [float(x) for x in qm.avg_degrees]
            factor = 2.0 if kind == "signless-laplacian" else 1.0
            lo, hi = factor * min(avgs), factor * max(avgs)
            if not (lo - 1e-8 <= inner[0] <= hi + 1e-8):
                problems.append(f"trial {i} kind={kind}: radius {inner[0]} outside [{lo}, {hi}]")
    return problems


def eigenvalue_sum_bounds(g: Multigraph) -> list[str]:
    """Degree vs spectrum inequalities that hold on every graph (n >= 3)."""
    s = spectral_summary(g)
    problems = []
    tol = 1e-8
    if not (2 * s.delta - tol <= s.q[0] <= 2 * s.Delta + tol):
        problems.append(f"q1 {s.q[0]} outside [2 delta, 2 Delta] on {encode_auto(g)}")
    if s.n >= 3:
        if s.mu[s.n - 2] + s.lam[1] > s.Delta + tol:
            problems.append(f"mu_(n-1)+lambda_2 > Delta on {encode_auto(g)}")
        if s.delta + s.lam[1] > s.q[1] + tol:
            problems.append(f"delta+lambda_2 > q_2 on {encode_auto(g)}")
        if s.mu[s.n - 3] + s.lam[2] > s.Delta + tol:
            problems.append(f"mu_(n-2)+lambda_3 > Delta on {encode_auto(g)}")
        if s.delta + s.lam[2] > s.q[2] + tol:
            problems.append(f"delta+lambda_3 > q_3 on {encode_auto(g)}")
    return problems


def subset_size_lemma_violations(g: Multigraph) -> list[str]:
    """Small-boundary subsets must be large: |U| >= delta+1 for simple
    connected graphs, |U| >= max(ceil((delta+1)/mult), 2) for multigraphs,
    whenever the boundary of U is at most delta-1.  Checked by enumeration.
    """
    from . import _kernels

    problems = []
    n = g.n
    if n < 2 or n > 16:
        return problems
    delta = min(g.degrees)
    eu, ev, ew = g.edge_arrays()
    cuts = _kernels.boundary_per_mask(n, eu, ev, ew)
    if g.simple():
        floor_size = delta + 1
    else:
        floor_size = max(-((delta + 1) // -g.multiplicity()), 2)
    for mask in range(1, (1 << n) - 1):
        if cuts[mask] <= delta - 1:
            size = bin(mask).count("1")
            if size < floor_size:
                problems.append(
                    f"subset {mask:#x} of {encode_auto(g)}: boundary {cuts[mask]}, size {size}"
                )
    return problems


# ---------------------------------------------------------------------------
# Battery
# ---------------------------------------------------------------------------


def run_battery(quick: bool = False, threads: int | None = None) -> list[CheckResult]:
    results: list[CheckResult] = []

    def record(name: str, fn) -> None:
        t0 = time.time()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail, time.time() - t0))

    def check_spectra():
        worst = closed_form_spectrum_errors(16 if quick else 30)
        return worst < 1e-9, f"max closed-form error {worst:.2e}"

    def check_oracles():
        ns = (2, 3, 4, 5) if quick else (2, 3, 4, 5, 6)
        checked, mismatches = oracle_equivalence_scan(ns, check_tau=True, threads=threads)
        return not mismatches, f"{checked} graphs exhaustively cross-checked" + (
            f"; first issue: {mismatches[0]}" if mismatches else ""
        )

    def check_random_oracles():
        problems = random_oracle_trials(40 if quick else 120, 30 if quick else 80)
        return not problems, problems[0] if problems else "randomized cut/packing agree"

    def check_interlacing_battery():
        problems = interlacing_trials(60 if quick else 250)
        return not problems, problems[0] if problems else "interlacing and trace identities hold"

    def check_degree_spectrum_bounds():
        problems: list[str] = []
        for child in spawn_seeds(424242, 40 if quick else 150):
            rng = np.random.Generator(np.random.PCG64(child))
            n = int(rng.integers(3, 14))
            g = gen_gnp(n, float(rng.uniform(0.2, 0.9)), child.spawn(1)[0])
            problems.extend(eigenvalue_sum_bounds(g))
            problems.extend(subset_size_lemma_violations(g))
        for child in spawn_seeds(515151, 20 if quick else 60):
            g = gen_random_multigraph(7, 3, 2.0, child)
            problems.extend(eigenvalue_sum_bounds(g))
            problems.extend(subset_size_lemma_violations(g))
        return not problems, problems[0] if problems else "degree/spectrum lemmas hold"

    def check_codec():
        problems = []
        for child in spawn_seeds(99, 200 if quick else 10_000):
            rng = np.random.Generator(np.random.PCG64(child))
            n = int(rng.integers(1, 24))
            if rng.random() < 0.5:
                g = gen_gnp(n, float(rng.random()), child.spawn(1)[0])
            else:
                g = gen_random_multigraph(max(n, 2), 4, float(rng.uniform(0.8, 3.0)), child.spawn(1)[0])
            if parse_graph6(encode_auto(g)) != g:
                problems.append(encode_auto(g))
        return not problems, problems[0] if problems else "round trips exact"

    def check_witness_numbers():
        g = pappus_graph()
        s = spectral_summary(g)
        ok = (
            abs(s.lam[2] - math.sqrt(3)) < 1e-6
            and abs(s.q[2] - (3 + math.sqrt(3))) < 1e-6
            and edge_connectivity(g).value == 3
            and g_class_membership(g) is not None
            and threshold_exact(get_condition("THM-3.1"), 3, 3, 2) == Fraction(2)
            and threshold_exact(get_condition("THM-3.3"), 3, 3, 2) == Fraction(5)
        )
        w = g_class_membership(g)
        ok = ok and w is not None and validate_witness(g, w)
        return ok, "cubic witness graph reproduces the reported spectral values"

    def check_consistency_sweep():
        spec = CorpusSpec(sources=({"enumerate": 5},))
        report = run_sweep(spec, k_set=(2, 3), threads=threads, keep_records=False)
        return (
            report.ok,
            f"{report.counts['graphs_evaluated']} graphs, "
            f"{report.counts['counterexamples']} counterexamples",
        )

    def check_lemma_arith():
        top = 30 if quick else 100
        ok = all(
            lemma_arith_check("LEM-2.11", b, k) for b in range(3, top + 1) for k in range(1, top + 1)
        ) and all(
            lemma_arith_check("LEM-2.12", b, k) for b in range(2, top + 1) for k in range(1, top + 1)
        )
        return ok, f"rational inequalities verified for parameters up to {top}"

    def check_degree_stats():
        g = gen_random_regular(12, 3, 4)
        st = degree_stats(g)
        return st == (3, 3, 3.0), f"regular generator degrees {st}"

    record("closed-form spectra", check_spectra)
    record("cut and packing oracles (exhaustive)", check_oracles)
    record("cut and packing oracles (randomized)", check_random_oracles)
    record("quotient interlacing", check_interlacing_battery)
    record("degree/spectrum lemmas", check_degree_spectrum_bounds)
    record("graph6/sparse6 round trip", check_codec)
    record("witness graph numbers", check_witness_numbers)
    record("consistency sweep (n <= 5)", check_consistency_sweep)
    record("auxiliary rational inequalities", check_lemma_arith)
    record("regular generator", check_degree_stats)
    return results
