"""Corpus assembly, parallel condition sweeps, and report emission.

A corpus is a list of sources (graph6/sparse6 files, exhaustive labeled
enumeration, seeded random families) plus filters.  Sweeps evaluate every
requested (graph, condition, k) triple; because the catalog holds proven
theorems, any inconsistent verdict is emitted as a counterexample and fails
the run.  The search mode inverts the class filter and records conclusion
failures as findings instead.

Reports are single JSON documents written with sorted keys, byte-identical
across runs of the same spec and seed apart from the timestamp field.
"""

from __future__ import annotations

import csv
import datetime as _dt
import json
import math
import os
from dataclasses import dataclass, field
from multiprocessing import get_all_start_methods, get_context
from typing import Iterable, Iterator, Sequence

from . import __version__
from .codec import encode_auto, parse_graph6
from .errors import SpectralGateError, TooLarge, UndecidedMembership
from .generators import (
    ENUMERATION_CAP,
    connected_mask_chunk,
    gen_gnp,
    gen_random_multigraph,
    gen_random_regular,
    graph_from_edge_mask,
    spawn_seeds,
    vertex_pairs,
)
from .graphs import Multigraph, is_connected
from .theorems import (
    catalog,
    dual_structure_violations,
    evaluate,
    get_condition,
    hypothesis_prefilter,
    profile_graph,
)

THREADS_ENV = "SPECTRAL_GATE_THREADS"
RNG_NAME = "numpy PCG64 (seeded via SeedSequence; child generators by spawn index)"

_MASK_CHUNK = 1 << 18
_LINE_CHUNK = 512


def thread_count(threads: int | None = None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def parallel_chunk_map(worker, tasks: Sequence, threads: int | None = None) -> Iterator:
    """Apply `worker` to each task, fanning out to processes when asked.

    Results stream back in task order, so reductions over them are
    deterministic regardless of the worker count.
    """
    nthreads = thread_count(threads)
    if nthreads <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield worker(task)
        return
    method = "fork" if "fork" in get_all_start_methods() else None
    ctx = get_context(method)
    with ctx.Pool(processes=min(nthreads, len(tasks))) as pool:
        yield from pool.imap(worker, tasks, chunksize=1)


# ---------------------------------------------------------------------------
# Corpus configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusSpec:
    """Sources plus filters; mirrors the JSON config document."""

    sources: tuple[dict, ...]
    connected_only: bool = True
    min_degree: int = 0
    in_class_only: bool = False

    @classmethod
    def from_dict(cls, doc: dict) -> "CorpusSpec":
        filters = doc.get("filters", {})
        return cls(
            sources=tuple(doc.get("sources", ())),
            connected_only=bool(filters.get("connected_only", True)),
            min_degree=int(filters.get("min_degree", 0)),
            in_class_only=bool(filters.get("in_class_only", False)),
        )

    @classmethod
    def from_file(cls, path: str) -> "CorpusSpec":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "sources": list(self.sources),
            "filters": {
                "connected_only": self.connected_only,
                "min_degree": self.min_degree,
                "in_class_only": self.in_class_only,
            },
        }


def _materialize_random_source(kind: str, params: dict) -> list[str]:
    """Generate a seeded random family as encoded lines (deterministic)."""
    count = int(params["count"])
    seed = params["seed"]
    lines: list[str] = []
    for child in spawn_seeds(seed, count):
        if kind == "random_regular":
            g = gen_random_regular(int(params["n"]), int(params["d"]), child)
        elif kind == "gnp":
            g = gen_gnp(int(params["n"]), float(params["p"]), child)
        elif kind == "random_multigraph":
            g = gen_random_multigraph(
                int(params["n"]),
                int(params.get("max_mult", 3)),
                float(params.get("edge_factor", 2.0)),
                child,
            )
        else:
            raise ValueError(f"unknown random source kind {kind!r}")
        lines.append(encode_auto(g))
    return lines


def corpus_tasks(spec: CorpusSpec) -> list[tuple]:
    """Split the corpus into self-contained worker tasks.

    Task shapes:
      ("masks", source_idx, n, start, stop)
      ("lines", source_idx, ((item_idx, line), ...))
    """
    tasks: list[tuple] = []
    for src_idx, source in enumerate(spec.sources):
        if "file" in source:
            with open(source["file"], "r", encoding="utf-8") as fh:
                lines = [ln.strip() for ln in fh if ln.strip()]
            for base in range(0, len(lines), _LINE_CHUNK):
                chunk = tuple(
                    (base + i, ln) for i, ln in enumerate(lines[base : base + _LINE_CHUNK])
                )
                tasks.append(("lines", src_idx, chunk))
        elif "enumerate" in source:
            raw = source["enumerate"]
            n_max = int(raw["n_max"]) if isinstance(raw, dict) else int(raw)
            if n_max > ENUMERATION_CAP:
                raise TooLarge(f"enumeration capped at n={ENUMERATION_CAP}, got {n_max}")
            for n in range(2, n_max + 1):
                total = 1 << (n * (n - 1) // 2)
                for start in range(0, total, _MASK_CHUNK):
                    tasks.append(("masks", src_idx, n, start, min(start + _MASK_CHUNK, total)))
        elif "lines" in source:
            chunk = tuple((i, ln) for i, ln in enumerate(source["lines"]))
            tasks.append(("lines", src_idx, chunk))
        else:
            kinds = [k for k in ("random_regular", "gnp", "random_multigraph") if k in source]
            if len(kinds) != 1:
                raise ValueError(f"unrecognized source {source!r}")
            kind = kinds[0]
            lines = _materialize_random_source(kind, source[kind])
            for base in range(0, len(lines), _LINE_CHUNK):
                chunk = tuple(
                    (base + i, ln) for i, ln in enumerate(lines[base : base + _LINE_CHUNK])
                )
                tasks.append(("lines", src_idx, chunk))
    return tasks


def _task_items(task: tuple) -> Iterator[tuple[tuple[int, int, int], Multigraph | None, str | None]]:
    """Yield (ordinal, graph, parse_error); exactly one of the last two set."""
    if task[0] == "masks":
        _, src_idx, n, start, stop = task
        pairs = vertex_pairs(n)
        for mask in connected_mask_chunk(n, start, stop):
            yield (src_idx, n, int(mask)), graph_from_edge_mask(n, int(mask), pairs), None
    else:
        _, src_idx, chunk = task
        for item_idx, line in chunk:
            try:
                g = parse_graph6(line)
            except SpectralGateError as exc:
                yield (src_idx, 0, item_idx), None, str(exc)
                continue
            yield (src_idx, 0, item_idx), g, None


def iter_corpus(spec: CorpusSpec) -> Iterator[tuple[tuple[int, int, int], Multigraph]]:
    """Serial stream of (ordinal, graph) with filters applied.

    Parse failures raise; use run_sweep for error-tolerant batch runs.
    """
    for task in corpus_tasks(spec):
        for ordinal, g, err in _task_items(task):
            if err is not None:
                raise SpectralGateError(f"item {ordinal}: {err}")
            if _passes_filters(g, spec):
                yield ordinal, g


def _passes_filters(g: Multigraph, spec: CorpusSpec) -> bool:
    if g.n == 0:
        return False
    if min(g.degrees) < spec.min_degree:
        return False
    if spec.connected_only and not is_connected(g):
        return False
    return True


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------


@dataclass
class _Aggregate:
    evaluated: int = 0
    fired: int = 0
    consistent: int = 0
    boundary: int = 0
    undecided: int = 0
    min_fired_margin: float | None = None

    def merge(self, other: "_Aggregate") -> None:
        self.evaluated += other.evaluated
        self.fired += other.fired
        self.consistent += other.consistent
        self.boundary += other.boundary
        self.undecided += other.undecided
        if other.min_fired_margin is not None:
            if self.min_fired_margin is None or other.min_fired_margin < self.min_fired_margin:
                self.min_fired_margin = other.min_fired_margin

    def to_dict(self) -> dict:
        return {
            "evaluated": self.evaluated,
            "fired": self.fired,
            "consistent": self.consistent,
            "boundary": self.boundary,
            "undecided": self.undecided,
            "min_fired_margin": self.min_fired_margin,
        }


@dataclass
class _ChunkOutcome:
    records: list = field(default_factory=list)
    aggregates: dict = field(default_factory=dict)  # (condition_id, k) -> _Aggregate
    counterexamples: list = field(default_factory=list)
    findings: list = field(default_factory=list)
    fired: list = field(default_factory=list)  # search mode: every firing verdict
    boundary_failures: list = field(default_factory=list)
    graphs: int = 0
    filtered: int = 0
    skipped_membership: int = 0
    parse_errors: list = field(default_factory=list)


@dataclass(frozen=True)
class _SweepJob:
    spec: CorpusSpec
    condition_ids: tuple[str, ...]
    k_set: tuple[int, ...]
    mode: str  # "sweep" | "search-outside-g"
    keep_records: bool = True


def _record_for(profile, ordinal) -> dict:
    summary = profile.summary
    return {
        "ordinal": list(ordinal),
        "graph": profile.graph_id,
        "n": profile.n,
        "m": profile.m,
        "delta": profile.delta,
        "Delta": profile.Delta,
        "kappa": profile.kappa,
        "tau": None if profile.tau == math.inf else profile.tau,
        "lambda3": summary.lam[2] if profile.n >= 3 else None,
        "q2": summary.q[1] if profile.n >= 2 else None,
        "q3": summary.q[2] if profile.n >= 3 else None,
        "mu_n_minus_2": summary.mu[profile.n - 3] if profile.n >= 3 else None,
        "in_class": profile.in_class,
    }


def _run_task(args: tuple) -> _ChunkOutcome:
    job, task = args
    conditions = [get_condition(cid) for cid in job.condition_ids]
    searching = job.mode == "search-outside-g"
    out = _ChunkOutcome()
    for ordinal, g, parse_error in _task_items(task):
        if parse_error is not None:
            out.parse_errors.append({"ordinal": list(ordinal), "error": parse_error})
            continue
        if not _passes_filters(g, job.spec):
            out.filtered += 1
            continue
        try:
            profile = profile_graph(g)
        except SpectralGateError as exc:
            out.parse_errors.append({"ordinal": list(ordinal), "error": str(exc)})
            continue
        if searching or job.spec.in_class_only:
            if profile.in_class is None:
                out.skipped_membership += 1
                continue
            if searching and profile.in_class:
                out.filtered += 1
                continue
            if job.spec.in_class_only and not profile.in_class:
                out.filtered += 1
                continue
        out.graphs += 1
        if job.keep_records:
            out.records.append(_record_for(profile, ordinal))
        for spec_entry in conditions:
            for k in job.k_set:
                key = (spec_entry.id, k)
                agg = out.aggregates.setdefault(key, _Aggregate())
                agg.evaluated += 1
                if not hypothesis_prefilter(profile, spec_entry, k):
                    continue  # cannot fire and cannot be a boundary case
                try:
                    verdict = evaluate(
                        None, spec_entry, k, profile=profile, ignore_class=searching
                    )
                except UndecidedMembership:
                    agg.undecided += 1
                    continue
                if verdict.boundary:
                    agg.boundary += 1
                    if not verdict.conclusion_holds:
                        item = verdict.as_dict()
                        item["ordinal"] = list(ordinal)
                        out.boundary_failures.append(item)
                if verdict.hypothesis_holds:
                    agg.fired += 1
                    if verdict.consistent:
                        agg.consistent += 1
                    slack = abs(verdict.margin) if verdict.margin is not None else None
                    if slack is not None and (
                        agg.min_fired_margin is None or slack < agg.min_fired_margin
                    ):
                        agg.min_fired_margin = slack
                    item = verdict.as_dict()
                    item["ordinal"] = list(ordinal)
                    if searching:
                        out.fired.append(item)
                        if not verdict.conclusion_holds:
                            out.findings.append(item)
                    elif not verdict.conclusion_holds:
                        out.counterexamples.append(item)
                    elif spec_entry.conclusion == "tau":
                        # derived structural checks on the packing dual witness
                        for issue in dual_structure_violations(
                            g, profile.tau_dual, spec_entry, k
                        ):
                            out.counterexamples.append(
                                {
                                    "ordinal": list(ordinal),
                                    "graph": profile.graph_id,
                                    "condition": spec_entry.id,
                                    "k": k,
                                    "structural": issue,
                                }
                            )
    return out


@dataclass
class Report:
    """One sweep or search run, serializable to JSON and CSV."""

    mode: str
    corpus: dict
    conditions: list[str]
    k_set: list[int]
    counts: dict
    aggregates: dict
    never_fired: list[str]
    records: list[dict]
    hypothesis_fired: list[dict]
    boundary_failures: list[dict]  # boundary margins whose conclusion fails
    counterexamples: list[dict]
    findings: list[dict]
    errors: list[dict]
    generated_at: str

    @property
    def ok(self) -> bool:
        return not self.counterexamples and not self.errors

    def to_dict(self) -> dict:
        return {
            "tool": "spectral-gate",
            "version": __version__,
            "mode": self.mode,
            "generated_at": self.generated_at,
            "rng": RNG_NAME,
            "corpus": self.corpus,
            "conditions": self.conditions,
            "k_set": self.k_set,
            "counts": self.counts,
            "aggregates": self.aggregates,
            "never_fired": self.never_fired,
            "records": self.records,
            "hypothesis_fired": self.hypothesis_fired,
            "boundary_failures": self.boundary_failures,
            "counterexamples": self.counterexamples,
            "findings": self.findings,
            "errors": self.errors,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=False) + "\n"

    def write_json(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())

    def write_csv(self, path: str) -> None:
        columns = [
            "graph", "n", "m", "delta", "Delta", "kappa", "tau",
            "lambda3", "q2", "q3", "mu_n_minus_2", "in_class",
        ]
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=columns, extrasaction="ignore")
            writer.writeheader()
            for record in self.records:
                writer.writerow(record)


def _run_job(job: _SweepJob, threads: int | None) -> Report:
    tasks = [(job, task) for task in corpus_tasks(job.spec)]
    total = _ChunkOutcome()
    for outcome in parallel_chunk_map(_run_task, tasks, threads):
        total.records.extend(outcome.records)
        total.counterexamples.extend(outcome.counterexamples)
        total.findings.extend(outcome.findings)
        total.fired.extend(outcome.fired)
        total.boundary_failures.extend(outcome.boundary_failures)
        total.parse_errors.extend(outcome.parse_errors)
        total.graphs += outcome.graphs
        total.filtered += outcome.filtered
        total.skipped_membership += outcome.skipped_membership
        for key, agg in outcome.aggregates.items():
            total.aggregates.setdefault(key, _Aggregate()).merge(agg)

    for bucket in (total.records, total.counterexamples, total.findings,
                   total.fired, total.boundary_failures, total.parse_errors):
        bucket.sort(key=lambda r: r["ordinal"])

    aggregates = {}
    for cid in job.condition_ids:
        per_k = {
            str(k): total.aggregates[(c, k)].to_dict()
            for c, k in sorted(total.aggregates)
            if c == cid
        }
        if per_k:
            aggregates[cid] = per_k
    never_fired = sorted(
        cid
        for cid in job.condition_ids
        if sum(agg.fired for key, agg in total.aggregates.items() if key[0] == cid) == 0
    )
    counts = {
        "graphs_evaluated": total.graphs,
        "graphs_filtered_out": total.filtered,
        "skipped_membership_undecided": total.skipped_membership,
        "hypothesis_fired": len(total.fired),
        "boundary_failures": len(total.boundary_failures),
        "counterexamples": len(total.counterexamples),
        "findings": len(total.findings),
        "parse_errors": len(total.parse_errors),
    }
    return Report(
        mode=job.mode,
        corpus=job.spec.to_dict(),
        conditions=list(job.condition_ids),
        k_set=list(job.k_set),
        counts=counts,
        aggregates=aggregates,
        never_fired=never_fired,
        records=total.records,
        hypothesis_fired=total.fired,
        boundary_failures=total.boundary_failures,
        counterexamples=total.counterexamples,
        findings=total.findings,
        errors=total.parse_errors,
        generated_at=_dt.datetime.now(_dt.timezone.utc).isoformat(),
    )


def _normalize_conditions(conditions: Iterable[str] | None) -> tuple[str, ...]:
    if conditions is None:
        return tuple(spec.id for spec in catalog())
    ids = tuple(conditions)
    for cid in ids:
        get_condition(cid)  # raises on unknown ids
    return ids


def run_sweep(
    spec: CorpusSpec,
    conditions: Iterable[str] | None = None,
    k_set: Iterable[int] = (2, 3),
    threads: int | None = None,
    keep_records: bool = True,
) -> Report:
    """Evaluate every (graph, condition, k); counterexamples fail the run."""
    job = _SweepJob(
        spec=spec,
        condition_ids=_normalize_conditions(conditions),
        k_set=tuple(k_set),
        mode="sweep",
        keep_records=keep_records,
    )
    return _run_job(job, threads)


def search_outside_g(
    spec: CorpusSpec,
    conditions: Iterable[str] | None = None,
    k_set: Iterable[int] = (2,),
    threads: int | None = None,
    keep_records: bool = True,
) -> Report:
    """Probe the conditions on graphs outside the two-minimum-cut class.

    Hypotheses are evaluated without the class requirement; graphs inside
    the class (or undecidable ones) are skipped.  Every firing hypothesis is
    reported; conclusion failures are findings, not counterexamples, and do
    not fail the run.
    """
    job = _SweepJob(
        spec=spec,
        condition_ids=_normalize_conditions(conditions),
        k_set=tuple(k_set),
        mode="search-outside-g",
        keep_records=keep_records,
    )
    return _run_job(job, threads)
