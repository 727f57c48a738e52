"""The catalog of eigenvalue-threshold sufficient conditions.

Each entry pairs a hypothesis (degree floor, optional regularity, optional
two-minimum-cut class membership, and a strict spectral inequality) with a
conclusion (a lower bound on edge connectivity or on the spanning-tree
packing number).  Thresholds are linear in the minimum and maximum degree
plus a rational correction term whose denominator is either delta + 1
(simple graphs) or the multiplicity-adjusted l = max(ceil((delta+1)/mult), 2)
(multigraphs).  All threshold arithmetic is exact.

The conditions are proven theorems: on any graph meeting a hypothesis the
conclusion must hold, so a verdict with consistent=False is either an
implementation bug or a genuine counterexample and is surfaced loudly by the
corpus engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .connectivity import edge_connectivity, g_class_membership
from .errors import DomainError, TooSmall, UndecidedMembership
from .graphs import Multigraph
from .spectra import SpectralSummary, spectral_summary
from .treepacking import tau as packing_tau

STRICTNESS_TOL = 1e-8

SPECTRAL_INDEX = {
    "lambda3": ("lam", 3),
    "q2": ("q", 2),
    "q3": ("q", 3),
    "mu_n_minus_2": ("mu", -2),  # third smallest Laplacian eigenvalue
}


@dataclass(frozen=True)
class ConditionSpec:
    """One sufficient condition: hypothesis shape plus conclusion.

    threshold = c_delta * delta + c_Delta * Delta + (num_k * k + num_c) / D
    where D is delta + 1 or l.  The comparison direction is '<' for the
    adjacency / signless-Laplacian entries and '>' for the Laplacian ones.
    """

    id: str
    spectral_quantity: str  # key of SPECTRAL_INDEX
    comparison: str  # '<' or '>'
    c_delta: int
    c_Delta: int
    num_k: int
    num_c: int
    denominator: str  # 'delta+1' or 'l'
    degree_requirement: str  # 'delta>=2k-1' | 'delta>=2k' | 'delta>=k'
    regular: bool
    requires_class: bool
    graph_kind: str  # 'simple' | 'multigraph'
    conclusion: str  # 'kappa' | 'tau'

    def degree_floor(self, k: int) -> int:
        if self.degree_requirement == "delta>=2k-1":
            return 2 * k - 1
        if self.degree_requirement == "delta>=2k":
            return 2 * k
        if self.degree_requirement == "delta>=k":
            return k
        raise ValueError(f"unknown degree requirement {self.degree_requirement!r}")


def _spec(
    id: str,
    quantity: str,
    comparison: str,
    c_delta: int,
    c_Delta: int,
    num_k: int,
    num_c: int,
    *,
    denom: str = "delta+1",
    degree: str,
    regular: bool = False,
    in_class: bool = True,
    kind: str = "simple",
    concludes: str,
) -> ConditionSpec:
    return ConditionSpec(
        id=id,
        spectral_quantity=quantity,
        comparison=comparison,
        c_delta=c_delta,
        c_Delta=c_Delta,
        num_k=num_k,
        num_c=num_c,
        denominator=denom,
        degree_requirement=degree,
        regular=regular,
        requires_class=in_class,
        graph_kind=kind,
        conclusion=concludes,
    )


@lru_cache(maxsize=1)
def catalog() -> tuple[ConditionSpec, ...]:
    """The closed catalog: 26 condition entries."""
    entries = [
        # third largest adjacency / signless-Laplacian eigenvalue vs kappa'
        _spec("THM-3.1", "lambda3", "<", 2, -1, -4, 4, degree="delta>=2k-1", concludes="kappa"),
        _spec("COR-3.2", "lambda3", "<", 1, 0, -4, 4, degree="delta>=2k-1", regular=True, concludes="kappa"),
        _spec("THM-3.3", "q3", "<", 4, -2, -4, 4, degree="delta>=2k-1", concludes="kappa"),
        _spec("COR-3.4", "q3", "<", 2, 0, -4, 4, degree="delta>=2k-1", regular=True, concludes="kappa"),
        _spec("THM-3.5", "q2", "<", 2, 0, -2, 2, degree="delta>=k", in_class=False, concludes="kappa"),
        _spec("COR-3.6", "q2", "<", 2, 0, -2, 2, degree="delta>=k", regular=True, in_class=False, concludes="kappa"),
        # the same quantities vs the packing number
        _spec("THM-4.2", "lambda3", "<", 2, -1, -6, 2, degree="delta>=2k", concludes="tau"),
        _spec("COR-4.3", "lambda3", "<", 1, 0, -6, 2, degree="delta>=2k", regular=True, concludes="tau"),
        _spec("THM-4.5", "q3", "<", 4, -2, -6, 2, degree="delta>=2k", concludes="tau"),
        _spec("COR-4.6", "q3", "<", 2, 0, -6, 2, degree="delta>=2k", regular=True, concludes="tau"),
        _spec("THM-4.11", "q2", "<", 2, 0, -3, 1, degree="delta>=2k", in_class=False, concludes="tau"),
        _spec("COR-4.12", "q2", "<", 2, 0, -3, 1, degree="delta>=2k", regular=True, in_class=False, concludes="tau"),
        # third smallest Laplacian eigenvalue and mixed variants
        _spec("THM-5.1i", "mu_n_minus_2", ">", -2, 2, 4, -4, degree="delta>=2k-1", concludes="kappa"),
        _spec("THM-5.1ii", "q3", "<", 3, -1, -4, 4, degree="delta>=2k-1", concludes="kappa"),
        _spec("THM-5.2i", "mu_n_minus_2", ">", -2, 2, 6, -2, degree="delta>=2k", concludes="tau"),
        _spec("THM-5.2ii", "q3", "<", 3, -1, -6, 2, degree="delta>=2k", concludes="tau"),
        _spec("THM-5.3i", "mu_n_minus_2", ">", -3, 3, 4, -4, degree="delta>=2k-1", concludes="kappa"),
        _spec("THM-5.3ii", "lambda3", "<", 3, -2, -4, 4, degree="delta>=2k-1", concludes="kappa"),
        _spec("THM-5.4i", "mu_n_minus_2", ">", -3, 3, 6, -2, degree="delta>=2k", concludes="tau"),
        _spec("THM-5.4ii", "lambda3", "<", 3, -2, -6, 2, degree="delta>=2k", concludes="tau"),
        # multigraph versions; denominator l = max(ceil((delta+1)/mult), 2)
        _spec("THM-6.1", "lambda3", "<", 2, -1, -4, 4, denom="l", degree="delta>=2k-1", kind="multigraph", concludes="kappa"),
        _spec("THM-6.3", "lambda3", "<", 2, -1, -6, 2, denom="l", degree="delta>=2k", kind="multigraph", concludes="tau"),
        _spec("COR-6.4/6.5", "q3", "<", 3, -1, -4, 4, denom="l", degree="delta>=2k-1", kind="multigraph", concludes="kappa"),
        _spec("THM-6.6", "q3", "<", 4, -2, -4, 4, denom="l", degree="delta>=2k-1", kind="multigraph", concludes="kappa"),
        _spec("THM-6.8", "q3", "<", 4, -2, -6, 2, denom="l", degree="delta>=2k", kind="multigraph", concludes="tau"),
        _spec("COR-6.9/6.10", "lambda3", "<", 3, -2, -4, 4, denom="l", degree="delta>=2k-1", kind="multigraph", concludes="kappa"),
    ]
    return tuple(entries)


def get_condition(condition_id: str) -> ConditionSpec:
    for spec in catalog():
        if spec.id == condition_id:
            return spec
    raise DomainError(
        f"unknown condition id {condition_id!r}; known ids: "
        + ", ".join(s.id for s in catalog())
    )


def multiplicity_l(delta: int, mult: int) -> int:
    """l = max(ceil((delta + 1) / mult), 2)."""
    return max(-((delta + 1) // -mult), 2)


@lru_cache(maxsize=1 << 16)
def threshold_exact(
    spec: ConditionSpec,
    delta: int,
    Delta: int,
    k: int,
    l: int | None = None,
    *,
    enforce_degree: bool = True,
) -> Fraction:
    """Exact rational threshold of the condition's spectral inequality."""
    if delta < 1 or k < 2:
        raise DomainError(f"threshold needs delta >= 1 and k >= 2, got ({delta}, {k})")
    if spec.denominator == "l":
        if l is None:
            raise DomainError(f"{spec.id} needs the multiplicity-adjusted l")
        if l < 2:
            raise DomainError(f"l must be >= 2, got {l}")
        denom = l
    else:
        denom = delta + 1
    if enforce_degree:
        if delta < spec.degree_floor(k):
            raise DomainError(
                f"{spec.id} requires {spec.degree_requirement} (delta={delta}, k={k})"
            )
        if spec.regular and delta != Delta:
            raise DomainError(f"{spec.id} requires a regular graph")
    return (
        spec.c_delta * Fraction(delta)
        + spec.c_Delta * Fraction(Delta)
        + Fraction(spec.num_k * k + spec.num_c, denom)
    )


def threshold(
    spec: ConditionSpec,
    delta: int,
    Delta: int,
    k: int,
    l: int | None = None,
    *,
    enforce_degree: bool = True,
) -> float:
    return float(threshold_exact(spec, delta, Delta, k, l, enforce_degree=enforce_degree))


@dataclass(frozen=True)
class GraphProfile:
    """Everything evaluate() needs about one graph, computed once."""

    graph_id: str
    n: int
    m: int
    delta: int
    Delta: int
    simple: bool
    multiplicity: int
    summary: SpectralSummary
    kappa: int
    tau: int | float
    tau_dual: object | None  # PartitionWitness when n <= 10
    in_class: bool | None  # None = undecided at this size


def profile_graph(G: Multigraph, graph_id: str = "") -> GraphProfile:
    from .codec import encode_auto  # local import to avoid a cycle at import time

    summary = spectral_summary(G)
    kappa = edge_connectivity(G).value if G.n >= 2 else 0
    cert = packing_tau(G)
    try:
        in_class: bool | None = g_class_membership(G) is not None
    except UndecidedMembership:
        in_class = None
    except TooSmall:
        in_class = False
    return GraphProfile(
        graph_id=graph_id or encode_auto(G),
        n=G.n,
        m=G.edge_count,
        delta=min(G.degrees),
        Delta=max(G.degrees),
        simple=G.simple(),
        multiplicity=G.multiplicity(),
        summary=summary,
        kappa=kappa,
        tau=cert.tau,
        tau_dual=cert.dual,
        in_class=in_class,
    )


@dataclass(frozen=True)
class ConditionVerdict:
    """One condition evaluated on one graph, with all the intermediates."""

    graph_id: str
    condition_id: str
    k: int
    delta: int
    Delta: int
    l: int
    spectral_value: float | None
    threshold: float
    margin: float | None  # threshold - spectral_value
    boundary: bool  # margin inside the tolerance band, all other parts holding
    hypothesis_holds: bool
    conclusion_holds: bool
    consistent: bool

    def as_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "condition": self.condition_id,
            "k": self.k,
            "delta": self.delta,
            "Delta": self.Delta,
            "l": self.l,
            "spectral_value": self.spectral_value,
            "threshold": self.threshold,
            "margin": self.margin,
            "boundary": self.boundary,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "consistent": self.consistent,
        }


def _spectral_value(summary: SpectralSummary, quantity: str) -> float | None:
    attr, idx = SPECTRAL_INDEX[quantity]
    seq = getattr(summary, attr)
    pos = idx - 1 if idx > 0 else len(seq) + idx - 1  # mu_{n-2} sits at n-3
    if pos < 0 or pos >= len(seq):
        return None
    return seq[pos]


def hypothesis_prefilter(p: GraphProfile, spec: ConditionSpec, k: int) -> bool:
    """Cheap reject: can the non-spectral hypothesis parts possibly hold?

    False guarantees evaluate() would return neither fired nor boundary.
    """
    if p.delta < spec.degree_floor(k):
        return False
    if spec.regular and p.delta != p.Delta:
        return False
    if spec.graph_kind == "simple" and not p.simple:
        return False
    return _spectral_value(p.summary, spec.spectral_quantity) is not None


def evaluate(
    G: Multigraph | None,
    spec: ConditionSpec,
    k: int,
    *,
    profile: GraphProfile | None = None,
    ignore_class: bool = False,
) -> ConditionVerdict:
    """Evaluate hypothesis and conclusion of one condition on one graph.

    The spectral inequality is strict: a margin inside the tolerance band
    never fires the hypothesis; when every other hypothesis part holds such
    a margin is flagged as a boundary case instead of being asserted either
    way.  Raises UndecidedMembership when class membership is needed but
    undecidable at this size.
    """
    if profile is None:
        if G is None:
            raise ValueError("need a graph or a precomputed profile")
        profile = profile_graph(G)
    p = profile

    l = multiplicity_l(p.delta, p.multiplicity)
    thr = float(threshold_exact(spec, p.delta, p.Delta, k, l, enforce_degree=False))

    value = _spectral_value(p.summary, spec.spectral_quantity)
    margin = None if value is None else thr - value
    near = margin is not None and abs(margin) <= STRICTNESS_TOL
    strict = False
    if margin is not None and not near:
        strict = margin > 0 if spec.comparison == "<" else margin < 0

    applicable = (spec.graph_kind != "simple" or p.simple) and value is not None
    degree_ok = p.delta >= spec.degree_floor(k) and (not spec.regular or p.delta == p.Delta)

    class_ok = True
    if spec.requires_class and not ignore_class:
        if applicable and degree_ok and (strict or near):
            if p.in_class is None:
                raise UndecidedMembership(
                    f"{spec.id} on {p.graph_id}: membership undecided at n={p.n}"
                )
            class_ok = p.in_class
        else:
            class_ok = False  # moot; hypothesis already failed

    hypothesis = applicable and degree_ok and strict and class_ok
    boundary = applicable and degree_ok and near and class_ok
    conclusion_target = p.kappa if spec.conclusion == "kappa" else p.tau
    conclusion = bool(conclusion_target >= k)
    return ConditionVerdict(
        graph_id=p.graph_id,
        condition_id=spec.id,
        k=k,
        delta=p.delta,
        Delta=p.Delta,
        l=l,
        spectral_value=value,
        threshold=thr,
        margin=margin,
        boundary=boundary,
        hypothesis_holds=hypothesis,
        conclusion_holds=conclusion,
        consistent=(not hypothesis) or conclusion,
    )


def dual_structure_violations(
    G: Multigraph, dual, spec: ConditionSpec, k: int
) -> list[str]:
    """Derived structural checks on the packing dual witness.

    When a tau-condition hypothesis fires, the components of G - X (X the
    crossing edges of the dual partition witness) must all meet the rest of
    the graph in at least k edges; for the q2-based entries additionally no
    two components may be non-adjacent while both boundaries are <= 2k-1.
    Checked on the canonical witness only (full quantification over X is
    infeasible); empty result means no violation.
    """
    from .graphs import components_after_deletion

    if dual is None or len(dual.parts) < 2:
        return []
    block_of = dual.parts.block_of()
    crossing_edges = {
        (u, v): w for u, v, w in G.edges() if block_of[u] != block_of[v]
    }
    c, labels = components_after_deletion(G, crossing_edges)
    between = [[0] * c for _ in range(c)]
    boundary = [0] * c
    for u, v, w in G.edges():
        lu, lv = labels[u], labels[v]
        if lu != lv:
            between[lu][lv] += w
            between[lv][lu] += w
            boundary[lu] += w
            boundary[lv] += w
    issues = []
    if min(boundary) < k:
        issues.append(f"{spec.id} k={k}: dual component boundary {min(boundary)} below k")
    if spec.spectral_quantity == "q2":
        for i in range(c):
            for j in range(i + 1, c):
                if between[i][j] == 0 and boundary[i] <= 2 * k - 1 and boundary[j] <= 2 * k - 1:
                    issues.append(
                        f"{spec.id} k={k}: non-adjacent dual components {i},{j} "
                        f"with boundaries {boundary[i]},{boundary[j]} <= 2k-1"
                    )
    return issues


def lemma_arith_check(which: str, b: int, k: int) -> bool:
    """Exact rational check of the two auxiliary inequalities.

    LEM-2.11 (b >= 3, k >= 1):  (2(b-1)^2 k - 2(b-1)) / (b(b-2)) < 3k - 1
    LEM-2.12 (b >= 2, k >= 1):  ((2b-1) k - 2) / (b-1)          < 3k - 1
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if which == "LEM-2.11":
        if b < 3:
            raise DomainError(f"LEM-2.11 needs b >= 3, got {b}")
        lhs = Fraction(2 * (b - 1) ** 2 * k - 2 * (b - 1), b * (b - 2))
    elif which == "LEM-2.12":
        if b < 2:
            raise DomainError(f"LEM-2.12 needs b' >= 2, got {b}")
        lhs = Fraction((2 * b - 1) * k - 2, b - 1)
    else:
        raise DomainError(f"unknown lemma id {which!r}")
    return lhs < 3 * k - 1
