"""Spectral certification of edge connectivity and spanning-tree packing."""

__version__ = "0.1.0"

from .graphs import (
    Multigraph,
    VertexPartition,
    degree_stats,
    edge_boundary,
    components_after_deletion,
    induced_average_degrees,
    from_edge_list,
)
from .spectra import (
    SpectralSummary,
    QuotientMatrix,
    build_matrix,
    symmetric_eigenvalues,
    spectral_summary,
    quotient_matrix,
    quotient_eigenvalues,
    check_interlacing,
    weyl_check,
)
from .connectivity import (
    CutCertificate,
    GClassWitness,
    edge_connectivity,
    min_cut_oracle,
    min_cut_sides,
    g_class_membership,
)
from .treepacking import (
    PackingCertificate,
    PartitionWitness,
    tau,
    tau_partition_oracle,
    check_nash_williams,
    component_cut_profile,
)
from .theorems import (
    ConditionSpec,
    ConditionVerdict,
    GraphProfile,
    catalog,
    get_condition,
    threshold,
    threshold_exact,
    evaluate,
    profile_graph,
    lemma_arith_check,
    multiplicity_l,
)
from .codec import parse_graph6, encode_graph6, encode_sparse6, encode_auto
from .corpus import CorpusSpec, Report, iter_corpus, run_sweep, search_outside_g
from .generators import (
    enumerate_connected,
    gen_gnp,
    gen_random_multigraph,
    gen_random_regular,
)

__all__ = [
    "Multigraph",
    "VertexPartition",
    "degree_stats",
    "edge_boundary",
    "components_after_deletion",
    "induced_average_degrees",
    "from_edge_list",
    "SpectralSummary",
    "QuotientMatrix",
    "build_matrix",
    "symmetric_eigenvalues",
    "spectral_summary",
    "quotient_matrix",
    "quotient_eigenvalues",
    "check_interlacing",
    "weyl_check",
    "CutCertificate",
    "GClassWitness",
    "edge_connectivity",
    "min_cut_oracle",
    "min_cut_sides",
    "g_class_membership",
    "PackingCertificate",
    "PartitionWitness",
    "tau",
    "tau_partition_oracle",
    "check_nash_williams",
    "component_cut_profile",
    "ConditionSpec",
    "ConditionVerdict",
    "GraphProfile",
    "catalog",
    "get_condition",
    "threshold",
    "threshold_exact",
    "evaluate",
    "profile_graph",
    "lemma_arith_check",
    "multiplicity_l",
    "parse_graph6",
    "encode_graph6",
    "encode_sparse6",
    "encode_auto",
    "CorpusSpec",
    "Report",
    "iter_corpus",
    "run_sweep",
    "search_outside_g",
    "enumerate_connected",
    "gen_gnp",
    "gen_random_multigraph",
    "gen_random_regular",
]
