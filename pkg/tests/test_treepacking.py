import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_gate.connectivity import edge_connectivity
from spectral_gate.errors import Disconnected, EdgeNotPresent, TooLarge
from spectral_gate.generators import (
    complete_graph,
    cycle_graph,
    enumerate_connected,
    gen_gnp,
    gen_random_multigraph,
    path_graph,
)
from spectral_gate.graphs import Multigraph, components_after_deletion
from spectral_gate.treepacking import (
    check_nash_williams,
    component_cut_profile,
    tau,
    tau_partition_oracle,
    validate_packing,
)


def test_tau_of_tree_is_one():
    cert = tau(path_graph(6))
    assert cert.tau == 1
    assert validate_packing(path_graph(6), cert)


def test_tau_k4():
    cert = tau(complete_graph(4))
    assert cert.tau == 2
    assert validate_packing(complete_graph(4), cert)
    assert cert.dual is not None and cert.dual.bound == 2


def test_tau_parallel_edges():
    g = Multigraph(2, {(0, 1): 3})
    cert = tau(g)
    assert cert.tau == 3
    assert validate_packing(g, cert)


def test_tau_single_vertex_sentinel():
    assert tau(Multigraph(1, {})).tau == math.inf


def test_tau_disconnected_raises():
    with pytest.raises(Disconnected):
        tau(Multigraph.from_edge_list(4, [(0, 1), (2, 3)]))


def test_partition_oracle_c5():
    value, witness = tau_partition_oracle(cycle_graph(5))
    assert value == 1
    assert witness.bound == 1
    assert witness.crossing // (len(witness.parts) - 1) == 1


def test_partition_oracle_k4():
    value, witness = tau_partition_oracle(complete_graph(4))
    assert value == 2
    # singleton partition attains floor(6 / 3) = 2; a 2+2 split gives 4
    assert witness.bound == 2


def test_partition_oracle_k2():
    value, _ = tau_partition_oracle(complete_graph(2))
    assert value == 1


def test_partition_oracle_cap():
    with pytest.raises(TooLarge):
        tau_partition_oracle(path_graph(11))


def test_nash_williams_examples():
    k4 = complete_graph(4)
    assert check_nash_williams(k4, 3, {})
    all_edges = {(u, v): w for u, v, w in k4.edges()}
    assert not check_nash_williams(k4, 3, all_edges)  # 6 < 3 * 3
    assert check_nash_williams(cycle_graph(4), 1, [(0, 1)])
    with pytest.raises(EdgeNotPresent):
        check_nash_williams(k4, 1, {(0, 1): 2})


def test_component_cut_profile_examples():
    c6 = cycle_graph(6)
    profile = component_cut_profile(c6, [(0, 1), (3, 4)])
    assert profile.r == (2, 2)
    assert profile.total == 4

    k4 = complete_graph(4)
    profile = component_cut_profile(k4, [(0, 1), (0, 2), (0, 3)])
    assert profile.r == (3, 3)

    assert component_cut_profile(c6, {}).r == (0,)


def test_cut_profile_sum_identity():
    # sum r_i = 2 * (edges between distinct components)
    g = gen_gnp(8, 0.5, 123)
    x = [(u, v) for u, v, _ in g.edges()][:4]
    profile = component_cut_profile(g, x)
    _, labels = components_after_deletion(g, x)
    crossing = sum(w for u, v, w in g.edges() if labels[u] != labels[v])
    assert profile.total == 2 * crossing


def test_matroid_union_matches_oracle_exhaustive():
    for n in (2, 3, 4, 5):
        for g in enumerate_connected(n):
            cert = tau(g)
            value, witness = tau_partition_oracle(g)
            assert cert.tau == value
            assert validate_packing(g, cert)
            assert witness.bound == value


@settings(max_examples=60)
@given(st.integers(min_value=2, max_value=9), st.integers(min_value=0, max_value=10**6))
def test_matroid_union_matches_oracle_random_multigraphs(n, seed):
    g = gen_random_multigraph(n, 3, 2.2, seed)
    cert = tau(g)
    value, _ = tau_partition_oracle(g)
    assert cert.tau == value
    assert validate_packing(g, cert)


@settings(max_examples=40)
@given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=10**6))
def test_tau_at_most_kappa(n, seed):
    g = gen_gnp(n, 0.6, seed)
    try:
        cert = tau(g)
    except Disconnected:
        return
    assert cert.tau <= edge_connectivity(g).value


@settings(max_examples=25)
@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_dual_witness_certifies_upper_bound(n, seed):
    g = gen_random_multigraph(n, 3, 2.0, seed)
    cert = tau(g)
    w = cert.dual
    assert w is not None
    # the witness partition fails the counting criterion for tau + 1
    assert w.crossing <= (cert.tau + 1) * (len(w.parts) - 1) - 1
    # and every sampled partition bounds tau from above
    assert w.bound == cert.tau


@settings(max_examples=30)
@given(
    st.integers(min_value=3, max_value=8),
    st.integers(min_value=0, max_value=10**6),
    st.randoms(),
)
def test_random_partitions_bound_tau_from_above(n, seed, rnd):
    from spectral_gate.graphs import VertexPartition

    g = gen_random_multigraph(n, 3, 2.0, seed)
    value = tau(g).tau
    t = rnd.randint(2, n)
    assignment = [rnd.randrange(t) for _ in range(n)]
    for b in range(t):
        if b not in assignment:
            assignment[rnd.randrange(n)] = b
    blocks = {}
    for v, b in enumerate(assignment):
        blocks.setdefault(b, []).append(v)
    pi = VertexPartition(n, list(blocks.values()))
    block_of = pi.block_of()
    crossing = sum(w for u, v, w in g.edges() if block_of[u] != block_of[v])
    assert crossing // (len(pi) - 1) >= value
