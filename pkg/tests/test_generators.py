import networkx as nx
import pytest

from spectral_gate.errors import Infeasible, TooLarge, TooSmall
from spectral_gate.generators import (
    complete_graph,
    dumbbell_graph,
    enumerate_connected,
    gen_gnp,
    gen_random_multigraph,
    gen_random_regular,
    pappus_graph,
    petersen_graph,
    spawn_seeds,
    star_graph,
)
from spectral_gate.graphs import is_connected


def _nx_connected_count(n):
    count = 0
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        g = nx.Graph()
        g.add_nodes_from(range(n))
        g.add_edges_from(p for b, p in enumerate(pairs) if (mask >> b) & 1)
        if nx.is_connected(g):
            count += 1
    return count


def test_enumerate_counts_small():
    assert sum(1 for _ in enumerate_connected(2)) == 1
    assert sum(1 for _ in enumerate_connected(3)) == 4
    assert sum(1 for _ in enumerate_connected(4)) == 38


@pytest.mark.parametrize("n", [3, 4])
def test_enumerate_matches_networkx_oracle(n):
    assert sum(1 for _ in enumerate_connected(n)) == _nx_connected_count(n)


def test_enumerate_yields_connected_simple():
    for g in enumerate_connected(4):
        assert g.simple() and is_connected(g)


def test_enumerate_caps():
    with pytest.raises(TooLarge):
        next(enumerate_connected(9))
    with pytest.raises(TooSmall):
        next(enumerate_connected(1))


def test_regular_unique_instances():
    assert gen_random_regular(4, 3, 0) == complete_graph(4)
    assert gen_random_regular(6, 5, 1) == complete_graph(6)


def test_regular_parity_infeasible():
    with pytest.raises(Infeasible):
        gen_random_regular(5, 3, 0)
    with pytest.raises(Infeasible):
        gen_random_regular(4, 4, 0)


def test_regular_is_regular_and_deterministic():
    a = gen_random_regular(12, 3, 42)
    b = gen_random_regular(12, 3, 42)
    c = gen_random_regular(12, 3, 43)
    assert a == b
    assert a != c
    assert set(a.degrees) == {3} and a.simple()


def test_gnp_deterministic():
    assert gen_gnp(10, 0.4, 7) == gen_gnp(10, 0.4, 7)
    assert gen_gnp(10, 0.0, 7).edge_count == 0
    assert gen_gnp(6, 1.0, 7) == complete_graph(6)


def test_random_multigraph_connected_and_capped():
    for seed in range(8):
        g = gen_random_multigraph(7, 3, 2.0, seed)
        assert is_connected(g)
        assert g.multiplicity() <= 3
        assert g.edge_count >= g.n - 1


def test_spawn_seeds_are_stable():
    a = [s.generate_state(2).tolist() for s in spawn_seeds(5, 3)]
    b = [s.generate_state(2).tolist() for s in spawn_seeds(5, 3)]
    assert a == b


def test_named_graphs_shapes():
    assert petersen_graph().degrees == (3,) * 10
    assert pappus_graph().degrees == (3,) * 18
    assert star_graph(5).degrees == (5, 1, 1, 1, 1, 1)
    d = dumbbell_graph()
    assert sorted(d.degrees) == [3, 3, 3, 3, 3, 3, 4, 4]
