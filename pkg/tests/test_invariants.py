"""Exact invariants against plain subset-enumeration oracles."""

import pytest

from hararyspec import (
    BudgetError,
    bipartition,
    chromatic_number,
    complete,
    complete_bipartite,
    cycle,
    edge_connectivity,
    graph_invariants,
    independence_number,
    path,
    star,
    vertex_connectivity,
    wheel,
)

from conftest import (
    brute_chromatic_number,
    brute_edge_connectivity,
    brute_independence_number,
    brute_vertex_connectivity,
    make_paw,
)


def test_complete_graph_invariants():
    inv = graph_invariants(complete(4))
    assert inv.vertex_connectivity == 3
    assert inv.edge_connectivity == 3
    assert inv.chromatic_number == 4
    assert inv.independence_number == 1
    assert inv.min_degree == 3


def test_cycle5_invariants():
    inv = graph_invariants(cycle(5))
    assert (inv.vertex_connectivity, inv.edge_connectivity) == (2, 2)
    assert inv.chromatic_number == 3
    assert inv.independence_number == 2


def test_paw_invariants():
    inv = graph_invariants(make_paw())
    assert (inv.vertex_connectivity, inv.edge_connectivity) == (1, 1)
    assert inv.chromatic_number == 3
    assert inv.independence_number == 2


@pytest.mark.parametrize(
    "g",
    [path(2), path(4), star(5), cycle(6), wheel(5), complete(5), complete_bipartite(2, 3)],
    ids=["P2", "P4", "K15", "C6", "W5", "K5", "K23"],
)
def test_named_graphs_match_oracles(g):
    assert vertex_connectivity(g) == brute_vertex_connectivity(g)
    assert edge_connectivity(g) == brute_edge_connectivity(g)
    assert chromatic_number(g) == brute_chromatic_number(g)
    assert independence_number(g) == brute_independence_number(g)


def test_catalog_matches_oracles_up_to_n5(catalog):
    for entry in catalog.up_to(5):
        g = entry.graph
        assert vertex_connectivity(g) == brute_vertex_connectivity(g)
        assert edge_connectivity(g) == brute_edge_connectivity(g)
        assert chromatic_number(g) == brute_chromatic_number(g)
        assert independence_number(g) == brute_independence_number(g)


def test_connectivity_chain_on_catalog(catalog):
    for entry in catalog.up_to(6, start=2):
        inv = graph_invariants(entry.graph)
        assert inv.vertex_connectivity <= inv.edge_connectivity <= inv.min_degree
        assert 1 <= inv.chromatic_number <= entry.graph.n
        assert 1 <= inv.independence_number <= entry.graph.n - 1


def test_bipartition_sizes():
    assert bipartition(complete_bipartite(2, 4)) == (True, (2, 4))
    assert bipartition(path(5)) == (True, (2, 3))
    assert bipartition(cycle(5)) == (False, None)
    assert bipartition(complete(3)) == (False, None)


def test_budget_error_over_ten_vertices():
    with pytest.raises(BudgetError, match="budget exceeded"):
        graph_invariants(path(11))
