from __future__ import annotations

import math

import pytest
from hypothesis import given

import brute
from edgeclique import (
    GuardExceeded,
    alpha_prime_bruteforce,
    are_isomorphic,
    clique_number,
    cocktail_party,
    complete_graph,
    cycle_graph,
    edge_clique_graph,
    edges_independent,
    empty_graph,
    join,
    ke_iterate,
    maximal_cliques,
    path_graph,
    random_graph,
)
from strategies import graphs


def test_c4_gives_edgeless():
    ke = edge_clique_graph(cycle_graph(4))
    assert ke.graph.n == 4 and ke.graph.m == 0


def test_k4_gives_k6():
    ke = edge_clique_graph(complete_graph(4))
    assert are_isomorphic(ke.graph, complete_graph(6))


def test_vertex_order_is_lex_edges():
    g = path_graph(4)
    ke = edge_clique_graph(g)
    assert ke.edge_of_vertex == ((0, 1), (1, 2), (2, 3))


@given(graphs(max_n=8))
def test_adjacency_matches_definition(g):
    ke = edge_clique_graph(g)
    for i in range(ke.graph.n):
        for j in range(i + 1, ke.graph.n):
            expected = brute.edges_in_common_clique(
                g, ke.edge_of_vertex[i], ke.edge_of_vertex[j]
            )
            assert ke.graph.has_edge(i, j) == expected


def test_omega_identity_on_random_graphs():
    for seed in range(60):
        g = random_graph(8, seed)
        w = clique_number(g)
        wk = clique_number(edge_clique_graph(g).graph) if g.m else 0
        assert wk == math.comb(w, 2)


def test_clique_count_preserved_on_connected():
    for seed in range(40):
        g = random_graph(7, seed, p=0.5)
        ke = edge_clique_graph(g)
        # restrict to connected graphs with at least one edge
        from edgeclique.oracles import _components_of

        adj = [g.adj_bits(v) for v in range(g.n)]
        if g.m == 0 or len(_components_of(adj, (1 << g.n) - 1)) != 1:
            continue
        if clique_number(g) < 2:
            continue
        assert len(maximal_cliques(g)) == len(maximal_cliques(ke.graph))


def test_join_lemma_cross_edges():
    g1, g2 = path_graph(3), cycle_graph(4)
    g = join(g1, g2)
    ke = edge_clique_graph(g)
    side1 = [i for i, (u, v) in enumerate(ke.edge_of_vertex) if u < 3 and v < 3]
    side2 = [i for i, (u, v) in enumerate(ke.edge_of_vertex) if u >= 3 and v >= 3]
    assert side1 and side2
    for i in side1:
        for j in side2:
            assert ke.graph.has_edge(i, j)


@given(graphs(max_n=8))
def test_triangle_free_means_edgeless(g):
    if clique_number(g) <= 2:
        ke = edge_clique_graph(g)
        assert ke.graph.m == 0
        assert alpha_prime_bruteforce(g)[0] == g.m


def test_ke_iterate():
    c4 = cocktail_party(2)
    assert ke_iterate(c4, 0) == c4
    once = ke_iterate(c4, 1)
    assert once.n == 4 and once.m == 0
    # the second application collapses to the graph with no vertices
    assert ke_iterate(c4, 2).n == 0
    with pytest.raises(ValueError):
        ke_iterate(c4, -1)


def test_ke_iterate_guard():
    with pytest.raises(GuardExceeded):
        ke_iterate(complete_graph(8), 3, size_guard=30)


def test_shearer_style_bound_first_level():
    value = alpha_prime_bruteforce(cocktail_party(3))[0]
    assert value == 4
    assert value <= 3 * math.factorial(2)


def test_alpha_prime_brute_examples():
    assert alpha_prime_bruteforce(path_graph(4))[0] == 3
    assert alpha_prime_bruteforce(complete_graph(3))[0] == 1
    value, edges = alpha_prime_bruteforce(cocktail_party(3))
    assert value == 4 and len(edges) == 4
    assert edges_independent(cocktail_party(3), edges)


@given(graphs(max_n=6))
def test_alpha_prime_brute_matches_subset_scan(g):
    if g.m <= 12:
        assert alpha_prime_bruteforce(g)[0] == brute.brute_alpha_prime(g)


def test_edges_independent_negative():
    g = complete_graph(3)
    assert not edges_independent(g, [(0, 1), (1, 2)])
    assert edges_independent(empty_graph(3), [])
