from __future__ import annotations

from itertools import combinations, product

import pytest

import brute
from edgeclique import (
    CnfFormula,
    Graph,
    alpha_prime_bruteforce,
    are_isomorphic,
    build_clause_gadget,
    cocktail_party,
    decide_sat_via_vc,
    edge_clique_graph,
    is_odd_wheel_free,
    lift_alpha_instance,
    mis_exact,
    parse_dimacs,
    random_graph,
    sat_oracle,
    sat_to_vc_instance,
)


# -- formulas --------------------------------------------------------------


def test_formula_validation():
    CnfFormula(3, ((1, -2, 3),))
    with pytest.raises(ValueError):
        CnfFormula(3, ((1, 1, 2),))  # repeated variable
    with pytest.raises(ValueError):
        CnfFormula(3, ((1, -1, 2),))  # complementary pair
    with pytest.raises(ValueError):
        CnfFormula(2, ((1, 2, 3),))  # out of range
    with pytest.raises(ValueError):
        CnfFormula(3, ((1, 2),))  # not three literals


def test_dimacs_roundtrip():
    text = """c tiny instance
p cnf 3 2
1 2 3 0
-1 -2 3 0
"""
    f = parse_dimacs(text)
    assert f.num_vars == 3
    assert f.clauses == ((1, 2, 3), (-1, -2, 3))
    with pytest.raises(ValueError):
        parse_dimacs("1 2 3 0")
    with pytest.raises(ValueError):
        parse_dimacs("p cnf 3 1\n1 2 0")


def test_sat_oracle():
    sat, assign = sat_oracle(CnfFormula(3, ((1, 2, 3),)))
    assert sat and any(assign[abs(l)] == (l > 0) for l in (1, 2, 3))
    # all eight sign patterns on three variables: unsatisfiable
    all_clauses = tuple(
        (s1 * 1, s2 * 2, s3 * 3)
        for s1, s2, s3 in product((1, -1), repeat=3)
    )
    sat, assign = sat_oracle(CnfFormula(3, all_clauses))
    assert not sat and assign is None


# -- clause gadget ----------------------------------------------------------


def test_gadget_shape():
    gad = build_clause_gadget()
    assert gad.graph.n == 6 and gad.graph.m == 12
    assert all(gad.graph.degree(v) == 4 for v in range(6))
    assert are_isomorphic(gad.graph, cocktail_party(3))


def test_gadget_f_edges_form_hexagon_in_edge_clique_graph():
    gad = build_clause_gadget()
    ke = edge_clique_graph(gad.graph)
    idx = {e: i for i, e in enumerate(ke.edge_of_vertex)}
    f_ids = [idx[e] for e in gad.f_edges]
    sub = ke.graph.induced(f_ids)
    assert sub.n == 6 and sub.m == 6
    assert all(sub.degree(v) == 2 for v in range(6))
    # connected 2-regular on six vertices: a single hexagon
    comp = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for u in sub.neighbors(v):
            if u not in comp:
                comp.add(u)
                frontier.append(u)
    assert len(comp) == 6


def test_gadget_maximum_independent_edge_sets():
    gad = build_clause_gadget()
    g = gad.graph
    edges = g.edges()
    best = alpha_prime_bruteforce(g)[0]
    assert best == 4
    optima = [
        combo
        for combo in combinations(edges, 4)
        if brute.independent_edge_set_valid(g, combo)
    ]
    # enumeration-derived: nine optima in total, of which exactly three are
    # induced 4-cycles built from one inner edge, one outer edge and two
    # inner-outer edges; those three partition the gadget's edges
    assert len(optima) == 9
    inner = {tuple(sorted((gad.inner[i], gad.inner[j]))) for i, j in
             combinations(range(3), 2)}
    outer = {tuple(sorted((gad.outer[i], gad.outer[j]))) for i, j in
             combinations(range(3), 2)}
    squares = []
    for combo in optima:
        quad = sorted({v for e in combo for v in e})
        if len(quad) != 4:
            continue
        sub = g.induced(quad)
        assert sub.m == 4 and all(sub.degree(v) == 2 for v in range(4))
        assert sum(e in inner for e in combo) == 1
        assert sum(e in outer for e in combo) == 1
        assert sum(e in gad.f_edges for e in combo) == 2
        squares.append(combo)
    assert len(squares) == 3
    seen_edges = set()
    for combo in squares:
        seen_edges.update(combo)
    assert len(seen_edges) == 12


def test_literal_edges_are_independent():
    gad = build_clause_gadget()
    assert brute.independent_edge_set_valid(gad.graph, gad.literal_edges)


# -- reduction construction -------------------------------------------------


def test_single_clause_counts():
    f = CnfFormula(3, ((1, 2, 3),))
    inst = sat_to_vc_instance(f)
    assert inst.graph.n == 12
    assert inst.graph.m == 24
    assert inst.threshold == 11
    assert inst.k_graph.n == 24 - 6
    assert len(inst.stripped_edges) == 6
    assert is_odd_wheel_free(inst.graph)[0]


def test_stripped_vertices_simplicial():
    f = CnfFormula(4, ((1, 2, 3), (-2, 3, 4)))
    inst = sat_to_vc_instance(f)
    idx = {e: i for i, e in enumerate(inst.ke.edge_of_vertex)}
    for e in inst.stripped_edges:
        i = idx[e]
        nb = [u for u in range(inst.ke.graph.n) if inst.ke.graph.has_edge(i, u)]
        assert brute.is_clique(inst.ke.graph, nb)


def test_reduction_sizes_general():
    f = CnfFormula(4, ((1, 2, 3), (-1, 2, 4), (-2, -3, 4)))
    inst = sat_to_vc_instance(f)
    L, M = 4, 3
    assert inst.graph.n == 3 * L + 3 * M
    assert inst.graph.m == 3 * L + 15 * M
    assert inst.k_graph.n == 2 * L + 12 * M
    assert inst.threshold == L + 8 * M


def test_single_clause_equivalence():
    rep = decide_sat_via_vc(CnfFormula(3, ((1, 2, 3),)))
    assert rep.sat_by_reduction and rep.sat_by_oracle and rep.agree


def _canonical_under_sign_flips(clauses: tuple) -> tuple:
    best = None
    for flips in product((1, -1), repeat=3):
        mapped = tuple(
            sorted(
                tuple(sorted((flips[abs(l) - 1] * l for l in c), key=abs))
                for c in clauses
            )
        )
        if best is None or mapped < best:
            best = mapped
    return best


def test_equivalence_exhaustive_small():
    # every formula on exactly three variables with one or two clauses,
    # up to flipping the sign of any variable
    signs = list(product((1, -1), repeat=3))
    all_clauses = [(s1 * 1, s2 * 2, s3 * 3) for s1, s2, s3 in signs]
    seen = set()
    formulas = []
    for m in (1, 2):
        for combo in combinations(all_clauses, m):
            canon = _canonical_under_sign_flips(combo)
            if canon not in seen:
                seen.add(canon)
                formulas.append(CnfFormula(3, combo))
    assert len(formulas) > 5
    for f in formulas:
        rep = decide_sat_via_vc(f)
        assert rep.agree, f"reduction disagrees with oracle on {f.clauses}"


# -- the independence lift ---------------------------------------------------


def test_lift_k2():
    lifted = lift_alpha_instance(Graph(2, [(0, 1)]))
    assert lifted.h.n == 5
    assert alpha_prime_bruteforce(lifted.h)[0] == 3 == lifted.expected_alpha_prime(1)


def test_lift_edgeless():
    lifted = lift_alpha_instance(Graph(3))
    # no edges to protect: the lift is a star on the source vertices
    assert lifted.h.m == 3
    assert alpha_prime_bruteforce(lifted.h)[0] == 3


def test_lift_random_graphs():
    checked = 0
    for seed in range(40):
        g = random_graph(3 + seed % 5, seed, p=0.4)
        lifted = lift_alpha_instance(g)
        if lifted.h.m > 58:
            continue
        alpha = mis_exact(g)[0]
        value, edges = alpha_prime_bruteforce(lifted.h)
        assert value == lifted.expected_alpha_prime(alpha)
        # optimal edge sets never touch an original edge
        src = set(g.edges())
        assert not (set(edges) & src)
        checked += 1
    assert checked >= 25
