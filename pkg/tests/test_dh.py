from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

import brute
from edgeclique import (
    Graph,
    NotDistanceHereditary,
    alpha_prime_bruteforce,
    alpha_prime_cograph,
    alpha_prime_dh,
    cocktail_party,
    cycle_graph,
    is_distance_hereditary,
    mis_exact,
    mwis_dh,
    path_graph,
    pruning_sequence,
    random_cograph,
    random_distance_hereditary,
    rebuild,
)
from edgeclique.dh import FALSE_TWIN, ISOLATED, PENDANT, TRUE_TWIN


def test_tree_prunes_by_pendants():
    tree = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    seq = pruning_sequence(tree)
    assert all(s.kind in (PENDANT, ISOLATED) for s in seq.steps)
    assert rebuild(seq) == tree


def test_c5_is_not_dh():
    with pytest.raises(NotDistanceHereditary) as exc:
        pruning_sequence(cycle_graph(5))
    assert exc.value.residual == (0, 1, 2, 3, 4)
    assert not is_distance_hereditary(cycle_graph(5))


def test_cocktail_party_prunes_by_twins():
    seq = pruning_sequence(cocktail_party(3))
    kinds = {s.kind for s in seq.steps}
    assert FALSE_TWIN in kinds or TRUE_TWIN in kinds
    assert rebuild(seq) == cocktail_party(3)


@given(st.integers(1, 14), st.integers(0, 400))
def test_random_dh_prunes_and_rebuilds(n, seed):
    g = random_distance_hereditary(n, seed)
    seq = pruning_sequence(g)
    assert rebuild(seq) == g


def test_elimination_is_deterministic():
    g = random_distance_hereditary(10, 5)
    s1 = pruning_sequence(g)
    s2 = pruning_sequence(g)
    assert s1 == s2


# -- weight-transfer rules, each validated in isolation -------------------


def test_isolated_rule():
    g = Graph(3, [(1, 2)])  # vertex 0 isolated
    for w in ([1, 1, 1], [0, 5, 7], [3, 2, 2]):
        assert mwis_dh(g, w)[0] == brute.brute_mis(g, w)


def test_pendant_rule():
    g = path_graph(2)
    for w in ([1, 1], [5, 2], [2, 5], [0, 4]):
        assert mwis_dh(g, w)[0] == brute.brute_mis(g, w)
    chain = path_graph(3)
    for w in ([1, 1, 1], [1, 5, 1], [4, 2, 3]):
        assert mwis_dh(chain, w)[0] == brute.brute_mis(chain, w)


def test_false_twin_rule():
    g = Graph(3, [(0, 2), (1, 2)])  # 0 and 1 are false twins
    for w in ([1, 1, 1], [2, 3, 4], [2, 3, 6]):
        assert mwis_dh(g, w)[0] == brute.brute_mis(g, w)


def test_true_twin_rule():
    g = Graph(3, [(0, 1), (0, 2), (1, 2)])  # all true twins
    for w in ([1, 1, 1], [5, 1, 3], [2, 2, 2]):
        assert mwis_dh(g, w)[0] == brute.brute_mis(g, w)


def test_single_vertex_weight():
    assert mwis_dh(Graph(1), [7])[0] == 7


def test_clamped_pendant_set_reconstruction():
    # pendant fold clamps y to zero, a later false-twin merge re-weights y,
    # and the optimal set must displace y back to the pendant side
    g = Graph(4, [(0, 1), (1, 3), (2, 3)])  # 0 pendant at 1; 1,2 false twins
    w = [3, 1, 5, 0]
    value, chosen = mwis_dh(g, w)
    assert value == 8
    assert brute.is_independent(g, chosen)
    assert sum(w[v] for v in chosen) == value


def test_p3_unit():
    assert mwis_dh(path_graph(3))[0] == 2


@given(st.integers(1, 12), st.integers(0, 300))
def test_mwis_dh_matches_oracle(n, seed):
    g = random_distance_hereditary(n, seed)
    rng = random.Random(seed ^ 0xBEEF)
    w = [rng.randint(0, 10) for _ in range(n)]
    value, chosen = mwis_dh(g, w)
    assert value == mis_exact(g, weights=w)[0]
    assert brute.is_independent(g, chosen)
    assert sum(w[v] for v in chosen) == value


def test_alpha_prime_dh_examples():
    assert alpha_prime_dh(path_graph(4)).value == 3
    star = Graph(6, [(0, i) for i in range(1, 6)])
    assert alpha_prime_dh(star).value == 5
    with pytest.raises(NotDistanceHereditary):
        alpha_prime_dh(cycle_graph(6))


@given(st.integers(1, 12), st.integers(0, 200))
def test_alpha_prime_dh_matches_bruteforce(n, seed):
    g = random_distance_hereditary(n, seed)
    if g.m > 40:
        return
    cert = alpha_prime_dh(g)
    assert cert.value == alpha_prime_bruteforce(g)[0]
    assert len(cert.witness_edges) == cert.value
    assert brute.independent_edge_set_valid(g, cert.witness_edges)


def test_pendant_identity():
    # removing a pendant vertex drops the value by exactly one
    for seed in range(40):
        g = random_distance_hereditary(9, seed)
        pend = next(
            (v for v in range(g.n) if g.degree(v) == 1),
            None,
        )
        if pend is None:
            continue
        rest = [v for v in range(g.n) if v != pend]
        assert (
            alpha_prime_dh(g).value
            == 1 + alpha_prime_dh(g.induced(rest)).value
        )


@given(st.integers(1, 11), st.integers(0, 150))
def test_cographs_are_dh_and_engines_agree(n, seed):
    g = random_cograph(n, seed)
    assert is_distance_hereditary(g)
    assert alpha_prime_dh(g).value == alpha_prime_cograph(g).value
