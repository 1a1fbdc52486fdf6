"""Hypothesis strategies for graphs."""

from __future__ import annotations

from hypothesis import strategies as st

from edgeclique import Graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph(n)
    edges = draw(st.sets(st.sampled_from(pairs)))
    return Graph(n, edges)


@st.composite
def weight_vectors(draw, n: int, hi: int = 10):
    return draw(st.lists(st.integers(0, hi), min_size=n, max_size=n))
