"""Deterministic random graph families and exhaustive small-cograph enumeration.

Cographs come from random binary join/union trees, distance-hereditary
graphs from random forward application of the four extension moves, and
arbitrary graphs from a fixed edge probability.  Everything is driven by a
seeded ``random.Random`` so the same seed always yields the same graph.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from functools import lru_cache

from .cotree import JOIN, LEAF, UNION, Cotree
from .graph import Graph, iter_bits


def random_graph(n: int, seed: int, p: float = 0.5) -> Graph:
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def random_cograph(n: int, seed: int) -> Graph:
    """Graph of a uniform-ish random binary join/union tree on n leaves."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    adj = [0] * n
    # leaves take consecutive ids, so subtree vertex sets are id ranges and
    # the tree can be drawn iteratively (pre-order, left child first)
    stack = [(0, n)]
    while stack:
        lo, hi = stack.pop()
        size = hi - lo
        if size == 1:
            continue
        split = rng.randint(1, size - 1)
        if rng.random() < 0.5:  # join the two halves
            left = ((1 << (lo + split)) - 1) ^ ((1 << lo) - 1)
            right = ((1 << hi) - 1) ^ ((1 << (lo + split)) - 1)
            for u in range(lo, lo + split):
                adj[u] |= right
            for v in range(lo + split, hi):
                adj[v] |= left
        stack.append((lo + split, hi))
        stack.append((lo, lo + split))
    edges = [(u, v) for u in range(n) for v in iter_bits(adj[u]) if u < v]
    return Graph(n, edges)


def random_distance_hereditary(n: int, seed: int) -> Graph:
    """Random forward run of isolated / pendant / false-twin / true-twin extensions."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(seed)
    adj = [0] * n
    for x in range(1, n):
        move = rng.choice(("isolated", "pendant", "false_twin", "true_twin"))
        if move == "isolated":
            continue
        y = rng.randrange(x)
        if move == "pendant":
            nb = 1 << y
        elif move == "false_twin":
            nb = adj[y]
        else:
            nb = adj[y] | (1 << y)
        adj[x] = nb
        for u in iter_bits(nb):
            adj[u] |= 1 << x
    edges = [(u, v) for u in range(n) for v in iter_bits(adj[u]) if u < v]
    return Graph(n, edges)


def random_family(kind: str, n: int, seed: int, p: float = 0.5) -> Graph:
    if kind == "cograph":
        return random_cograph(n, seed)
    if kind == "distance_hereditary":
        return random_distance_hereditary(n, seed)
    if kind == "arbitrary":
        return random_graph(n, seed, p=p)
    raise ValueError(f"unknown family kind {kind!r}")


# -- exhaustive enumeration of small cographs up to isomorphism ----------
#
# Canonical cotrees: a join node's children are single vertices or
# disconnected cographs, a union node's children are connected, and child
# lists are sorted.  Every isomorphism class then has exactly one form, so
# generating sorted multisets enumerates cographs without duplicates.

_LEAF_FORM = ("L",)


def _multisets(pool: tuple, total: int, min_parts: int) -> Iterator[tuple]:
    """Sorted multisets drawn from (size, form) pool summing to ``total``."""

    def rec(start: int, left: int, parts: tuple) -> Iterator[tuple]:
        if left == 0:
            if len(parts) >= min_parts:
                yield parts
            return
        for i in range(start, len(pool)):
            size, form = pool[i]
            if size <= left:
                yield from rec(i, left - size, parts + ((size, form),))

    yield from rec(0, total, ())


@lru_cache(maxsize=None)
def _connected_forms(n: int) -> tuple:
    if n == 1:
        return (_LEAF_FORM,)
    pool = []
    for k in range(1, n):
        if k == 1:
            pool.append((1, _LEAF_FORM))
        else:
            pool.extend((k, f) for f in _disconnected_forms(k))
    pool.sort(key=lambda sf: (sf[0], sf[1]))
    out = []
    for combo in _multisets(tuple(pool), n, 2):
        out.append(("J",) + tuple(f for _, f in combo))
    return tuple(out)


@lru_cache(maxsize=None)
def _disconnected_forms(n: int) -> tuple:
    pool = []
    for k in range(1, n):
        pool.extend((k, f) for f in _connected_forms(k))
    pool.sort(key=lambda sf: (sf[0], sf[1]))
    out = []
    for combo in _multisets(tuple(pool), n, 2):
        out.append(("U",) + tuple(f for _, f in combo))
    return tuple(out)


def _form_size(form: tuple) -> int:
    if form == _LEAF_FORM:
        return 1
    return sum(_form_size(f) for f in form[1:])


def _form_to_cotree(form: tuple, next_vertex: list[int]) -> Cotree:
    if form == _LEAF_FORM:
        v = next_vertex[0]
        next_vertex[0] += 1
        return Cotree(LEAF, vertex=v, leaf_mask=1 << v)
    kind = UNION if form[0] == "U" else JOIN
    node = _form_to_cotree(form[1], next_vertex)
    for child_form in form[2:]:
        child = _form_to_cotree(child_form, next_vertex)
        node = Cotree(
            kind, children=[node, child], leaf_mask=node.leaf_mask | child.leaf_mask
        )
    return node


def form_to_graph(form: tuple) -> Graph:
    from .cotree import cotree_to_graph

    n = _form_size(form)
    return cotree_to_graph(_form_to_cotree(form, [0]), n)


def enumerate_cographs(n: int, connected: bool = True) -> Iterator[Graph]:
    """All cographs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if connected:
        forms = _connected_forms(n)
    else:
        forms = _connected_forms(n) + _disconnected_forms(n) if n > 1 else (
            _LEAF_FORM,
        )
    for form in forms:
        yield form_to_graph(form)
