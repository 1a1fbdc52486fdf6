"""Neighborhood-structure predicates: equivalent vertices and odd wheels."""

from __future__ import annotations

from typing import NamedTuple

from .graph import Graph, iter_bits


class EquivalenceReport(NamedTuple):
    pairs: tuple[tuple[int, int], ...]
    isolated: tuple[int, ...]


class OddWheelWitness(NamedTuple):
    hub: int
    cycle: tuple[int, ...]


def equivalent_pairs(g: Graph) -> EquivalenceReport:
    """All adjacent pairs with the same closed neighborhood, plus isolated vertices.

    Equivalent vertices and isolated vertices are exactly what disqualifies a
    graph from the logarithmic lower bound on its edge-clique cover number.
    """
    pairs = []
    for u in range(g.n):
        cu = g.closed_bits(u)
        for v in iter_bits(g.adj_bits(u) >> (u + 1)):
            v += u + 1
            if g.closed_bits(v) == cu:
                pairs.append((u, v))
    isolated = tuple(v for v in range(g.n) if g.adj_bits(v) == 0)
    return EquivalenceReport(tuple(pairs), isolated)


def bipartite_in_subset(g: Graph, subset: int) -> tuple[bool, tuple[int, ...] | None]:
    """2-color ``g`` restricted to the vertex bitmask; on failure return an odd cycle."""
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for start in iter_bits(subset):
        if start in color:
            continue
        color[start] = 0
        parent[start] = None
        queue = [start]
        while queue:
            u = queue.pop()
            for v in iter_bits(g.adj_bits(u) & subset):
                if v not in color:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, _odd_cycle(parent, u, v)
    return True, None


def _odd_cycle(parent: dict[int, int | None], u: int, v: int) -> tuple[int, ...]:
    path_u: list[int] = []
    node: int | None = u
    while node is not None:
        path_u.append(node)
        node = parent[node]
    on_u = set(path_u)
    path_v: list[int] = []
    node = v
    while node not in on_u:
        path_v.append(node)
        node = parent[node]  # type: ignore[index]
    lca = node
    cut = path_u.index(lca)
    cycle = list(reversed(path_u[: cut + 1])) + list(reversed(path_v))
    return tuple(cycle)


def is_odd_wheel_free(g: Graph) -> tuple[bool, OddWheelWitness | None]:
    """True iff every vertex neighborhood induces a bipartite graph.

    On failure the witness carries the hub vertex and an odd cycle inside its
    neighborhood (the rim of an odd wheel).
    """
    for x in range(g.n):
        ok, cycle = bipartite_in_subset(g, g.adj_bits(x))
        if not ok:
            return False, OddWheelWitness(x, cycle)
    return True, None
