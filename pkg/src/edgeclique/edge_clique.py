"""Edge-clique graph construction and the brute-force independent-edge oracle.

The edge-clique graph of G has one vertex per edge of G; two of its vertices
are adjacent exactly when the two source edges lie together in some clique
of G.  Testing that does not need clique enumeration: for edges {a,b} and
{c,d} it is enough that every pair of distinct vertices among a,b,c,d is an
edge (for edges sharing an endpoint this degenerates to one adjacency test).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceeded
from .graph import Graph
from .oracles import DEFAULT_GUARD, mis_exact

KE_SIZE_GUARD = 4096


@dataclass(frozen=True)
class EdgeCliqueGraph:
    """An edge-clique graph plus the map from its vertices back to source edges."""

    graph: Graph
    edge_of_vertex: tuple[tuple[int, int], ...]
    source: Graph

    @property
    def n(self) -> int:
        return self.graph.n


def edge_clique_graph(g: Graph) -> EdgeCliqueGraph:
    """Build the edge-clique graph; vertex i corresponds to the i-th edge in lex order."""
    src_edges = g.edges()
    m = len(src_edges)
    ke_edges = []
    for i in range(m):
        a, b = src_edges[i]
        ab = (1 << a) | (1 << b)
        for j in range(i + 1, m):
            c, d = src_edges[j]
            if ab & ((1 << c) | (1 << d)):
                # shared endpoint: the two free endpoints must be adjacent
                x = a if a not in (c, d) else b
                y = c if c not in (a, b) else d
                if g.has_edge(x, y):
                    ke_edges.append((i, j))
            else:
                if (
                    g.has_edge(a, c)
                    and g.has_edge(a, d)
                    and g.has_edge(b, c)
                    and g.has_edge(b, d)
                ):
                    ke_edges.append((i, j))
    labels = tuple(f"{u}-{v}" for u, v in src_edges)
    return EdgeCliqueGraph(Graph(m, ke_edges, labels=labels), tuple(src_edges), g)


def ke_iterate(g: Graph, r: int, size_guard: int = KE_SIZE_GUARD) -> Graph:
    """Apply the edge-clique construction r times; r = 0 returns the input."""
    if r < 0:
        raise ValueError("iteration count must be nonnegative")
    cur = g
    for _ in range(r):
        if cur.m > size_guard:
            raise GuardExceeded("iterated edge-clique construction", cur.m, size_guard)
        cur = edge_clique_graph(cur).graph
    return cur


def alpha_prime_bruteforce(
    g: Graph, guard: int = DEFAULT_GUARD
) -> tuple[int, frozenset[tuple[int, int]]]:
    """Maximum independent edge set by exact search on the edge-clique graph.

    Guarded by the number of edges of ``g`` (the vertex count of the
    edge-clique graph).
    """
    ke = edge_clique_graph(g)
    value, vs = mis_exact(ke.graph, guard=guard)
    return value, frozenset(ke.edge_of_vertex[v] for v in vs)


def edges_independent(g: Graph, edges) -> bool:
    """No two of the given edges lie in a common clique of ``g``."""
    es = [tuple(sorted(e)) for e in edges]
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            c, d = es[j]
            shared = {a, b} & {c, d}
            if shared:
                x = a if a not in (c, d) else b
                y = c if c not in (a, b) else d
                if g.has_edge(x, y):
                    return False
            elif (
                g.has_edge(a, c)
                and g.has_edge(a, d)
                and g.has_edge(b, c)
                and g.has_edge(b, d)
            ):
                return False
    return True
