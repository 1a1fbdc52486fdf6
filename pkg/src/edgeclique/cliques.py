"""Maximal clique enumeration (Bron-Kerbosch with pivoting, on bitmasks)."""

from __future__ import annotations

from .errors import GuardExceeded
from .graph import Graph, iter_bits

DEFAULT_GUARD = 60


def maximal_cliques(g: Graph, guard: int = DEFAULT_GUARD) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each a sorted vertex tuple, in lex order.

    Isolated vertices count as maximal cliques of size one.  Intended for
    desk scale; refuses instances with more than ``guard`` vertices.
    """
    if g.n > guard:
        raise GuardExceeded("maximal clique enumeration", g.n, guard)
    adj = [g.adj_bits(v) for v in range(g.n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: vertex of P|X with most neighbors in P
        pivot = -1
        best = -1
        for u in iter_bits(p | x):
            c = (adj[u] & p).bit_count()
            if c > best:
                best = c
                pivot = u
        for v in iter_bits(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    cliques = [tuple(iter_bits(mask)) for mask in out]
    cliques.sort()
    return cliques


def clique_number(g: Graph, guard: int = DEFAULT_GUARD) -> int:
    """omega(g); zero for the empty graph."""
    if g.n == 0:
        return 0
    return max(len(c) for c in maximal_cliques(g, guard=guard))
