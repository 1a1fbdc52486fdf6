"""Independent brute-force oracles for cross-checking the real solvers.

Everything here is subset enumeration over the public Graph API, kept
deliberately separate from the library's own search code so agreement
means something.
"""

from __future__ import annotations

from itertools import combinations

from edgeclique import Graph


def is_clique(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(vs), 2))


def is_independent(g: Graph, vs) -> bool:
    return all(not g.has_edge(u, v) for u, v in combinations(sorted(vs), 2))


def brute_mis(g: Graph, weights=None) -> int:
    w = weights if weights is not None else [1] * g.n
    best = 0
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if is_independent(g, vs):
            best = max(best, sum(w[v] for v in vs))
    return best


def brute_vc(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        for vs in combinations(range(g.n), k):
            s = set(vs)
            if all(u in s or v in s for u, v in edges):
                return k
    return g.n


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cliques = [
        vs
        for k in range(1, g.n + 1)
        for vs in combinations(range(g.n), k)
        if is_clique(g, vs)
    ]
    as_sets = [set(c) for c in cliques]
    out = [
        c
        for c, cs in zip(cliques, as_sets)
        if not any(cs < other for other in as_sets)
    ]
    return sorted(out)


def edges_in_common_clique(g: Graph, e, f) -> bool:
    """Definition-level test: some vertex subset containing both edges is a clique."""
    union = sorted(set(e) | set(f))
    return is_clique(g, union)


def brute_alpha_prime(g: Graph) -> int:
    """Maximum independent edge set by direct subset scan over edges."""
    edges = g.edges()
    best = 0
    for mask in range(1 << len(edges)):
        chosen = [edges[i] for i in range(len(edges)) if mask >> i & 1]
        if len(chosen) <= best:
            continue
        if all(
            not edges_in_common_clique(g, chosen[i], chosen[j])
            for i in range(len(chosen))
            for j in range(i + 1, len(chosen))
        ):
            best = len(chosen)
    return best


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    for k in range(2, g.n + 1):
        if _colorable(g, k):
            return k
    return g.n


def _colorable(g: Graph, k: int) -> bool:
    color = [-1] * g.n

    def bt(v: int) -> bool:
        if v == g.n:
            return True
        used = {color[u] for u in g.neighbors(v) if color[u] >= 0}
        for c in range(min(k, v + 1)):
            if c not in used:
                color[v] = c
                if bt(v + 1):
                    return True
                color[v] = -1
        return False

    return bt(0)


def brute_theta_e(g: Graph, max_k: int = 12) -> int:
    """Minimum edge-clique cover size by trying all clique combinations."""
    edges = set(g.edges())
    if not edges:
        return 0
    cliques = [c for c in brute_maximal_cliques(g) if len(c) > 1]
    edge_sets = [
        {tuple(sorted(p)) for p in combinations(c, 2)} for c in cliques
    ]
    for k in range(1, max_k + 1):
        for combo in combinations(range(len(cliques)), k):
            covered = set()
            for i in combo:
                covered |= edge_sets[i]
            if covered >= edges:
                return k
    raise RuntimeError(f"no cover of size <= {max_k}")


def has_induced_p4(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        degs = [0] * 4
        m = 0
        for i, j in combinations(range(4), 2):
            if g.has_edge(quad[i], quad[j]):
                degs[i] += 1
                degs[j] += 1
                m += 1
        if m == 3 and sorted(degs) == [1, 1, 2, 2]:
            return True
    return False


def independent_edge_set_valid(g: Graph, edges) -> bool:
    es = list(edges)
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if edges_in_common_clique(g, es[i], es[j]):
                return False
    return True
