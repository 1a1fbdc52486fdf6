"""Edge-clique covers: exact solver, verification, and lower bounds.

The exact solver is a set-cover branch and bound over the maximal cliques
(restricting to maximal cliques is safe, since any clique of a cover can be
extended).  It branches on the uncovered edge lying in the fewest maximal
cliques and tries the candidate cliques covering the most uncovered edges
first.  A node budget turns it into an anytime solver: on exhaustion the
best incumbent comes back flagged non-optimal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cliques import DEFAULT_GUARD, maximal_cliques
from .errors import GuardExceeded
from .graph import Graph, iter_bits

EDGE_COVER = "edge-cover"
VERTEX_COVER_BY_CLIQUES = "vertex-cover-by-cliques"


@dataclass(frozen=True)
class CliqueCover:
    graph: Graph
    cliques: tuple[tuple[int, ...], ...]
    kind: str = EDGE_COVER

    def __len__(self) -> int:
        return len(self.cliques)


def verify_cover(g: Graph, cover: CliqueCover) -> tuple[bool, tuple | None]:
    """Check clique-ness of every member and coverage of every edge (or vertex).

    Returns ``(True, None)`` or ``(False, violation)`` where the violation
    is one of ``("vertex-out-of-range", i, v)``, ``("not-a-clique", i, (u, v))``,
    ``("uncovered-edge", (u, v))``, ``("uncovered-vertex", v)``.
    """
    for i, clique in enumerate(cover.cliques):
        for v in clique:
            if not 0 <= v < g.n:
                return False, ("vertex-out-of-range", i, v)
        for u, v in combinations(sorted(set(clique)), 2):
            if not g.has_edge(u, v):
                return False, ("not-a-clique", i, (u, v))
    if cover.kind == VERTEX_COVER_BY_CLIQUES:
        seen = set()
        for clique in cover.cliques:
            seen.update(clique)
        for v in range(g.n):
            if v not in seen:
                return False, ("uncovered-vertex", v)
        return True, None
    covered = set()
    for clique in cover.cliques:
        for u, v in combinations(sorted(set(clique)), 2):
            covered.add((u, v))
    for e in g.edges():
        if e not in covered:
            return False, ("uncovered-edge", e)
    return True, None


@dataclass(frozen=True)
class GyarfasBound:
    """ceil(log2(n+1)) when the graph qualifies, else the reason it does not."""

    applicable: bool
    value: int | None = None
    reason: str | None = None
    offenders: tuple = ()


def gyarfas_bound(g: Graph) -> GyarfasBound:
    """Logarithmic lower bound on the edge-clique cover number.

    Applies only to graphs with neither isolated nor equivalent vertices
    (adjacent vertices sharing a closed neighborhood); the offenders are
    named otherwise.
    """
    from .structure import equivalent_pairs

    report = equivalent_pairs(g)
    if report.isolated:
        return GyarfasBound(
            False, reason="isolated vertices", offenders=report.isolated
        )
    if report.pairs:
        return GyarfasBound(
            False, reason="equivalent vertices", offenders=report.pairs
        )
    return GyarfasBound(True, value=g.n.bit_length() if g.n else 0)


@dataclass
class ThetaResult:
    value: int
    cover: CliqueCover
    optimal: bool
    nodes: int
    lower_bounds: dict = field(default_factory=dict)


def theta_e_exact(
    g: Graph,
    budget: int | None = None,
    guard: int = DEFAULT_GUARD,
) -> ThetaResult:
    """Minimum number of cliques covering every edge, with the cover.

    Desk scale: refuses graphs with more than ``guard`` edges unless a
    node ``budget`` is given, in which case the search stops there and the
    incumbent is returned with ``optimal=False`` (unless it already matches
    the lower bound).
    """
    m = g.m
    if budget is None and m > guard:
        raise GuardExceeded("edge-clique cover", m, guard)
    edges = g.edges()
    if not edges:
        return ThetaResult(0, CliqueCover(g, ()), True, 0, {"volume": 0})
    index = {e: i for i, e in enumerate(edges)}
    cliques = [c for c in maximal_cliques(g, guard=max(guard, g.n)) if len(c) > 1]
    masks = []
    for c in cliques:
        mk = 0
        for u, v in combinations(c, 2):
            mk |= 1 << index[(u, v)]
        masks.append(mk)
    full = (1 << m) - 1
    biggest = max(mk.bit_count() for mk in masks)
    per_edge = [
        [i for i, mk in enumerate(masks) if mk >> e & 1] for e in range(m)
    ]

    # greedy incumbent
    def greedy() -> list[int]:
        chosen = []
        covered = 0
        while covered != full:
            best = min(
                range(len(masks)),
                key=lambda i: (-(masks[i] & ~covered).bit_count(), cliques[i]),
            )
            chosen.append(best)
            covered |= masks[best]
        return chosen

    incumbent = greedy()
    gy = gyarfas_bound(g)
    volume = -(-m // biggest)
    root_lb = max(volume, gy.value or 0)
    bounds = {"volume": volume}
    if gy.applicable:
        bounds["gyarfas"] = gy.value

    best: list = [incumbent]
    nodes = [0]
    exhausted = [False]

    def search(covered: int, chosen: list[int]) -> None:
        if exhausted[0]:
            return
        nodes[0] += 1
        if budget is not None and nodes[0] > budget:
            exhausted[0] = True
            return
        if covered == full:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        uncovered = (~covered) & full
        lb = -(-uncovered.bit_count() // max(
            (masks[i] & uncovered).bit_count() for i in range(len(masks))
        ))
        if len(chosen) + lb >= len(best[0]):
            return
        e = min(iter_bits(uncovered), key=lambda x: len(per_edge[x]))
        cands = sorted(
            per_edge[e],
            key=lambda i: (-(masks[i] & uncovered).bit_count(), cliques[i]),
        )
        for i in cands:
            chosen.append(i)
            search(covered | masks[i], chosen)
            chosen.pop()

    search(0, [])
    value = len(best[0])
    optimal = not exhausted[0] or value == root_lb
    cover = CliqueCover(g, tuple(cliques[i] for i in sorted(best[0])))
    return ThetaResult(value, cover, optimal, nodes[0], bounds)


def _greedy_coloring(adj: list[int], n: int) -> list[int]:
    order = sorted(range(n), key=lambda v: -adj[v].bit_count())
    color = [-1] * n
    for v in order:
        used = {color[u] for u in iter_bits(adj[v]) if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _greedy_clique(adj: list[int], n: int) -> list[int]:
    best: list[int] = []
    for seed in range(n):
        clique = [seed]
        common = adj[seed]
        while common:
            v = max(iter_bits(common), key=lambda x: (adj[x] & common).bit_count())
            clique.append(v)
            common &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def chromatic_number_exact(
    g: Graph, guard: int = DEFAULT_GUARD
) -> tuple[int, list[int]]:
    """Exact chromatic number and a coloring, by iterative-deepening backtracking."""
    n = g.n
    if n > guard:
        raise GuardExceeded("chromatic number", n, guard)
    if n == 0:
        return 0, []
    adj = [g.adj_bits(v) for v in range(n)]
    greedy = _greedy_coloring(adj, n)
    ub = max(greedy) + 1
    clique = _greedy_clique(adj, n)
    lb = len(clique)

    def colorable(k: int) -> list[int] | None:
        color = [-1] * n
        for i, v in enumerate(clique):  # fix a clique: one color each
            if i >= k:
                return None
            color[v] = i
        uncolored = [v for v in range(n) if color[v] < 0]

        def bt(used: int) -> bool:
            pick = -1
            pick_opts: int | None = None
            for v in uncolored:
                if color[v] >= 0:
                    continue
                forbidden = 0
                for u in iter_bits(adj[v]):
                    if color[u] >= 0:
                        forbidden |= 1 << color[u]
                # allow one brand-new color at most (symmetry breaking)
                limit = min(k, used + 1)
                opts = ~forbidden & ((1 << limit) - 1)
                if opts == 0:
                    return False
                if pick_opts is None or opts.bit_count() < pick_opts.bit_count():
                    pick, pick_opts = v, opts
            if pick < 0:
                return True
            for c in iter_bits(pick_opts):
                color[pick] = c
                if bt(max(used, c + 1)):
                    return True
                color[pick] = -1
            return False

        return list(color) if bt(len(clique)) else None

    for k in range(lb, ub):
        coloring = colorable(k)
        if coloring is not None:
            return k, coloring
    return ub, greedy


def clique_cover_exact(
    g: Graph, guard: int = DEFAULT_GUARD
) -> tuple[int, CliqueCover]:
    """Minimum number of cliques covering all vertices.

    Computed as an exact coloring of the complement; color classes come
    back as the clique list.
    """
    k, coloring = chromatic_number_exact(g.complement(), guard=guard)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    cover = CliqueCover(
        g,
        tuple(tuple(sorted(vs)) for _, vs in sorted(classes.items())),
        kind=VERTEX_COVER_BY_CLIQUES,
    )
    return k, cover
