"""Exact independent-set and vertex-cover oracles.

Both are branch-and-bound searches over vertex bitmasks, exact by
construction, and guarded: instances above the vertex guard raise
``GuardExceeded`` instead of running unbounded.  All search state is local
to one call, so concurrent invocations on shared graphs are safe.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import GuardExceeded
from .graph import Graph, iter_bits

DEFAULT_GUARD = 60


def _components_of(adj: list[int], mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = 0
        frontier = start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & mask & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def _clique_cover_bound(adj: list[int], w: list[int], mask: int) -> int:
    # Greedy clique partition of the residual graph; an independent set takes
    # at most one vertex per clique, so the per-clique maxima sum to a bound.
    verts = sorted(iter_bits(mask), key=lambda v: -(adj[v] & mask).bit_count())
    clique_masks: list[int] = []
    clique_best: list[int] = []
    for v in verts:
        bit = 1 << v
        for i, cm in enumerate(clique_masks):
            if cm & ~adj[v] == 0:
                clique_masks[i] = cm | bit
                if w[v] > clique_best[i]:
                    clique_best[i] = w[v]
                break
        else:
            clique_masks.append(bit)
            clique_best.append(w[v])
    return sum(clique_best)


class _MisSearch:
    """One maximum-weight independent set solve over bitmasks."""

    def __init__(self, adj: list[int], w: list[int]):
        self.adj = adj
        self.w = w
        self.best_val = 0
        self.best_set = 0
        self.found = True  # the empty set achieves the initial incumbent 0

    def _record(self, val: int, chosen: int) -> None:
        if val > self.best_val:
            self.best_val = val
            self.best_set = chosen
            self.found = True

    def solve(self, mask: int, acc: int, chosen: int) -> None:
        adj, w = self.adj, self.w
        # reductions: drop zero weight, take isolated, resolve heavy pendants
        while True:
            changed = False
            for v in iter_bits(mask):
                bit = 1 << v
                if not mask & bit:
                    continue
                if w[v] == 0:
                    mask &= ~bit
                    changed = True
                    continue
                nb = adj[v] & mask
                if nb == 0:
                    acc += w[v]
                    chosen |= bit
                    mask &= ~bit
                    changed = True
                elif nb & (nb - 1) == 0:
                    u = nb.bit_length() - 1
                    if w[v] >= w[u]:
                        acc += w[v]
                        chosen |= bit
                        mask &= ~(bit | nb)
                        changed = True
            if not changed:
                break
        if mask == 0:
            self._record(acc, chosen)
            return
        if acc + _clique_cover_bound(adj, w, mask) <= self.best_val:
            return
        comps = _components_of(adj, mask)
        if len(comps) > 1:
            self._solve_split(comps, acc, chosen)
            return
        # dominance: drop v if a neighbor u has N[u] within N[v] and w[u] >= w[v]
        for v in iter_bits(mask):
            vb = 1 << v
            closed_v = (adj[v] & mask) | vb
            for u in iter_bits(adj[v] & mask):
                if w[u] >= w[v] and ((adj[u] & mask) | (1 << u)) & ~closed_v == 0:
                    self.solve(mask & ~vb, acc, chosen)
                    return
        v = max(iter_bits(mask), key=lambda x: (adj[x] & mask).bit_count())
        bit = 1 << v
        self.solve(mask & ~adj[v] & ~bit, acc + w[v], chosen | bit)
        self.solve(mask & ~bit, acc, chosen)

    def _solve_split(self, comps: list[int], acc: int, chosen: int) -> None:
        # Solve components separately.  Each sub-search runs with its bar set
        # to what the incumbent requires of it given exact values of earlier
        # components and optimistic bounds for later ones; a sub-search that
        # fails its bar proves the whole combination cannot win.
        adj, w = self.adj, self.w
        rest = [0] * (len(comps) + 1)
        for i in range(len(comps) - 1, -1, -1):
            rest[i] = rest[i + 1] + _clique_cover_bound(adj, w, comps[i])
        total = acc
        parts = 0
        for i, comp in enumerate(comps):
            saved = (self.best_val, self.best_set, self.found)
            self.best_val = max(0, self.best_val - total - rest[i + 1])
            self.best_set = 0
            self.found = self.best_val == 0
            self.solve(comp, 0, 0)
            sub_val, sub_set, sub_found = self.best_val, self.best_set, self.found
            self.best_val, self.best_set, self.found = saved
            if not sub_found:
                return
            total += sub_val
            parts |= sub_set
        self._record(total, chosen | parts)


def mis_exact(
    g: Graph,
    weights: Sequence[int] | None = None,
    guard: int = DEFAULT_GUARD,
) -> tuple[int, frozenset[int]]:
    """Maximum-weight independent set; unit weights give the independence number.

    Returns ``(value, vertex set)``.  Weights must be nonnegative integers;
    zero-weight vertices never enter the returned set.
    """
    n = g.n
    if n > guard:
        raise GuardExceeded("maximum independent set", n, guard)
    if weights is None:
        w = [1] * n
    else:
        w = list(weights)
        if len(w) != n:
            raise ValueError("weights length must equal vertex count")
        if any(x < 0 for x in w):
            raise ValueError("weights must be nonnegative")
    adj = [g.adj_bits(v) for v in range(n)]
    search = _MisSearch(adj, w)
    if n:
        search.solve((1 << n) - 1, 0, 0)
    return search.best_val, frozenset(iter_bits(search.best_set))


def vc_exact(g: Graph, guard: int = DEFAULT_GUARD) -> tuple[int, frozenset[int]]:
    """Exact minimum vertex cover.

    Independent branch-and-bound (degree-driven, with a matching lower
    bound); the value is cross-checked against ``n - alpha`` from
    ``mis_exact`` so a bug in either solver surfaces as a loud failure.
    """
    n = g.n
    if n > guard:
        raise GuardExceeded("minimum vertex cover", n, guard)
    adj = [g.adj_bits(v) for v in range(n)]

    best: list = [n, (1 << n) - 1]

    def matching_bound(mask: int) -> int:
        used = 0
        size = 0
        for v in iter_bits(mask):
            if used >> v & 1:
                continue
            nb = adj[v] & mask & ~used & ~(1 << v)
            if nb:
                used |= (1 << v) | (nb & -nb)
                size += 1
        return size

    def solve(mask: int, taken: int, size: int) -> None:
        # reductions: drop isolated; a degree-1 vertex forces its neighbor
        while True:
            changed = False
            for v in iter_bits(mask):
                if not mask >> v & 1:
                    continue
                nb = adj[v] & mask
                if nb == 0:
                    mask &= ~(1 << v)
                    changed = True
                elif nb & (nb - 1) == 0:
                    u = nb.bit_length() - 1
                    taken |= 1 << u
                    size += 1
                    mask &= ~((1 << v) | (1 << u))
                    changed = True
                    break
            if not changed:
                break
        if mask == 0:
            if size < best[0]:
                best[0] = size
                best[1] = taken
            return
        if size + matching_bound(mask) >= best[0]:
            return
        v = max(iter_bits(mask), key=lambda x: (adj[x] & mask).bit_count())
        bit = 1 << v
        # branch 1: v in the cover
        solve(mask & ~bit, taken | bit, size + 1)
        # branch 2: v stays out, so all its residual neighbors go in
        nb = adj[v] & mask
        solve(mask & ~bit & ~nb, taken | nb, size + nb.bit_count())

    if n:
        solve((1 << n) - 1, 0, 0)
    alpha, _ = mis_exact(g, guard=guard)
    if best[0] != n - alpha:
        raise RuntimeError(
            f"solver disagreement: vertex cover {best[0]} != n - alpha = {n - alpha}"
        )
    return best[0], frozenset(iter_bits(best[1]))
