"""Cotree decomposition of cographs and the weighted independent-set DP on it.

A cotree is a rooted binary tree whose leaves are the graph's vertices and
whose internal nodes are labeled ``join`` or ``union``: two vertices are
adjacent exactly when their lowest common ancestor is a join node.  The
decomposition here is the quadratic-ish textbook recursion (split into
connected components, else into co-components, else fail), with nodes of
higher arity binarized left-deep.  Everything is iterative so deep cotrees
on a few hundred vertices stay clear of the recursion limit.
"""

from __future__ import annotations

from .errors import NotCograph
from .graph import Graph, iter_bits, mask_of

LEAF = "leaf"
UNION = "union"
JOIN = "join"


class Cotree:
    """One cotree node; ``leaf_mask`` is the vertex bitmask of its subtree."""

    __slots__ = ("kind", "vertex", "children", "leaf_mask")

    def __init__(self, kind, vertex=None, children=(), leaf_mask=0):
        self.kind = kind
        self.vertex = vertex
        self.children = list(children)
        self.leaf_mask = leaf_mask

    def __repr__(self):
        if self.kind == LEAF:
            return f"Leaf({self.vertex})"
        return f"{self.kind.capitalize()}({self.leaf_mask.bit_count()} leaves)"


def _leaf(v: int) -> Cotree:
    return Cotree(LEAF, vertex=v, leaf_mask=1 << v)


def _components(g: Graph, subset: int) -> list[int]:
    comps = []
    rest = subset
    while rest:
        comp = 0
        frontier = rest & -rest
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj_bits(v)
            frontier = nxt & subset & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def _co_components(g: Graph, subset: int) -> list[int]:
    comps = []
    rest = subset
    while rest:
        comp = 0
        frontier = rest & -rest
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= subset & ~g.adj_bits(v) & ~(1 << v)
            frontier = nxt & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def _find_p4(g: Graph, subset: int) -> tuple[int, int, int, int]:
    # direct pattern search for an induced path a-b-c-d
    for b in iter_bits(subset):
        nb = g.adj_bits(b) & subset
        for a in iter_bits(nb):
            for c in iter_bits(nb & ~g.closed_bits(a)):
                tail = g.adj_bits(c) & subset & ~g.closed_bits(b) & ~g.closed_bits(a)
                if tail:
                    d = (tail & -tail).bit_length() - 1
                    return (a, b, c, d)
    raise AssertionError("no induced P4 found in an undecomposable subset")


def _chain(kind: str, parts: list[Cotree]) -> Cotree:
    # left-deep binarization, parts ordered by smallest contained vertex
    node = parts[0]
    for part in parts[1:]:
        node = Cotree(
            kind, children=[node, part], leaf_mask=node.leaf_mask | part.leaf_mask
        )
    return node


def cotree_decompose(g: Graph) -> Cotree:
    """Decompose into a cotree, or raise ``NotCograph`` with an induced-P4 witness."""
    if g.n == 0:
        raise ValueError("cannot decompose the empty graph")
    root_holder: list[Cotree | None] = [None]
    # work items: a vertex subset plus the (node, child index) slot awaiting it
    stack: list[tuple[int, list, int]] = [((1 << g.n) - 1, root_holder, 0)]
    while stack:
        subset, holder, idx = stack.pop()
        if subset & (subset - 1) == 0:
            holder[idx] = _leaf(subset.bit_length() - 1)
            continue
        parts = _components(g, subset)
        kind = UNION
        if len(parts) == 1:
            parts = _co_components(g, subset)
            kind = JOIN
            if len(parts) == 1:
                raise NotCograph(_find_p4(g, subset))
        parts.sort(key=lambda p: p & -p)
        placeholders = [Cotree(LEAF, leaf_mask=p) for p in parts]
        node = _chain(kind, placeholders)
        holder[idx] = node
        # replace each placeholder with the real decomposition of its part
        frontier = [node]
        while frontier:
            cur = frontier.pop()
            for i, ch in enumerate(cur.children):
                if ch in placeholders:
                    stack.append((ch.leaf_mask, cur.children, i))
                else:
                    frontier.append(ch)
    root = root_holder[0]
    assert root is not None
    return root


def cotree_realizes(t: Cotree, g: Graph) -> bool:
    """Check that the cotree reproduces the adjacency of ``g`` exactly."""
    full = (1 << g.n) - 1
    if t.leaf_mask != full:
        return False
    stack = [t]
    while stack:
        node = stack.pop()
        if node.kind == LEAF:
            continue
        left, right = node.children
        a, b = left.leaf_mask, right.leaf_mask
        if node.kind == JOIN:
            for v in iter_bits(a):
                if g.adj_bits(v) & b != b:
                    return False
        else:
            for v in iter_bits(a):
                if g.adj_bits(v) & b:
                    return False
        stack.extend(node.children)
    return True


def cotree_to_graph(t: Cotree, n: int | None = None) -> Graph:
    """Materialize the graph a cotree describes."""
    if n is None:
        n = t.leaf_mask.bit_length()
    edges = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.kind == LEAF:
            continue
        if node.kind == JOIN:
            left, right = node.children
            for u in iter_bits(left.leaf_mask):
                for v in iter_bits(right.leaf_mask):
                    edges.append((u, v))
        stack.extend(node.children)
    return Graph(n, edges)


def restrict(t: Cotree, subset) -> Cotree | None:
    """Cotree of the induced subgraph on ``subset`` (bitmask or iterable).

    Restriction keeps the surviving leaves, contracts internal nodes with a
    single surviving child, and drops empty subtrees.  Returns None when no
    leaf survives.
    """
    mask = subset if isinstance(subset, int) else mask_of(subset)
    order: list[Cotree] = []
    stack = [t]
    while stack:
        node = stack.pop()
        order.append(node)
        stack.extend(node.children)
    rebuilt: dict[int, Cotree | None] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            rebuilt[id(node)] = node if node.leaf_mask & mask else None
            continue
        kids = [rebuilt[id(c)] for c in node.children]
        kids = [k for k in kids if k is not None]
        if not kids:
            rebuilt[id(node)] = None
        elif len(kids) == 1:
            rebuilt[id(node)] = kids[0]
        else:
            rebuilt[id(node)] = Cotree(
                node.kind,
                children=kids,
                leaf_mask=kids[0].leaf_mask | kids[1].leaf_mask,
            )
    return rebuilt[id(t)]


def cotree_mwis(t: Cotree, weights) -> tuple[int, frozenset[int]]:
    """Maximum-weight independent set via the cotree DP.

    Join nodes take the better child (value ties broken toward the
    lexicographically smaller vertex set), union nodes add.  Unit weights
    give the independence number.
    """
    order: list[Cotree] = []
    stack = [t]
    while stack:
        node = stack.pop()
        order.append(node)
        stack.extend(node.children)
    val: dict[int, int] = {}
    sel: dict[int, tuple[int, ...]] = {}
    for node in reversed(order):
        if node.kind == LEAF:
            v = node.vertex
            w = weights[v]
            val[id(node)] = w
            sel[id(node)] = (v,) if w > 0 else ()
        elif node.kind == UNION:
            left, right = node.children
            val[id(node)] = val[id(left)] + val[id(right)]
            sel[id(node)] = tuple(sorted(sel[id(left)] + sel[id(right)]))
        else:
            left, right = node.children
            vl, vr = val[id(left)], val[id(right)]
            if vl > vr or (vl == vr and sel[id(left)] <= sel[id(right)]):
                val[id(node)] = vl
                sel[id(node)] = sel[id(left)]
            else:
                val[id(node)] = vr
                sel[id(node)] = sel[id(right)]
    return val[id(t)], frozenset(sel[id(t)])
