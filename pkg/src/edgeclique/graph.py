"""Core immutable graph type and the standard constructions used everywhere else.

Vertices are dense integers 0..n-1.  Adjacency is kept as one bitmask per
vertex so edge tests, neighborhood intersections and subset checks are single
integer operations.  Optional string labels ride along for gadget
constructions that need to name vertices; labels never affect equality.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations, permutations


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable after construction; share them freely across
    threads.  Build one with ``Graph(n, edges)`` or the constructors below.
    """

    __slots__ = ("n", "_adj", "_labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        if labels is not None and len(labels) != n:
            raise ValueError("labels length must equal vertex count")
        object.__setattr__(self, "_labels", tuple(labels) if labels is not None else None)

    def __setattr__(self, name, value):  # pragma: no cover - guard rail
        raise AttributeError("Graph is immutable")

    # -- basic queries ------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(a.bit_count() for a in self._adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def adj_bits(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask."""
        return self._adj[v]

    def closed_bits(self, v: int) -> int:
        return self._adj[v] | (1 << v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            for off in iter_bits(rest):
                out.append((u, u + 1 + off))
        return out

    def label(self, v: int) -> str | None:
        return self._labels[v] if self._labels is not None else None

    @property
    def labels(self) -> tuple[str, ...] | None:
        return self._labels

    # -- derived graphs -----------------------------------------------

    def with_labels(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges(), labels=labels)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph; old vertex ``sorted(vertices)[i]`` becomes ``i``."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [
            (pos[u], pos[v])
            for u, v in combinations(vs, 2)
            if self.has_edge(u, v)
        ]
        labels = None
        if self._labels is not None:
            labels = [self._labels[v] for v in vs]
        return Graph(len(vs), edges, labels=labels)

    def complement(self) -> "Graph":
        edges = [
            (u, v)
            for u, v in combinations(range(self.n), 2)
            if not self.has_edge(u, v)
        ]
        return Graph(self.n, edges, labels=self._labels)

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- constructors -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel_graph(rim: int) -> Graph:
    """Cycle of length ``rim`` plus a hub (vertex ``rim``) adjacent to all of it."""
    if rim < 3:
        raise ValueError("wheel rim needs at least three vertices")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(rim + 1, edges)


def cocktail_party(n: int) -> Graph:
    """Complement of a perfect matching on 2n vertices; pairs are (2i, 2i+1)."""
    if n < 1:
        raise ValueError("cocktail party graph needs n >= 1")
    edges = [
        (u, v)
        for u, v in combinations(range(2 * n), 2)
        if u // 2 != v // 2
    ]
    return Graph(2 * n, edges)


def complete_multipartite(part_size: int, parts: int) -> Graph:
    """Complete multipartite graph: ``parts`` parts of ``part_size`` vertices each.

    Vertex id = part * part_size + element, so covers built on top of this
    numbering are reproducible byte for byte.
    """
    if part_size < 1 or parts < 1:
        raise ValueError("part size and part count must be positive")
    n = part_size * parts
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if u // part_size != v // part_size
    ]
    return Graph(n, edges)


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted by ``g1.n``."""
    edges = g1.edges() + [(u + g1.n, v + g1.n) for u, v in g2.edges()]
    labels = None
    if g1.labels is not None or g2.labels is not None:
        l1 = g1.labels or tuple(str(v) for v in range(g1.n))
        l2 = g2.labels or tuple(str(v) for v in range(g2.n))
        labels = l1 + l2
    return Graph(g1.n + g2.n, edges, labels=labels)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    base = union(g1, g2)
    edges = base.edges()
    edges += [(u, v + g1.n) for u in range(g1.n) for v in range(g2.n)]
    return Graph(base.n, edges, labels=base.labels)


_SPECIAL = {
    "cocktail_party": (cocktail_party, 1),
    "complete_multipartite": (complete_multipartite, 2),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "wheel": (wheel_graph, 1),
    "complete": (complete_graph, 1),
    "empty": (empty_graph, 1),
}


def special_graph(kind: str, params: Sequence[int]) -> Graph:
    """Dispatch on a graph-family name; used by the command line."""
    try:
        ctor, arity = _SPECIAL[kind]
    except KeyError:
        raise ValueError(
            f"unknown graph kind {kind!r}; valid: {sorted(_SPECIAL)}"
        ) from None
    if len(params) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exhaustive-permutation isomorphism test.  Only intended for n <= 8."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.n > 8:
        raise ValueError("exhaustive isomorphism test is limited to n <= 8")
    if sorted(g1.degree(v) for v in g1.vertices()) != sorted(
        g2.degree(v) for v in g2.vertices()
    ):
        return False
    e2 = {frozenset(e) for e in g2.edges()}
    for perm in permutations(range(g1.n)):
        if all(frozenset((perm[u], perm[v])) in e2 for u, v in g1.edges()):
            return True
    return False
