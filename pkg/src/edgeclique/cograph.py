"""Independent edge sets of cographs.

For a cograph the size of a maximum independent edge set equals

    max over independent vertex sets A of  sum over x in A of  d'(x),

where d'(x) is the independence number of the subgraph induced by the
neighborhood of x.  The primary evaluator below computes every d'(x) by a
cotree DP on the restricted cotree and then runs one weighted DP with the
d' values as weights.  A second, structurally different evaluator recurses
over the cotree of one side of each join, carrying the set of forced
endpoints; the two must always agree and are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cotree import Cotree, cotree_decompose, cotree_mwis, restrict
from .graph import Graph, iter_bits, mask_of
from .oracles import mis_exact


@dataclass(frozen=True)
class AlphaPrimeCertificate:
    """Value plus everything needed to check it by hand.

    ``witness_edges`` is an independent edge set of the claimed size: for
    each x in the optimizing vertex set it contains the edges from x to a
    maximum independent subset of x's neighborhood.
    """

    value: int
    independent_set: tuple[int, ...]
    d_prime: tuple[int, ...]
    neighborhood_sets: dict[int, tuple[int, ...]]
    witness_edges: tuple[tuple[int, int], ...]
    method: str

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "independent_set": list(self.independent_set),
            "d_prime": list(self.d_prime),
            "neighborhood_sets": {
                str(x): list(s) for x, s in sorted(self.neighborhood_sets.items())
            },
            "witness_edges": [list(e) for e in self.witness_edges],
            "method": self.method,
        }


def d_prime(g: Graph, x: int, cotree: Cotree | None = None) -> int:
    """Independence number of the subgraph induced by the neighborhood of x.

    Uses the cotree DP when the graph is a cograph (pass a precomputed
    cotree to skip re-decomposition); otherwise falls back to the exact
    oracle, which is guarded.
    """
    nb = g.adj_bits(x)
    if nb == 0:
        return 0
    if cotree is None:
        try:
            cotree = cotree_decompose(g)
        except Exception:
            value, _ = mis_exact(g.induced(iter_bits(nb)))
            return value
    sub = restrict(cotree, nb)
    assert sub is not None
    value, _ = cotree_mwis(sub, [1] * g.n)
    return value


def _neighborhood_mis(g: Graph, t: Cotree, x: int) -> tuple[int, ...]:
    nb = g.adj_bits(x)
    if nb == 0:
        return ()
    sub = restrict(t, nb)
    _, chosen = cotree_mwis(sub, [1] * g.n)
    return tuple(sorted(chosen))


def alpha_prime_cograph(g: Graph) -> AlphaPrimeCertificate:
    """Maximum independent edge set size of a cograph, with a certificate.

    Raises ``NotCograph`` (with an induced-P4 witness) on other inputs.
    """
    t = cotree_decompose(g)
    unit = [1] * g.n
    d = [0] * g.n
    for x in range(g.n):
        nb = g.adj_bits(x)
        if nb:
            sub = restrict(t, nb)
            d[x], _ = cotree_mwis(sub, unit)
    value, chosen = cotree_mwis(t, d)
    witness: list[tuple[int, int]] = []
    nb_sets: dict[int, tuple[int, ...]] = {}
    for x in sorted(chosen):
        mates = _neighborhood_mis(g, t, x)
        nb_sets[x] = mates
        witness.extend(tuple(sorted((x, z))) for z in mates)
    return AlphaPrimeCertificate(
        value=value,
        independent_set=tuple(sorted(chosen)),
        d_prime=tuple(d),
        neighborhood_sets=nb_sets,
        witness_edges=tuple(sorted(witness)),
        method="cograph-dp",
    )


def alpha_prime_pair(g: Graph, a_set, b_set) -> int:
    """Largest independent edge set of G[A u B] with no edge inside B.

    A and B must be disjoint, A nonempty, G[A u B] a cograph, and A
    complete to B or anticomplete to B.  ``alpha_prime_pair(g, V, ())``
    computes the plain maximum independent edge set size, by a recursion
    that is independent of the d'-weighted DP.
    """
    a_mask = a_set if isinstance(a_set, int) else mask_of(a_set)
    b_mask = b_set if isinstance(b_set, int) else mask_of(b_set)
    if a_mask == 0:
        raise ValueError("A must be nonempty")
    if a_mask & b_mask:
        raise ValueError("A and B must be disjoint")
    sub = g.induced(iter_bits(a_mask | b_mask))
    # positions of A and B inside the induced subgraph
    verts = sorted(iter_bits(a_mask | b_mask))
    pos = {v: i for i, v in enumerate(verts)}
    a_local = mask_of(pos[v] for v in iter_bits(a_mask))
    b_local = mask_of(pos[v] for v in iter_bits(b_mask))
    t = cotree_decompose(sub)  # NotCograph on precondition violation
    if b_local:
        crossing = all(
            sub.adj_bits(v) & b_local == b_local for v in iter_bits(a_local)
        )
        separated = all(
            sub.adj_bits(v) & b_local == 0 for v in iter_bits(a_local)
        )
        if separated:
            # B contributes nothing: recurse on A alone
            return alpha_prime_pair(g, a_mask, 0)
        if not crossing:
            raise ValueError("A must be complete or anticomplete to B")
    ta = restrict(t, a_local)
    assert ta is not None
    return _pair_rec(sub, ta, b_local)


def _pair_rec(g: Graph, ta: Cotree, b_mask: int) -> int:
    if ta.kind == "leaf":
        # every chosen edge runs from the single A-vertex into B; a set of
        # them is independent exactly when the B-endpoints are
        if b_mask == 0:
            return 0
        value, _ = mis_exact(g.induced(iter_bits(b_mask)))
        return value
    left, right = ta.children
    if ta.kind == "union":
        return _pair_rec(g, left, b_mask) + _pair_rec(g, right, b_mask)
    return max(
        _pair_rec(g, left, b_mask | right.leaf_mask),
        _pair_rec(g, right, b_mask | left.leaf_mask),
    )


def is_trivially_perfect(g: Graph) -> tuple[bool, tuple[tuple[int, ...], str] | None]:
    """4-subset scan for an induced P4 or C4; witness is (vertices, kind)."""
    for quad in combinations(range(g.n), 4):
        deg = [0] * 4
        m = 0
        for i, j in combinations(range(4), 2):
            if g.has_edge(quad[i], quad[j]):
                deg[i] += 1
                deg[j] += 1
                m += 1
        if m == 4 and max(deg) == 2:
            return False, (quad, "C4")
        if m == 3 and sorted(deg) == [1, 1, 2, 2]:
            return False, (quad, "P4")
    return True, None
