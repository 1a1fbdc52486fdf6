"""Distance-hereditary graphs: pruning sequences and independent-set machinery.

A graph is distance-hereditary exactly when it can be dismantled one vertex
at a time, each eliminated vertex being isolated, pendant, a false twin
(nonadjacent, same open neighborhood) or a true twin (adjacent, same closed
neighborhood) in the current residual graph.  The eliminator below is the
recognition procedure; replaying its output backward rebuilds the graph.

Weighted independent sets ride the same elimination order with one local
weight-transfer rule per case:

    isolated x          answer += w(x)
    pendant x with y    answer += w(x);  w(y) <- max(w(y) - w(x), 0)
    false twin x of y   w(y) <- w(x) + w(y)
    true twin x of y    w(y) <- max(w(x), w(y))

Each rule is exact on arbitrary graphs; applied along a pruning sequence
they solve the whole problem.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cograph import AlphaPrimeCertificate
from .errors import NotDistanceHereditary
from .graph import Graph, iter_bits

ISOLATED = "isolated"
PENDANT = "pendant"
FALSE_TWIN = "false_twin"
TRUE_TWIN = "true_twin"


@dataclass(frozen=True)
class PruningStep:
    kind: str
    vertex: int
    partner: int | None = None


@dataclass(frozen=True)
class PruningSequence:
    """Elimination order leaving ``final_vertex``; replay backward to rebuild."""

    n: int
    steps: tuple[PruningStep, ...]
    final_vertex: int


def pruning_sequence(g: Graph) -> PruningSequence:
    """Greedy elimination; raises ``NotDistanceHereditary`` when stuck.

    Case preference per round is isolated > pendant > false twin > true
    twin, lowest vertex id first, so sequences are deterministic.
    """
    if g.n == 0:
        raise ValueError("empty graph has no pruning sequence")
    alive = (1 << g.n) - 1
    adj = [g.adj_bits(v) for v in range(g.n)]
    steps: list[PruningStep] = []
    while alive & (alive - 1):
        step = _find_elimination(adj, alive)
        if step is None:
            raise NotDistanceHereditary(tuple(iter_bits(alive)))
        steps.append(step)
        alive &= ~(1 << step.vertex)
    return PruningSequence(g.n, tuple(steps), alive.bit_length() - 1)


def _find_elimination(adj: list[int], alive: int) -> PruningStep | None:
    pendant = None
    open_groups: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for v in iter_bits(alive):  # increasing vertex id
        nb = adj[v] & alive
        if nb == 0:
            return PruningStep(ISOLATED, v)
        if pendant is None and nb & (nb - 1) == 0:
            pendant = PruningStep(PENDANT, v, nb.bit_length() - 1)
        open_groups.setdefault(nb, []).append(v)
        closed_groups.setdefault(nb | (1 << v), []).append(v)
    if pendant is not None:
        return pendant
    for kind, groups in ((FALSE_TWIN, open_groups), (TRUE_TWIN, closed_groups)):
        twins = [grp for grp in groups.values() if len(grp) > 1]
        if twins:
            grp = min(twins)  # group lists are increasing, so min is by lowest id
            return PruningStep(kind, grp[0], grp[1])
    return None


def rebuild(seq: PruningSequence) -> Graph:
    """Reconstruct the graph a pruning sequence came from (same vertex ids)."""
    adj = [0] * seq.n
    alive = 1 << seq.final_vertex
    for step in reversed(seq.steps):
        x = step.vertex
        if step.kind == ISOLATED:
            nb = 0
        elif step.kind == PENDANT:
            nb = 1 << step.partner
        elif step.kind == FALSE_TWIN:
            nb = adj[step.partner] & alive
        else:
            nb = (adj[step.partner] & alive) | (1 << step.partner)
        adj[x] = nb
        for u in iter_bits(nb):
            adj[u] |= 1 << x
        alive |= 1 << x
    edges = [(u, v) for u in range(seq.n) for v in iter_bits(adj[u]) if u < v]
    return Graph(seq.n, edges)


def is_distance_hereditary(g: Graph) -> bool:
    try:
        pruning_sequence(g)
        return True
    except NotDistanceHereditary:
        return False


def mwis_dh(g: Graph, weights=None) -> tuple[int, frozenset[int]]:
    """Maximum-weight independent set of a distance-hereditary graph.

    Applies the weight-transfer rules along a pruning sequence, then walks
    the record backward to reconstruct an optimal vertex set.
    """
    if weights is None:
        weights = [1] * g.n
    w = list(weights)
    if len(w) != g.n:
        raise ValueError("weights length must equal vertex count")
    if any(x < 0 for x in w):
        raise ValueError("weights must be nonnegative")
    seq = pruning_sequence(g)
    base = 0
    record: list[tuple] = []
    for step in seq.steps:
        x, y = step.vertex, step.partner
        if step.kind == ISOLATED:
            base += w[x]
            record.append((ISOLATED, x, w[x]))
        elif step.kind == PENDANT:
            base += w[x]
            after = max(w[y] - w[x], 0)
            record.append((PENDANT, x, y, w[x], after))
            w[y] = after
        elif step.kind == FALSE_TWIN:
            record.append((FALSE_TWIN, x, y, w[x]))
            w[y] = w[x] + w[y]
        else:
            record.append((TRUE_TWIN, x, y, w[x] > w[y]))
            w[y] = max(w[x], w[y])
    last = seq.final_vertex
    value = base + w[last]
    chosen: set[int] = {last} if w[last] > 0 else set()
    # Walk the record backward, growing an optimal set.  A vertex "carries"
    # its reduced weight at the moment it was decided; a pendant fold that
    # clamped its neighbor to zero means the pendant side wins, so the
    # neighbor gets displaced rather than kept.
    for item in reversed(record):
        if item[0] == ISOLATED:
            _, x, wx = item
            if wx > 0:
                chosen.add(x)
        elif item[0] == PENDANT:
            _, x, y, wx, wy_after = item
            if y in chosen:
                if wy_after == 0:
                    chosen.discard(y)
                    if wx > 0:
                        chosen.add(x)
            elif wx > 0:
                chosen.add(x)
        elif item[0] == FALSE_TWIN:
            _, x, y, wx = item
            if y in chosen and wx > 0:
                chosen.add(x)
        else:
            _, x, y, x_heavier = item
            if y in chosen and x_heavier:
                chosen.discard(y)
                chosen.add(x)
    return value, frozenset(chosen)


def alpha_prime_dh(g: Graph) -> AlphaPrimeCertificate:
    """Maximum independent edge set size of a distance-hereditary graph.

    Same certificate shape as the cograph engine: the d' value of a vertex
    is the independence number of its neighborhood (induced subgraphs stay
    distance-hereditary), and one weighted solve with those values as
    weights finishes the job.
    """
    pruning_sequence(g)  # recognition up front; raises NotDistanceHereditary
    d = [0] * g.n
    nb_sets: dict[int, tuple[int, ...]] = {}
    for x in range(g.n):
        nb = g.adj_bits(x)
        if nb == 0:
            continue
        verts = sorted(iter_bits(nb))
        sub = g.induced(verts)
        val, local = mwis_dh(sub)
        d[x] = val
        nb_sets[x] = tuple(sorted(verts[i] for i in local))
    value, chosen = mwis_dh(g, d)
    witness = []
    kept_sets = {}
    for x in sorted(chosen):
        mates = nb_sets.get(x, ())
        kept_sets[x] = mates
        witness.extend(tuple(sorted((x, z))) for z in mates)
    return AlphaPrimeCertificate(
        value=value,
        independent_set=tuple(sorted(chosen)),
        d_prime=tuple(d),
        neighborhood_sets=kept_sets,
        witness_edges=tuple(sorted(witness)),
        method="dh-dp",
    )
