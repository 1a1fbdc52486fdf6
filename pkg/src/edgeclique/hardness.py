"""Executable hardness reductions, verified empirically on tiny instances.

Two constructions live here.  ``lift_alpha_instance`` turns any graph G
into a graph H whose maximum independent edge set size is 2m + alpha(G):
each edge of G gets two private simplicial vertices and one universal-to-G
vertex is added, so optimal edge sets avoid G's own edges entirely and the
edges at the universal vertex mirror an independent vertex set.

``sat_to_vc_instance`` wires a 3-CNF formula into a graph G without odd
wheels: one octahedral clause gadget per clause (three alternating
inner-outer edges labeled by the clause's literals), one triangle per
variable (two labeled edges, one per sign), and a link per literal
occurrence that identifies one endpoint of the clause edge with an endpoint
of the variable edge and joins the two free endpoints.  The formula is
satisfiable exactly when the edge-clique graph of G, with the simplicial
vertices for unlabeled and link edges stripped, has a vertex cover of size
(variables) + 8 * (clauses).  Both directions are checked against a plain
assignment-enumeration oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .edge_clique import EdgeCliqueGraph, edge_clique_graph
from .errors import GuardExceeded
from .graph import Graph, iter_bits
from .oracles import DEFAULT_GUARD, vc_exact
from .structure import is_odd_wheel_free


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF with 1-based variables; a literal is +v or -v."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError(f"clause {clause} must have exactly 3 literals")
            vs = [abs(lit) for lit in clause]
            if len(set(vs)) != 3:
                raise ValueError(
                    f"clause {clause} repeats a variable; the gadget wiring "
                    "needs three distinct variables per clause"
                )
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range")

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    num_vars = None
    expected = None
    lits: list[int] = []
    clauses: list[tuple[int, int, int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars, expected = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ValueError("clause before DIMACS header")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                if len(lits) != 3:
                    raise ValueError(f"clause {lits} must have exactly 3 literals")
                clauses.append((lits[0], lits[1], lits[2]))
                lits = []
            else:
                lits.append(lit)
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if lits:
        raise ValueError("trailing literals without closing 0")
    if expected is not None and len(clauses) != expected:
        raise ValueError(f"header promised {expected} clauses, got {len(clauses)}")
    return CnfFormula(num_vars, tuple(clauses))


def sat_oracle(f: CnfFormula) -> tuple[bool, dict[int, bool] | None]:
    """Exhaustive assignment search; the ground truth for the harness."""
    for bits in range(1 << f.num_vars):
        assign = {v + 1: bool(bits >> v & 1) for v in range(f.num_vars)}
        if all(
            any(assign[abs(lit)] == (lit > 0) for lit in clause)
            for clause in f.clauses
        ):
            return True, assign
    return False, None


# -- clause gadget -------------------------------------------------------


@dataclass(frozen=True)
class ClauseGadget:
    """The octahedral clause gadget with its role labeling.

    Vertices 0..5; the inner triangle has the high-degree role in the
    underlying 3-sun, the outer triangle closes it up.  ``f_edges`` are the
    six inner-outer edges (they trace a 6-cycle in the edge-clique graph);
    ``literal_edges`` are three alternating ones, pairwise in no common
    clique, in the fixed rotational order used by the reduction.
    """

    graph: Graph
    inner: tuple[int, int, int]
    outer: tuple[int, int, int]
    f_edges: tuple[tuple[int, int], ...]
    literal_edges: tuple[tuple[int, int], ...]


def build_clause_gadget() -> ClauseGadget:
    inner = (0, 1, 2)
    outer = (3, 4, 5)
    edges = [
        (0, 1), (0, 2), (1, 2),          # inner triangle
        (3, 4), (3, 5), (4, 5),          # outer triangle
        (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5),  # spokes
    ]
    g = Graph(6, edges)
    f_edges = ((0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5))
    literal_edges = ((0, 3), (1, 4), (2, 5))
    return ClauseGadget(g, inner, outer, f_edges, literal_edges)


# -- the 3-SAT reduction -------------------------------------------------


@dataclass(frozen=True)
class ReductionInstance:
    formula: CnfFormula
    graph: Graph
    ke: EdgeCliqueGraph
    k_graph: Graph
    k_edge_of_vertex: tuple[tuple[int, int], ...]
    stripped_edges: tuple[tuple[int, int], ...]
    threshold: int
    labeling: dict


def _variable_block(v: int) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    base = 3 * v
    pos = (base, base + 1)
    neg = (base + 1, base + 2)
    unlabeled = (base, base + 2)
    return pos, neg, unlabeled


_PLACEMENT_NODE_CAP = 100_000


def _placement_ok(n: int, edges: list[tuple[int, int]], protected) -> bool:
    """A partial reduction graph is acceptable when it stays odd-wheel-free
    and every protected edge (unlabeled variable edges, links) still has at
    most one common neighbor; with cliques capped at triangles that is
    exactly simpliciality of the protected edges in the edge-clique graph."""
    g = Graph(n, edges)
    if not is_odd_wheel_free(g)[0]:
        return False
    for u, v in protected:
        if (g.adj_bits(u) & g.adj_bits(v)).bit_count() > 1:
            return False
    return True


def _place_clauses(f, gadget, labeling, base_edges, parities_per_clause, n_vars_part):
    """Depth-first search over per-clause endpoint-choice vectors.

    Clauses are placed in order; each tries the eight flip vectors
    lexicographically, keeping the partial graph collision-free,
    odd-wheel-free, and simplicial at the edges that later get stripped.
    Returns the list of accepted placements, or None.
    """
    M = f.num_clauses
    nodes = [0]

    def dfs(i, edge_set, protected, acc):
        if i == M:
            return list(acc)
        base = n_vars_part + 3 * i
        for flips in product((0, 1), repeat=3):
            nodes[0] += 1
            if nodes[0] > _PLACEMENT_NODE_CAP:
                raise RuntimeError(
                    "clause placement search exceeded its node cap"
                )
            trial = _clause_edges(
                gadget, labeling, f.clauses[i], parities_per_clause[i], flips, base
            )
            if trial is None:
                continue
            new_edges, merged, clause_edges, links = trial
            if any(e in edge_set for e in new_edges):
                continue
            grown = edge_set | set(new_edges)
            now_protected = protected + links
            if not _placement_ok(base + 3, sorted(grown), now_protected):
                continue
            result = dfs(i + 1, grown, now_protected, acc + [trial])
            if result is not None:
                return result
        return None

    protected = list(labeling["unlabeled_variable_edges"])
    return dfs(0, set(base_edges), protected, [])


def _clause_edges(gadget, labeling, clause, parities, flips, base):
    """Edges one clause gadget adds under a given endpoint-choice vector.

    Returns ``(new_edges, merged, labeled_clause_edges, link_edges)`` or
    None when two literals would merge into one vertex (cannot happen with
    distinct variables, kept as a guard).
    """
    merged = []
    others = []
    for lit, parity, flip in zip(clause, parities, flips):
        var_edge = labeling["variable_edges"][lit]
        idx = (parity + flip) % 2
        merged.append(var_edge[idx])
        others.append(var_edge[1 - idx])
    if len(set(merged)) != 3:
        return None
    vmap = {0: base, 1: base + 1, 2: base + 2,
            3: merged[0], 4: merged[1], 5: merged[2]}
    new_edges = [
        tuple(sorted((vmap[u], vmap[v]))) for u, v in gadget.graph.edges()
    ]
    clause_edges = []
    links = []
    for i in range(3):
        inner_end = vmap[gadget.literal_edges[i][0]]
        outer_end = vmap[gadget.literal_edges[i][1]]
        clause_edges.append(tuple(sorted((inner_end, outer_end))))
        links.append(tuple(sorted((inner_end, others[i]))))
    new_edges.extend(links)
    return new_edges, merged, clause_edges, links


def sat_to_vc_instance(f: CnfFormula) -> ReductionInstance:
    """Assemble the reduction graph, its edge-clique graph, and the stripped core.

    The attachment endpoint for occurrence k of a variable alternates with
    k; when the implied outer-triangle edge of a clause gadget would
    coincide with an already-placed edge (possible when two clauses share
    two variables with aligned parities), the choice vector is flipped to
    the first collision-free alternative.  Odd-wheel-freeness of the result
    is asserted, not assumed.
    """
    L, M = f.num_vars, f.num_clauses
    gadget = build_clause_gadget()
    edge_set: set[tuple[int, int]] = set()
    labeling: dict = {
        "variable_edges": {},
        "unlabeled_variable_edges": [],
        "clause_edges": [],
        "link_edges": [],
        "inner_triangles": [],
        "outer_triangles": [],
    }

    def add_edge(u: int, v: int) -> tuple[int, int]:
        e = (u, v) if u < v else (v, u)
        if e in edge_set:
            raise RuntimeError(f"construction bug: duplicate edge {e}")
        edge_set.add(e)
        return e

    for v in range(L):
        pos, neg, unlabeled = _variable_block(v)
        add_edge(*pos)
        add_edge(*neg)
        add_edge(*unlabeled)
        labeling["variable_edges"][v + 1] = pos
        labeling["variable_edges"][-(v + 1)] = neg
        labeling["unlabeled_variable_edges"].append(unlabeled)

    occurrences = [0] * L
    parities_per_clause = []
    for clause in f.clauses:
        parities_per_clause.append(
            [occurrences[abs(lit) - 1] % 2 for lit in clause]
        )
        for lit in clause:
            occurrences[abs(lit) - 1] += 1

    placements = _place_clauses(
        f, gadget, labeling, frozenset(edge_set), parities_per_clause, 3 * L
    )
    if placements is None:
        raise RuntimeError(
            "no endpoint-choice assignment wires the clause gadgets without "
            f"collisions or odd wheels; formula {f.clauses} is too entangled"
        )
    next_fresh = 3 * L
    for trial in placements:
        new_edges, merged, clause_edges, links = trial
        base = next_fresh
        next_fresh += 3
        for e in new_edges:
            add_edge(*e)
        labeling["clause_edges"].append(tuple(clause_edges))
        labeling["link_edges"].extend(links)
        labeling["inner_triangles"].append((base, base + 1, base + 2))
        labeling["outer_triangles"].append(tuple(sorted(merged)))

    n = next_fresh
    g = Graph(n, sorted(edge_set))
    if g.m != 3 * L + 15 * M:
        raise RuntimeError(
            f"construction bug: expected {3 * L + 15 * M} edges, built {g.m}"
        )
    ok, witness = is_odd_wheel_free(g)
    if not ok:
        raise RuntimeError(f"construction bug: odd wheel at {witness}")

    ke = edge_clique_graph(g)
    to_strip = set(labeling["unlabeled_variable_edges"]) | set(
        labeling["link_edges"]
    )
    strip_ids = []
    keep_ids = []
    for i, e in enumerate(ke.edge_of_vertex):
        (strip_ids if e in to_strip else keep_ids).append(i)
    for i in strip_ids:
        nb = ke.graph.adj_bits(i)
        mates = list(iter_bits(nb))
        for a in range(len(mates)):
            for b in range(a + 1, len(mates)):
                if not ke.graph.has_edge(mates[a], mates[b]):
                    raise RuntimeError(
                        f"construction bug: stripped vertex {ke.edge_of_vertex[i]} "
                        "is not simplicial in the edge-clique graph"
                    )
    k_graph = ke.graph.induced(keep_ids)
    k_edges = tuple(ke.edge_of_vertex[i] for i in keep_ids)
    return ReductionInstance(
        formula=f,
        graph=g,
        ke=ke,
        k_graph=k_graph,
        k_edge_of_vertex=k_edges,
        stripped_edges=tuple(ke.edge_of_vertex[i] for i in strip_ids),
        threshold=L + 8 * M,
        labeling=labeling,
    )


@dataclass(frozen=True)
class SatVcReport:
    formula: CnfFormula
    g_vertices: int
    g_edges: int
    k_vertices: int
    threshold: int
    vc_value: int
    sat_by_reduction: bool
    sat_by_oracle: bool
    assignment: dict[int, bool] | None
    cover_edges: tuple[tuple[int, int], ...]

    @property
    def agree(self) -> bool:
        return self.sat_by_reduction == self.sat_by_oracle


def decide_sat_via_vc(f: CnfFormula, guard: int = DEFAULT_GUARD) -> SatVcReport:
    """Run the reduction end to end and compare with the assignment oracle."""
    inst = sat_to_vc_instance(f)
    if inst.k_graph.n > guard:
        raise GuardExceeded("reduction vertex cover", inst.k_graph.n, guard)
    vc_value, cover = vc_exact(inst.k_graph, guard=guard)
    sat_red = vc_value <= inst.threshold
    sat_orc, assignment = sat_oracle(f)
    return SatVcReport(
        formula=f,
        g_vertices=inst.graph.n,
        g_edges=inst.graph.m,
        k_vertices=inst.k_graph.n,
        threshold=inst.threshold,
        vc_value=vc_value,
        sat_by_reduction=sat_red,
        sat_by_oracle=sat_orc,
        assignment=assignment,
        cover_edges=tuple(sorted(inst.k_edge_of_vertex[i] for i in cover)),
    )


# -- the independence lift -----------------------------------------------


@dataclass(frozen=True)
class LiftedInstance:
    """Graph H with alpha'(H) = edge_bonus + alpha(source)."""

    h: Graph
    source: Graph
    hub: int
    simplicial: dict[tuple[int, int], tuple[int, int]]
    edge_bonus: int

    def expected_alpha_prime(self, alpha_of_source: int) -> int:
        return self.edge_bonus + alpha_of_source


def lift_alpha_instance(g: Graph) -> LiftedInstance:
    """Two private simplicial vertices per edge plus one vertex joined to all of G."""
    src_edges = g.edges()
    m = len(src_edges)
    n = g.n
    edges = list(src_edges)
    simplicial = {}
    for i, (u, v) in enumerate(src_edges):
        s1, s2 = n + 2 * i, n + 2 * i + 1
        edges += [(u, s1), (v, s1), (u, s2), (v, s2)]
        simplicial[(u, v)] = (s1, s2)
    hub = n + 2 * m
    edges += [(w, hub) for w in range(n)]
    return LiftedInstance(
        h=Graph(n + 2 * m + 1, edges),
        source=g,
        hub=hub,
        simplicial=simplicial,
        edge_bonus=2 * m,
    )
