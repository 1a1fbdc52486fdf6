"""Mutually orthogonal Latin squares and the covers they induce.

Over a field of prime-power order q the squares L_k(i, j) = k*i + j for
nonzero k are Latin and pairwise orthogonal, giving the full set of q - 1
MOLS.  Field arithmetic for non-prime orders comes from a compiled-in table
of irreducible polynomials; there is no search for squares of other orders
(none exists for order 6, and order 10 is famously unresolved), only the
single cyclic square when no orthogonality is required.

A family of m - 2 MOLS of order n yields an optimal edge-clique cover of
the complete multipartite graph with m parts of size n: the n^2 cliques

    clique(a, b) = {part 0: a, part 1: b} u {part s: L_{s-2}(a, b), s >= 2}

are pairwise edge-disjoint and cover every edge exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cover import CliqueCover
from .graph import Graph, complete_multipartite

# monic irreducible polynomials over GF(p), coefficients low to high
# (constant first), one per supported non-prime order
_IRREDUCIBLE = {
    4: (2, (1, 1, 1)),        # x^2 + x + 1
    8: (2, (1, 1, 0, 1)),     # x^3 + x + 1
    9: (3, (1, 0, 1)),        # x^2 + 1
    16: (2, (1, 1, 0, 0, 1)),  # x^4 + x + 1
    25: (5, (2, 0, 1)),       # x^2 + 2
    27: (3, (1, 2, 0, 1)),    # x^3 + 2x + 1
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class _Field:
    """Arithmetic tables for GF(q), q prime or in the irreducible table."""

    def __init__(self, q: int):
        if _is_prime(q):
            self.q = q
            self.add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % q for b in range(q)] for a in range(q)]
            return
        if q not in _IRREDUCIBLE:
            raise ValueError(
                f"order {q} is not a prime or a supported prime power "
                f"{sorted(_IRREDUCIBLE)}"
            )
        p, poly = _IRREDUCIBLE[q]
        deg = len(poly) - 1
        self.q = q

        def digits(a: int) -> list[int]:
            out = []
            for _ in range(deg):
                out.append(a % p)
                a //= p
            return out

        def undigits(ds: list[int]) -> int:
            val = 0
            for d in reversed(ds):
                val = val * p + d
            return val

        def poly_mul(a: int, b: int) -> int:
            da, db = digits(a), digits(b)
            prod = [0] * (2 * deg - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
            # reduce modulo the irreducible polynomial
            for k in range(len(prod) - 1, deg - 1, -1):
                c = prod[k]
                if c:
                    prod[k] = 0
                    for j in range(deg):
                        prod[k - deg + j] = (prod[k - deg + j] - c * poly[j]) % p
            return undigits(prod[:deg])

        self.add = [
            [
                undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])
                for b in range(q)
            ]
            for a in range(q)
        ]
        self.mul = [[poly_mul(a, b) for b in range(q)] for a in range(q)]


@dataclass(frozen=True)
class LatinSquare:
    order: int
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.order
        want = frozenset(range(n))
        arr = np.asarray(self.grid, dtype=int)
        if arr.shape != (n, n):
            raise ValueError(f"grid must be {n}x{n}")
        for i in range(n):
            if frozenset(arr[i, :].tolist()) != want:
                raise ValueError(f"row {i} is not a permutation of 0..{n - 1}")
            if frozenset(arr[:, i].tolist()) != want:
                raise ValueError(f"column {i} is not a permutation of 0..{n - 1}")

    def __call__(self, i: int, j: int) -> int:
        return self.grid[i][j]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.grid, dtype=int)


@dataclass(frozen=True)
class MolsFamily:
    order: int
    squares: tuple[LatinSquare, ...]

    def __len__(self) -> int:
        return len(self.squares)


def mols_family(order: int, count: int) -> MolsFamily:
    """``count`` pairwise orthogonal Latin squares of the given order.

    A single square (count <= 1) exists for every order and is served from
    the cyclic construction.  Two or more squares require a prime or
    supported prime-power order, and at most order - 1 squares exist.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return MolsFamily(order, ())
    if count == 1:
        try:
            gf = _Field(order)
        except ValueError:
            # any order has one Latin square; serve the cyclic one
            grid = tuple(
                tuple((i + j) % order for j in range(order)) for i in range(order)
            )
            return MolsFamily(order, (LatinSquare(order, grid),))
    elif count > order - 1:
        raise ValueError(
            f"at most {order - 1} mutually orthogonal squares of order "
            f"{order} exist, requested {count}"
        )
    else:
        gf = _Field(order)  # raises for unsupported orders (6 among them)
    squares = []
    for k in range(1, count + 1):
        grid = tuple(
            tuple(gf.add[gf.mul[k][i]][j] for j in range(order))
            for i in range(order)
        )
        squares.append(LatinSquare(order, grid))
    return MolsFamily(order, tuple(squares))


def check_orthogonal(family: MolsFamily) -> tuple[bool, tuple | None]:
    """Pairwise orthogonality by enumerating superposition pairs.

    On failure the witness is ``(k1, k2, cell1, cell2)``: two cells where
    squares k1 and k2 produce the same ordered symbol pair.
    """
    n = family.order
    for sq in family.squares:
        if sq.order != n:
            raise ValueError("family mixes square orders")
    for k1 in range(len(family.squares)):
        for k2 in range(k1 + 1, len(family.squares)):
            s1, s2 = family.squares[k1], family.squares[k2]
            seen: dict[tuple[int, int], tuple[int, int]] = {}
            for i in range(n):
                for j in range(n):
                    pair = (s1(i, j), s2(i, j))
                    if pair in seen:
                        return False, (k1, k2, seen[pair], (i, j))
                    seen[pair] = (i, j)
    return True, None


def cover_from_mols(part_size: int, parts: int, family: MolsFamily) -> CliqueCover:
    """Edge-clique cover of the complete multipartite graph from a MOLS family.

    Needs 3 <= parts <= part_size + 1 and at least parts - 2 squares of
    order ``part_size``.  Vertex numbering follows
    ``complete_multipartite``: vertex = part * part_size + element.
    """
    n, m = part_size, parts
    if not 3 <= m <= n + 1:
        raise ValueError(f"need 3 <= parts <= part_size + 1, got parts={m}, part_size={n}")
    if family.order != n:
        raise ValueError(f"family order {family.order} does not match part size {n}")
    if len(family.squares) < m - 2:
        raise ValueError(
            f"need at least {m - 2} squares for {m} parts, family has "
            f"{len(family.squares)}"
        )
    ok, witness = check_orthogonal(family)
    if not ok:
        raise ValueError(f"family is not pairwise orthogonal: {witness}")
    g = complete_multipartite(n, m)
    cliques = []
    for a in range(n):
        for b in range(n):
            clique = [a, n + b]
            for s in range(2, m):
                clique.append(s * n + family.squares[s - 2](a, b))
            cliques.append(tuple(clique))
    return CliqueCover(g, tuple(cliques), kind="edge-cover")
