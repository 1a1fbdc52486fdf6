from __future__ import annotations

from itertools import combinations

import pytest

from edgeclique import (
    LatinSquare,
    MolsFamily,
    check_orthogonal,
    cocktail_party,
    complete_multipartite,
    cover_from_mols,
    mols_family,
    verify_cover,
)


def test_latin_square_validation():
    LatinSquare(2, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        LatinSquare(2, ((0, 1), (0, 1)))  # repeated column symbols
    with pytest.raises(ValueError):
        LatinSquare(2, ((0, 0), (1, 1)))
    with pytest.raises(ValueError):
        LatinSquare(3, ((0, 1), (1, 0)))


def test_family_order3():
    fam = mols_family(3, 2)
    assert len(fam) == 2
    ok, witness = check_orthogonal(fam)
    assert ok and witness is None


def test_family_order4_uses_field():
    fam = mols_family(4, 3)
    assert len(fam) == 3
    assert check_orthogonal(fam)[0]


def test_family_order5_full():
    assert check_orthogonal(mols_family(5, 4))[0]


def test_prime_powers_and_primes():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27):
        fam = mols_family(q, min(3, q - 1))
        assert check_orthogonal(fam)[0]


def test_row_zero_normalization():
    for q in (5, 8, 9):
        for sq in mols_family(q, q - 1).squares:
            assert tuple(sq.grid[0]) == tuple(range(q))


def test_order6_single_square_only():
    fam = mols_family(6, 1)
    assert len(fam) == 1
    with pytest.raises(ValueError):
        mols_family(6, 2)


def test_count_limits():
    with pytest.raises(ValueError):
        mols_family(5, 5)
    with pytest.raises(ValueError):
        mols_family(0, 1)
    assert len(mols_family(9, 0)) == 0


def test_orthogonality_failure_witnessed():
    sq = mols_family(3, 1).squares[0]
    ok, witness = check_orthogonal(MolsFamily(3, (sq, sq)))
    assert not ok and witness is not None


def test_mixed_orders_rejected():
    a = mols_family(3, 1).squares[0]
    b = mols_family(4, 1).squares[0]
    with pytest.raises(ValueError):
        check_orthogonal(MolsFamily(3, (a, b)))


def test_cover_2_3_partitions_cocktail_party():
    cover = cover_from_mols(2, 3, mols_family(2, 1))
    assert len(cover) == 4
    assert cover.graph == complete_multipartite(2, 3)
    assert verify_cover(cover.graph, cover)[0]
    # the octahedron's twelve edges split into four disjoint triangles
    seen = set()
    for clique in cover.cliques:
        for pair in combinations(sorted(clique), 2):
            assert pair not in seen
            seen.add(pair)
    assert len(seen) == 12
    assert cocktail_party(3).m == 12


def test_cover_3_4():
    cover = cover_from_mols(3, 4, mols_family(3, 2))
    assert len(cover) == 9
    assert all(len(c) == 4 for c in cover.cliques)
    assert verify_cover(cover.graph, cover)[0]
    covered = set()
    for clique in cover.cliques:
        for pair in combinations(sorted(clique), 2):
            assert pair not in covered
            covered.add(pair)
    assert len(covered) == 54 == cover.graph.m


def test_cover_preconditions():
    with pytest.raises(ValueError):
        cover_from_mols(5, 3, mols_family(5, 0))  # needs one square
    with pytest.raises(ValueError):
        cover_from_mols(3, 5, mols_family(3, 2))  # parts > part_size + 1
    with pytest.raises(ValueError):
        cover_from_mols(4, 3, mols_family(3, 1))  # order mismatch
    sq = mols_family(3, 1).squares[0]
    with pytest.raises(ValueError):
        cover_from_mols(3, 4, MolsFamily(3, (sq, sq)))  # not orthogonal
