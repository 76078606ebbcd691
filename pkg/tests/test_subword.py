import itertools

import pytest

from dvectors.coxeter import root_system
from dvectors.errors import InvariantViolation
from dvectors.subword import SubwordComplex

from oracles import brute_force_clusters, cluster_count, decompose, root_function


def ctx(family, rank, c=None):
    return SubwordComplex(root_system(family, rank), tuple(range(rank)) if c is None else c)


A2 = ctx("A", 2)


def test_a2_root_function():
    # positions 1-based in prose: r({1,2}, 4) = a1 + a2, r({1,2}, 5) = a2
    table = A2.root_function((0, 1))
    assert table[3] == (1, 1)
    assert table[4] == (0, 1)
    assert table.configuration == ((1, 0), (0, 1))


def test_a2_flips():
    assert A2.flip((0, 1), 0) == ((1, 2), 2)
    assert A2.flip((0, 1), 1) == ((0, 4), 4)
    a1 = ctx("A", 1)
    assert a1.flip((0,), 0) == ((1,), 1)


def test_a2_compat_coefficients():
    assert A2.compat_coeff(0, 3) == 1
    assert A2.compat_coeff(1, 3) == 1
    assert A2.compat_coeff(0, 1) == 0
    assert all(A2.compat_coeff(i, i) == -1 for i in range(5))


def test_a2_rotation_and_jump():
    assert A2.rotation() == (2, 3, 4, 0, 1)
    assert ctx("A", 1).rotation() == (1, 0)
    other, sigma = A2.jump()
    assert other.c == (1, 0)
    assert other.letters == (1, 0, 1, 0, 1)
    assert other.is_c_cluster([sigma[p] for p in A2.initial_cluster()])


def test_rank_one():
    a1 = ctx("A", 1)
    assert a1.m == 2
    assert a1.enumerate_clusters() == [(0,), (1,)]
    assert a1.compat_table() == ((-1, 1), (1, -1))


def test_cluster_validation():
    with pytest.raises(ValueError):
        A2.is_c_cluster((0,))
    with pytest.raises(ValueError):
        A2.is_c_cluster((0, 7))
    with pytest.raises(ValueError):
        A2.flip((0, 1), 3)


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)])
def test_clusters_match_brute_force(family, rank):
    for c in itertools.permutations(range(rank)):
        cx = ctx(family, rank, c)
        found = cx.enumerate_clusters()
        assert set(found) == brute_force_clusters(cx.rs, cx.letters)
        assert len(found) == len(set(found))


@pytest.mark.parametrize("family,rank", [("A", 4), ("D", 4), ("F", 4), ("B", 4), ("C", 4), ("A", 5)])
def test_cluster_counts_match_catalan_formula(family, rank):
    assert len(ctx(family, rank).enumerate_clusters()) == cluster_count(family, rank)


def test_enumeration_order_is_canonical():
    found = ctx("B", 3).enumerate_clusters()
    assert found[0] == (0, 1, 2)
    again = ctx("B", 3).enumerate_clusters()
    assert found == again


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_root_function_matches_definition(family, rank):
    cx = ctx(family, rank, tuple(reversed(range(rank))))
    for cl in cx.enumerate_clusters():
        table = cx.root_function(cl)
        assert all(table[j] == root_function(cx.rs, cx.letters, cl, j) for j in range(cx.m))


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3), ("A", 3)])
def test_coefficients_match_cramer(family, rank):
    cx = ctx(family, rank)
    for cl in cx.enumerate_clusters()[:8]:
        table = cx.root_function(cl)
        coeffs = cx.coefficients(cl)
        for j in range(cx.m):
            rho = decompose(table.configuration, table[j])
            assert [coeffs[i][j] for i in cl] == rho


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4)])
def test_update_matches_recomputation(family, rank):
    cx = ctx(family, rank)
    for cl in cx.enumerate_clusters():
        table = cx.root_function(cl)
        for i in cl:
            flipped, j = cx.flip(cl, i, table)
            assert cx.update_root_function(table, i, j) == cx.root_function(flipped)
            assert cx.flip(flipped, j) == (cl, i)


def test_flip_detects_corrupted_table():
    table = A2.root_function((0, 1))
    broken = type(table)(table.cluster, ((5, 5),) + table.values[1:])
    with pytest.raises(InvariantViolation):
        A2.flip((0, 1), 0, broken)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4), ("G", 2)])
def test_full_jump_cycle(family, rank):
    cx = ctx(family, rank)
    tau = cx.rotation()
    current, total = cx, tuple(range(cx.m))
    for _ in range(rank):
        current, sigma = current.jump()
        total = tuple(sigma[k] for k in total)
    assert current.letters == cx.letters
    assert all(tau[total[k]] == k for k in range(cx.m))
