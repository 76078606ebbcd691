import itertools

import pytest

from dvectors.coxeter import bipartite_coxeter_word, root_system
from dvectors.roots import AlmostPositiveRoots, ClassicalCompatibility, coroot, dual_compat_check, dual_context
from dvectors.subword import SubwordComplex


def roots(family, rank, c=None):
    rs = root_system(family, rank)
    return AlmostPositiveRoots(SubwordComplex(rs, tuple(range(rank)) if c is None else c))


A2 = roots("A", 2)


def test_a2_theta():
    assert A2.thetas == ((-1, 0), (0, -1), (1, 0), (1, 1), (0, 1))


def test_a2_tau_table():
    expected = {(-1, 0): (1, 0), (0, -1): (1, 1), (1, 0): (0, 1), (1, 1): (-1, 0), (0, 1): (0, -1)}
    assert {a: A2.tau(a) for a in expected} == expected
    a1 = roots("A", 1)
    assert a1.tau((-1,)) == (1,) and a1.tau((1,)) == (-1,)


def test_a2_compat_values():
    assert A2.c_compat((-1, 0), (1, 1)) == 1
    assert A2.c_compat((1, 0), (0, 1)) == 1
    assert all(A2.c_compat(a, a) == -1 for a in A2.thetas)


def test_dvector_from_roots():
    assert A2.dvector_from_roots([(1, 0), (0, -1)], (0, 1)) == (1, 1)
    assert A2.dvector_from_roots([(-1, 0), (0, -1)], (1, 1)) == (1, 1)
    assert A2.dvector_from_roots([(1, 0), (0, -1)], (1, 0)) == (-1, 0)
    with pytest.raises(ValueError):
        A2.dvector_from_roots([(1, 0), (0, 1)], (1, 1))


def test_rejects_non_roots():
    with pytest.raises(ValueError):
        A2.tau((1, -1))
    with pytest.raises(ValueError):
        A2.c_compat((2, 0), (1, 0))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2)])
def test_rotation_commutes_with_theta(family, rank):
    for c in list(itertools.permutations(range(rank)))[:6]:
        ap = roots(family, rank, c)
        tau = ap.ctx.rotation()
        assert all(ap.tau(ap.theta(j)) == ap.theta(tau[j]) for j in range(ap.ctx.m))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("G", 2)])
def test_negative_simple_reading_is_initial_coordinates(family, rank):
    ap = roots(family, rank)
    for i in range(rank):
        neg = tuple(-int(k == i) for k in range(rank))
        for beta in ap.rs.almost_positive_roots:
            if beta != neg:
                assert ap.c_compat(neg, beta) == max(0, beta[i])


@pytest.mark.parametrize("family,rank", [("A", 3), ("D", 4), ("A", 4)])
def test_simply_laced_degrees_are_symmetric(family, rank):
    ap = roots(family, rank, tuple(reversed(range(rank))))
    apr = ap.rs.almost_positive_roots
    assert all(ap.c_compat(a, b) == ap.c_compat(b, a) for a in apr for b in apr)


@pytest.mark.parametrize("family,rank", [("B", 2), ("B", 3), ("C", 2), ("C", 3), ("G", 2), ("F", 4)])
def test_duality(family, rank):
    ap = roots(family, rank)
    dctx, perm = dual_context(ap.ctx)
    dap = AlmostPositiveRoots(dctx)
    apr = ap.rs.almost_positive_roots
    assert sorted(coroot(ap.rs, a, perm) for a in apr) == sorted(dap.rs.almost_positive_roots)
    assert all(dual_compat_check(ap, dap, perm, a, b) for a in apr for b in apr if a != b)


def test_b2_coroots():
    rs = root_system("B", 2)
    _, perm = rs.spec.dual()
    # alpha_1 long, alpha_2 short; the short root a1 + a2 has coroot 2a1^v + a2^v
    assert coroot(rs, (1, 1), perm) == (2, 1)
    assert coroot(rs, (1, 2), perm) == (1, 1)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("G", 2)])
def test_bipartite_degree_is_classical(family, rank):
    rs = root_system(family, rank)
    classical = ClassicalCompatibility(rs)
    ap = roots(family, rank, bipartite_coxeter_word(rs))
    apr = rs.almost_positive_roots
    assert all(classical.degree(a, b) == ap.c_compat(a, b) for a in apr for b in apr)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3)])
def test_readings_along_orbit_agree(family, rank):
    ap = roots(family, rank)
    for a in ap.thetas:
        for b in ap.thetas:
            if a != b:
                readings = ap.c_compat_readings(a, b)
                assert readings and set(readings) == {ap.c_compat(a, b)}
