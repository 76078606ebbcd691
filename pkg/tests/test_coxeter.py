import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dvectors.coxeter import (
    CartanError,
    CartanSpec,
    bipartite_coxeter_word,
    build_Qc,
    c_sorting_word,
    cartan_matrix,
    commutes,
    eta,
    evaluate_word,
    inverse,
    is_reduced,
    length,
    longest_element,
    root_system,
    unit,
)

from oracles import positive_root_count, word_length

TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4),
         ("D", 5), ("E", 6), ("F", 4), ("G", 2)]


def test_small_cartan_matrices():
    assert cartan_matrix("A", 2) == ((2, -1), (-1, 2))
    # B2: alpha_2 short, so a_12 = -1 and a_21 = -2
    assert cartan_matrix("B", 2) == ((2, -1), (-2, 2))
    assert cartan_matrix("C", 2) == ((2, -2), (-1, 2))
    assert cartan_matrix("G", 2) == ((2, -3), (-1, 2))


def test_f4_cartan_matrix():
    # alpha_1, alpha_2 long; a_23 = 2(a2, a3)/(a2, a2) = -1 and a_32 = -2
    assert cartan_matrix("F", 4) == ((2, -1, 0, 0), (-1, 2, -1, 0), (0, -2, 2, -1), (0, 0, -1, 2))


@pytest.mark.parametrize("family,rank", TYPES)
def test_positive_root_counts(family, rank):
    rs = root_system(family, rank)
    assert rs.N == positive_root_count(family, rank)
    assert len(rs.almost_positive_roots) == rs.N + rank
    assert rs.positive_roots[:rank] == tuple(unit(rank, i) for i in range(rank))


@pytest.mark.parametrize("family,rank", TYPES)
def test_symmetrizer_makes_cartan_symmetric(family, rank):
    rs = root_system(family, rank)
    d, a = rs.symmetrizer, rs.cartan
    assert all(d[i] * a[i][j] == d[j] * a[j][i] for i in range(rank) for j in range(rank))


@pytest.mark.parametrize("family,rank", [("B", 3), ("C", 3), ("F", 4), ("G", 2), ("D", 4), ("A", 3)])
def test_dual_is_transpose(family, rank):
    spec = CartanSpec(family, rank)
    dual, perm = spec.dual()
    assert all(dual.cartan[perm[i]][perm[j]] == spec.cartan[j][i] for i in range(rank) for j in range(rank))
    assert dual.family == {"B": "C", "C": "B"}.get(family, family)


@pytest.mark.parametrize("family,rank", [("Q", 2), ("A", 0), ("B", 1), ("D", 3), ("E", 5), ("F", 3), ("G", 3)])
def test_invalid_types_rejected(family, rank):
    with pytest.raises(CartanError):
        CartanSpec(family, rank)


def test_mismatched_cartan_rejected():
    with pytest.raises(CartanError):
        CartanSpec("B", 2, cartan=((2, -2), (-1, 2)))
    with pytest.raises(CartanError):
        CartanSpec("A", 2, cartan=((2, -2), (-2, 2)))  # affine, not finite


@pytest.mark.parametrize("family,rank", TYPES)
def test_longest_element_negates_positive_roots(family, rank):
    rs = root_system(family, rank)
    w0 = longest_element(rs)
    assert length(rs, w0) == rs.N
    assert all(all(x <= 0 for x in w0(b)) for b in rs.positive_roots)


@pytest.mark.parametrize("family,rank", TYPES)
def test_eta_conjugation(family, rank):
    rs = root_system(family, rank)
    w0 = longest_element(rs)
    for s in range(rank):
        conj = w0 * rs.generator(s) * w0
        assert conj.matrix == rs.generator(eta(rs, s)).matrix


def test_eta_small_cases():
    assert [eta(root_system("A", 2), s) for s in range(2)] == [1, 0]
    assert [eta(root_system("B", 3), s) for s in range(3)] == [0, 1, 2]
    assert [eta(root_system("E", 6), s) for s in range(6)] == [5, 1, 4, 3, 2, 0]


def test_a2_sorting_word():
    rs = root_system("A", 2)
    assert c_sorting_word(rs, (0, 1)) == (0, 1, 0)
    assert build_Qc(rs, (0, 1)).letters == (0, 1, 0, 1, 0)
    assert build_Qc(rs, (1, 0)).letters == (1, 0, 1, 0, 1)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4), ("G", 2)])
def test_sorting_words_are_reduced_subwords_of_c_power(family, rank):
    rs = root_system(family, rank)
    for c in itertools.permutations(range(rank)):
        w = c_sorting_word(rs, c)
        assert len(w) == rs.N and is_reduced(rs, w)
        assert word_length(rs, evaluate_word(rs, w).matrix) == rs.N
        # a subword of c^infinity: greedy matching against repeated c
        stream = iter(c * (rs.N + 1))
        assert all(any(x == y for y in stream) for x in w)


def test_bipartite_word_alternates_classes():
    rs = root_system("A", 4)
    word = bipartite_coxeter_word(rs)
    assert word == (0, 2, 1, 3)
    assert commutes(rs, 0, 2) and commutes(rs, 1, 3) and not commutes(rs, 0, 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([("A", 3), ("B", 3), ("G", 2), ("D", 4)]), st.lists(st.integers(0, 3), max_size=12),
       st.integers(0, 3))
def test_length_changes_by_one(t, word, s):
    rs = root_system(*t)
    word = [x % rs.rank for x in word]
    s %= rs.rank
    g = evaluate_word(rs, word)
    gs = g * rs.generator(s)
    assert abs(length(rs, gs) - length(rs, g)) == 1
    # l(ws) < l(w) iff w(alpha_s) is negative
    assert (length(rs, gs) < length(rs, g)) == all(x <= 0 for x in g(unit(rs.rank, s)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([("A", 3), ("C", 3), ("F", 4)]), st.lists(st.integers(0, 3), max_size=10))
def test_inverse_and_root_permutation(t, word):
    rs = root_system(*t)
    word = [x % rs.rank for x in word]
    g = evaluate_word(rs, word)
    assert (g * inverse(rs, g)).matrix == rs.identity.matrix
    assert inverse(rs, g).matrix == evaluate_word(rs, list(reversed(word))).matrix
    assert sorted(g(b) for b in rs.all_roots) == sorted(rs.all_roots)
    assert length(rs, g) == length(rs, inverse(rs, g))


@pytest.mark.parametrize("family,rank", [("B", 2), ("G", 2), ("F", 4)])
def test_reflection_along_root(family, rank):
    rs = root_system(family, rank)
    for beta in rs.positive_roots:
        t = rs.reflection_along(beta)
        assert t(beta) == tuple(-x for x in beta)
        assert (t * t).matrix == rs.identity.matrix
