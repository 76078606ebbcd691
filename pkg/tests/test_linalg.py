from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dvectors.linalg import determinant, inverse, solve

square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))


def test_known_inverse():
    assert inverse([[2, 1], [1, 1]]) == [[1, -1], [-1, 2]]
    assert solve([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
    assert determinant([[2, -1], [-1, 2]]) == 3


def test_singular_raises():
    with pytest.raises(ZeroDivisionError):
        inverse([[1, 2], [2, 4]])
    assert determinant([[1, 2], [2, 4]]) == 0


@given(square)
def test_inverse_round_trip(m):
    n = len(m)
    if determinant(m) == 0:
        return
    inv = inverse(m)
    prod = [[sum(m[i][k] * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
