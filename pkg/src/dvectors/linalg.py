"""Exact linear algebra over the rationals for small dense integer matrices."""

from __future__ import annotations

from fractions import Fraction


def inverse(matrix) -> list[list[Fraction]]:
    """Gauss-Jordan inverse with partial pivoting on nonzero entries.

    Raises ``ZeroDivisionError`` for singular input.
    """
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        if p != 1:
            aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            f = aug[r][col]
            if r != col and f != 0:
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve(matrix, rhs) -> list[Fraction]:
    """Solve ``matrix @ x = rhs`` exactly."""
    inv = inverse(matrix)
    return [sum((a * b for a, b in zip(row, rhs)), Fraction(0)) for row in inv]


def determinant(matrix) -> Fraction:
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return det
