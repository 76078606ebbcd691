"""Finite crystallographic root systems, Weyl group elements and the word Q_c.

Roots are integer coordinate tuples in the basis of simple roots and group
elements are integer matrices acting on those coordinates (column vectors).
A word ``(w_1, ..., w_k)`` evaluates to the matrix product
``S[w_1] @ ... @ S[w_k]``, so the rightmost letter acts first.

Generator indices are 0-based throughout the library.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations

from . import linalg

FAMILIES = "ABCDEFG"

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class CartanError(ValueError):
    """Malformed, non-finite or unsupported Cartan data."""


def _dynkin(family: str, rank: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges of the Dynkin diagram and relative squared root lengths."""
    n = rank
    chain = [(i, i + 1) for i in range(n - 1)]
    if family == "A":
        if n < 1:
            raise CartanError("type A needs rank >= 1")
        return chain, [1] * n
    if family == "B":
        if n < 2:
            raise CartanError("type B needs rank >= 2")
        return chain, [2] * (n - 1) + [1]
    if family == "C":
        if n < 2:
            raise CartanError("type C needs rank >= 2")
        return chain, [1] * (n - 1) + [2]
    if family == "D":
        if n < 4:
            raise CartanError("type D needs rank >= 4")
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)], [1] * n
    if family == "E":
        if n not in (6, 7, 8):
            raise CartanError("type E needs rank 6, 7 or 8")
        # Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
        edges = [(0, 2), (1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        return edges, [1] * n
    if family == "F":
        if n != 4:
            raise CartanError("type F needs rank 4")
        return chain, [2, 2, 1, 1]
    if family == "G":
        if n != 2:
            raise CartanError("type G needs rank 2")
        return chain, [1, 3]
    raise CartanError(f"unknown family {family!r}")


def cartan_matrix(family: str, rank: int) -> Matrix:
    """Bourbaki-numbered Cartan matrix with ``a_ij = 2(a_i, a_j)/(a_i, a_i)``.

    B_n has the short simple root last, C_n the long one.
    """
    edges, lengths = _dynkin(family, rank)
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
    for i, j in edges:
        a[i][j] = -max(1, lengths[j] // lengths[i])
        a[j][i] = -max(1, lengths[i] // lengths[j])
    return tuple(tuple(row) for row in a)


def symmetrizer(a: Matrix) -> Vector:
    """Smallest positive integer diagonal ``d`` with ``d_i a_ij = d_j a_ji``."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                if a[j][i] == 0:
                    raise CartanError("a_ij = 0 must imply a_ji = 0")
                value = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise CartanError("Cartan matrix is not symmetrizable")
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    scaled = [int(x * denom) for x in d]
    g = 0
    for x in scaled:
        g = _gcd(g, x)
    return tuple(x // g for x in scaled)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _positive_definite(sym: list[list[int]]) -> bool:
    # Sylvester's criterion with exact fractions
    n = len(sym)
    m = [[Fraction(x) for x in row] for row in sym]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


@dataclass(frozen=True)
class CartanSpec:
    family: str
    rank: int
    cartan: Matrix = None  # type: ignore[assignment]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CartanError(f"unknown family {self.family!r}")
        expected = cartan_matrix(self.family, self.rank)
        if self.cartan is None:
            object.__setattr__(self, "cartan", expected)
        cartan = tuple(tuple(int(x) for x in row) for row in self.cartan)
        object.__setattr__(self, "cartan", cartan)
        n = self.rank
        if len(cartan) != n or any(len(row) != n for row in cartan):
            raise CartanError("Cartan matrix has the wrong shape")
        for i in range(n):
            if cartan[i][i] != 2:
                raise CartanError("diagonal entries must be 2")
            for j in range(n):
                if i != j and (cartan[i][j] > 0 or (cartan[i][j] == 0) != (cartan[j][i] == 0)):
                    raise CartanError("off-diagonal sign pattern is invalid")
        d = symmetrizer(cartan)
        sym = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
        if not _positive_definite(sym):
            raise CartanError("Cartan matrix is not of finite type")
        if cartan != expected:
            raise CartanError(f"matrix does not match the {self.family}{n} table")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def dual(self) -> tuple["CartanSpec", tuple[int, ...]]:
        """Dual root system (transposed Cartan matrix) and the generator relabeling.

        Returns ``(spec, perm)`` where generator ``i`` of this system becomes
        generator ``perm[i]`` of the dual. B and C swap; F4 and G2 are
        self-dual after reversing the numbering.
        """
        n = self.rank
        transposed = tuple(zip(*self.cartan))
        family = {"B": "C", "C": "B"}.get(self.family, self.family)
        target = cartan_matrix(family, n)
        for perm in (tuple(range(n)), tuple(reversed(range(n)))):
            if all(target[perm[i]][perm[j]] == transposed[i][j] for i in range(n) for j in range(n)):
                return CartanSpec(family, n), perm
        raise CartanError(f"no dual found for {self.name}")  # pragma: no cover


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _apply(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def is_positive(v: Vector) -> bool:
    return any(x > 0 for x in v) and all(x >= 0 for x in v)


def is_negative(v: Vector) -> bool:
    return any(x < 0 for x in v) and all(x <= 0 for x in v)


def neg(v: Vector) -> Vector:
    return tuple(-x for x in v)


def unit(n: int, i: int, sign: int = 1) -> Vector:
    return tuple(sign if k == i else 0 for k in range(n))


@dataclass(frozen=True)
class GroupElement:
    """Weyl group element as an integer matrix on simple-root coordinates."""

    matrix: Matrix

    def __call__(self, v: Vector) -> Vector:
        return _apply(self.matrix, v)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(_matmul(self.matrix, other.matrix))


@dataclass(frozen=True, eq=False)
class RootSystem:
    spec: CartanSpec
    positive_roots: tuple[Vector, ...]
    root_index: dict[Vector, int] = field(repr=False)
    generator_matrices: tuple[Matrix, ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def N(self) -> int:
        return len(self.positive_roots)

    @property
    def cartan(self) -> Matrix:
        return self.spec.cartan

    @cached_property
    def symmetrizer(self) -> Vector:
        return symmetrizer(self.cartan)

    @cached_property
    def identity(self) -> GroupElement:
        return GroupElement(_identity(self.rank))

    def generator(self, i: int) -> GroupElement:
        return GroupElement(self.generator_matrices[i])

    def reflect(self, i: int, v: Vector) -> Vector:
        """``s_i(v) = v - <v, a_i^vee> a_i``."""
        coeff = sum(self.cartan[i][j] * v[j] for j in range(self.rank))
        return tuple(x - coeff if k == i else x for k, x in enumerate(v))

    def norm(self, v: Vector) -> int:
        """Twice the squared length of ``v`` under the symmetrized form."""
        d = self.symmetrizer
        a = self.cartan
        n = self.rank
        return sum(v[i] * d[i] * a[i][j] * v[j] for i in range(n) for j in range(n))

    def reflection_along(self, root: Vector) -> GroupElement:
        """Matrix of the reflection orthogonal to ``root``."""
        n = self.rank
        d = self.symmetrizer
        a = self.cartan
        nr = self.norm(root)
        cols = []
        for j in range(n):
            # <a_j, root> * 2 / (root, root); the form is (x, y) = sum x_i d_i a_ij y_j
            pairing = sum(root[i] * d[i] * a[i][j] for i in range(n))
            coeff, rem = divmod(2 * pairing, nr)
            if rem:
                raise ArithmeticError("non-integral reflection coefficient")
            cols.append(tuple(int(k == j) - coeff * root[k] for k in range(n)))
        return GroupElement(tuple(zip(*cols)))

    def is_root(self, v: Vector) -> bool:
        return v in self.root_index or neg(v) in self.root_index

    @cached_property
    def all_roots(self) -> frozenset[Vector]:
        return frozenset(self.positive_roots) | frozenset(neg(b) for b in self.positive_roots)

    @cached_property
    def almost_positive_roots(self) -> tuple[Vector, ...]:
        n = self.rank
        return tuple(unit(n, i, -1) for i in range(n)) + self.positive_roots

    def height(self, v: Vector) -> int:
        return sum(v)


def build_root_system(spec: CartanSpec) -> RootSystem:
    n = spec.rank
    a = spec.cartan
    gens = []
    for i in range(n):
        rows = [list(row) for row in _identity(n)]
        for j in range(n):
            rows[i][j] -= a[i][j]
        gens.append(tuple(tuple(r) for r in rows))
    found = {unit(n, i) for i in range(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for g in gens:
                gamma = _apply(g, beta)
                if is_positive(gamma) and gamma not in found:
                    found.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    ordered = tuple(sorted(found, key=lambda v: (sum(v), neg(v))))
    return RootSystem(
        spec=spec,
        positive_roots=ordered,
        root_index={v: k for k, v in enumerate(ordered)},
        generator_matrices=tuple(gens),
    )


@lru_cache(maxsize=None)
def root_system(family: str, rank: int) -> RootSystem:
    return build_root_system(CartanSpec(family, rank))


def evaluate_word(rs: RootSystem, word) -> GroupElement:
    m = _identity(rs.rank)
    for letter in word:
        m = _matmul(m, rs.generator_matrices[letter])
    return GroupElement(m)


def length(rs: RootSystem, g: GroupElement) -> int:
    return sum(1 for beta in rs.positive_roots if is_negative(g(beta)))


def inverse(rs: RootSystem, g: GroupElement) -> GroupElement:
    inv = linalg.inverse(g.matrix)
    return GroupElement(tuple(tuple(int(x) for x in row) for row in inv))


def longest_element(rs: RootSystem) -> GroupElement:
    return evaluate_word(rs, c_sorting_word(rs, tuple(range(rs.rank))))


def is_reduced(rs: RootSystem, word) -> bool:
    return length(rs, evaluate_word(rs, word)) == len(word)


def check_coxeter_word(rs: RootSystem, c) -> tuple[int, ...]:
    c = tuple(int(x) for x in c)
    if sorted(c) != list(range(rs.rank)):
        raise ValueError(f"{c} is not a permutation of the generators 0..{rs.rank - 1}")
    return c


def c_sorting_word(rs: RootSystem, c) -> tuple[int, ...]:
    """Greedy lexicographically first reduced subword of ``c^infinity`` for w_o.

    A letter ``q`` extends the current prefix ``v`` iff ``v(alpha_q)`` is positive.
    """
    c = check_coxeter_word(rs, c)
    word: list[int] = []
    v = _identity(rs.rank)
    while len(word) < rs.N:
        progressed = False
        for q in c:
            if is_positive(_apply(v, unit(rs.rank, q))):
                word.append(q)
                v = _matmul(v, rs.generator_matrices[q])
                progressed = True
                if len(word) == rs.N:
                    break
        if not progressed:
            raise ArithmeticError("c-sorting scan stalled before reaching w_o")
    return tuple(word)


def eta(rs: RootSystem, s: int) -> int:
    """The generator ``w_o s w_o``."""
    return _eta_table(rs)[s]


def _eta_table(rs: RootSystem) -> tuple[int, ...]:
    cached = rs.__dict__.get("_eta")
    if cached is None:
        w0 = longest_element(rs)
        table = []
        for s in range(rs.rank):
            conj = (w0 * rs.generator(s) * w0).matrix
            table.append(rs.generator_matrices.index(conj))
        cached = tuple(table)
        rs.__dict__["_eta"] = cached
    return cached


@dataclass(frozen=True)
class CoxeterWord:
    """The word ``Q_c = c w_o(c)`` of length ``m = n + N``."""

    c_word: tuple[int, ...]
    sorting_word: tuple[int, ...]

    @property
    def letters(self) -> tuple[int, ...]:
        return self.c_word + self.sorting_word

    @property
    def n(self) -> int:
        return len(self.c_word)

    @property
    def m(self) -> int:
        return len(self.c_word) + len(self.sorting_word)


def build_Qc(rs: RootSystem, c) -> CoxeterWord:
    c = check_coxeter_word(rs, c)
    return CoxeterWord(c, c_sorting_word(rs, c))


def coxeter_words(rank: int):
    """All reduced words of Coxeter elements as generator orders, lexicographic."""
    return list(permutations(range(rank)))


def commutes(rs: RootSystem, s: int, t: int) -> bool:
    return rs.cartan[s][t] == 0


def bipartite_coxeter_word(rs: RootSystem) -> tuple[int, ...]:
    """Coxeter word listing the colour class of generator 0 first, then the other.

    Letters within a class pairwise commute, so the order inside a class is
    irrelevant up to commutation; we sort for determinism.
    """
    n = rs.rank
    colour = [-1] * n
    colour[0] = 0
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and rs.cartan[i][j] != 0 and colour[j] < 0:
                colour[j] = 1 - colour[i]
                stack.append(j)
    return tuple(i for i in range(n) if colour[i] == 0) + tuple(i for i in range(n) if colour[i] == 1)
