"""c-clusters as facets of the subword complex of ``Q_c``.

Positions in ``Q_c`` are 0-based, so the initial cluster is ``(0, ..., n-1)``.
A cluster is a sorted tuple of positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coxeter import (
    RootSystem,
    Vector,
    build_Qc,
    check_coxeter_word,
    eta,
    is_positive,
    neg,
    unit,
)
from .errors import InvariantViolation
from .linalg import inverse

Cluster = tuple[int, ...]


@dataclass(frozen=True)
class RootFunctionTable:
    cluster: Cluster
    values: tuple[Vector, ...]

    def __getitem__(self, j: int) -> Vector:
        return self.values[j]

    @property
    def configuration(self) -> tuple[Vector, ...]:
        return tuple(self.values[i] for i in self.cluster)


class SubwordComplex:
    """The subword complex of ``Q_c`` for the longest element, keyed on the word ``c``."""

    def __init__(self, rs: RootSystem, c):
        self.rs = rs
        self.c = check_coxeter_word(rs, c)
        self.word = build_Qc(rs, self.c)
        self.letters = self.word.letters
        self.n = rs.rank
        self.m = self.word.m
        self._coeff_cache: dict[Cluster, list[list[int]]] = {}
        self._containing: dict[int, Cluster] = {}
        self._layers: list[list[Cluster]] | None = None
        self._table: tuple[tuple[int, ...], ...] | None = None

    def __repr__(self):
        return f"SubwordComplex({self.rs.spec.name}, c={self.c})"

    # -- facets ---------------------------------------------------------

    def _check(self, positions) -> Cluster:
        cluster = tuple(sorted(set(positions)))
        if len(cluster) != self.n or len(positions) != self.n:
            raise ValueError(f"a cluster has exactly {self.n} distinct positions, got {positions}")
        if cluster[0] < 0 or cluster[-1] >= self.m:
            raise ValueError(f"positions must lie in 0..{self.m - 1}")
        return cluster

    def is_c_cluster(self, positions) -> bool:
        """Whether the complement of ``positions`` is a reduced word for w_o."""
        cluster = set(self._check(positions))
        n = self.n
        cartan = self.rs.cartan
        # columns of the running product v
        cols = [list(unit(n, i)) for i in range(n)]
        for k, q in enumerate(self.letters):
            if k in cluster:
                continue
            image = cols[q]
            if not is_positive(image):
                return False
            cols = _right_multiply(cols, q, cartan)
        return True

    def initial_cluster(self) -> Cluster:
        return tuple(range(self.n))

    # -- root function ----------------------------------------------------

    def root_function(self, positions) -> RootFunctionTable:
        """``r(I, j)`` for every position ``j``, computed from scratch."""
        cluster = self._check(positions)
        members = set(cluster)
        n = self.n
        cartan = self.rs.cartan
        cols = [list(unit(n, i)) for i in range(n)]
        values = []
        for k, q in enumerate(self.letters):
            values.append(tuple(cols[q]))
            if k not in members:
                cols = _right_multiply(cols, q, cartan)
        return RootFunctionTable(cluster, tuple(values))

    def root(self, positions, j: int) -> Vector:
        return self.root_function(positions)[j]

    def flip(self, positions, i: int, table: RootFunctionTable | None = None) -> tuple[Cluster, int]:
        """Exchange ``i`` with the unique ``j`` outside ``I`` with ``r(I, j) = +-r(I, i)``."""
        cluster = self._check(positions)
        if i not in cluster:
            raise ValueError(f"position {i} is not in {cluster}")
        if table is None:
            table = self.root_function(cluster)
        target = table[i]
        other = neg(target)
        matches = [j for j in range(self.m) if j not in cluster and table[j] in (target, other)]
        if len(matches) != 1:
            raise InvariantViolation(f"flip of {i} in {cluster} found partners {matches}")
        j = matches[0]
        flipped = tuple(sorted(set(cluster) - {i} | {j}))
        return flipped, j

    def update_root_function(self, table: RootFunctionTable, i: int, j: int) -> RootFunctionTable:
        """Root function after flipping ``i`` out and ``j`` in, without recomputation.

        Values strictly after ``min(i, j)`` and up to ``max(i, j)`` are
        reflected in the hyperplane orthogonal to ``r(I, i)``; all others stay.
        """
        t = self.rs.reflection_along(table[i])
        lo, hi = min(i, j), max(i, j)
        values = tuple(t(v) if lo < k <= hi else v for k, v in enumerate(table.values))
        cluster = tuple(sorted(set(table.cluster) - {i} | {j}))
        return RootFunctionTable(cluster, values)

    # -- compatibility coefficients ---------------------------------------

    def coefficients(self, positions) -> dict[int, tuple[int, ...]]:
        """``rho_i(j)`` for every ``i`` in ``I`` and every position ``j``.

        Each ``r(I, j)`` is decomposed on the basis ``R(I)``; the result must
        be integral.
        """
        cluster = self._check(positions)
        cached = self._coeff_cache.get(cluster)
        if cached is None:
            table = self.root_function(cluster)
            basis = table.configuration
            # columns of the basis matrix are the roots r(I, i)
            inv = inverse([[basis[k][row] for k in range(self.n)] for row in range(self.n)])
            cached = []
            for k in range(self.n):
                coeffs = []
                for j in range(self.m):
                    x = sum((a * b for a, b in zip(inv[k], table[j])), Fraction(0))
                    if x.denominator != 1:
                        raise InvariantViolation(f"non-integral coefficient {x} for {cluster}, j={j}")
                    coeffs.append(int(x))
                cached.append(coeffs)
            self._coeff_cache[cluster] = cached
        return {i: tuple(cached[k]) for k, i in enumerate(cluster)}

    def compat_coeff(self, i: int, j: int, positions=None) -> int:
        """``{i || j}``: signed coefficient of ``r(I, i)`` in ``r(I, j)``."""
        if positions is None:
            positions = self.cluster_containing(i)
        rho = self.coefficients(positions)[i][j]
        return rho if j > i else -rho

    def compat_table(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of ``{i || j}`` over all pairs of positions."""
        if self._table is None:
            rows = []
            for i in range(self.m):
                rho = self.coefficients(self.cluster_containing(i))[i]
                rows.append(tuple(r if j > i else -r for j, r in enumerate(rho)))
            self._table = tuple(rows)
        return self._table

    # -- rotation and jumps ---------------------------------------------

    def rotate_position(self, i: int) -> int:
        s = self.letters[i]
        for k in range(i + 1, self.m):
            if self.letters[k] == s:
                return k
        return self.letters.index(eta(self.rs, s))

    def rotation(self) -> tuple[int, ...]:
        return tuple(self.rotate_position(i) for i in range(self.m))

    def rotate_cluster(self, positions) -> Cluster:
        return tuple(sorted(self.rotate_position(i) for i in positions))

    def jump(self) -> tuple["SubwordComplex", tuple[int, ...]]:
        """Move the first letter of ``c`` to the end.

        Returns the complex for ``c' = (c_2, ..., c_n, c_1)`` and the position
        map ``sigma`` from ``Q_c`` to ``Q_c'``: position 0 goes to the end of
        the jumping word (carrying ``eta(c_1)``), then occurrences are matched
        letter by letter after checking commutation equivalence.
        """
        other = SubwordComplex(self.rs, self.c[1:] + self.c[:1])
        jumped = self.letters[1:] + (eta(self.rs, self.letters[0]),)
        pre = tuple(k - 1 if k else self.m - 1 for k in range(self.m))
        match = commutation_map(self.rs, jumped, other.letters)
        return other, tuple(match[pre[k]] for k in range(self.m))

    # -- enumeration -----------------------------------------------------

    def _bfs_layers(self, stop=None) -> list[list[Cluster]]:
        if self._layers is None:
            self._layers = [[self.initial_cluster()]]
            self._seen = {self.initial_cluster()}
            self._done = False
        while not self._done:
            if stop is not None and stop():
                break
            nxt = set()
            for cluster in self._layers[-1]:
                table = self.root_function(cluster)
                for i in cluster:
                    flipped, _ = self.flip(cluster, i, table)
                    if flipped not in self._seen:
                        nxt.add(flipped)
            if not nxt:
                self._done = True
                break
            self._seen |= nxt
            self._layers.append(sorted(nxt))
        return self._layers

    def enumerate_clusters(self) -> list[Cluster]:
        """All c-clusters, in BFS layer order from the initial cluster, lexicographic within layers."""
        return [cl for layer in self._bfs_layers() for cl in layer]

    def cluster_containing(self, i: int) -> Cluster:
        """First cluster in canonical enumeration order containing position ``i``."""
        if i in self._containing:
            return self._containing[i]
        if not 0 <= i < self.m:
            raise ValueError(f"position {i} out of range")

        def found():
            return any(i in cl for layer in self._layers for cl in layer)

        layers = self._bfs_layers(stop=found)
        for layer in layers:
            for cl in layer:
                for p in cl:
                    self._containing.setdefault(p, cl)
        return self._containing[i]

    def compatible_pairs(self) -> set[tuple[int, int]]:
        """Ordered pairs of distinct positions lying in a common cluster."""
        pairs = set()
        for cl in self.enumerate_clusters():
            for a in cl:
                for b in cl:
                    if a != b:
                        pairs.add((a, b))
        return pairs


def _right_multiply(cols, q: int, cartan):
    """Columns of ``v * s_q`` from the columns of ``v``."""
    col_q = cols[q]
    row = cartan[q]
    out = []
    for j, col in enumerate(cols):
        a = row[j]
        out.append([x - a * y for x, y in zip(col, col_q)] if a else col)
    return out


def commutation_map(rs: RootSystem, source, target) -> tuple[int, ...]:
    """Position map between two commutation-equivalent words.

    The k-th occurrence of a letter in ``source`` maps to its k-th occurrence
    in ``target``. Equivalence is checked by comparing the projections of both
    words onto every pair of non-commuting letters.
    """
    source, target = tuple(source), tuple(target)
    if len(source) != len(target):
        raise InvariantViolation("words of different lengths")
    n = rs.rank
    for s in range(n):
        for t in range(s, n):
            if s != t and rs.cartan[s][t] == 0:
                continue
            if [x for x in source if x in (s, t)] != [x for x in target if x in (s, t)]:
                raise InvariantViolation(f"{source} and {target} are not commutation equivalent")
    where: dict[int, list[int]] = {}
    for k, x in enumerate(target):
        where.setdefault(x, []).append(k)
    seen: dict[int, int] = {}
    out = []
    for x in source:
        k = seen.get(x, 0)
        out.append(where[x][k])
        seen[x] = k + 1
    return tuple(out)
