"""Symbolic cluster dynamics: seeds, mutation and exchange graphs.

Cluster variables are identified by integer ids assigned in BFS discovery
order from the reference seed. A reseeded graph shares those ids, so the
same abstract variable can be read off in several bases without polynomial
substitution: identities are carried along by replaying flips.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .coxeter import Matrix
from .errors import BudgetExceeded, InvariantViolation
from .laurent import LaurentPolynomial
from .subword import SubwordComplex

DEFAULT_BUDGET = 200


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def mutate_matrix(b: Matrix, k: int) -> Matrix:
    n = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                row.append(b[i][j] + sign(b[i][k]) * max(0, b[i][k] * b[k][j]))
        out.append(tuple(row))
    return tuple(out)


def is_skew_symmetrizable(b: Matrix, d) -> bool:
    n = len(b)
    return all(d[i] * b[i][j] == -d[j] * b[j][i] for i in range(n) for j in range(n))


def is_acyclic(b: Matrix) -> bool:
    """Whether the quiver with an arrow ``i -> j`` for ``b_ij > 0`` has no oriented cycle."""
    n = len(b)
    indeg = [sum(1 for i in range(n) if b[i][j] > 0) for j in range(n)]
    ready = [j for j in range(n) if indeg[j] == 0]
    removed = 0
    while ready:
        i = ready.pop()
        removed += 1
        for j in range(n):
            if b[i][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    return removed == n


@dataclass(frozen=True)
class Seed:
    variables: tuple[LaurentPolynomial, ...]
    exchange: Matrix

    @property
    def rank(self) -> int:
        return len(self.variables)


def initial_seed(exchange: Matrix) -> Seed:
    n = len(exchange)
    return Seed(LaurentPolynomial.gens(n), tuple(tuple(row) for row in exchange))


def coxeter_exchange_matrix(ctx: SubwordComplex) -> Matrix:
    """``b_uv = -a_uv`` if ``u`` comes before ``v`` in ``c``, ``+a_uv`` otherwise."""
    a = ctx.rs.cartan
    n = ctx.n
    where = {s: k for k, s in enumerate(ctx.c)}
    return tuple(
        tuple(0 if u == v else (-a[u][v] if where[u] < where[v] else a[u][v]) for v in range(n)) for u in range(n)
    )


def seed_from_coxeter(ctx: SubwordComplex) -> Seed:
    return initial_seed(coxeter_exchange_matrix(ctx))


def exchange_polynomial(seed: Seed, k: int) -> LaurentPolynomial:
    """``prod_{b_ik > 0} x_i^b_ik + prod_{b_ik < 0} x_i^-b_ik``."""
    n = seed.rank
    xs = seed.variables
    plus = LaurentPolynomial.constant(xs[0].nvars, 1)
    minus = LaurentPolynomial.constant(xs[0].nvars, 1)
    for i in range(n):
        b = seed.exchange[i][k]
        if b > 0:
            plus = plus * xs[i] ** b
        elif b < 0:
            minus = minus * xs[i] ** (-b)
    return plus + minus


def mutate_variable(seed: Seed, k: int) -> LaurentPolynomial:
    try:
        return exchange_polynomial(seed, k).exact_div(seed.variables[k])
    except ArithmeticError as exc:
        raise InvariantViolation(f"mutation at {k} is not a Laurent polynomial") from exc


def mutate(seed: Seed, k: int) -> Seed:
    if not 0 <= k < seed.rank:
        raise ValueError(f"vertex {k} out of range")
    new = mutate_variable(seed, k)
    variables = seed.variables[:k] + (new,) + seed.variables[k + 1:]
    return Seed(variables, mutate_matrix(seed.exchange, k))


def mutate_path(seed: Seed, path) -> Seed:
    for k in path:
        seed = mutate(seed, k)
    return seed


def d_vector(y: LaurentPolynomial) -> tuple[int, ...]:
    """Negated minimal exponent of each variable; ``-e_i`` for ``x_i`` itself."""
    return tuple(-x for x in y.min_exponents())


class ExchangeGraph:
    """Breadth-first enumeration of the unlabeled seeds reachable from ``seed``.

    Attributes (indexed by cluster number, BFS order):

    ``clusters``  frozensets of variable ids
    ``labeled``   variable ids in the vertex order of the recorded seed
    ``matrices``  exchange matrix of the recorded labeled seed
    ``paths``     mutation path from the reference seed to the recorded seed

    ``variables[v]`` is the Laurent expansion of variable ``v`` in the
    reference seed, and ``flips[(cl, v)]`` is the cluster reached by
    exchanging ``v`` out of cluster ``cl``.
    """

    def __init__(self, seed: Seed, budget: int = DEFAULT_BUDGET, template: "ExchangeGraph | None" = None,
                 start: int = 0):
        self.seed = seed
        self.n = seed.rank
        self.budget = budget
        self.template = template
        self.variables: dict[int, LaurentPolynomial] = {}
        self.clusters: list[frozenset[int]] = []
        self.labeled: list[tuple[int, ...]] = []
        self.matrices: list[Matrix] = []
        self.paths: list[tuple[int, ...]] = []
        self.flips: dict[tuple[int, int], int] = {}
        self.cluster_index: dict[frozenset[int], int] = {}
        self._explore(start)

    def _explore(self, start: int):
        template = self.template
        if template is None:
            ids = tuple(range(self.n))
            by_key: dict[LaurentPolynomial, int] = {x: i for i, x in enumerate(self.seed.variables)}
        else:
            ids = template.labeled[start]
            by_key = {}
        for v, x in zip(ids, self.seed.variables):
            self.variables[v] = x
        self._add(frozenset(ids), ids, self.seed.exchange, ())
        seeds = {0: self.seed}
        queue = deque([0])
        while queue:
            cl = queue.popleft()
            current = seeds.pop(cl)
            ids = self.labeled[cl]
            for k in range(self.n):
                out = ids[k]
                if (cl, out) in self.flips:
                    continue
                if template is not None:
                    target = template.flips[(template.cluster_index[self.clusters[cl]], out)]
                    new_set = template.clusters[target]
                    (new_id,) = new_set - self.clusters[cl]
                    if new_set in self.cluster_index:
                        self._link(cl, out, self.cluster_index[new_set], new_id)
                        continue
                    nxt = mutate(current, k)
                    self.variables[new_id] = nxt.variables[k]
                else:
                    nxt = mutate(current, k)
                    poly = nxt.variables[k]
                    new_id = by_key.get(poly)
                    if new_id is None:
                        new_id = len(by_key)
                        by_key[poly] = new_id
                        self.variables[new_id] = poly
                    new_set = self.clusters[cl] - {out} | {new_id}
                    if new_set in self.cluster_index:
                        self._link(cl, out, self.cluster_index[new_set], new_id)
                        continue
                labeled = ids[:k] + (new_id,) + ids[k + 1:]
                idx = self._add(new_set, labeled, nxt.exchange, self.paths[cl] + (k,))
                self._link(cl, out, idx, new_id)
                seeds[idx] = nxt
                queue.append(idx)

    def _add(self, cluster, labeled, matrix, path) -> int:
        if len(self.clusters) >= self.budget:
            raise BudgetExceeded(f"exchange graph has more than {self.budget} seeds")
        idx = len(self.clusters)
        self.clusters.append(cluster)
        self.labeled.append(labeled)
        self.matrices.append(matrix)
        self.paths.append(path)
        self.cluster_index[cluster] = idx
        return idx

    def _link(self, cl, out, target, new_id):
        self.flips[(cl, out)] = target
        self.flips[(target, new_id)] = cl

    # -- queries -------------------------------------------------------------

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def d_vector(self, v: int) -> tuple[int, ...]:
        return d_vector(self.variables[v])

    def flip(self, cl: int, v: int) -> tuple[int, int]:
        """Cluster reached by exchanging ``v`` and the variable that comes in."""
        target = self.flips[(cl, v)]
        (new_id,) = self.clusters[target] - self.clusters[cl]
        return target, new_id

    def replay(self, labeled: tuple[int, ...], path) -> tuple[int, ...]:
        """Labeled variable ids after mutating ``labeled`` along ``path``."""
        for k in path:
            cl = self.cluster_index[frozenset(labeled)]
            _, new_id = self.flip(cl, labeled[k])
            labeled = labeled[:k] + (new_id,) + labeled[k + 1:]
        return labeled

    def reseed(self, cl: int) -> "ExchangeGraph":
        """All variables expressed in fresh indeterminates attached to cluster ``cl``.

        The recorded labeled seed of ``cl`` (and its exchange matrix) becomes
        the new reference seed; variable ids are shared with this graph.
        """
        if self.template is not None:
            raise ValueError("reseed from the reference graph")
        if cl == 0:
            return self
        cache = self.__dict__.setdefault("_reseeds", {})
        if cl not in cache:
            seed = initial_seed(self.matrices[cl])
            cache[cl] = ExchangeGraph(seed, budget=self.budget, template=self, start=cl)
        return cache[cl]

    def d_vectors(self) -> dict[int, tuple[int, ...]]:
        return {v: d_vector(x) for v, x in self.variables.items()}


class ClusterAlgebra:
    """The cluster algebra with initial seed ``X_c`` for a Coxeter word ``c``."""

    def __init__(self, ctx: SubwordComplex, budget: int = DEFAULT_BUDGET):
        from .roots import AlmostPositiveRoots

        self.ctx = ctx
        self.roots = AlmostPositiveRoots(ctx)
        self.seed = seed_from_coxeter(ctx)
        self.graph = ExchangeGraph(self.seed, budget=budget)
        if not is_skew_symmetrizable(self.seed.exchange, ctx.rs.symmetrizer):
            raise InvariantViolation("exchange matrix is not skew-symmetrized by the Cartan symmetrizer")

    @property
    def n(self) -> int:
        return self.ctx.n

    @cached_property
    def _psi(self) -> tuple[int, ...]:
        by_dvector = {}
        for v, d in self.graph.d_vectors().items():
            if d in by_dvector:
                raise InvariantViolation(f"variables {by_dvector[d]} and {v} share the d-vector {d}")
            by_dvector[d] = v
        if sorted(by_dvector) != sorted(self.ctx.rs.almost_positive_roots):
            raise InvariantViolation("d-vectors with respect to X_c are not the almost positive roots")
        return tuple(by_dvector[self.roots.theta(j)] for j in range(self.ctx.m))

    def psi(self, j: int) -> int:
        """Variable id whose d-vector with respect to ``X_c`` is ``theta_c(j)``."""
        return self._psi[j]

    @cached_property
    def psi_inverse(self) -> dict[int, int]:
        return {v: j for j, v in enumerate(self._psi)}

    def variable(self, v: int) -> LaurentPolynomial:
        return self.graph.variables[v]

    def cluster_of_positions(self, positions) -> int:
        return self.graph.cluster_index[frozenset(self.psi(j) for j in positions)]

    def seed_at(self, path) -> int:
        """Cluster number reached from ``X_c`` along a mutation path."""
        labeled = self.graph.replay(self.graph.labeled[0], path)
        return self.graph.cluster_index[frozenset(labeled)]

    def d_vectors_at(self, cl: int) -> dict[int, tuple[int, ...]]:
        """d-vectors of every variable with respect to cluster ``cl`` in its recorded labeling."""
        return self.graph.reseed(cl).d_vectors()

    def compat_degree_vars(self, x: int, y: int, cl: int | None = None) -> int:
        """``d(x, y)``: the ``x``-component of ``d(X, y)`` for a cluster ``X`` containing ``x``."""
        if cl is None:
            cl = next(k for k, cluster in enumerate(self.graph.clusters) if x in cluster)
        slot = self.graph.labeled[cl].index(x)
        return self.graph.reseed(cl).d_vector(y)[slot]

    def covering_clusters(self) -> dict[int, int]:
        """For each variable, a cluster containing it; few distinct clusters overall."""
        chosen: dict[int, int] = {}
        while len(chosen) < self.graph.num_variables:
            best = max(range(len(self.graph.clusters)),
                       key=lambda k: (len(self.graph.clusters[k] - chosen.keys()), -k))
            for v in self.graph.clusters[best]:
                chosen.setdefault(v, best)
        return chosen

    def compat_table(self) -> dict[tuple[int, int], int]:
        """``d(x, y)`` for every pair of variable ids."""
        table = {}
        for x, cl in sorted(self.covering_clusters().items()):
            slot = self.graph.labeled[cl].index(x)
            dvs = self.d_vectors_at(cl)
            for y, d in dvs.items():
                table[(x, y)] = d[slot]
        return table

    def rotate_variable(self, y: int) -> int:
        """Variable at the same vertex after mutating along ``c`` and then the path that produced ``y``."""
        g = self.graph
        cl = next(k for k, cluster in enumerate(g.clusters) if y in cluster)
        vertex = g.labeled[cl].index(y)
        labeled = g.replay(g.labeled[0], tuple(self.ctx.c) + g.paths[cl])
        return labeled[vertex]

    @cached_property
    def rotation(self) -> dict[int, int]:
        return {y: self.rotate_variable(y) for y in sorted(self.graph.variables)}
