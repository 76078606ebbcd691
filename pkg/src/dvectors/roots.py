"""Almost positive roots: the labeling by positions, rotation and c-compatibility.

Everything here works on root coordinates only; the rotation is computed
from the closed formula in terms of ``c``, not from positions in ``Q_c``.
"""

from __future__ import annotations

from functools import cached_property

from .coxeter import RootSystem, Vector, build_root_system, evaluate_word, is_positive, unit
from .subword import SubwordComplex


class AlmostPositiveRoots:
    def __init__(self, ctx: SubwordComplex):
        self.ctx = ctx
        self.rs: RootSystem = ctx.rs
        self.c = ctx.c

    def check(self, alpha) -> Vector:
        alpha = tuple(alpha)
        if alpha not in self.index:
            raise ValueError(f"{alpha} is not an almost positive root of {self.rs.spec.name}")
        return alpha

    @cached_property
    def index(self) -> dict[Vector, int]:
        return {a: k for k, a in enumerate(self.rs.almost_positive_roots)}

    @cached_property
    def thetas(self) -> tuple[Vector, ...]:
        """``theta_c(j)`` for every position ``j``."""
        n = self.rs.rank
        out = [unit(n, q, -1) for q in self.c]
        sorting = self.ctx.word.sorting_word
        for i, w in enumerate(sorting):
            out.append(evaluate_word(self.rs, sorting[:i])(unit(n, w)))
        return tuple(out)

    def theta(self, j: int) -> Vector:
        return self.thetas[j]

    @cached_property
    def theta_inverse(self) -> dict[Vector, int]:
        return {a: j for j, a in enumerate(self.thetas)}

    @cached_property
    def _tau(self) -> dict[Vector, Vector]:
        rs, c, n = self.rs, self.c, self.rs.rank
        coxeter = evaluate_word(rs, c)
        special = {}
        for i, ci in enumerate(c):
            special[unit(n, ci, -1)] = evaluate_word(rs, c[:i])(unit(n, ci))
            special[evaluate_word(rs, tuple(reversed(c[i + 1:])))(unit(n, ci))] = unit(n, ci, -1)
        table = {}
        for alpha in rs.almost_positive_roots:
            table[alpha] = special[alpha] if alpha in special else coxeter(alpha)
        if sorted(table.values()) != sorted(table):
            raise ArithmeticError("rotation is not a permutation of the almost positive roots")
        return table

    @cached_property
    def _tau_inverse(self) -> dict[Vector, Vector]:
        return {v: k for k, v in self._tau.items()}

    def tau(self, alpha) -> Vector:
        return self._tau[self.check(alpha)]

    def tau_inverse(self, alpha) -> Vector:
        return self._tau_inverse[self.check(alpha)]

    def negative_simple(self, alpha) -> int | None:
        """Index ``i`` if ``alpha = -alpha_i``, else None."""
        if is_positive(alpha):
            return None
        return alpha.index(-1)

    def c_compat(self, alpha, beta) -> int:
        """``(alpha || beta)``: rotate both backwards until ``alpha`` is ``-alpha_i``, read ``b_i``."""
        alpha, beta = self.check(alpha), self.check(beta)
        if alpha == beta:
            return -1
        for _ in range(len(self.index) + 1):
            i = self.negative_simple(alpha)
            if i is not None:
                return beta[i]
            alpha, beta = self._tau_inverse[alpha], self._tau_inverse[beta]
        raise ArithmeticError(f"orbit of {alpha} never meets a negative simple root")

    def c_compat_readings(self, alpha, beta) -> list[int]:
        """Value read at every negative simple root met along a full backward orbit."""
        alpha, beta = self.check(alpha), self.check(beta)
        readings = []
        start = alpha
        while True:
            i = self.negative_simple(alpha)
            if i is not None:
                readings.append(beta[i])
            alpha, beta = self._tau_inverse[alpha], self._tau_inverse[beta]
            if alpha == start:
                return readings

    def is_c_cluster(self, roots) -> bool:
        positions = [self.theta_inverse.get(tuple(a)) for a in roots]
        if None in positions or len(set(positions)) != self.rs.rank:
            return False
        return self.ctx.is_c_cluster(positions)

    def dvector_from_roots(self, roots, beta) -> tuple[int, ...]:
        """``((beta_1 || beta), ..., (beta_n || beta))`` for a c-cluster ``roots``."""
        roots = [self.check(a) for a in roots]
        if not self.is_c_cluster(roots):
            raise ValueError(f"{roots} is not a c-cluster")
        return tuple(self.c_compat(a, beta) for a in roots)


def coroot(rs: RootSystem, alpha: Vector, perm: tuple[int, ...]) -> Vector:
    """Coordinates of ``alpha^vee`` in the simple coroots, relabeled into the dual system.

    ``alpha^vee = sum b_i (a_i, a_i)/(alpha, alpha) a_i^vee``.
    """
    d = rs.symmetrizer
    norm = rs.norm(alpha)
    out = [0] * rs.rank
    for i, b in enumerate(alpha):
        num = 2 * b * d[i]
        if num % norm:
            raise ArithmeticError("coroot coordinates are not integral")
        out[perm[i]] = num // norm
    return tuple(out)


def dual_compat_check(primal: AlmostPositiveRoots, dual: AlmostPositiveRoots, perm, alpha, beta) -> bool:
    """``(alpha || beta)`` in ``primal`` equals ``(beta^vee || alpha^vee)`` in ``dual``.

    ``dual`` must be built on the dual root system with the Coxeter word
    relabeled by ``perm``.
    """
    rs = primal.rs
    left = primal.c_compat(alpha, beta)
    right = dual.c_compat(coroot(rs, beta, perm), coroot(rs, alpha, perm))
    return left == right


def dual_context(ctx: SubwordComplex) -> tuple[SubwordComplex, tuple[int, ...]]:
    spec, perm = ctx.rs.spec.dual()
    return SubwordComplex(build_root_system(spec), tuple(perm[x] for x in ctx.c)), perm


def bipartite_classes(rs: RootSystem) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two colour classes ``(I_+, I_-)`` of the Dynkin diagram; generator 0 is in ``I_+``."""
    plus = _colour_class(rs, 0)
    return plus, tuple(i for i in range(rs.rank) if i not in plus)


def _colour_class(rs: RootSystem, start: int) -> tuple[int, ...]:
    n = rs.rank
    colour = {start: 0}
    stack = [start]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and rs.cartan[i][j] and j not in colour:
                colour[j] = 1 - colour[i]
                stack.append(j)
    return tuple(sorted(i for i, x in colour.items() if x == 0))


class ClassicalCompatibility:
    """Compatibility degree defined through the two bipartite involutions.

    ``tau_eps`` fixes ``-alpha_i`` for ``i`` in the opposite class and acts by
    the product of the commuting reflections of class ``eps`` elsewhere. The
    degree is the unique function with ``(-alpha_i || beta) = [beta : alpha_i]_+``
    that is invariant under both involutions; ``(alpha || alpha)`` is taken to be -1.
    Independent of any Coxeter word.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        plus, minus = bipartite_classes(rs)
        self.tau_plus = self._involution(plus, minus)
        self.tau_minus = self._involution(minus, plus)
        self._cache: dict[tuple[Vector, Vector], int] = {}

    def _involution(self, mine, other) -> dict[Vector, Vector]:
        rs, n = self.rs, self.rs.rank
        fixed = {unit(n, i, -1) for i in other}
        refl = evaluate_word(rs, tuple(mine))
        table = {a: a if a in fixed else refl(a) for a in rs.almost_positive_roots}
        if any(table[table[a]] != a for a in table):
            raise ArithmeticError("bipartite map is not an involution")
        return table

    def degree(self, alpha, beta) -> int:
        alpha, beta = tuple(alpha), tuple(beta)
        if alpha == beta:
            return -1
        key = (alpha, beta)
        if key not in self._cache:
            seen = {key}
            frontier = [key]
            while frontier:
                a, b = frontier.pop(0)
                if not is_positive(a):
                    value = max(0, b[a.index(-1)])
                    break
                for t in (self.tau_plus, self.tau_minus):
                    nxt = (t[a], t[b])
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
            else:
                raise ArithmeticError(f"orbit of {alpha} never meets a negative simple root")
            self._cache[key] = value
        return self._cache[key]
