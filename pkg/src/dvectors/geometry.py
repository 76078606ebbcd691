"""Polygon models for types A, B and C and their crossing numbers.

Type A_n uses an (n+3)-gon; types B_n and C_n use a (2n+2)-gon with its
central symmetry ``v -> v + n + 1``. A diagonal object is either a single
diagonal (type A), a centrally symmetric pair of diagonals, or a long
diagonal (diameter). Crossings are decided purely from the cyclic order of
the endpoints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

Segment = tuple[int, int]


def crosses(a: Segment, b: Segment) -> bool:
    """Strict interleaving of endpoints: the open segments cross inside the polygon."""
    (p, q), (r, s) = sorted(a), sorted(b)
    return p < r < q < s or r < p < s < q


@dataclass(frozen=True, order=True)
class Diagonal:
    """One diagonal object; ``segments`` holds one segment, or two for a c.s. pair."""

    segments: tuple[Segment, ...]
    long: bool = False

    @property
    def representative(self) -> Segment:
        return self.segments[0]

    def __str__(self):
        return "+".join(f"{{{u},{v}}}" for u, v in self.segments)


class PolygonModel:
    def __init__(self, family: str, rank: int):
        if family not in "ABC" or len(family) != 1:
            raise ValueError(f"no polygon model for type {family}")
        if rank < 1 or (family != "A" and rank < 2):
            raise ValueError(f"invalid rank {rank} for type {family}")
        self.family = family
        self.rank = rank
        self.vertex_count = rank + 3 if family == "A" else 2 * rank + 2

    def __repr__(self):
        return f"PolygonModel({self.family}{self.rank})"

    def _is_diagonal(self, u: int, v: int) -> bool:
        k = self.vertex_count
        return u != v and (u - v) % k not in (1, k - 1)

    @cached_property
    def diagonals(self) -> tuple[Diagonal, ...]:
        k = self.vertex_count
        segs = [(u, v) for u in range(k) for v in range(u + 1, k) if self._is_diagonal(u, v)]
        if self.family == "A":
            return tuple(Diagonal((s,)) for s in segs)
        half = k // 2
        out = set()
        for u, v in segs:
            if v - u == half:
                out.add(Diagonal(((u, v),), long=True))
            else:
                image = tuple(sorted(((u + half) % k, (v + half) % k)))
                out.add(Diagonal(tuple(sorted([(u, v), image]))))
        return tuple(sorted(out, key=lambda d: (d.long, d.segments)))

    def crossing_number(self, theta: Diagonal, delta: Diagonal) -> int:
        """``[theta || delta]``: how often ``delta`` crosses ``theta`` in this model's convention."""
        if theta == delta:
            return -1
        rep = delta.representative
        if self.family == "A":
            return int(crosses(theta.representative, rep))
        if self.family == "B":
            if delta.long:
                return int(any(crosses(s, rep) for s in theta.segments))
            hits = sum(crosses(s, rep) for s in theta.segments)
            return 2 * hits if theta.long else hits
        return sum(crosses(s, rep) for s in theta.segments)

    def compatible(self, theta: Diagonal, delta: Diagonal) -> bool:
        return theta != delta and not any(crosses(s, t) for s in theta.segments for t in delta.segments)

    def enumerate_geometric_clusters(self) -> list[tuple[Diagonal, ...]]:
        """Maximal pairwise non-crossing sets of diagonal objects."""
        graph = nx.Graph()
        graph.add_nodes_from(self.diagonals)
        graph.add_edges_from((d, e) for d, e in itertools.combinations(self.diagonals, 2) if self.compatible(d, e))
        return sorted(tuple(sorted(clique)) for clique in nx.find_cliques(graph))

    def crossing_vector(self, cluster, delta: Diagonal) -> tuple[int, ...]:
        return tuple(self.crossing_number(theta, delta) for theta in cluster)
