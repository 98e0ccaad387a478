"""Graph, clique and cover value types with exact edge-set semantics.

Vertices are dense 0-indexed integers. Edges are canonical unordered pairs
(u, v) with u < v, kept in a frozenset so disjointness and coverage checks
are plain set operations. All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not canonical within {self.n} vertices")

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Clique:
    """Nonempty strictly increasing vertex tuple; size 1 and 2 are admitted."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("clique must be nonempty")
        if any(v < 0 for v in self.vertices):
            raise ValueError(f"negative vertex in clique {self.vertices}")
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError(f"clique vertices must be strictly increasing, got {self.vertices}")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        """All unordered vertex pairs induced by the clique."""
        return frozenset(combinations(self.vertices, 2))


@dataclass(frozen=True)
class CliqueCover:
    """Ordered list of cliques aimed at a graph on n vertices.

    Structural validity only: whether the cliques actually cover a given
    graph edge-disjointly is the verifier's business, not a type invariant.
    """

    n: int
    cliques: tuple[Clique, ...]

    def __post_init__(self):
        for c in self.cliques:
            if c.vertices[-1] >= self.n:
                raise ValueError(f"clique {c.vertices} has a vertex >= n={self.n}")


def complete_graph(n: int) -> Graph:
    """K_n: every unordered pair of the n vertices is an edge."""
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    return Graph(n, frozenset(combinations(range(n), 2)))


def graph_from_edges(n: int, pairs) -> Graph:
    """Build a graph from arbitrary (u, v) pairs, canonicalizing and deduplicating.

    Self-loops and out-of-range endpoints are rejected with the offending
    pair in the message.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    edges = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has a vertex out of range for n={n}")
        edges.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(edges))


def is_clique_in(g: Graph, c: Clique) -> bool:
    """True iff every vertex pair of c is an edge of g; singletons are always cliques."""
    if c.vertices[-1] >= g.n:
        raise ValueError(f"clique {c.vertices} has a vertex >= n={g.n}")
    return all(pair in g.edges for pair in combinations(c.vertices, 2))
