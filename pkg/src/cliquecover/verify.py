"""Independent certification of proposed covers.

Deliberately brute force: every clique is expanded into its pairs and the
multiset of covered edges is compared against the graph's edge set.  The
verifier shares no logic with the plane construction or the solver, so it
can serve as the oracle for both.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .bounds import vertex_sum_bound
from .graph import CliqueCover, Graph

_BOUND_TOL = 1e-9  # absolute slack on top of the (often irrational) bound


@dataclass(frozen=True)
class VerifyReport:
    cliques_valid: bool
    edge_disjoint: bool
    covers_all_edges: bool
    count_matches: bool
    vertex_sum: int
    bound_total: float
    within_bound: bool
    multiply_covered: tuple[tuple[int, int], ...]
    uncovered: tuple[tuple[int, int], ...]

    @property
    def all_valid(self) -> bool:
        return (
            self.cliques_valid
            and self.edge_disjoint
            and self.covers_all_edges
            and self.count_matches
        )


def vertex_sum(cover: CliqueCover) -> int:
    """Total number of clique vertices, counted with multiplicity."""
    return sum(len(c.vertices) for c in cover.cliques)


def verify(g: Graph, cover: CliqueCover) -> VerifyReport:
    """Exhaustive edge accounting of cover against g.

    Raises on out-of-range vertices or a cover aimed at a different vertex
    count; every other defect is reported through the flags, not raised.
    """
    if cover.n != g.n:
        raise ValueError(f"cover targets n={cover.n} but graph has n={g.n}")
    for c in cover.cliques:
        if c.vertices[-1] >= g.n:
            raise ValueError(f"clique {c.vertices} has a vertex >= n={g.n}")

    counts: Counter[tuple[int, int]] = Counter()
    cliques_valid = True
    for c in cover.cliques:
        for pair in combinations(c.vertices, 2):
            counts[pair] += 1
            if pair not in g.edges:
                cliques_valid = False

    multiply_covered = tuple(sorted(e for e, k in counts.items() if k >= 2))
    uncovered = tuple(sorted(e for e in g.edges if e not in counts))
    total = vertex_sum(cover)
    bound = vertex_sum_bound(g.n).total if g.n >= 1 else 0.0

    return VerifyReport(
        cliques_valid=cliques_valid,
        edge_disjoint=not multiply_covered,
        covers_all_edges=not uncovered,
        count_matches=len(cover.cliques) == g.n,
        vertex_sum=total,
        bound_total=bound,
        within_bound=total <= bound + _BOUND_TOL,
        multiply_covered=multiply_covered,
        uncovered=uncovered,
    )
