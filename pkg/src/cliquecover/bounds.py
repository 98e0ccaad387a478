"""Closed-form machinery for the vertex-sum upper bound.

A cover of an n-vertex graph by n edge-disjoint cliques of sizes V_1..V_n
spends sum V_i(V_i - 1)/2 edges, which is at most n(n-1)/2.  Replacing every
V_i with the mean (justified by Cauchy-Schwarz) shows the mean size is capped
by the inverse of m -> m(m-1) evaluated at n-1, so the vertex sum is capped
by n times that.  Everything here is a pure closed form; no iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Near-integer totals (exact at plane sizes n = p^2+p+1) are snapped so that
# attainment tests compare integers instead of floats.
_SNAP_TOL = 1e-9


@dataclass(frozen=True)
class BoundValue:
    """Vertex-sum cap for covers with exactly n cliques."""

    n: int
    mean_cap: float  # cap on the mean clique size
    total: float     # cap on the total vertex sum, n * mean_cap


def ordered_pairs(m: float) -> float:
    """m(m-1): twice the edge count of a clique on m vertices."""
    if m <= 0:
        raise ValueError(f"expected a positive size, got {m}")
    return m * (m - 1.0)


def ordered_pairs_inv(x: float) -> float:
    """Unique m >= 1 with m(m-1) = x, by the quadratic formula."""
    if x < 0:
        raise ValueError(f"expected a non-negative value, got {x}")
    return 0.5 * (1.0 + math.sqrt(1.0 + 4.0 * x))


def ordered_pairs_inv_derivative(x: float) -> float:
    """Derivative of the inverse above: 1/(2m - 1) at m = inverse(x).

    Strictly decreasing in x and tends to 0, which is what makes the
    constructive lower bound close the gap for large n.
    """
    if x <= 0:
        raise ValueError(f"expected a positive value, got {x}")
    return 1.0 / (2.0 * ordered_pairs_inv(x) - 1.0)


def vertex_sum_bound(n: int) -> BoundValue:
    """Cap on the vertex sum of n edge-disjoint cliques covering n vertices."""
    if n < 1:
        raise ValueError(f"expected a positive vertex count, got {n}")
    mean_cap = ordered_pairs_inv(n - 1)
    total = n * mean_cap
    nearest = round(total)
    if abs(total - nearest) < _SNAP_TOL:
        total = float(nearest)
        mean_cap = total / n
    return BoundValue(n=n, mean_cap=mean_cap, total=total)


def mean_inequality_holds(values, rel_tol: float = 1e-9) -> bool:
    """Check S(S/n - 1) <= sum v_i(v_i - 1) for positive v_i with S = sum v_i.

    This is the mean-replacement step of the bound proof (an instance of
    Cauchy-Schwarz), so it is true for every valid input; a False return
    signals an implementation defect rather than interesting data.
    """
    vals = list(values)
    if not vals:
        raise ValueError("expected a nonempty list")
    if any(v <= 0 for v in vals):
        raise ValueError("all entries must be positive")
    s = sum(vals)
    n = len(vals)
    left = s * (s / n - 1.0)
    right = sum(v * (v - 1.0) for v in vals)
    return left <= right + rel_tol * max(1.0, abs(left), abs(right))
