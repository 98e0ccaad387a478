"""Edge-disjoint clique cover of K_n attaining the vertex-sum bound.

For prime p and n = p^2 + p + 1, the lines of the projective plane of order
p give n cliques of size p+1 that partition the edges of K_n.  Vertices are
laid out as p+1 groups of p points, v(i,j) -> i*p + j for 0 <= i <= p and
0 <= j < p, plus a hub vertex at index n-1.

Two clique families realize the lines:

  * hub cliques: the hub together with one whole group,
  * slope cliques: for 0 <= a, b < p, the points v(i, (b - a*i) mod p) for
    i < p together with v(p, a); primality of p makes any two of them meet
    in at most one vertex.

Only prime p is accepted; prime-power planes would need field arithmetic
beyond integers mod p and are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Clique, CliqueCover, Graph, complete_graph
from .primes import is_prime

#: Marker for requesting the hub vertex from plane_vertex_index.
HUB = "w"


@dataclass(frozen=True)
class PlaneParams:
    """Prime order p and the derived point count n = p^2 + p + 1."""

    p: int
    n: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n != self.p * self.p + self.p + 1:
            raise ValueError(f"n must equal p^2+p+1 = {self.p**2 + self.p + 1}, got {self.n}")


def plane_params(p: int) -> PlaneParams:
    return PlaneParams(p=p, n=p * p + p + 1)


def plane_vertex_index(params: PlaneParams, i, j: int | None = None) -> int:
    """Vertex index of v(i, j), or of the hub when called with the HUB marker."""
    if i == HUB:
        if j is not None:
            raise ValueError("the hub marker takes no second coordinate")
        return params.n - 1
    p = params.p
    if not (0 <= i <= p):
        raise ValueError(f"group index {i} out of range 0..{p}")
    if j is None or not (0 <= j < p):
        raise ValueError(f"position index {j} out of range 0..{p - 1}")
    return i * p + j


def hub_clique(params: PlaneParams, group: int) -> Clique:
    """The hub plus all p vertices of one group: a clique of size p+1."""
    p = params.p
    if not (0 <= group <= p):
        raise ValueError(f"group index {group} out of range 0..{p}")
    return Clique(tuple([group * p + j for j in range(p)] + [params.n - 1]))


def slope_clique(params: PlaneParams, slope: int, intercept: int) -> Clique:
    """The affine line j = (intercept - slope*i) mod p plus its point at infinity.

    Picks v(i, (intercept - slope*i) mod p) for each i < p and v(p, slope),
    again p+1 vertices.
    """
    p = params.p
    if not (0 <= slope < p):
        raise ValueError(f"slope {slope} out of range 0..{p - 1}")
    if not (0 <= intercept < p):
        raise ValueError(f"intercept {intercept} out of range 0..{p - 1}")
    verts = [i * p + (intercept - slope * i) % p for i in range(p)]
    verts.append(p * p + slope)
    return Clique(tuple(sorted(verts)))


def plane_cover(p: int) -> tuple[Graph, CliqueCover]:
    """K_n together with its n = p^2+p+1 edge-disjoint cliques of size p+1.

    Emission order is deterministic: hub cliques by group, then slope
    cliques by (slope, intercept) lexicographic.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    params = plane_params(p)
    cliques = [hub_clique(params, i0) for i0 in range(p + 1)]
    cliques.extend(
        slope_clique(params, a, b) for a in range(p) for b in range(p)
    )
    return complete_graph(params.n), CliqueCover(n=params.n, cliques=tuple(cliques))
