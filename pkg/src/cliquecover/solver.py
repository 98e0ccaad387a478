"""Desk-scale exact optimization of edge-disjoint clique covers.

max_cover_sum finds the exact maximum vertex sum over all ways to partition
a graph's edges into at most k edge-disjoint cliques, padding with
single-vertex cliques to exactly k; max_cover_over_graphs exhausts every
labeled graph on n vertices on top of that.

The branch-and-bound kernel exists twice: a Cython extension for speed and
a pure-Python fallback with identical semantics, selected at import.  Pass
kernel="python"/"cython" to force one (the benchmark does).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _search_py
from .graph import Clique, CliqueCover, Graph

try:
    from . import _search_cy
except ImportError:
    _search_cy = None

_KERNELS = {"python": _search_py}
if _search_cy is not None:
    _KERNELS["cython"] = _search_cy

#: Name of the kernel used by default.
DEFAULT_KERNEL = "cython" if _search_cy is not None else "python"

MAX_VERTICES = 16
MAX_EDGES = 30
MAX_EXHAUSTIVE_N = 6


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    best_sum: int | None
    witness: CliqueCover | None


def available_kernels() -> tuple[str, ...]:
    return tuple(sorted(_KERNELS))


def _resolve_kernel(kernel, n_edges):
    name = DEFAULT_KERNEL if kernel is None else kernel
    if name not in _KERNELS:
        raise ValueError(f"unknown kernel {name!r}; available: {available_kernels()}")
    if name == "cython" and n_edges > 62:
        name = "python"  # compiled masks are 64-bit
    return _KERNELS[name]


def _enumerate_cliques(n, adj, eidx):
    """All cliques of size >= 2, preorder = lexicographic by vertex tuple.

    Returns parallel lists (verts, sizes, masks) plus cand_by_edge grouping
    clique ids by the edge formed by their two smallest vertices.
    """
    verts_out: list[tuple[int, ...]] = []
    sizes: list[int] = []
    masks: list[int] = []
    cand_by_edge: list[list[int]] = [[] for _ in eidx]
    stack: list[int] = []

    def grow(emask, allowed):
        a = allowed
        while a:
            u = (a & -a).bit_length() - 1
            a &= a - 1
            new_emask = emask
            for w in stack:
                new_emask |= 1 << eidx[(w, u)]
            stack.append(u)
            if len(stack) >= 2:
                cid = len(verts_out)
                verts_out.append(tuple(stack))
                sizes.append(len(stack))
                masks.append(new_emask)
                cand_by_edge[eidx[(stack[0], stack[1])]].append(cid)
            grow(new_emask, allowed & adj[u] & ~((1 << (u + 1)) - 1))
            stack.pop()

    for v in range(n):
        stack.append(v)
        grow(0, adj[v] & ~((1 << (v + 1)) - 1))
        stack.pop()
    return verts_out, sizes, masks, cand_by_edge


def max_cover_sum(
    g: Graph,
    k: int,
    *,
    max_vertices: int = MAX_VERTICES,
    max_edges: int = MAX_EDGES,
    kernel: str | None = None,
) -> SolveResult:
    """Exact optimum over partitions of E(g) into <= k cliques plus padding.

    The witness is the lexicographically smallest optimal cover under
    canonical encoding (sorted cliques, sorted list); padding single-vertex
    cliques sit on vertex 0.  Infeasible when E(g) does not partition into
    <= k cliques of g.
    """
    if k < 1:
        raise ValueError(f"clique budget must be >= 1, got {k}")
    if g.n > max_vertices or len(g.edges) > max_edges:
        raise ValueError(
            f"instance too large: n={g.n} (max {max_vertices}), "
            f"|E|={len(g.edges)} (max {max_edges})"
        )
    if g.n == 0:
        return SolveResult(feasible=False, best_sum=None, witness=None)
    if not g.edges:
        pads = (Clique((0,)),) * k
        return SolveResult(feasible=True, best_sum=k, witness=CliqueCover(g.n, pads))

    edges = sorted(g.edges)
    eidx = {e: i for i, e in enumerate(edges)}
    adj = [0] * g.n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    verts, sizes, masks, cand_by_edge = _enumerate_cliques(g.n, adj, eidx)
    omega = max(sizes)

    mod = _resolve_kernel(kernel, len(edges))
    found, best_sum, cover = mod.search(
        len(edges), k, sizes, masks, verts, cand_by_edge, omega
    )
    if not found:
        return SolveResult(feasible=False, best_sum=None, witness=None)
    witness = CliqueCover(g.n, tuple(Clique(t) for t in cover))
    return SolveResult(feasible=True, best_sum=best_sum, witness=witness)


def max_cover_over_graphs(
    n: int,
    *,
    max_n: int = MAX_EXHAUSTIVE_N,
    kernel: str | None = None,
) -> tuple[int, Graph, CliqueCover]:
    """Maximum of max_cover_sum(g, n) over all labeled graphs on n vertices.

    Ties break deterministically: smallest canonical witness cover, then
    smallest sorted edge list.  All 2^(n(n-1)/2) labeled graphs are visited;
    no isomorphism reduction.
    """
    if n < 1:
        raise ValueError(f"expected n >= 1, got {n}")
    if n > max_n:
        raise ValueError(f"instance too large: n={n} exceeds the guard {max_n}")

    all_edges = list(combinations(range(n), 2))
    m = len(all_edges)
    best = None  # (-best_sum, cover_encoding, edges_tuple, witness)
    for bits in range(1 << m):
        subset = frozenset(e for i, e in enumerate(all_edges) if bits >> i & 1)
        g = Graph(n, subset)
        res = max_cover_sum(g, n, kernel=kernel)
        if not res.feasible:
            continue
        encoding = tuple(c.vertices for c in res.witness.cliques)
        key = (-res.best_sum, encoding, tuple(sorted(subset)))
        if best is None or key < best[:3]:
            best = (*key, g, res.witness)
    assert best is not None  # the empty graph is always feasible
    return -best[0], best[3], best[4]
