"""Pure-Python branch-and-bound kernel for exact edge-partition search.

Edges live in a bitmask; the search always covers the lowest-indexed
uncovered edge next, branching over the cliques whose lowest edge is that
edge (any clique covering it in a valid state has it as its lowest edge, so
this enumeration is complete and never revisits a partition).

A branch is abandoned only when it provably cannot beat or tie the
incumbent, so every optimal cover is visited and the lexicographically
smallest witness survives.  The mean-size cap supplies the optimistic bound:
t cliques holding r uncovered edges have vertex sum at most
t * inverse(2r/t) where inverse is the m >= 1 root of m(m-1) = x.
"""

from __future__ import annotations

import math

NAME = "python"


def search(m, k, sizes, masks, verts, cand_by_edge, omega):
    """Exact maximum vertex sum over partitions of m edges into <= k cliques.

    sizes/masks/verts describe the usable cliques (size >= 2); cand_by_edge
    groups their ids by lowest edge; omega caps the clique size.  Unused
    slots are padded with single-vertex cliques on vertex 0, each worth 1.
    Returns (found, best_sum, cover) with cover a sorted tuple of vertex
    tuples, or (False, None, None) when no partition into <= k cliques exists.
    """
    full = (1 << m) - 1
    max_edges_per_clique = omega * (omega - 1) // 2
    best_sum = -1
    best_cover = None
    chosen: list[int] = []

    def canonical(slots_left):
        return tuple(sorted([verts[c] for c in chosen] + [(0,)] * slots_left))

    def recurse(uncovered, slots_left, cur_sum):
        nonlocal best_sum, best_cover
        if uncovered == 0:
            total = cur_sum + slots_left
            if total > best_sum:
                best_sum = total
                best_cover = canonical(slots_left)
            elif total == best_sum:
                cand = canonical(slots_left)
                if cand < best_cover:
                    best_cover = cand
            return
        if slots_left == 0:
            return
        r = uncovered.bit_count()
        if slots_left * max_edges_per_clique < r:
            return
        ideal = 0.5 * (1.0 + math.sqrt(1.0 + 8.0 * r / slots_left))
        if best_sum >= 0:
            ceiling = cur_sum + slots_left * min(float(omega), ideal)
            if math.floor(ceiling + 1e-9) < best_sum:
                return
        e = (uncovered & -uncovered).bit_length() - 1
        admissible = [c for c in cand_by_edge[e] if masks[c] & ~uncovered == 0]
        admissible.sort(key=lambda c: (abs(sizes[c] - ideal), sizes[c], c))
        for c in admissible:
            chosen.append(c)
            recurse(uncovered & ~masks[c], slots_left - 1, cur_sum + sizes[c])
            chosen.pop()

    recurse(full, k, 0)
    if best_sum < 0:
        return False, None, None
    return True, best_sum, best_cover
