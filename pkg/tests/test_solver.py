import random
from itertools import combinations

import pytest

from cliquecover import (
    Clique,
    CliqueCover,
    Graph,
    complete_graph,
    graph_from_edges,
    max_cover_over_graphs,
    max_cover_sum,
    verify,
    vertex_sum_bound,
)
from cliquecover.solver import available_kernels

from _bruteforce import all_graphs, best_cover_bruteforce

KERNELS = available_kernels()


def _witness_tuple(res):
    if res.witness is None:
        return None
    return tuple(c.vertices for c in res.witness.cliques)


def _random_graph(rng, n, max_edges):
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    return graph_from_edges(n, pairs[: rng.randint(0, max_edges)])


def test_compiled_kernel_is_present():
    # the build provides the compiled core; the fallback alone is a bug
    assert "python" in KERNELS
    assert "cython" in KERNELS


@pytest.mark.parametrize("kernel", KERNELS)
def test_matches_bruteforce_on_all_tiny_graphs(kernel):
    for n in (1, 2, 3, 4):
        for g in all_graphs(n):
            for k in (1, 2, n, n + 2):
                want = best_cover_bruteforce(g, k)
                res = max_cover_sum(g, k, kernel=kernel)
                got = (res.feasible, res.best_sum, _witness_tuple(res))
                assert got == want, (n, sorted(g.edges), k)


@pytest.mark.parametrize("kernel", KERNELS)
def test_matches_bruteforce_on_random_graphs(kernel):
    rng = random.Random(20)
    for _ in range(40):
        g = _random_graph(rng, 5, 8)
        k = rng.randint(1, 6)
        want = best_cover_bruteforce(g, k)
        res = max_cover_sum(g, k, kernel=kernel)
        assert (res.feasible, res.best_sum, _witness_tuple(res)) == want


def test_kernels_agree_on_wider_instances():
    rng = random.Random(21)
    for _ in range(60):
        g = _random_graph(rng, rng.randint(2, 7), 12)
        k = rng.randint(1, 8)
        results = [max_cover_sum(g, k, kernel=kern) for kern in KERNELS]
        first = (results[0].feasible, results[0].best_sum, _witness_tuple(results[0]))
        for other in results[1:]:
            assert (other.feasible, other.best_sum, _witness_tuple(other)) == first


def test_witnesses_verify_clean():
    rng = random.Random(22)
    checked = 0
    for _ in range(200):
        n = rng.randint(1, 5)
        g = _random_graph(rng, n, 9)
        res = max_cover_sum(g, n)
        if not res.feasible:
            continue
        report = verify(g, res.witness)
        assert report.all_valid
        assert report.vertex_sum == res.best_sum
        assert res.best_sum <= vertex_sum_bound(g.n).total + 1e-9
        checked += 1
    assert checked > 100


def test_k3_examples():
    g = complete_graph(3)
    res = max_cover_sum(g, 3)
    assert (res.feasible, res.best_sum) == (True, 6)
    assert _witness_tuple(res) == ((0, 1), (0, 2), (1, 2))
    res2 = max_cover_sum(g, 2)
    assert (res2.feasible, res2.best_sum) == (True, 4)
    assert _witness_tuple(res2) == ((0,), (0, 1, 2))
    res1 = max_cover_sum(g, 1)
    assert (res1.feasible, res1.best_sum) == (True, 3)


def test_k4_example():
    res = max_cover_sum(complete_graph(4), 4)
    assert (res.feasible, res.best_sum) == (True, 9)
    assert _witness_tuple(res) == ((0, 1), (0, 2), (0, 3), (1, 2, 3))


def test_empty_graph_is_all_padding():
    res = max_cover_sum(Graph(3, frozenset()), 3)
    assert (res.feasible, res.best_sum) == (True, 3)
    assert _witness_tuple(res) == ((0,), (0,), (0,))


def test_no_vertices_is_infeasible():
    res = max_cover_sum(Graph(0, frozenset()), 2)
    assert not res.feasible
    assert res.best_sum is None and res.witness is None


def test_infeasible_when_budget_too_small():
    square = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    res = max_cover_sum(square, 2)  # only K_2 cliques exist, 4 needed
    assert not res.feasible
    res4 = max_cover_sum(square, 4)
    assert (res4.feasible, res4.best_sum) == (True, 8)


def test_extra_slot_gains_at_least_one():
    rng = random.Random(23)
    for _ in range(40):
        g = _random_graph(rng, 5, 8)
        k = rng.randint(1, 5)
        base = max_cover_sum(g, k)
        if not base.feasible:
            continue
        bumped = max_cover_sum(g, k + 1)
        assert bumped.feasible
        assert bumped.best_sum >= base.best_sum + 1
    # strict jump beyond +1 happens when the extra slot unlocks a better split
    assert max_cover_sum(complete_graph(3), 2).best_sum == 4
    assert max_cover_sum(complete_graph(3), 3).best_sum == 6


def test_size_guards():
    with pytest.raises(ValueError, match="instance too large"):
        max_cover_sum(complete_graph(17), 17)
    with pytest.raises(ValueError, match="instance too large"):
        max_cover_sum(complete_graph(9), 9)  # 36 edges > 30
    res = max_cover_sum(complete_graph(9), 9, max_edges=36)
    assert (res.feasible, res.best_sum) == (True, 24)
    with pytest.raises(ValueError, match="budget"):
        max_cover_sum(complete_graph(3), 0)
    with pytest.raises(ValueError, match="unknown kernel"):
        max_cover_sum(complete_graph(3), 3, kernel="fortran")


def test_over_all_graphs_small_values():
    assert max_cover_over_graphs(1)[0] == 1
    best, g, cover = max_cover_over_graphs(2)
    assert best == 2 + 1
    assert sorted(g.edges) == [(0, 1)]
    assert tuple(c.vertices for c in cover.cliques) == ((0,), (0, 1))
    best3, g3, cover3 = max_cover_over_graphs(3)
    assert best3 == 6
    assert g3 == complete_graph(3)
    assert tuple(c.vertices for c in cover3.cliques) == ((0, 1), (0, 2), (1, 2))


def test_over_all_graphs_witness_is_deterministic():
    best, g, cover = max_cover_over_graphs(4)
    assert best == 9
    assert g == complete_graph(4)
    assert tuple(c.vertices for c in cover.cliques) == (
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2, 3),
    )
    report = verify(g, cover)
    assert report.all_valid


def test_over_all_graphs_guard():
    with pytest.raises(ValueError, match="instance too large"):
        max_cover_over_graphs(7)
    with pytest.raises(ValueError, match="n >= 1"):
        max_cover_over_graphs(0)
