"""Acceptance gate: one test per release criterion, run with pytest -v.

Each test is a single pass/fail line for its criterion and asserts both the
mathematical claim and its runtime budget.  Frozen constants were produced
by the independent oracles in this suite (set-partition enumeration, trial
division, finite differences), not copied from the implementation.
"""

import math
import random
import time
from collections import Counter

import numpy as np

from cliquecover import (
    complete_graph,
    max_cover_over_graphs,
    max_cover_sum,
    mean_inequality_holds,
    ordered_pairs,
    ordered_pairs_inv,
    ordered_pairs_inv_derivative,
    parse_cover_file,
    parse_graph_file,
    pi_window,
    plane_cover,
    prime_window,
    ratio_row,
    verify,
    vertex_sum_bound,
    write_cover_file,
    write_graph_file,
)
from cliquecover.cli import main as cli_main

from _bruteforce import t_bruteforce

ACCEPTANCE_PRIMES = (2, 3, 5, 7, 11, 13)


def test_criterion_1_bound_attainment_at_plane_sizes():
    # construct then verify for each prime; vertex sum hits the cap exactly
    for p in ACCEPTANCE_PRIMES:
        t0 = time.perf_counter()
        n = p * p + p + 1
        g, cover = plane_cover(p)
        report = verify(g, cover)
        elapsed = time.perf_counter() - t0
        assert report.all_valid, p
        assert report.within_bound, p
        assert report.vertex_sum == n * (p + 1), p
        assert report.vertex_sum == round(vertex_sum_bound(n).total), p
        assert elapsed < 1.0, (p, elapsed)


def test_criterion_2_exact_partition_multiplicity():
    t0 = time.perf_counter()
    for p in (2, 3, 5, 7):
        g, cover = plane_cover(p)
        counts = Counter()
        for c in cover.cliques:
            counts.update(c.edge_set())
        assert set(counts) == set(g.edges), p
        assert set(counts.values()) == {1}, p
    assert time.perf_counter() - t0 < 5.0


def test_criterion_3_exact_optimum_small_n():
    t0 = time.perf_counter()
    expected = {2: 3, 3: 6, 4: 9, 5: 12}
    for n, want in expected.items():
        # independent oracle: exhaustive set partitions over all graphs
        assert t_bruteforce(n) == want, n
        best, g, cover = max_cover_over_graphs(n)
        assert best == want, n
        assert best <= vertex_sum_bound(n).total + 1e-9, n
        assert verify(g, cover).all_valid, n
    b3 = vertex_sum_bound(3)
    assert b3.total == 6.0
    assert max_cover_over_graphs(3)[0] == 6
    assert time.perf_counter() - t0 < 120.0


def test_criterion_4_fano_is_optimal():
    t0 = time.perf_counter()
    g = complete_graph(7)
    res = max_cover_sum(g, 7)
    assert res.feasible
    assert res.best_sum == 21
    assert vertex_sum_bound(7).total == 21.0
    report = verify(g, res.witness)
    assert report.all_valid and report.vertex_sum == 21
    assert time.perf_counter() - t0 < 300.0


def test_criterion_5_mean_inequality_random_vectors():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        length = int(rng.integers(1, 21))
        values = 50.0 * (1.0 - rng.random(length))  # uniform over (0, 50]
        assert mean_inequality_holds(values.tolist(), rel_tol=1e-9)
    assert time.perf_counter() - t0 < 1.0


def test_criterion_6_inverse_analytics():
    for x in (0, 1, 2, 6, 132, 10**6):
        back = ordered_pairs(ordered_pairs_inv(x))
        assert abs(back - x) <= 1e-12 * max(1.0, abs(x)), x
    for x in (1.0, 10.0, 100.0, 1e4):
        h = 1e-6 * max(1.0, x)
        fd = (ordered_pairs_inv(x + h) - ordered_pairs_inv(x - h)) / (2.0 * h)
        d = ordered_pairs_inv_derivative(x)
        assert abs(d - fd) <= 1e-6 * abs(fd), x
    rng = random.Random(99)
    samples = [2, 3, 4, 10, 57, 1001, 10**6] + [rng.randrange(2, 10**6) for _ in range(500)]
    for n in samples:
        root = math.sqrt(n - 1)
        val = ordered_pairs_inv(n - 1)
        assert root < val < root + 1.0, n


def test_criterion_7_prime_window_scans():
    t0 = time.perf_counter()
    assert all(pi_window(n, 0.2) >= 1 for n in range(100, 10**6 + 1))
    assert all(prime_window(n, 0.45).found for n in range(150, 10**6 + 1))
    assert time.perf_counter() - t0 < 30.0


def test_criterion_8_ratio_trend():
    t0 = time.perf_counter()
    for n in (7, 13, 31, 57, 133, 10303):
        assert abs(ratio_row(n).ratio - 1.0) <= 1e-12, n
    decades = [(10**4, 10**5), (10**5, 10**6)]
    mins, maxes = [], []
    for lo, hi in decades:
        stop = hi if hi == 10**6 else hi - 1
        ratios = [ratio_row(n).ratio for n in range(lo, stop + 1)]
        mins.append(min(ratios))
        maxes.append(max(ratios))
    assert all(m >= 0.99 for m in maxes), maxes
    assert all(a <= b for a, b in zip(mins, mins[1:])), mins
    assert time.perf_counter() - t0 < 30.0


def test_criterion_9_round_trip_and_pipeline(tmp_path, capsys):
    for p in ACCEPTANCE_PRIMES:
        g, cover = plane_cover(p)
        gtext = write_graph_file(g)
        ctext = write_cover_file(cover)
        assert write_graph_file(parse_graph_file(gtext)) == gtext, p
        assert write_cover_file(parse_cover_file(ctext, n=g.n)) == ctext, p

        gpath = tmp_path / f"graph{p}.txt"
        cpath = tmp_path / f"cover{p}.txt"
        code = cli_main([
            "construct", str(p),
            "--graph-out", str(gpath), "--cover-out", str(cpath),
        ])
        assert code == 0, p
        code = cli_main(["verify", "--graph", str(gpath), "--cover", str(cpath)])
        assert code == 0, p
        capsys.readouterr()
