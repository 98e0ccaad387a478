"""Lower/upper bound ratio tables for the best-achievable vertex sum.

For each n the lower bound embeds the largest projective-plane construction
that fits (plus single-vertex padding up to n cliques) and the upper bound
is the analytic cap; their ratio tracks how tight the construction is.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import vertex_sum_bound
from .primes import plane_prime_below


@dataclass(frozen=True)
class RatioRow:
    n: int
    p: int
    plane_n: int
    lower: int
    upper: float
    ratio: float


def ratio_row(n: int) -> RatioRow:
    p = plane_prime_below(n)
    if p is None:
        raise ValueError(f"no plane construction fits inside n={n} (need n >= 7)")
    plane_n = p * p + p + 1
    lower = plane_n * (p + 1) + (n - plane_n)  # pad spare vertices as singletons
    upper = vertex_sum_bound(n).total
    return RatioRow(n=n, p=p, plane_n=plane_n, lower=lower, upper=upper,
                    ratio=lower / upper)


def ratio_table(start: int, stop: int, step: int = 1) -> list[RatioRow]:
    """Rows for n = start, start+step, ... while n <= stop."""
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    if start > stop:
        raise ValueError(f"empty range: from {start} to {stop}")
    return [ratio_row(n) for n in range(start, stop + 1, step)]


def format_ratio_table(rows: list[RatioRow]) -> str:
    out = ["n\tp\tplane_n\tlower\tupper\tratio"]
    for r in rows:
        out.append(
            f"{r.n}\t{r.p}\t{r.plane_n}\t{r.lower}\t{r.upper:.6f}\t{r.ratio:.6f}"
        )
    return "\n".join(out) + "\n"
