"""Deterministic primality, sieving, and prime/plane window searches.

A module-level sieve (numpy boolean array plus a cumulative prime count)
grows geometrically on demand and is shared read-only, so window queries are
O(1) after the first call at a given scale.  "Plane sizes" are the integers
p^2 + p + 1 for prime p, the vertex counts at which the vertex-sum bound is
attained exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_SIEVE_LIMIT_CAP = 10**8

# Deterministic Miller-Rabin witnesses, valid for every n < 3.3e24 (covers
# the documented domain n < 2^63).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_sieve: np.ndarray | None = None     # _sieve[i] == True iff i is prime
_pi: np.ndarray | None = None        # _pi[i] == number of primes <= i
_planes: np.ndarray | None = None    # p^2+p+1 for primes p, ascending
_plane_ps: np.ndarray | None = None  # matching p values


def _ensure_sieve(limit: int) -> None:
    global _sieve, _pi, _planes, _plane_ps
    if limit > _SIEVE_LIMIT_CAP:
        raise ValueError(f"sieve limit {limit} exceeds the guard {_SIEVE_LIMIT_CAP}")
    if _sieve is not None and len(_sieve) > limit:
        return
    size = max(limit + 1, 1 << 16, 2 * (len(_sieve) if _sieve is not None else 0))
    size = min(size, _SIEVE_LIMIT_CAP + 1)
    flags = np.ones(size, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(size - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    _sieve = flags
    _pi = np.cumsum(flags, dtype=np.int64)
    ps = np.flatnonzero(flags).astype(np.int64)
    _planes = ps * ps + ps + 1
    _plane_ps = ps


def is_prime(n: int) -> bool:
    """Exact primality for 0 <= n < 2^63; never probabilistic."""
    if n < 0 or n >= 2**63:
        raise ValueError(f"primality domain is 0 <= n < 2**63, got {n}")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit > _SIEVE_LIMIT_CAP:
        raise ValueError(f"limit {limit} exceeds the guard {_SIEVE_LIMIT_CAP}")
    if limit < 2:
        return []
    _ensure_sieve(limit)
    return [int(p) for p in np.flatnonzero(_sieve[: limit + 1])]


def pi_window(n: int, eps: float) -> int:
    """Number of primes q with n(1-eps) < q < n, both bounds strict."""
    if n < 2:
        raise ValueError(f"expected n >= 2, got {n}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {eps}")
    _ensure_sieve(n)
    lo = math.floor(n * (1.0 - eps))
    return int(_pi[n - 1] - _pi[lo])


@dataclass(frozen=True)
class PrimeWindowResult:
    """Outcome of searching (n(1-eps), n] for a plane size p^2+p+1."""

    found: bool
    p: int | None
    plane_n: int | None
    lo: float
    hi: int


def plane_prime_below(n: int) -> int | None:
    """Largest prime p with p^2 + p + 1 <= n, or None when n < 7."""
    if n < 7:
        return None
    _ensure_sieve(math.isqrt(n) + 2)
    idx = int(np.searchsorted(_planes, n, side="right")) - 1
    return int(_plane_ps[idx])


def prime_window(n: int, eps: float) -> PrimeWindowResult:
    """Largest prime p with n(1-eps) < p^2 + p + 1 <= n, when one exists.

    The upper end is closed: when n itself is a plane size the construction
    applies to n exactly, which is the whole point of the search.
    """
    if n < 7:
        raise ValueError(f"expected n >= 7, got {n}")
    if not 0.0 < eps < 1.0:
        raise ValueError(f"epsilon must lie in (0, 1), got {eps}")
    lo = n * (1.0 - eps)
    p = plane_prime_below(n)
    plane_n = p * p + p + 1
    if plane_n > lo:
        return PrimeWindowResult(found=True, p=p, plane_n=plane_n, lo=lo, hi=n)
    return PrimeWindowResult(found=False, p=None, plane_n=None, lo=lo, hi=n)


def consecutive_plane_ratio(i: int) -> float:
    """(P_i^2+P_i+1) / (P_{i+1}^2+P_{i+1}+1) for the i-th prime, 1-indexed.

    Tends to 1 as i grows, which is what lets plane sizes land in every
    relative window for large n.
    """
    if i < 1:
        raise ValueError(f"prime index must be >= 1, got {i}")
    _ensure_sieve(1 << 16)
    while len(_plane_ps) < i + 1:
        if len(_sieve) > _SIEVE_LIMIT_CAP:
            raise ValueError(f"prime index {i} is out of range for the sieve guard")
        _ensure_sieve(min(2 * (len(_sieve) - 1), _SIEVE_LIMIT_CAP))
    a = int(_planes[i - 1])
    b = int(_planes[i])
    return a / b
