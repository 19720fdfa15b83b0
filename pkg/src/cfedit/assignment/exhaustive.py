"""Exhaustive assignment solver for tiny instances.

Enumerates every injective source->target assignment (m!/(m-n)! of them,
the matching-constrained subset of the m^n unconstrained combinations) and
keeps the cheapest.  Used as the correctness oracle for the polynomial
solver; guarded so it cannot be pointed at an exponentially large instance.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .types import CostMatrix, InstanceTooLarge, Matching, NoFeasibleAssignment, ShapeError

MAX_SOURCES = 8
MAX_TARGETS = 9


@lru_cache(maxsize=64)
def _permutations(n: int, m: int) -> np.ndarray:
    """All injective index tuples of length n over range(m), lexicographic order."""
    perms = list(itertools.permutations(range(m), n))
    return np.array(perms, dtype=np.intp)


def solve_exhaustive(cost: CostMatrix) -> Matching:
    """Globally optimal complete matching by brute-force enumeration.

    Ties are broken by the lexicographically smallest pair list, which is the
    first minimum in enumeration order.
    """
    n, m = cost.n, cost.m
    if n > m:
        raise ShapeError(f"need n <= m, got {n}x{m}")
    if n > MAX_SOURCES or m > MAX_TARGETS:
        raise InstanceTooLarge(
            f"{n}x{m} exceeds the exhaustive guard ({MAX_SOURCES}x{MAX_TARGETS})"
        )
    perms = _permutations(n, m)
    totals = cost.costs[np.arange(n), perms].sum(axis=1)
    best = int(np.argmin(totals))
    if not np.isfinite(totals[best]):
        raise NoFeasibleAssignment("every injective assignment hits an INFEASIBLE entry")
    pairs = tuple((i, int(j)) for i, j in enumerate(perms[best]))
    return Matching(pairs, float(totals[best]))
