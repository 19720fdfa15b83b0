"""Polynomial rectangular-assignment solver with selectable backend.

The compiled Cython kernel is used when present; otherwise the NumPy
fallback takes over.  ``CFEDIT_PURE_PYTHON=1`` forces the fallback, and the
``backend`` argument lets benchmarks time both implementations explicitly.
"""

from __future__ import annotations

import os

import numpy as np

from . import _sap_py
from .types import CostMatrix, Matching, NoFeasibleAssignment, ShapeError

try:
    from . import _sapcore
except ImportError:
    _sapcore = None

_FORCE_PURE = os.environ.get("CFEDIT_PURE_PYTHON") == "1"

BACKENDS = ("compiled", "pure") if _sapcore is not None else ("pure",)


def solver_backend() -> str:
    """Name of the backend solve_rlap uses by default."""
    if _sapcore is not None and not _FORCE_PURE:
        return "compiled"
    return "pure"


def _kernel(backend: str | None):
    name = backend or solver_backend()
    if name == "compiled":
        if _sapcore is None:
            raise ValueError("compiled backend requested but the extension is not built")
        return _sapcore.solve_dense
    if name == "pure":
        return _sap_py.solve_dense
    raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")


def solve_rlap(cost: CostMatrix, backend: str | None = None) -> Matching:
    """Minimum-weight complete matching via shortest augmenting paths.

    Requires n <= m.  Matches solve_exhaustive's total weight on any instance
    small enough for both (tie-broken pair sets may differ).
    """
    if cost.n > cost.m:
        raise ShapeError(f"need n <= m, got {cost.n}x{cost.m}")
    arr = np.ascontiguousarray(cost.costs, dtype=np.float64)
    col4row = _kernel(backend)(arr)
    if col4row is None:
        raise NoFeasibleAssignment("no complete feasible assignment exists")
    pairs = tuple((i, int(j)) for i, j in enumerate(col4row))
    total = float(sum(cost.costs[i, j] for i, j in pairs))
    return Matching(pairs, total)
