"""Pure NumPy shortest-augmenting-path kernel for rectangular assignment.

Fallback used when the compiled extension is unavailable.  Same algorithm as
the Cython kernel: one Dijkstra-style search per source row over reduced
costs, followed by dual updates and augmentation (Jonker-Volgenant family).
"""

from __future__ import annotations

import numpy as np

_INF = np.inf


def solve_dense(costs: np.ndarray) -> np.ndarray | None:
    """Return col4row (length n) for an n x m matrix with n <= m, or None if
    no complete feasible assignment exists.  INFEASIBLE entries are inf and
    are never selected."""
    n, m = costs.shape
    u = np.zeros(n)
    v = np.zeros(m)
    path = np.full(m, -1, dtype=np.intp)
    col4row = np.full(n, -1, dtype=np.intp)
    row4col = np.full(m, -1, dtype=np.intp)

    for cur_row in range(n):
        shortest = np.full(m, _INF)
        scanned_rows = np.zeros(n, dtype=bool)
        scanned_cols = np.zeros(m, dtype=bool)
        min_val = 0.0
        i = cur_row
        sink = -1
        while sink == -1:
            scanned_rows[i] = True
            cand = (min_val - u[i]) + costs[i] - v
            better = ~scanned_cols & (cand < shortest)
            shortest[better] = cand[better]
            path[better] = i

            open_costs = np.where(scanned_cols, _INF, shortest)
            j = int(np.argmin(open_costs))
            min_val = open_costs[j]
            if not np.isfinite(min_val):
                return None
            scanned_cols[j] = True
            if row4col[j] == -1:
                sink = j
            else:
                i = int(row4col[j])

        u[cur_row] += min_val
        others = scanned_rows.copy()
        others[cur_row] = False
        if others.any():
            u[others] += min_val - shortest[col4row[others]]
        v[scanned_cols] += shortest[scanned_cols] - min_val

        j = sink
        while True:
            i = int(path[j])
            row4col[j] = i
            col4row[i], j = j, col4row[i]
            if i == cur_row:
                break

    return col4row
