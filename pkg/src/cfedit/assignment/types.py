"""Core data types for bipartite substitution graphs and assignment costs.

A :class:`BipartiteGraph` carries word payloads on its nodes; a
:class:`CostMatrix` is the dense view the solvers operate on.  Missing edges
are represented by the ``INFEASIBLE`` sentinel (``math.inf``), which is never
mixed into cost arithmetic: solvers skip those entries outright.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

INFEASIBLE = math.inf


class ShapeError(ValueError):
    """Raised when a matrix/graph violates the n <= m rectangular orientation."""


class InstanceTooLarge(ValueError):
    """Raised when the exhaustive solver is asked for an exponentially big instance."""


class NoFeasibleAssignment(ValueError):
    """Raised when no complete injective assignment avoids INFEASIBLE entries."""


class InfeasiblePair(ValueError):
    """Raised when a matching references an INFEASIBLE cost entry."""


def is_feasible(value: float) -> bool:
    return math.isfinite(value)


@dataclass(frozen=True)
class CostMatrix:
    """Dense n x m cost matrix, sources on rows, targets on columns.

    ``costs`` is a read-only float64 array; infeasible entries hold
    ``INFEASIBLE``.  Feasible entries must be finite and non-negative.
    """

    costs: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.costs, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError(f"cost matrix must be 2-D and non-empty, got shape {arr.shape}")
        if np.isnan(arr).any():
            raise ValueError("cost matrix contains NaN")
        finite = np.isfinite(arr)
        if (arr[finite] < 0).any():
            raise ValueError("feasible costs must be non-negative")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "costs", arr)

    @property
    def n(self) -> int:
        return self.costs.shape[0]

    @property
    def m(self) -> int:
        return self.costs.shape[1]

    def to_text(self) -> str:
        """Serialize to the line format ``n m`` + n rows of m values (``inf`` = infeasible)."""
        lines = [f"{self.n} {self.m}"]
        for row in self.costs:
            lines.append(" ".join("inf" if not math.isfinite(v) else repr(float(v)) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "CostMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty cost matrix text")
        n, m = (int(tok) for tok in lines[0].split())
        if len(lines) != n + 1:
            raise ValueError(f"expected {n} rows, got {len(lines) - 1}")
        rows = []
        for ln in lines[1:]:
            vals = [INFEASIBLE if tok == "inf" else float(tok) for tok in ln.split()]
            if len(vals) != m:
                raise ValueError(f"expected {m} columns, got {len(vals)}")
            rows.append(vals)
        return cls(np.array(rows, dtype=np.float64))


@dataclass(frozen=True)
class Matching:
    """A one-to-one set of (source, target) index pairs plus its total weight."""

    pairs: tuple[tuple[int, int], ...]
    total_weight: float

    def __post_init__(self):
        pairs = tuple(sorted((int(i), int(j)) for i, j in self.pairs))
        sources = [i for i, _ in pairs]
        targets = [j for _, j in pairs]
        if len(set(sources)) != len(sources):
            raise ValueError("matching reuses a source index")
        if len(set(targets)) != len(targets):
            raise ValueError("matching reuses a target index")
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "total_weight", float(self.total_weight))

    def is_complete(self, n: int) -> bool:
        return len(self.pairs) == n

    def to_text(self, cost: "CostMatrix") -> str:
        """Serialize as lines ``i j cost``, reading per-pair costs from ``cost``."""
        lines = [f"{i} {j} {repr(float(cost.costs[i, j]))}" for i, j in self.pairs]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str) -> "Matching":
        pairs = []
        total = 0.0
        for ln in text.splitlines():
            if not ln.strip():
                continue
            i, j, w = ln.split()
            pairs.append((int(i), int(j)))
            total += float(w)
        return cls(tuple(pairs), total)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite substitution graph: source words, target words, weighted edges.

    Edges are (source index, target index, weight) with strictly positive
    finite weights.  Infeasible substitutions are simply absent.  The
    rectangular orientation requires ``len(source_words) <= len(target_words)``;
    callers owning both sets must put the smaller one on the source side.
    """

    source_words: tuple[str, ...]
    target_words: tuple[str, ...]
    edges: tuple[tuple[int, int, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        n, m = len(self.source_words), len(self.target_words)
        if n < 1:
            raise ShapeError("graph needs at least one source node")
        if m < n:
            raise ShapeError(f"rectangular orientation violated: n={n} > m={m}")
        seen = set()
        canon = []
        for s, t, w in self.edges:
            s, t, w = int(s), int(t), float(w)
            if not (0 <= s < n and 0 <= t < m):
                raise IndexError(f"edge ({s},{t}) out of range for {n}x{m} graph")
            if (s, t) in seen:
                raise ValueError(f"duplicate edge ({s},{t})")
            if not (math.isfinite(w) and w > 0):
                raise ValueError(f"edge ({s},{t}) weight must be finite and > 0, got {w}")
            seen.add((s, t))
            canon.append((s, t, w))
        canon.sort()
        object.__setattr__(self, "source_words", tuple(self.source_words))
        object.__setattr__(self, "target_words", tuple(self.target_words))
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def n(self) -> int:
        return len(self.source_words)

    @property
    def m(self) -> int:
        return len(self.target_words)


def graph_to_cost(graph: BipartiteGraph) -> CostMatrix:
    """Dense cost view of a graph; absent edges map to INFEASIBLE."""
    costs = np.full((graph.n, graph.m), INFEASIBLE, dtype=np.float64)
    for s, t, w in graph.edges:
        costs[s, t] = w
    return CostMatrix(costs)


def cost_to_graph(
    cost: CostMatrix,
    source_words: tuple[str, ...] | None = None,
    target_words: tuple[str, ...] | None = None,
) -> BipartiteGraph:
    """Inverse of :func:`graph_to_cost`; payloads default to ``s{i}`` / ``t{j}``."""
    src = source_words if source_words is not None else tuple(f"s{i}" for i in range(cost.n))
    tgt = target_words if target_words is not None else tuple(f"t{j}" for j in range(cost.m))
    edges = [
        (i, j, float(cost.costs[i, j]))
        for i in range(cost.n)
        for j in range(cost.m)
        if is_feasible(cost.costs[i, j])
    ]
    return BipartiteGraph(src, tgt, tuple(edges))


def matching_weight(matching: Matching, cost: CostMatrix) -> float:
    """Sum of the cost entries selected by ``matching``.

    Raises IndexError for out-of-range pairs and InfeasiblePair when a pair
    lands on an INFEASIBLE entry.
    """
    total = 0.0
    for i, j in matching.pairs:
        if not (0 <= i < cost.n and 0 <= j < cost.m):
            raise IndexError(f"pair ({i},{j}) outside {cost.n}x{cost.m} matrix")
        v = cost.costs[i, j]
        if not is_feasible(v):
            raise InfeasiblePair(f"pair ({i},{j}) selects an INFEASIBLE entry")
        total += float(v)
    return total
