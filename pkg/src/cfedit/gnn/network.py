"""Message-passing network that scores bipartite edges for assignment.

Forward pass: an edge encoder lifts scalar weights to latent vectors (node
latents start at zero), then `conv_iterations` rounds of node convolution
followed by edge convolution mix information across the graph, and a sigmoid
decoder reads each edge back out as a matching score in (0, 1).

Edge convolution updates each edge from its endpoints:

    e_ij <- edge_update([v_i * cn, v_j * cn, e_ij * ce])

Node convolution aggregates incident edges and neighbors under learned
scalar attention, then folds the aggregate into the node state:

    a_ij   = attention([v_i, v_j])
    msg_ij = node_transform([e_ij * ce, a_ij * (v_j * cn)])
    v_i   <- node_update([mean_j msg_ij, v_i])

`cn` / `ce` are the learned node/edge channel-attention vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..assignment.types import BipartiteGraph, CostMatrix, Matching, NoFeasibleAssignment
from . import autograd as ag
from .model import DimensionMismatch, GnnConfig, GnnModel


class IsolatedNode(ValueError):
    """Raised when a node has no incident edges (graphs must be dense)."""


@dataclass(frozen=True)
class GraphArrays:
    """Edge-list view of a bipartite graph, shared by training and inference.

    Nodes are indexed 0..n-1 (sources) then n..n+m-1 (targets); ``pairs``
    keeps the original (source, target) indices for decoding.
    """

    n: int
    m: int
    src: np.ndarray
    tgt: np.ndarray
    weights: np.ndarray  # (E, 1)
    pairs: tuple[tuple[int, int], ...]

    @property
    def num_nodes(self) -> int:
        return self.n + self.m

    @property
    def num_edges(self) -> int:
        return len(self.pairs)

    @classmethod
    def from_graph(cls, graph: BipartiteGraph) -> "GraphArrays":
        pairs = tuple((s, t) for s, t, _ in graph.edges)
        src = np.array([s for s, _ in pairs], dtype=np.intp)
        tgt = np.array([graph.n + t for _, t in pairs], dtype=np.intp)
        w = np.array([[w] for _, _, w in graph.edges], dtype=np.float64)
        arrays = cls(graph.n, graph.m, src, tgt, w, pairs)
        arrays.check_dense_enough()
        return arrays

    @classmethod
    def from_cost(cls, cost: CostMatrix) -> "GraphArrays":
        feas = np.isfinite(cost.costs)
        ii, jj = np.nonzero(feas)
        pairs = tuple((int(i), int(j)) for i, j in zip(ii, jj))
        src = ii.astype(np.intp)
        tgt = (cost.n + jj).astype(np.intp)
        w = cost.costs[ii, jj].reshape(-1, 1).astype(np.float64)
        arrays = cls(cost.n, cost.m, src, tgt, w, pairs)
        arrays.check_dense_enough()
        return arrays

    def check_dense_enough(self):
        degree = np.bincount(
            np.concatenate([self.src, self.tgt]), minlength=self.num_nodes
        )
        if (degree == 0).any():
            lonely = int(np.nonzero(degree == 0)[0][0])
            raise IsolatedNode(f"node {lonely} has no incident edges")


@dataclass
class LatentGraph:
    """Per-node and per-edge latent vectors over a fixed topology."""

    arrays: GraphArrays
    node_attrs: "ag.Tensor"
    edge_attrs: "ag.Tensor"


@dataclass(frozen=True)
class EdgeScores:
    """One matching score in (0, 1) per edge, aligned with ``pairs``."""

    pairs: tuple[tuple[int, int], ...]
    scores: np.ndarray

    def __post_init__(self):
        if len(self.pairs) != len(self.scores):
            raise DimensionMismatch("one score per edge required")


def _params_t(model: GnnModel, trainable: bool) -> dict[str, ag.Tensor]:
    return {k: ag.Tensor(v, requires_grad=trainable) for k, v in model.params.items()}


def _mlp(p: dict, name: str, x: ag.Tensor) -> ag.Tensor:
    h = ag.relu(ag.matmul(x, p[f"{name}.w1"]) + p[f"{name}.b1"])
    return ag.matmul(h, p[f"{name}.w2"]) + p[f"{name}.b2"]


def _check_dims(latent: LatentGraph, model: GnnModel):
    d = model.config.latent_dim
    if latent.node_attrs.shape[1] != d or latent.edge_attrs.shape[1] != d:
        raise DimensionMismatch(
            f"latent width {latent.node_attrs.shape[1]}/{latent.edge_attrs.shape[1]} "
            f"does not match model latent_dim {d}"
        )


def encode(graph: BipartiteGraph, model: GnnModel) -> LatentGraph:
    """Lift scalar edge weights into latent space; node attrs start at zero."""
    return _encode_arrays(GraphArrays.from_graph(graph), _params_t(model, False), model.config)


def _encode_arrays(arrays: GraphArrays, p: dict, config: GnnConfig) -> LatentGraph:
    edge_attrs = _mlp(p, "encoder", ag.Tensor(arrays.weights))
    node_attrs = ag.Tensor(np.zeros((arrays.num_nodes, config.latent_dim)))
    return LatentGraph(arrays, node_attrs, edge_attrs)


def edge_conv(latent: LatentGraph, model: GnnModel) -> LatentGraph:
    _check_dims(latent, model)
    return _edge_conv(latent, _params_t(model, False))


def _edge_conv(latent: LatentGraph, p: dict) -> LatentGraph:
    arrays = latent.arrays
    cn, ce = p["node_channel"], p["edge_channel"]
    v_src = ag.gather_rows(latent.node_attrs, arrays.src)
    v_tgt = ag.gather_rows(latent.node_attrs, arrays.tgt)
    stacked = ag.concat([ag.mul(v_src, cn), ag.mul(v_tgt, cn), ag.mul(latent.edge_attrs, ce)])
    return LatentGraph(arrays, latent.node_attrs, _mlp(p, "edge_update", stacked))


def node_conv(latent: LatentGraph, model: GnnModel) -> LatentGraph:
    _check_dims(latent, model)
    return _node_conv(latent, _params_t(model, False))


def _node_conv(latent: LatentGraph, p: dict) -> LatentGraph:
    arrays = latent.arrays
    cn, ce = p["node_channel"], p["edge_channel"]
    v = latent.node_attrs
    e_ce = ag.mul(latent.edge_attrs, ce)
    v_src = ag.gather_rows(v, arrays.src)
    v_tgt = ag.gather_rows(v, arrays.tgt)

    # every edge carries one message toward each endpoint, with attention
    # computed from the receiving node's viewpoint
    att_to_src = _mlp(p, "attention", ag.concat([v_src, v_tgt]))
    att_to_tgt = _mlp(p, "attention", ag.concat([v_tgt, v_src]))
    msg_to_src = _mlp(p, "node_transform", ag.concat([e_ce, ag.mul(att_to_src, ag.mul(v_tgt, cn))]))
    msg_to_tgt = _mlp(p, "node_transform", ag.concat([e_ce, ag.mul(att_to_tgt, ag.mul(v_src, cn))]))

    messages = ag.concat([msg_to_src, msg_to_tgt], axis=0)
    receivers = np.concatenate([arrays.src, arrays.tgt])
    try:
        aggregated = ag.segment_mean(messages, receivers, arrays.num_nodes)
    except ValueError as exc:
        raise IsolatedNode(str(exc)) from exc
    updated = _mlp(p, "node_update", ag.concat([aggregated, v]))
    return LatentGraph(arrays, updated, latent.edge_attrs)


def decode(latent: LatentGraph, model: GnnModel) -> EdgeScores:
    _check_dims(latent, model)
    scores = _decode(latent, _params_t(model, False))
    return EdgeScores(latent.arrays.pairs, scores.data.ravel())


def _decode(latent: LatentGraph, p: dict) -> ag.Tensor:
    return ag.sigmoid(_mlp(p, "decoder", latent.edge_attrs))


def _forward_t(arrays: GraphArrays, p: dict, config: GnnConfig) -> ag.Tensor:
    latent = _encode_arrays(arrays, p, config)
    for _ in range(config.conv_iterations):
        latent = _node_conv(latent, p)
        latent = _edge_conv(latent, p)
    return _decode(latent, p)


def forward(graph: BipartiteGraph, model: GnnModel, config: GnnConfig | None = None) -> EdgeScores:
    """Full pass: encode, conv_iterations rounds of (node, edge) conv, decode."""
    config = config or model.config
    arrays = GraphArrays.from_graph(graph)
    scores = _forward_t(arrays, _params_t(model, False), config)
    return EdgeScores(arrays.pairs, scores.data.ravel())


def forward_cost(cost: CostMatrix, model: GnnModel, config: GnnConfig | None = None) -> EdgeScores:
    """Forward pass taking a dense cost matrix instead of a payload graph."""
    config = config or model.config
    arrays = GraphArrays.from_cost(cost)
    scores = _forward_t(arrays, _params_t(model, False), config)
    return EdgeScores(arrays.pairs, scores.data.ravel())


def decode_assignment(
    scores: EdgeScores, cost: CostMatrix, require_complete: bool = True
) -> Matching:
    """Greedy matching from edge scores: repeatedly commit the best-scoring
    free (source, target) pair; ties fall to lower cost, then lower indices.

    Complete on dense instances.  With missing edges the greedy sweep can run
    out of candidates; that raises NoFeasibleAssignment unless
    ``require_complete`` is False, in which case the partial matching is
    returned (uncovered sources become controllability exceptions upstream).
    """
    order = sorted(
        range(len(scores.pairs)),
        key=lambda k: (
            -scores.scores[k],
            cost.costs[scores.pairs[k][0], scores.pairs[k][1]],
            scores.pairs[k],
        ),
    )
    row_used = np.zeros(cost.n, dtype=bool)
    col_used = np.zeros(cost.m, dtype=bool)
    chosen: list[tuple[int, int]] = []
    for k in order:
        i, j = scores.pairs[k]
        if row_used[i] or col_used[j]:
            continue
        if not np.isfinite(cost.costs[i, j]):
            continue
        row_used[i] = True
        col_used[j] = True
        chosen.append((i, j))
        if len(chosen) == cost.n:
            break
    if len(chosen) < cost.n and require_complete:
        raise NoFeasibleAssignment(
            f"greedy decoding matched {len(chosen)} of {cost.n} sources"
        )
    total = float(sum(cost.costs[i, j] for i, j in chosen))
    return Matching(tuple(chosen), total)
