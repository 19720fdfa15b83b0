"""Trainable graph network that approximates optimal bipartite assignment."""

from .model import (
    DimensionMismatch,
    GnnConfig,
    GnnModel,
    init_model,
    load_checkpoint,
    save_checkpoint,
)
from .network import (
    EdgeScores,
    GraphArrays,
    IsolatedNode,
    LatentGraph,
    decode,
    decode_assignment,
    edge_conv,
    encode,
    forward,
    forward_cost,
    node_conv,
)
from .training import (
    DivergenceError,
    EpochStats,
    TrainingSample,
    TrainResult,
    balanced_bce_loss,
    generate_training_set,
    gradient_check,
    learning_rate,
    make_sample,
    optimality_ratio,
    train,
)

__all__ = [
    "DimensionMismatch",
    "DivergenceError",
    "EdgeScores",
    "EpochStats",
    "GnnConfig",
    "GnnModel",
    "GraphArrays",
    "IsolatedNode",
    "LatentGraph",
    "TrainResult",
    "TrainingSample",
    "balanced_bce_loss",
    "decode",
    "decode_assignment",
    "edge_conv",
    "encode",
    "forward",
    "forward_cost",
    "generate_training_set",
    "gradient_check",
    "init_model",
    "learning_rate",
    "load_checkpoint",
    "make_sample",
    "node_conv",
    "optimality_ratio",
    "save_checkpoint",
    "train",
]
