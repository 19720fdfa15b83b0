"""Model container, configuration, and checkpoint serialization.

The network owns six small MLPs (edge encoder, edge update, node transform,
node update, attention, decoder) plus two learned channel-attention vectors.
Parameters live in a flat name -> float64 array dict so checkpoints stay a
single self-describing JSON file.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

CHECKPOINT_FORMAT = "cfedit-gnn-checkpoint"
CHECKPOINT_VERSION = 1


class DimensionMismatch(ValueError):
    """Raised when graph latents and model parameters disagree on width."""


@dataclass(frozen=True)
class GnnConfig:
    latent_dim: int = 16
    conv_iterations: int = 2
    mlp_hidden: int = 32
    epochs: int = 20
    lr_initial: float = 0.003
    lr_decay: float = 0.05
    decay_every: int = 5
    loss_balance_w: float = 0.9
    seed: int = 0

    def __post_init__(self):
        if self.latent_dim < 1 or self.mlp_hidden < 1:
            raise ValueError("latent_dim and mlp_hidden must be positive")
        if self.conv_iterations < 2:
            # two rounds are the minimum for messages to span a bipartite graph
            raise ValueError("conv_iterations must be >= 2")
        if not 0 < self.loss_balance_w < 1:
            raise ValueError("loss_balance_w must lie in (0, 1)")
        if self.lr_initial <= 0 or not 0 <= self.lr_decay < 1 or self.decay_every < 1:
            raise ValueError("invalid learning-rate schedule")
        if self.epochs < 1:
            raise ValueError("epochs must be positive")


def _mlp_shapes(name: str, d_in: int, hidden: int, d_out: int):
    return {
        f"{name}.w1": (d_in, hidden),
        f"{name}.b1": (hidden,),
        f"{name}.w2": (hidden, d_out),
        f"{name}.b2": (d_out,),
    }


def parameter_shapes(config: GnnConfig) -> dict[str, tuple]:
    d, h = config.latent_dim, config.mlp_hidden
    shapes: dict[str, tuple] = {}
    shapes.update(_mlp_shapes("encoder", 1, h, d))
    shapes.update(_mlp_shapes("edge_update", 3 * d, h, d))
    shapes.update(_mlp_shapes("node_transform", 2 * d, h, d))
    shapes.update(_mlp_shapes("node_update", 2 * d, h, d))
    shapes.update(_mlp_shapes("attention", 2 * d, h, 1))
    shapes.update(_mlp_shapes("decoder", d, h, 1))
    shapes["node_channel"] = (d,)
    shapes["edge_channel"] = (d,)
    return shapes


@dataclass
class GnnModel:
    config: GnnConfig
    params: dict[str, np.ndarray] = field(repr=False)

    def validate(self):
        shapes = parameter_shapes(self.config)
        if set(shapes) != set(self.params):
            raise DimensionMismatch("parameter names do not match the configuration")
        for k, shape in shapes.items():
            if self.params[k].shape != shape:
                raise DimensionMismatch(
                    f"parameter {k}: expected shape {shape}, got {self.params[k].shape}"
                )
            if not np.isfinite(self.params[k]).all():
                raise ValueError(f"parameter {k} contains non-finite values")


def init_model(config: GnnConfig, seed: int | None = None) -> GnnModel:
    """He-style random init; channel-attention vectors start at ones (neutral)."""
    rng = np.random.RandomState(config.seed if seed is None else seed)
    params: dict[str, np.ndarray] = {}
    for name, shape in parameter_shapes(config).items():
        if name in ("node_channel", "edge_channel"):
            params[name] = np.ones(shape)
        elif name.endswith((".b1", ".b2")):
            params[name] = np.zeros(shape)
        else:
            fan_in = shape[0]
            params[name] = rng.normal(0.0, np.sqrt(2.0 / fan_in), size=shape)
    model = GnnModel(config=config, params=params)
    model.validate()
    return model


def save_checkpoint(model: GnnModel, path) -> None:
    model.validate()
    payload = {
        "format": CHECKPOINT_FORMAT,
        "version": CHECKPOINT_VERSION,
        "config": asdict(model.config),
        "params": {k: v.tolist() for k, v in sorted(model.params.items())},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_checkpoint(path) -> GnnModel:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != CHECKPOINT_FORMAT:
        raise ValueError(f"not a {CHECKPOINT_FORMAT} file: {path}")
    if payload.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {payload.get('version')}")
    config = GnnConfig(**payload["config"])
    params = {k: np.asarray(v, dtype=np.float64) for k, v in payload["params"].items()}
    model = GnnModel(config=config, params=params)
    model.validate()
    return model
