"""Synthetic-data training loop for the assignment network.

Samples are uniform(0,1) cost matrices labeled by the exact solver: an edge
gets label 1 iff it belongs to the optimal matching, 0 otherwise, so each
source row carries exactly one positive.  The loss is a balanced binary
cross entropy (weight w on positives) minimized with plain SGD; the learning
rate decays by 5% every 5 epochs by default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..assignment.exhaustive import solve_exhaustive
from ..assignment.rlap import solve_rlap
from ..assignment.types import CostMatrix, Matching
from . import autograd as ag
from .model import DimensionMismatch, GnnConfig, GnnModel, init_model
from .network import EdgeScores, GraphArrays, _forward_t, _params_t, decode_assignment

SCORE_EPS = 1e-7


class DivergenceError(RuntimeError):
    """Raised when the training loss stops being finite."""


@dataclass(frozen=True)
class TrainingSample:
    cost: CostMatrix
    ground_truth: Matching
    gt_labels: np.ndarray  # (E,) in {0, 1}, aligned with GraphArrays.from_cost order

    def __post_init__(self):
        labels = np.asarray(self.gt_labels, dtype=np.float64)
        if not np.isin(labels, (0.0, 1.0)).all():
            raise ValueError("labels must be 0 or 1")
        object.__setattr__(self, "gt_labels", labels)


@dataclass(frozen=True)
class EpochStats:
    epoch: int
    lr: float
    mean_loss: float
    holdout_ratio: float  # nan when no holdout set was given


@dataclass
class TrainResult:
    model: GnnModel
    history: list[EpochStats]
    initial_ratio: float  # holdout ratio of the untrained model (nan without holdout)


def make_sample(cost: CostMatrix) -> TrainingSample:
    matching = solve_rlap(cost)
    arrays = GraphArrays.from_cost(cost)
    in_matching = set(matching.pairs)
    labels = np.array([1.0 if p in in_matching else 0.0 for p in arrays.pairs])
    return TrainingSample(cost, matching, labels)


def generate_training_set(
    count: int,
    n_range: tuple[int, int],
    m_range: tuple[int, int],
    seed: int,
) -> list[TrainingSample]:
    """Deterministic synthetic dataset of uniform(0,1) instances with exact labels."""
    n_lo, n_hi = n_range
    m_lo, m_hi = m_range
    if not (1 <= n_lo <= n_hi and n_hi <= m_hi and m_lo <= m_hi):
        raise ValueError(f"invalid size ranges n={n_range} m={m_range}")
    rng = np.random.RandomState(seed)
    samples = []
    for _ in range(count):
        n = int(rng.randint(n_lo, n_hi + 1))
        m = int(rng.randint(max(n, m_lo), m_hi + 1))
        cost = CostMatrix(rng.uniform(0.0, 1.0, size=(n, m)))
        samples.append(make_sample(cost))
    return samples


def balanced_bce_loss(scores: EdgeScores | np.ndarray, gt_labels: np.ndarray, w: float) -> float:
    """Balanced cross entropy: -sum(w*y*log s + (1-w)*(1-y)*log(1-s)).

    Scores are clamped to [eps, 1-eps] before the logs.
    """
    s = scores.scores if isinstance(scores, EdgeScores) else np.asarray(scores, dtype=np.float64)
    y = np.asarray(gt_labels, dtype=np.float64)
    if s.shape != y.shape:
        raise DimensionMismatch(f"scores {s.shape} vs labels {y.shape}")
    if not 0 < w < 1:
        raise ValueError("w must lie in (0, 1)")
    s = np.clip(s, SCORE_EPS, 1.0 - SCORE_EPS)
    return float(-(w * y * np.log(s) + (1.0 - w) * (1.0 - y) * np.log(1.0 - s)).sum())


def _loss_t(scores: ag.Tensor, labels: np.ndarray, w: float) -> ag.Tensor:
    y = labels.reshape(-1, 1)
    s = ag.clip(scores, SCORE_EPS, 1.0 - SCORE_EPS)
    pos = ag.mul(ag.mul(ag.log(s), y), w)
    neg = ag.mul(ag.mul(ag.log(ag.Tensor(1.0) - s), 1.0 - y), 1.0 - w)
    return -ag.tsum(pos + neg)


def learning_rate(config: GnnConfig, epoch: int) -> float:
    return config.lr_initial * (1.0 - config.lr_decay) ** (epoch // config.decay_every)


def optimality_ratio(model: GnnModel, samples: list[TrainingSample]) -> float:
    """Mean decoded-weight / optimal-weight over `samples` (1.0 = optimal)."""
    if not samples:
        raise ValueError("no samples")
    ratios = []
    for sample in samples:
        arrays = GraphArrays.from_cost(sample.cost)
        scores = _forward_t(arrays, _params_t(model, False), model.config)
        decoded = decode_assignment(EdgeScores(arrays.pairs, scores.data.ravel()), sample.cost)
        ratios.append(decoded.total_weight / sample.ground_truth.total_weight)
    return float(np.mean(ratios))


def train(
    config: GnnConfig,
    data: list[TrainingSample],
    holdout: list[TrainingSample] | None = None,
) -> TrainResult:
    """Train from scratch on `data`; single-threaded and deterministic per seed."""
    if not data:
        raise ValueError("empty training set")
    model = init_model(config)
    rng = np.random.RandomState(config.seed + 1)
    arrays_cache = [GraphArrays.from_cost(s.cost) for s in data]
    initial_ratio = optimality_ratio(model, holdout) if holdout else math.nan

    history: list[EpochStats] = []
    for epoch in range(config.epochs):
        lr = learning_rate(config, epoch)
        order = rng.permutation(len(data))
        losses = np.empty(len(data))
        for pos, idx in enumerate(order):
            sample = data[idx]
            params = _params_t(model, True)
            scores = _forward_t(arrays_cache[idx], params, config)
            loss = _loss_t(scores, sample.gt_labels, config.loss_balance_w)
            value = float(loss.data)
            if not math.isfinite(value):
                raise DivergenceError(f"non-finite loss at epoch {epoch}, step {pos}")
            loss.backward()
            for name, tensor in params.items():
                if tensor.grad is not None:
                    model.params[name] -= lr * tensor.grad
            losses[pos] = value
        ratio = optimality_ratio(model, holdout) if holdout else math.nan
        history.append(EpochStats(epoch, lr, float(losses.mean()), ratio))

    assert history[-1].mean_loss < history[0].mean_loss, (
        "training did not reduce the loss; check the data or learning rate"
    )
    model.validate()
    return TrainResult(model, history, initial_ratio)


def gradient_check(
    config: GnnConfig | None = None,
    cost: CostMatrix | None = None,
    step: float = 1e-6,
) -> dict[str, float]:
    """Relative error between analytic and central-difference gradients,
    reported per parameter group (2-norm over the group)."""
    config = config or GnnConfig(latent_dim=4, mlp_hidden=8)
    if cost is None:
        rng = np.random.RandomState(7)
        cost = CostMatrix(rng.uniform(0.1, 1.0, size=(2, 3)))
    sample = make_sample(cost)
    arrays = GraphArrays.from_cost(cost)
    model = init_model(config, seed=3)

    params = _params_t(model, True)
    loss = _loss_t(
        _forward_t(arrays, params, config), sample.gt_labels, config.loss_balance_w
    )
    loss.backward()

    def loss_at(values: dict[str, np.ndarray]) -> float:
        frozen = {k: ag.Tensor(v) for k, v in values.items()}
        out = _loss_t(
            _forward_t(arrays, frozen, config), sample.gt_labels, config.loss_balance_w
        )
        return float(out.data)

    errors: dict[str, float] = {}
    for name in sorted(model.params):
        analytic = params[name].grad
        if analytic is None:
            analytic = np.zeros_like(model.params[name])
        numeric = np.zeros_like(model.params[name])
        flat = model.params[name].reshape(-1)
        num_flat = numeric.reshape(-1)
        for k in range(flat.size):
            orig = flat[k]
            flat[k] = orig + step
            hi = loss_at(model.params)
            flat[k] = orig - step
            lo = loss_at(model.params)
            flat[k] = orig
            num_flat[k] = (hi - lo) / (2.0 * step)
        denom = max(np.linalg.norm(numeric), 1e-12)
        errors[name] = float(np.linalg.norm(analytic - numeric) / denom)
    return errors
