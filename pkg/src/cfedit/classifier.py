"""Lightweight bag-of-words text classifier used as the editing target.

Multinomial naive Bayes with additive smoothing: closed-form, deterministic,
and hand-checkable, which is what the edit heuristics and metric tests need.
Prediction is black-box as far as the editor is concerned — only
:func:`predict_proba` / :func:`predict_label` are consumed downstream.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .lexicon.tokenize import tokenize

MODEL_FORMAT = "cfedit-nb-classifier"
MODEL_VERSION = 1


class DegenerateDataset(ValueError):
    """Raised when training data has fewer than two usable classes."""


@dataclass(frozen=True)
class LabeledDataset:
    instances: tuple[tuple[str, str, str], ...]  # (id, text, label)
    label_set: tuple[str, ...]

    def __post_init__(self):
        ids = [i for i, _, _ in self.instances]
        if len(set(ids)) != len(ids):
            raise ValueError("instance ids must be unique")
        labels = set(self.label_set)
        for iid, text, label in self.instances:
            if label not in labels:
                raise ValueError(f"instance {iid}: label {label!r} not in label_set")
            if not text:
                raise ValueError(f"instance {iid}: empty text")

    @classmethod
    def from_jsonl(cls, path) -> "LabeledDataset":
        instances = []
        labels: list[str] = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                instances.append((str(rec["id"]), rec["text"], rec["label"]))
                if rec["label"] not in labels:
                    labels.append(rec["label"])
        return cls(tuple(instances), tuple(labels))

    def to_jsonl(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for iid, text, label in self.instances:
                fh.write(json.dumps({"id": iid, "text": text, "label": label}) + "\n")


def _words(text: str) -> list[str]:
    return [t.lower for t in tokenize(text) if t.is_word]


@dataclass
class TextClassifier:
    labels: tuple[str, ...]
    vocabulary: tuple[str, ...]
    log_priors: np.ndarray  # (C,)
    log_likelihoods: np.ndarray  # (C, V) smoothed log P(word | class)
    log_unseen: np.ndarray  # (C,) log-mass for out-of-vocabulary words
    smoothing: float
    _index: dict[str, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {w: k for k, w in enumerate(self.vocabulary)}


def train_classifier(data: LabeledDataset, smoothing: float = 1.0) -> TextClassifier:
    """Fit multinomial NB over word counts; the OOV bucket takes one smoothing share."""
    if smoothing <= 0:
        raise ValueError("smoothing must be positive")
    labels = data.label_set
    if len(labels) < 2:
        raise DegenerateDataset("need at least two classes")
    per_class = {label: 0 for label in labels}
    vocab: dict[str, int] = {}
    counts: dict[tuple[int, int], int] = {}
    label_of = {label: k for k, label in enumerate(labels)}
    for _, text, label in data.instances:
        c = label_of[label]
        per_class[label] += 1
        for w in _words(text):
            if w not in vocab:
                vocab[w] = len(vocab)
            key = (c, vocab[w])
            counts[key] = counts.get(key, 0) + 1
    if any(v == 0 for v in per_class.values()):
        raise DegenerateDataset("every class needs at least one instance")

    C, V = len(labels), len(vocab)
    count_matrix = np.zeros((C, V))
    for (c, w), v in counts.items():
        count_matrix[c, w] = v
    totals = count_matrix.sum(axis=1)
    denom = totals + smoothing * (V + 1)  # +1: shared out-of-vocabulary bucket
    log_lik = np.log(count_matrix + smoothing) - np.log(denom)[:, None]
    log_unseen = math.log(smoothing) - np.log(denom)
    n = len(data.instances)
    log_priors = np.log(np.array([per_class[label] for label in labels]) / n)
    return TextClassifier(
        labels=tuple(labels),
        vocabulary=tuple(sorted(vocab, key=vocab.get)),
        log_priors=log_priors,
        log_likelihoods=log_lik,
        log_unseen=log_unseen,
        smoothing=smoothing,
    )


def predict_proba(model: TextClassifier, text: str) -> np.ndarray:
    """Posterior over labels; an empty text returns the class priors."""
    scores = model.log_priors.copy()
    for w in _words(text):
        k = model._index.get(w)
        if k is None:
            scores += model.log_unseen
        else:
            scores += model.log_likelihoods[:, k]
    scores -= scores.max()
    probs = np.exp(scores)
    return probs / probs.sum()


def predict_label(model: TextClassifier, text: str) -> str:
    """Argmax label; ties go to the earlier label in label order."""
    probs = predict_proba(model, text)
    return model.labels[int(np.argmax(probs))]


def save_classifier(model: TextClassifier, path) -> None:
    payload = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "labels": list(model.labels),
        "vocabulary": list(model.vocabulary),
        "log_priors": model.log_priors.tolist(),
        "log_likelihoods": model.log_likelihoods.tolist(),
        "log_unseen": model.log_unseen.tolist(),
        "smoothing": model.smoothing,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_classifier(path) -> TextClassifier:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != MODEL_FORMAT or payload.get("version") != MODEL_VERSION:
        raise ValueError(f"not a supported {MODEL_FORMAT} file: {path}")
    return TextClassifier(
        labels=tuple(payload["labels"]),
        vocabulary=tuple(payload["vocabulary"]),
        log_priors=np.asarray(payload["log_priors"]),
        log_likelihoods=np.asarray(payload["log_likelihoods"]),
        log_unseen=np.asarray(payload["log_unseen"]),
        smoothing=payload["smoothing"],
    )
