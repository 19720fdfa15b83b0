"""Bundled toy fixtures: taxonomy, embedding table, and two labeled corpora.

Regenerate with ``scripts/make_fixtures.py``; loaders here resolve the files
through package resources so installed copies work the same as checkouts.
The ``CFEDIT_DATA_DIR`` environment variable redirects every loader to an
external directory holding files with the same names.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from ..classifier import LabeledDataset
from ..lexicon.embeddings import EmbeddingTable, load_embeddings
from ..lexicon.taxonomy import Taxonomy, load_taxonomy

DATA_DIR_ENV = "CFEDIT_DATA_DIR"


def data_path(name: str) -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override) / name
    with resources.as_file(resources.files(__package__) / name) as path:
        return Path(path)


def load_bundled_taxonomy() -> Taxonomy:
    return load_taxonomy(data_path("taxonomy.txt"))


def load_bundled_embeddings() -> EmbeddingTable:
    return load_embeddings(data_path("embeddings.txt"))


def load_sentiment_corpus() -> LabeledDataset:
    return LabeledDataset.from_jsonl(data_path("sentiment.jsonl"))


def load_topic_corpus() -> LabeledDataset:
    return LabeledDataset.from_jsonl(data_path("topics.jsonl"))
