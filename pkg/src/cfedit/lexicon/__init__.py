"""Word-similarity providers and bipartite substitution-graph construction."""

from .embeddings import EmbeddingTable, embedding_similarity, load_embeddings
from .graph_build import (
    EmptyGraph,
    GraphBuildConfig,
    GraphBuildResult,
    build_graph,
    candidate_targets,
    extract_sources,
)
from .taxonomy import (
    PosTag,
    Synset,
    Taxonomy,
    UnknownWord,
    load_taxonomy,
    parse_taxonomy,
    path_similarity,
    pos_tag,
)
from .tokenize import Token, match_casing, replace_tokens, token_strings, tokenize

__all__ = [
    "EmbeddingTable",
    "EmptyGraph",
    "GraphBuildConfig",
    "GraphBuildResult",
    "PosTag",
    "Synset",
    "Taxonomy",
    "Token",
    "UnknownWord",
    "build_graph",
    "candidate_targets",
    "embedding_similarity",
    "extract_sources",
    "load_embeddings",
    "load_taxonomy",
    "match_casing",
    "parse_taxonomy",
    "path_similarity",
    "pos_tag",
    "replace_tokens",
    "token_strings",
    "tokenize",
]
