"""cfedit: contrastive word-level counterfactual edits for text classifiers.

Substitution candidates are found by solving a rectangular linear assignment
problem over a bipartite word graph, either exactly (shortest augmenting
paths) or approximately (a trainable graph network), then applied per
document with beam search and scored with a four-metric evaluation suite.
"""

__version__ = "0.1.0"
