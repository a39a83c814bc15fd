"""Sentence-level source attribution toolkit for news articles.

Subpackages cover the full workflow: annotated-corpus IO, lexicon-driven
rule attribution, composition of external model predictions, per-channel
evaluation, corpus-level sourcing analytics, and construction of the
ablation / version-diff probe datasets.
"""

__version__ = "0.1.0"
