# -*- coding: utf-8 -*-
from .agglomerator import cluster, detect_inversions  # noqa: F401

__all__ = [
    "agglomerator",
    "cli",
    "compare",
    "conditions",
    "config",
    "dendrogram",
    "engines",
    "linkage",
    "witness",
]
