# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass
from typing import Optional

from funcy import first

from owalinkbase.geometry import CondensedDistanceMatrix, PointSet

from .agglomerator import cluster
from .dendrogram import Dendrogram
from .linkage import LinkageMethod, Strategy

log = logging.getLogger(__name__)

OWA_TOLERANCE = 1e-12
CLASSICAL_TOLERANCE = 1e-9


@dataclass(frozen=True)
class StrategyComparison:
    """
    Recompute and incremental runs of one method side by side.

    ``first_divergence`` is the first step merging a different pair, ``None`` when the merge sequences agree.
    """

    method: str
    max_height_diff: float
    first_divergence: Optional[int]
    tolerance: float

    @property
    def agree(self) -> bool:
        return self.first_divergence is None and self.max_height_diff <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "max_height_diff": self.max_height_diff,
            "first_divergence": self.first_divergence,
            "tolerance": self.tolerance,
            "agree": self.agree,
        }


def _divergence(a: Dendrogram, b: Dendrogram) -> Optional[int]:
    return first(x.step for x, y in zip(a.merges, b.merges) if (x.left_id, x.right_id) != (y.left_id, y.right_id))


def compare_strategies(
    dm: CondensedDistanceMatrix, method: LinkageMethod, points: Optional[PointSet] = None
) -> StrategyComparison:
    """Cluster with both strategies and report how far the merge heights drift apart."""
    recomputed = cluster(dm, method.with_strategy(Strategy.RECOMPUTE), points)
    incremental = cluster(dm, method.with_strategy(Strategy.INCREMENTAL), points)
    diff = max(abs(x - y) for x, y in zip(recomputed.heights, incremental.heights))
    tolerance = OWA_TOLERANCE if method.is_owa else CLASSICAL_TOLERANCE
    comparison = StrategyComparison(str(method), diff, _divergence(recomputed, incremental), tolerance)
    log.info("strategies for %s: max height difference %r, divergence at %s", method, diff, comparison.first_divergence)
    return comparison
