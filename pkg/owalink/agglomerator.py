# -*- coding: utf-8 -*-
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from owalinkbase.exceptions import InputError
from owalinkbase.geometry import CondensedDistanceMatrix, PointSet

from .config import DEFAULTS
from .dendrogram import Dendrogram, InversionReport, MergeRecord
from .engines import make_engine
from .exceptions import TooFewObjects
from .linkage import LinkageMethod

log = logging.getLogger(__name__)


def cluster(
    dm: CondensedDistanceMatrix,
    method: LinkageMethod,
    points: Optional[PointSet] = None,
    record_updates: bool = False,
) -> Dendrogram:
    """
    Agglomerative hierarchical clustering.

    Every step merges the active pair with the smallest linkage value; ties go to the lexicographically smallest
    ``(u, v)`` pair of cluster ids. Step ``j`` creates cluster ``n-1+j``.

    :param dm: distances between the ``n >= 2`` objects
    :param LinkageMethod method: linkage and evaluation strategy
    :param PointSet points: coordinates, required by centroid and median linkages
    :param bool record_updates: keep the distances from every intact cluster to each new one

    Example usage:

    .. code-block:: python

        from owalink.agglomerator import cluster
        from owalink.linkage import LinkageMethod

        dendrogram = cluster(dm, LinkageMethod.parse("owa:lo:1,1;zero"))
        print(dendrogram.heights)
    """
    n = dm.n
    if n < 2:
        raise TooFewObjects("clustering needs at least two objects, got {}".format(n))
    method.check_input(points)
    if points is not None and points.n != n:
        raise InputError("{} points given for {} objects".format(points.n, n))

    engine = make_engine(dm, method, points)
    merges: List[MergeRecord] = []
    updates = [] if record_updates else None
    for step in range(1, n):
        value, u, v = min((engine.value(u, v), u, v) for u, v in engine.pairs())
        height = engine.report(value)
        new_id = n - 1 + step
        merged = engine.merge(u, v, new_id)
        merges.append(MergeRecord(step, u, v, height, merged.size))
        log.debug("step %d: merged %d and %d at height %r", step, u, v, height)
        if record_updates:
            updates.append({z: engine.report(engine.value(z, new_id)) for z in engine.active if z != new_id})

    dendrogram = Dendrogram(n, tuple(merges), str(method), None if updates is None else tuple(updates))
    log.info("clustered %d objects with %s (%s)", n, method, method.strategy.value)
    return dendrogram


def heights(dendrogram: Dendrogram) -> List[float]:
    return dendrogram.heights


def detect_inversions(dendrogram: Dendrogram, epsilon: float = DEFAULTS["epsilon"]) -> InversionReport:
    """
    Report every step whose height is below the previous one by more than ``epsilon``.

    >>> from owalink.dendrogram import Dendrogram, MergeRecord
    >>> dg = Dendrogram(3, (MergeRecord(1, 0, 1, 1.0, 2), MergeRecord(2, 2, 3, 1.0 - 1e-15, 3)), "single")
    >>> detect_inversions(dg, 1e-12).inversions
    ()
    """
    if not 0 <= epsilon < math.inf:
        raise ValueError("epsilon must be finite and nonnegative")
    report = dendrogram.inversions(epsilon)
    if report:
        log.info("%d inversion(s) at steps %s", len(report), report.steps)
    return report


def cut(dendrogram: Dendrogram, k: int) -> np.ndarray:
    return dendrogram.cut(k)


@dataclass(frozen=True)
class StepCondition:
    """
    Whether every intact cluster stays at least ``height`` away from the cluster merged at ``step``.

    ``nearest`` is ``None`` at the last step, where no cluster is left.
    """

    step: int
    height: float
    nearest: Optional[float]
    holds: bool

    def to_dict(self) -> dict:
        return {"step": self.step, "height": self.height, "nearest": self.nearest, "holds": self.holds}


@dataclass(frozen=True)
class MonotonicityCertificate:
    """
    Per-step merge conditions next to the inversions of the same run.

    Heights are nondecreasing exactly when every step condition holds; ``consistent`` records that the condition
    failing at step ``j`` and the inversion at step ``j+1`` coincide on this run.
    """

    epsilon: float
    steps: Tuple[StepCondition, ...]
    inversions: InversionReport
    consistent: bool

    @property
    def violated_steps(self) -> List[int]:
        return [condition.step for condition in self.steps if not condition.holds]

    @property
    def monotone(self) -> bool:
        return not self.violated_steps

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "consistent": self.consistent,
            "steps": [condition.to_dict() for condition in self.steps],
            "inversions": self.inversions.to_dict()["inversions"],
        }


def monotonicity_certificate(
    dm: CondensedDistanceMatrix,
    method: LinkageMethod,
    epsilon: float = DEFAULTS["epsilon"],
    points: Optional[PointSet] = None,
) -> MonotonicityCertificate:
    """Run the clustering and confirm that the merge conditions fail exactly before the inversions."""
    dendrogram = cluster(dm, method, points, record_updates=True)
    steps = []
    for merge, update in zip(dendrogram.merges, dendrogram.updates):
        nearest = min(update.values()) if update else None
        holds = nearest is None or nearest >= merge.height - epsilon
        steps.append(StepCondition(merge.step, merge.height, nearest, holds))
    report = detect_inversions(dendrogram, epsilon)
    violated = [c.step for c in steps if not c.holds]
    consistent = [step + 1 for step in violated] == report.steps
    if not consistent:
        log.error("merge conditions fail at %s but inversions are at %s", violated, report.steps)
    return MonotonicityCertificate(epsilon, tuple(steps), report, consistent)
