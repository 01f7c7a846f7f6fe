# -*- coding: utf-8 -*-
"""
Pair-distance stores driving the agglomerative loop.

An engine knows the current linkage value of every pair of active clusters and updates itself after a merge.
Values may live in an internal scale (squared distances for squared-mode schemes); :meth:`Engine.report` converts
them to distance units.
"""
import logging
import math
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from owalinkbase.geometry import CondensedDistanceMatrix, PointSet
from owalinkbase.owa import owa_ascending

from .linkage import Cluster, LinkageMethod, Strategy

log = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class Engine:
    """Base class, keeps the active clusters."""

    def __init__(self, dm: CondensedDistanceMatrix, method: LinkageMethod, points: Optional[PointSet] = None):
        self.dm = dm
        self.method = method
        self.points = points
        self.active: Dict[int, Cluster] = {i: Cluster.leaf(i) for i in range(dm.n)}

    def value(self, u: int, v: int) -> float:
        raise NotImplementedError

    def report(self, value: float) -> float:
        return value

    def pairs(self) -> Iterable[Pair]:
        ids = sorted(self.active)
        for index, u in enumerate(ids):
            for v in ids[index + 1 :]:
                yield u, v

    def merge(self, u: int, v: int, new_id: int) -> Cluster:
        merged = Cluster.merge(self.active.pop(u), self.active.pop(v), new_id)
        self.active[new_id] = merged
        return merged


class RecomputeEngine(Engine):
    """Evaluates the definitional linkage of a pair every time it is asked; no state besides the clusters."""

    def value(self, u: int, v: int) -> float:
        return self.method.evaluate(self.dm, self.active[u], self.active[v], self.points)


class LanceWilliamsEngine(Engine):
    """Classical linkages updated in constant time per pair with the Lance-Williams recurrence."""

    def __init__(self, dm: CondensedDistanceMatrix, method: LinkageMethod, points: Optional[PointSet] = None):
        super().__init__(dm, method, points)
        self.scheme = method.scheme
        values = dm.values**2 if self.scheme.squared_mode else dm.values
        self.values: Dict[Pair, float] = dict(zip(self.pairs(), (float(x) for x in values)))

    def value(self, u: int, v: int) -> float:
        return self.values[_pair(u, v)]

    def report(self, value: float) -> float:
        return math.sqrt(max(value, 0.0)) if self.scheme.squared_mode else value

    def merge(self, u: int, v: int, new_id: int) -> Cluster:
        n_u, n_v = self.active[u].size, self.active[v].size
        d_uv = self.values.pop(_pair(u, v))
        merged = super().merge(u, v, new_id)
        for z, other in self.active.items():
            if z == new_id:
                continue
            d_zu = self.values.pop(_pair(z, u))
            d_zv = self.values.pop(_pair(z, v))
            self.values[_pair(z, new_id)] = self.scheme.update(d_zu, d_zv, d_uv, n_u, n_v, other.size)
        return merged


class SortedMergeEngine(Engine):
    """
    OWA linkages with incremental blocks.

    Each active pair owns its distance block sorted in ascending order. The block of a new pair is the union of two
    existing blocks, obtained by merging two sorted runs; every original distance lives in exactly one block.
    """

    def __init__(self, dm: CondensedDistanceMatrix, method: LinkageMethod, points: Optional[PointSet] = None):
        super().__init__(dm, method, points)
        self.spec = method.spec
        self.blocks: Dict[Pair, np.ndarray] = {
            pair: dm.values[index : index + 1] for index, pair in enumerate(self.pairs())
        }
        self.values: Dict[Pair, float] = {pair: float(block[0]) for pair, block in self.blocks.items()}

    def value(self, u: int, v: int) -> float:
        return self.values[_pair(u, v)]

    def merge(self, u: int, v: int, new_id: int) -> Cluster:
        del self.blocks[_pair(u, v)]
        del self.values[_pair(u, v)]
        merged = super().merge(u, v, new_id)
        for z in self.active:
            if z == new_id:
                continue
            # stable sort detects and merges the two ascending runs in linear time
            block = np.sort(np.concatenate([self.blocks.pop(_pair(z, u)), self.blocks.pop(_pair(z, v))]), kind="stable")
            del self.values[_pair(z, u)], self.values[_pair(z, v)]
            self.blocks[_pair(z, new_id)] = block
            self.values[_pair(z, new_id)] = owa_ascending(self.spec, block)
        return merged


def make_engine(dm: CondensedDistanceMatrix, method: LinkageMethod, points: Optional[PointSet] = None) -> Engine:
    if method.strategy is Strategy.RECOMPUTE:
        engine = RecomputeEngine
    elif method.is_owa:
        engine = SortedMergeEngine
    else:
        engine = LanceWilliamsEngine
    log.debug("using %s for %s", engine.__name__, method)
    return engine(dm, method, points)
