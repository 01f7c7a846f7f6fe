# -*- coding: utf-8 -*-
"""
Intercluster distances.

Classical linkages are evaluated from their definitions, OWA linkages apply an OWA operator to all pairwise distances
between two clusters. :class:`LinkageMethod` ties a linkage to an evaluation strategy used by the agglomerator.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from owalinkbase.exceptions import InvalidSequence
from owalinkbase.geometry import CondensedDistanceMatrix, PointSet
from owalinkbase.owa import OwaLinkageSpec, owa
from owalinkbase.schemes import LanceWilliamsScheme, SchemeKind

from .exceptions import (
    CoordinatesRequired,
    EmptyCluster,
    IndexOutOfRange,
    InvalidMethod,
    MergeHistoryRequired,
    OverlappingClusters,
    UnsupportedStrategy,
)

log = logging.getLogger(__name__)


class Strategy(Enum):
    RECOMPUTE = "recompute"
    INCREMENTAL = "incremental"


@dataclass(frozen=True)
class Cluster:
    """
    Cluster with its identifier and, for merged clusters, the two clusters it was made of.

    Singletons have ids ``0..n-1``; the cluster created at step ``j`` has id ``n-1+j``.
    """

    id: int
    members: Tuple[int, ...]
    children: Optional[Tuple["Cluster", "Cluster"]] = None

    @classmethod
    def leaf(cls, index: int) -> "Cluster":
        return cls(index, (index,))

    @classmethod
    def merge(cls, left: "Cluster", right: "Cluster", id: int) -> "Cluster":
        return cls(id, tuple(sorted(left.members + right.members)), (left, right))

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.members)


Members = Union[Cluster, Sequence[int]]


def _indices(cluster: Members) -> Tuple[int, ...]:
    return cluster.members if isinstance(cluster, Cluster) else tuple(int(i) for i in cluster)


def _validate_pair(dm: CondensedDistanceMatrix, a: Sequence[int], b: Sequence[int]) -> None:
    if not a or not b:
        raise EmptyCluster("clusters must be nonempty")
    for index in a + b:
        if not 0 <= index < dm.n:
            raise IndexOutOfRange("index {} is out of range for {} objects".format(index, dm.n))
    common = set(a) & set(b)
    if common:
        raise OverlappingClusters("clusters share member {}".format(min(common)))


def pairwise_block(dm: CondensedDistanceMatrix, a: Members, b: Members) -> np.ndarray:
    """
    All ``|A| * |B|`` distances between members of ``A`` and ``B``, row-major over ``A``.

    :raises EmptyCluster, IndexOutOfRange, OverlappingClusters: on invalid member sets
    """
    a, b = _indices(a), _indices(b)
    _validate_pair(dm, a, b)
    return dm.block(a, b)


def owa_linkage(spec: OwaLinkageSpec, dm: CondensedDistanceMatrix, a: Members, b: Members) -> float:
    return owa(spec, pairwise_block(dm, a, b))


def _require_points(kind: SchemeKind, points: Optional[PointSet]) -> PointSet:
    if points is None:
        raise CoordinatesRequired(
            "{} linkage is defined on cluster centres and needs point coordinates, not just distances".format(
                kind.value
            )
        )
    return points


def _require_history(kind: SchemeKind, cluster: Members) -> Cluster:
    if isinstance(cluster, Cluster) and (cluster.size == 1 or cluster.children is not None):
        return cluster
    if not isinstance(cluster, Cluster) and len(_indices(cluster)) == 1:
        return Cluster.leaf(_indices(cluster)[0])
    raise MergeHistoryRequired("{} linkage depends on the order in which clusters were merged".format(kind.value))


def _weighted(dm: CondensedDistanceMatrix, a: Cluster, b: Cluster) -> float:
    if a.size == 1 and b.size == 1:
        return dm[a.members[0], b.members[0]]
    # Split the cluster created last; the other one already existed when it was formed.
    if b.size > 1 and (a.size == 1 or b.id > a.id):
        a, b = b, a
    left, right = a.children
    return (_weighted(dm, left, b) + _weighted(dm, right, b)) / 2


def _median_point(points: PointSet, cluster: Cluster) -> np.ndarray:
    if cluster.size == 1:
        return points.coordinates[cluster.members[0]]
    left, right = cluster.children
    return (_median_point(points, left) + _median_point(points, right)) / 2


def _ward(dm: CondensedDistanceMatrix, a: Tuple[int, ...], b: Tuple[int, ...]) -> float:
    """Ward distance from pairwise distances only, valid for Euclidean distance matrices."""
    na, nb = len(a), len(b)
    cross = math.fsum(dm.block(a, b) ** 2)
    within_a = math.fsum(dm.block(a, a) ** 2) / 2
    within_b = math.fsum(dm.block(b, b) ** 2) / 2
    value = (2 * cross - 2 * nb / na * within_a - 2 * na / nb * within_b) / (na + nb)
    return math.sqrt(max(value, 0.0))


def classical_linkage(
    kind, dm: CondensedDistanceMatrix, a: Members, b: Members, points: Optional[PointSet] = None
) -> float:
    """
    Definitional value of a classical linkage.

    Centroid and median linkages need ``points``; weighted average and median linkages need :class:`Cluster`
    arguments carrying their merge history. Ward's linkage is computed from distances and equals
    ``sqrt(2 |A| |B| / (|A| + |B|)) * ||mean(A) - mean(B)||`` for Euclidean input.

    :param kind: :class:`SchemeKind` or its name
    """
    kind = SchemeKind(kind)
    ia, ib = _indices(a), _indices(b)
    block = pairwise_block(dm, ia, ib)
    if kind is SchemeKind.SINGLE:
        return float(block.min())
    if kind is SchemeKind.COMPLETE:
        return float(block.max())
    if kind is SchemeKind.AVERAGE:
        return math.fsum(block) / len(block)
    if kind is SchemeKind.WEIGHTED:
        return _weighted(dm, _require_history(kind, a), _require_history(kind, b))
    if kind is SchemeKind.CENTROID:
        points = _require_points(kind, points)
        return float(np.linalg.norm(points.centroid(ia) - points.centroid(ib)))
    if kind is SchemeKind.MEDIAN:
        points = _require_points(kind, points)
        a, b = _require_history(kind, a), _require_history(kind, b)
        return float(np.linalg.norm(_median_point(points, a) - _median_point(points, b)))
    if kind is SchemeKind.WARD:
        return _ward(dm, ia, ib)
    raise UnsupportedStrategy("custom schemes have no definitional form, use the incremental strategy")


@dataclass(frozen=True, eq=False)
class LinkageMethod:
    """
    Linkage plus evaluation strategy.

    Exactly one of ``scheme`` and ``spec`` is set. Text form::

        single | complete | average | weighted | centroid | median | ward | owa:<hi|lo>:<sequence>
    """

    scheme: Optional[LanceWilliamsScheme] = None
    spec: Optional[OwaLinkageSpec] = None
    strategy: Strategy = Strategy.INCREMENTAL

    def __post_init__(self):
        if (self.scheme is None) == (self.spec is None):
            raise InvalidMethod("a method is either a Lance-Williams scheme or an OWA linkage")
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        if self.scheme is not None and self.scheme.kind is SchemeKind.CUSTOM and self.strategy is Strategy.RECOMPUTE:
            raise UnsupportedStrategy("custom schemes are only available with the incremental strategy")

    @classmethod
    def parse(cls, text: str, strategy=Strategy.INCREMENTAL) -> "LinkageMethod":
        text = text.strip()
        try:
            strategy = Strategy(strategy)
        except ValueError:
            raise InvalidMethod("unknown strategy {!r}".format(strategy))
        if text.lower().startswith("owa:"):
            body = text[4:]
            orientation, sep, _ = body.partition(":")
            if not sep or orientation.strip().lower() not in ("hi", "lo"):
                raise InvalidMethod("expected owa:<hi|lo>:<sequence>, got {!r}".format(text))
            try:
                return cls(spec=OwaLinkageSpec.parse(body), strategy=strategy)
            except InvalidSequence as exc:
                raise InvalidMethod(str(exc))
        try:
            kind = SchemeKind(text.lower())
        except ValueError:
            raise InvalidMethod("unknown linkage method {!r}".format(text))
        if kind is SchemeKind.CUSTOM:
            raise InvalidMethod("custom schemes cannot be given as text")
        return cls(scheme=LanceWilliamsScheme.from_kind(kind), strategy=strategy)

    @classmethod
    def from_spec(cls, spec: OwaLinkageSpec, strategy=Strategy.INCREMENTAL) -> "LinkageMethod":
        return cls(spec=spec, strategy=strategy)

    @classmethod
    def from_kind(cls, kind, strategy=Strategy.INCREMENTAL) -> "LinkageMethod":
        return cls(scheme=LanceWilliamsScheme.from_kind(kind), strategy=strategy)

    def with_strategy(self, strategy) -> "LinkageMethod":
        return LinkageMethod(self.scheme, self.spec, Strategy(strategy))

    def __str__(self) -> str:
        if self.spec is not None:
            return "owa:{}".format(self.spec)
        return self.scheme.kind.value

    @property
    def is_owa(self) -> bool:
        return self.spec is not None

    @property
    def kind(self) -> Optional[SchemeKind]:
        return None if self.scheme is None else self.scheme.kind

    @property
    def requires_points(self) -> bool:
        return self.kind in (SchemeKind.CENTROID, SchemeKind.MEDIAN)

    @property
    def squared_mode(self) -> bool:
        return self.scheme is not None and self.scheme.squared_mode

    def check_input(self, points: Optional[PointSet]) -> None:
        if self.requires_points:
            _require_points(self.kind, points)

    def evaluate(
        self, dm: CondensedDistanceMatrix, a: Members, b: Members, points: Optional[PointSet] = None
    ) -> float:
        """Definitional linkage value between two clusters."""
        if self.spec is not None:
            return owa_linkage(self.spec, dm, a, b)
        return classical_linkage(self.scheme.kind, dm, a, b, points)
