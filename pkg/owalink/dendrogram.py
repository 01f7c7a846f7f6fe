# -*- coding: utf-8 -*-
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from toolz import sliding_window

from .exceptions import InvalidClusterCount, InvariantBreach


@dataclass(frozen=True)
class MergeRecord:
    """
    One agglomeration step.

    :param int step: ``1..n-1``
    :param int left_id: smaller of the two merged cluster ids
    :param int right_id: larger of the two merged cluster ids
    :param float height: linkage value of the merged pair, in distance units
    :param int new_size: members of the new cluster
    """

    step: int
    left_id: int
    right_id: int
    height: float
    new_size: int


@dataclass(frozen=True)
class Inversion:
    step: int
    prev_height: float
    height: float

    def to_dict(self) -> dict:
        return {"step": self.step, "prev_height": self.prev_height, "height": self.height}


@dataclass(frozen=True)
class InversionReport:
    """Adjacent merges whose height drops by more than ``epsilon``."""

    epsilon: float
    inversions: Tuple[Inversion, ...] = ()

    def __bool__(self) -> bool:
        return bool(self.inversions)

    def __len__(self) -> int:
        return len(self.inversions)

    @property
    def steps(self) -> List[int]:
        return [inversion.step for inversion in self.inversions]

    def to_dict(self) -> dict:
        return {"epsilon": self.epsilon, "inversions": [inversion.to_dict() for inversion in self.inversions]}


@dataclass(frozen=True, eq=False)
class Dendrogram:
    """
    Result of an agglomerative run.

    ``updates`` is filled when the run was asked to record them: for each step, the distances from every cluster still
    intact to the newly merged one, keyed by cluster id.
    """

    n: int
    merges: Tuple[MergeRecord, ...]
    method: str
    updates: Optional[Tuple[Dict[int, float], ...]] = field(default=None, repr=False)

    @property
    def heights(self) -> List[float]:
        return [merge.height for merge in self.merges]

    def linkage_matrix(self) -> np.ndarray:
        """``(n-1, 4)`` array of ``left_id, right_id, height, new_size``."""
        return np.array([[m.left_id, m.right_id, m.height, m.new_size] for m in self.merges], dtype=float).reshape(
            -1, 4
        )

    def validate(self) -> None:
        """
        Check the id bookkeeping.

        :raises InvariantBreach: when a record references an unknown or already merged cluster
        """
        if len(self.merges) != self.n - 1:
            raise InvariantBreach("{} merges for {} objects".format(len(self.merges), self.n))
        sizes = dict.fromkeys(range(self.n), 1)
        for step, merge in enumerate(self.merges, start=1):
            if merge.step != step or not merge.left_id < merge.right_id:
                raise InvariantBreach("malformed merge record {}".format(merge))
            if merge.left_id not in sizes or merge.right_id not in sizes:
                raise InvariantBreach("step {} merges an inactive cluster".format(step))
            size = sizes.pop(merge.left_id) + sizes.pop(merge.right_id)
            if size != merge.new_size:
                raise InvariantBreach("step {} reports size {} instead of {}".format(step, merge.new_size, size))
            sizes[self.n - 1 + step] = size

    def _members_after(self, steps: int) -> Dict[int, List[int]]:
        members = {i: [i] for i in range(self.n)}
        for step, merge in enumerate(self.merges[:steps], start=1):
            members[self.n - 1 + step] = members.pop(merge.left_id) + members.pop(merge.right_id)
        return members

    def labels_after(self, steps: int) -> np.ndarray:
        """Partition after ``steps`` merges; labels are ordered by the smallest member of each cluster."""
        clusters = sorted(sorted(group) for group in self._members_after(steps).values())
        labels = np.empty(self.n, dtype=int)
        for label, group in enumerate(clusters):
            labels[group] = label
        return labels

    def cut(self, k: int) -> np.ndarray:
        """
        Partition into ``k`` clusters.

        :raises InvalidClusterCount: unless ``1 <= k <= n``
        """
        if not 1 <= k <= self.n:
            raise InvalidClusterCount("k must be between 1 and {}, got {}".format(self.n, k))
        return self.labels_after(self.n - k)

    def partitions(self) -> Iterator[np.ndarray]:
        """All nested partitions, from ``n`` singletons down to one cluster."""
        for steps in range(self.n):
            yield self.labels_after(steps)

    def inversions(self, epsilon: float) -> InversionReport:
        found = [
            Inversion(step, prev, height)
            for step, (prev, height) in enumerate(sliding_window(2, self.heights), start=2)
            if height < prev - epsilon
        ]
        return InversionReport(epsilon, tuple(found))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "merges": [[m.left_id, m.right_id, m.height, m.new_size] for m in self.merges],
        }
