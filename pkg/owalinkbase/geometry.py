# -*- coding: utf-8 -*-
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np
from funcy import cached_property
from scipy.spatial.distance import pdist, squareform

from .exceptions import (
    AsymmetricMatrix,
    DimensionMismatch,
    InvalidCondensedMatrix,
    NegativeDistance,
    NonFiniteValue,
    NotSquare,
)

log = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-9


def condensed_index(n: int, i: int, j: int) -> int:
    """
    Position of pair ``(i, j)`` in a row-major condensed upper triangle.

    >>> condensed_index(4, 0, 1), condensed_index(4, 2, 3)
    (0, 5)
    """
    if i > j:
        i, j = j, i
    return n * i - i * (i + 1) // 2 + j - i - 1


def condensed_length(n: int) -> int:
    return n * (n - 1) // 2


def _check_finite(array: np.ndarray, what: str) -> None:
    bad = np.argwhere(~np.isfinite(array))
    if len(bad):
        raise NonFiniteValue("{} contains a non-finite value at {}".format(what, tuple(int(x) for x in bad[0])))


@dataclass(frozen=True, eq=False)
class PointSet:
    """
    Set of ``n`` points in ``d``-dimensional space.

    Coordinates are stored as a read-only ``(n, d)`` float array.
    """

    coordinates: np.ndarray

    def __post_init__(self):
        array = np.array(self.coordinates, dtype=float)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise DimensionMismatch(0, 1, 0 if array.ndim < 2 else array.shape[1])
        _check_finite(array, "point set")
        array.setflags(write=False)
        object.__setattr__(self, "coordinates", array)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[float]]) -> "PointSet":
        """
        Build a point set from rows of coordinates.

        :raises DimensionMismatch: when a row differs in length from the first row
        """
        rows = [list(row) for row in rows]
        if not rows:
            raise DimensionMismatch(0, 1, 0)
        expected = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != expected:
                raise DimensionMismatch(index, expected, len(row))
        return cls(np.asarray(rows, dtype=float))

    @property
    def n(self) -> int:
        return self.coordinates.shape[0]

    @property
    def dimension(self) -> int:
        return self.coordinates.shape[1]

    def __len__(self) -> int:
        return self.n

    def centroid(self, members: Sequence[int]) -> np.ndarray:
        return self.coordinates[list(members)].mean(axis=0)


@dataclass(frozen=True, eq=False)
class CondensedDistanceMatrix:
    """
    Upper-triangle pairwise distances over ``n`` objects.

    Pair ``(i, j)`` with ``i < j`` lives at :func:`condensed_index`. Any semimetric is accepted, the triangle
    inequality is never enforced.
    """

    n: int
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        if self.n < 1 or len(values) != condensed_length(self.n):
            raise InvalidCondensedMatrix(
                "{} values do not form a condensed matrix over {} objects".format(len(values), self.n)
            )
        _check_finite(values, "distance matrix")
        if len(values) and values.min() < 0:
            raise NegativeDistance("negative distance at condensed position {}".format(int(values.argmin())))
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Sequence[float]) -> "CondensedDistanceMatrix":
        """Infer ``n`` from the number of values."""
        length = len(values)
        n = int(math.ceil(math.sqrt(2 * length))) if length else 1
        if condensed_length(n) != length:
            raise InvalidCondensedMatrix("{} is not a triangular number".format(length))
        return cls(n, values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, pair: Tuple[int, int]) -> float:
        i, j = pair
        if i == j:
            return 0.0
        return float(self.values[condensed_index(self.n, i, j)])

    @cached_property
    def square(self) -> np.ndarray:
        """Symmetric ``n`` by ``n`` view with a zero diagonal."""
        out = squareform(self.values, force="tomatrix", checks=False) if self.n > 1 else np.zeros((1, 1))
        out.setflags(write=False)
        return out

    def to_square(self) -> np.ndarray:
        return self.square.copy()

    def block(self, rows: Sequence[int], columns: Sequence[int]) -> np.ndarray:
        """Distances between ``rows`` and ``columns`` in row-major order."""
        return self.square[np.ix_(list(rows), list(columns))].reshape(-1)


def euclidean_distances(points: PointSet) -> CondensedDistanceMatrix:
    """Pairwise Euclidean distances between all points."""
    return CondensedDistanceMatrix(points.n, pdist(points.coordinates, "euclidean"))


def matrix_from_square(
    rows: Sequence[Sequence[float]], tolerance: float = SYMMETRY_TOLERANCE
) -> CondensedDistanceMatrix:
    """
    Extract the condensed upper triangle of a square distance matrix.

    The stored value of each pair is the upper-triangle entry ``rows[i][j]``.

    :param rows: ``n`` rows of ``n`` distances
    :param float tolerance: allowed asymmetry and diagonal deviation
    :raises NotSquare: rows are ragged or not ``n`` by ``n``
    :raises AsymmetricMatrix: names the pair with the largest asymmetry
    :raises NegativeDistance: on any negative entry
    """
    rows = [list(row) for row in rows]
    n = len(rows)
    for index, row in enumerate(rows):
        if len(row) != n:
            raise NotSquare("row {} has {} entries, expected {}".format(index, len(row), n))
    if n == 0:
        raise NotSquare("empty matrix")
    square = np.asarray(rows, dtype=float)
    _check_finite(square, "distance matrix")
    if square.min() < 0:
        i, j = np.unravel_index(square.argmin(), square.shape)
        raise NegativeDistance("negative distance at ({}, {})".format(int(i), int(j)))
    diagonal = np.abs(np.diag(square))
    if len(diagonal) and diagonal.max() > tolerance:
        raise InvalidCondensedMatrix("nonzero diagonal at row {}".format(int(diagonal.argmax())))
    deviation = np.abs(square - square.T)
    if deviation.max() > tolerance:
        i, j = sorted(np.unravel_index(deviation.argmax(), deviation.shape))
        raise AsymmetricMatrix(int(i), int(j), float(square[i, j]), float(square[j, i]))
    log.debug("ingested %d x %d distance matrix", n, n)
    return CondensedDistanceMatrix(n, squareform(square, force="tovector", checks=False))
