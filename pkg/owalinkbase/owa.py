# -*- coding: utf-8 -*-
"""
Extended OWA operators generated by a coefficient sequence.

With ``d(1) >= d(2) >= ... >= d(m)`` the largest-first operator is ``sum(c_i * d(i)) / sum(c_i)``; the smallest-first
one attaches ``c_i`` to the ``i``-th smallest value instead. All sums are compensated (:func:`math.fsum`) so that the
result does not depend on the order of the input multiset.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence, Tuple

import numpy as np

from .exceptions import EmptyInput, NonFiniteValue, UndefinedConstruction, UnsortedInput
from .sequences import CoefficientSequence

TOLERANCE = 1e-12


class Orientation(Enum):
    LARGEST_FIRST = "hi"
    SMALLEST_FIRST = "lo"


@dataclass(frozen=True)
class OwaLinkageSpec:
    """
    Coefficient sequence plus orientation.

    Text form is ``<hi|lo>:<sequence>``, e.g. ``lo:1,1;zero``.
    """

    coefficients: CoefficientSequence
    orientation: Orientation = Orientation.LARGEST_FIRST

    @classmethod
    def parse(cls, text: str) -> "OwaLinkageSpec":
        orientation, _, body = text.strip().partition(":")
        try:
            orientation = Orientation(orientation.strip().lower())
        except ValueError:
            # No orientation given, the whole text is the sequence.
            orientation, body = Orientation.LARGEST_FIRST, text
        return cls(CoefficientSequence.parse(body), orientation)

    def __str__(self) -> str:
        return "{}:{}".format(self.orientation.value, self.coefficients)

    @property
    def largest_first(self) -> bool:
        return self.orientation is Orientation.LARGEST_FIRST

    def __call__(self, values: Sequence[float]) -> float:
        return owa(self, values)


@dataclass(frozen=True)
class WeightingTriangleRow:
    """OWA weight vector for arity ``m``, index 0 weighting the largest value."""

    m: int
    weights: Tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) != self.m:
            raise ValueError("row of arity {} has {} weights".format(self.m, len(self.weights)))
        if any(w < -TOLERANCE or w > 1 + TOLERANCE for w in self.weights):
            raise ValueError("weights must lie in [0, 1]")
        if abs(math.fsum(self.weights) - 1) > TOLERANCE:
            raise ValueError("weights must sum to 1")


def coefficient(c: CoefficientSequence, i: int) -> float:
    return c.coefficient(i)


def _normalizer(c: CoefficientSequence, m: int) -> float:
    total = c.total(m)
    if total <= 0:
        raise UndefinedConstruction("c1 + ... + c{} is zero".format(m))
    return total


def triangle_row(c: CoefficientSequence, orientation: Orientation, m: int) -> WeightingTriangleRow:
    """
    Weighting-triangle row of arity ``m``.

    >>> triangle_row(CoefficientSequence((1.0, 0.5)), Orientation.LARGEST_FIRST, 2).weights
    (0.6666666666666666, 0.3333333333333333)
    """
    if m < 1:
        raise EmptyInput("arity must be positive")
    weights = tuple(float(x) for x in c.head(m) / _normalizer(c, m))
    if orientation is Orientation.SMALLEST_FIRST:
        weights = weights[::-1]
    return WeightingTriangleRow(m, weights)


def cumulative_weights(c: CoefficientSequence, m: int) -> np.ndarray:
    """Partial sums of the largest-first row, the distribution function used for dominance."""
    return c.partial_sums(m)[1:] / _normalizer(c, m)


def owa_ordered(c: CoefficientSequence, ordered: np.ndarray) -> float:
    """OWA of values already arranged in weight order: ``ordered[i]`` receives ``c_{i+1}``."""
    m = len(ordered)
    if m == 0:
        raise EmptyInput("OWA of an empty multiset")
    return math.fsum(c.head(m) * ordered) / _normalizer(c, m)


def owa_ascending(spec: OwaLinkageSpec, ascending: np.ndarray) -> float:
    """OWA of values already sorted in nondecreasing order."""
    return owa_ordered(spec.coefficients, ascending[::-1] if spec.largest_first else ascending)


def owa(spec: OwaLinkageSpec, values: Sequence[float]) -> float:
    """
    Evaluate the OWA operator on a nonempty multiset.

    >>> owa(OwaLinkageSpec.parse("hi:1;repeat"), [3, 1, 2])
    2.0
    """
    values = np.asarray(values, dtype=float).reshape(-1)
    if len(values) == 0:
        raise EmptyInput("OWA of an empty multiset")
    if not np.all(np.isfinite(values)):
        raise NonFiniteValue("OWA input contains a non-finite value")
    return owa_ascending(spec, np.sort(values, kind="stable"))


def _check_descending(vector: np.ndarray, name: str) -> None:
    if np.any(vector[1:] > vector[:-1]):
        raise UnsortedInput("{} is not sorted in nonincreasing order".format(name))


def owa_tilde(c: CoefficientSequence, u: Sequence[float], v: Sequence[float]) -> float:
    """
    Largest-first OWA of ``u`` followed by ``v`` with no sorting after concatenation.

    :raises UnsortedInput: when ``u`` or ``v`` is not nonincreasing
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    _check_descending(u, "u")
    _check_descending(v, "v")
    return owa_ordered(c, np.concatenate([u, v]))


def e_bar(c: CoefficientSequence, k: int, n: int) -> np.ndarray:
    """
    ``k`` equal leading values followed by ``n - k`` zeros, calibrated so that the largest-first OWA equals 1.

    The leading value is ``(c1 + ... + cn) / (c1 + ... + ck)``.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n, got k={} n={}".format(k, n))
    sums = c.partial_sums(n)
    if sums[k] <= 0:
        raise UndefinedConstruction("c1 + ... + c{} is zero".format(k))
    out = np.zeros(n)
    out[:k] = sums[n] / sums[k]
    return out


def e_k(k: int, n: int) -> np.ndarray:
    """``k`` ones followed by ``n - k`` zeros."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n, got k={} n={}".format(k, n))
    out = np.zeros(n)
    out[:k] = 1.0
    return out


def dominates(c: CoefficientSequence, d: CoefficientSequence, n: int, tolerance: float = TOLERANCE) -> bool:
    """
    ``True`` when ``OWA_c(e_k) <= OWA_d(e_k)`` for every ``k = 1..n`` at arity ``n``.

    For largest-first operators this is exactly pointwise dominance on all nonnegative inputs of arity ``n``.
    """
    return bool(np.all(cumulative_weights(c, n) <= cumulative_weights(d, n) + tolerance))
