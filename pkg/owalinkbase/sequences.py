# -*- coding: utf-8 -*-
import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
from funcy import memoize

from .exceptions import InvalidSequence


class Tail(Enum):
    """How a coefficient sequence continues past its stored prefix."""

    ZERO = "zero"
    REPEAT = "repeat"


def format_number(value: float) -> str:
    """
    Shortest round-tripping text for a float, without a trailing ``.0``.

    >>> format_number(1.0), format_number(0.28125)
    ('1', '0.28125')
    """
    text = repr(float(value))
    return text[:-2] if text.endswith(".0") else text


def _parse_token(token: str) -> float:
    token = token.strip()
    try:
        if "/" in token:
            return float(Fraction(token))
        return float(token)
    except (ValueError, ZeroDivisionError):
        raise InvalidSequence("cannot parse coefficient {!r}".format(token))


@dataclass(frozen=True)
class CoefficientSequence:
    """
    Infinite coefficient sequence ``c = (c1, c2, ...)`` stored as a finite prefix plus a tail policy.

    Under :attr:`Tail.ZERO` every coefficient past the prefix is zero, under :attr:`Tail.REPEAT` it equals the last
    prefix value. ``c1`` must be exactly 1.

    :param tuple prefix: ``(c1, ..., cK)``, nonnegative and finite
    :param Tail tail: tail policy
    """

    prefix: Tuple[float, ...]
    tail: Tail = Tail.ZERO

    def __post_init__(self):
        prefix = tuple(float(x) for x in self.prefix)
        if not prefix:
            raise InvalidSequence("empty prefix")
        if prefix[0] != 1.0:
            raise InvalidSequence("c1 must equal 1, got {!r}".format(prefix[0]))
        for index, value in enumerate(prefix, start=1):
            if not math.isfinite(value) or value < 0:
                raise InvalidSequence("c{} = {!r} is not a finite nonnegative number".format(index, value))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "tail", Tail(self.tail))

    @classmethod
    def parse(cls, text: str) -> "CoefficientSequence":
        """
        Parse ``"1,0.5,0.375;zero"`` or ``"1;repeat"``; fractions such as ``7/75`` are accepted.

        >>> CoefficientSequence.parse("1,1/2;repeat").coefficient(5)
        0.5
        """
        body, _, tail = text.strip().partition(";")
        tail = tail.strip().lower() or Tail.ZERO.value
        try:
            tail = Tail(tail)
        except ValueError:
            raise InvalidSequence("unknown tail policy {!r}".format(tail))
        if not body.strip():
            raise InvalidSequence("empty prefix")
        return cls(tuple(_parse_token(token) for token in body.split(",")), tail)

    @classmethod
    def complete(cls) -> "CoefficientSequence":
        """``(1, 0, 0, ...)``: the maximum (or minimum, smallest first)."""
        return cls((1.0,), Tail.ZERO)

    @classmethod
    def average(cls) -> "CoefficientSequence":
        """``(1, 1, 1, ...)``: the arithmetic mean."""
        return cls((1.0,), Tail.REPEAT)

    @classmethod
    def ones(cls, k: int) -> "CoefficientSequence":
        """Mean of the ``k`` most extreme values."""
        if k < 1:
            raise InvalidSequence("k must be positive")
        return cls((1.0,) * k, Tail.ZERO)

    @classmethod
    def geometric(cls, ratio: float, length: int) -> "CoefficientSequence":
        """``(1, r, r**2, ..., r**(length-1), 0, ...)``."""
        if length < 1:
            raise InvalidSequence("length must be positive")
        return cls(tuple(ratio**i for i in range(length)), Tail.ZERO)

    def __str__(self) -> str:
        return "{};{}".format(",".join(format_number(x) for x in self.prefix), self.tail.value)

    def coefficient(self, i: int) -> float:
        if i < 1:
            raise IndexError("coefficients are indexed from 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        return self.prefix[-1] if self.tail is Tail.REPEAT else 0.0

    def head(self, m: int) -> np.ndarray:
        """``(c1, ..., cm)`` as a read-only view of a buffer that grows geometrically."""
        buffer = self.__dict__.get("_buffer")
        if buffer is None or len(buffer) < m:
            size = max(m, 2 * len(buffer) if buffer is not None else 16, len(self.prefix))
            filler = self.prefix[-1] if self.tail is Tail.REPEAT else 0.0
            buffer = np.concatenate([self.prefix, np.full(size - len(self.prefix), filler)])
            buffer.setflags(write=False)
            object.__setattr__(self, "_buffer", buffer)
        return buffer[:m]

    @memoize
    def partial_sums(self, m: int) -> np.ndarray:
        """``P[j] = c1 + ... + cj`` for ``j = 0..m``, each correctly rounded; ``P[0] = 0``."""
        exact = itertools.accumulate(map(Fraction, self.head(m)), initial=Fraction(0))
        out = np.array([float(x) for x in exact])
        out.setflags(write=False)
        return out

    @memoize
    def total(self, m: int) -> float:
        return math.fsum(self.head(m))

    @property
    def support(self) -> Optional[int]:
        """Index of the last nonzero coefficient, ``None`` when infinitely many are nonzero."""
        if self.tail is Tail.REPEAT and self.prefix[-1] > 0:
            return None
        return max(i for i, value in enumerate(self.prefix, start=1) if value > 0)

    @property
    def is_extreme(self) -> bool:
        """Only ``c1`` is nonzero: the maximum largest-first, the minimum smallest-first."""
        return self.support == 1

    @property
    def is_average(self) -> bool:
        return self.tail is Tail.REPEAT and all(value == 1.0 for value in self.prefix)


def sequence(values: Sequence[float], tail: str = "zero") -> CoefficientSequence:
    """Shorthand constructor."""
    return CoefficientSequence(tuple(values), Tail(tail))
