# -*- coding: utf-8 -*-
class BaseException(Exception):
    """Base exception class."""


class InputError(BaseException):
    """Points or distances cannot be ingested."""


class DimensionMismatch(InputError):
    """A point has a different number of coordinates than the first one."""

    def __init__(self, row: int, expected: int, got: int):
        self.row = row
        super().__init__("row {} has {} coordinates, expected {}".format(row, got, expected))


class NonFiniteValue(InputError):
    """NaN or infinity found in the input."""


class NotSquare(InputError):
    """Distance matrix is not square."""


class AsymmetricMatrix(InputError):
    """Distance matrix is not symmetric within tolerance."""

    def __init__(self, i: int, j: int, upper: float, lower: float):
        self.i = i
        self.j = j
        super().__init__("matrix is asymmetric at ({}, {}): {!r} != {!r}".format(i, j, upper, lower))


class NegativeDistance(InputError):
    """Distances must be nonnegative."""


class InvalidCondensedMatrix(InputError):
    """Condensed vector length does not match any n(n-1)/2."""


class InvalidSequence(BaseException):
    """Coefficient sequence is malformed or violates c1 = 1."""


class EmptyInput(BaseException):
    """OWA of an empty multiset is undefined."""


class UnsortedInput(BaseException):
    """Vector was expected to be sorted in nonincreasing order."""


class UndefinedConstruction(BaseException):
    """Calibrated vector cannot be built because a partial sum is zero."""


class AsymmetricScheme(BaseException):
    """Lance-Williams coefficients are not symmetric in the merged pair."""
