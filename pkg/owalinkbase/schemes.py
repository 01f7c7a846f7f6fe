# -*- coding: utf-8 -*-
"""
Lance-Williams recurrence.

The distance from cluster ``z`` to the union of ``u`` and ``v`` is

    alpha_u * d(z, u) + alpha_v * d(z, v) + beta * d(u, v) + gamma * |d(z, u) - d(z, v)|

with coefficients depending on the cardinalities ``(n_u, n_v, n_z)``. Centroid, median and Ward recurrences hold for
squared Euclidean distances only, these schemes run in squared mode.
"""
import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Tuple

from .exceptions import AsymmetricScheme

TOLERANCE = 1e-12

Coefficient = Callable[[int, int, int], float]


class SchemeKind(Enum):
    SINGLE = "single"
    COMPLETE = "complete"
    AVERAGE = "average"
    WEIGHTED = "weighted"
    CENTROID = "centroid"
    MEDIAN = "median"
    WARD = "ward"
    CUSTOM = "custom"


def _half(nu, nv, nz):
    return 0.5


def _zero(nu, nv, nz):
    return 0.0


# alpha_u, alpha_v, beta, gamma, squared_mode
KNOWN_SCHEMES: Dict[SchemeKind, Tuple[Coefficient, Coefficient, Coefficient, Coefficient, bool]] = {
    SchemeKind.SINGLE: (_half, _half, _zero, lambda nu, nv, nz: -0.5, False),
    SchemeKind.COMPLETE: (_half, _half, _zero, lambda nu, nv, nz: 0.5, False),
    SchemeKind.AVERAGE: (
        lambda nu, nv, nz: nu / (nu + nv),
        lambda nu, nv, nz: nv / (nu + nv),
        _zero,
        _zero,
        False,
    ),
    SchemeKind.WEIGHTED: (_half, _half, _zero, _zero, False),
    SchemeKind.CENTROID: (
        lambda nu, nv, nz: nu / (nu + nv),
        lambda nu, nv, nz: nv / (nu + nv),
        lambda nu, nv, nz: -nu * nv / (nu + nv) ** 2,
        _zero,
        True,
    ),
    SchemeKind.MEDIAN: (_half, _half, lambda nu, nv, nz: -0.25, _zero, True),
    SchemeKind.WARD: (
        lambda nu, nv, nz: (nu + nz) / (nu + nv + nz),
        lambda nu, nv, nz: (nv + nz) / (nu + nv + nz),
        lambda nu, nv, nz: -nz / (nu + nv + nz),
        _zero,
        True,
    ),
}


@dataclass(frozen=True, eq=False)
class LanceWilliamsScheme:
    """
    Coefficient functions of the Lance-Williams recurrence.

    Use :meth:`from_kind` for the classical linkages and :meth:`custom` for anything else.

    :param SchemeKind kind: linkage family
    :param bool squared_mode: the recurrence operates on squared distances
    """

    kind: SchemeKind
    alpha_u: Coefficient = field(repr=False)
    alpha_v: Coefficient = field(repr=False)
    beta: Coefficient = field(repr=False)
    gamma: Coefficient = field(repr=False)
    squared_mode: bool = False

    @classmethod
    def from_kind(cls, kind) -> "LanceWilliamsScheme":
        kind = SchemeKind(kind)
        if kind is SchemeKind.CUSTOM:
            raise ValueError("custom schemes are built with LanceWilliamsScheme.custom()")
        return cls(kind, *KNOWN_SCHEMES[kind])

    @classmethod
    def custom(
        cls,
        alpha_u: Coefficient,
        alpha_v: Coefficient,
        beta: Coefficient,
        gamma: Coefficient,
        squared_mode: bool = False,
        max_size: int = 4,
    ) -> "LanceWilliamsScheme":
        """
        Build a scheme from explicit coefficient functions.

        :raises AsymmetricScheme: when the coefficients are not symmetric for cardinalities up to ``max_size``
        """
        scheme = cls(SchemeKind.CUSTOM, alpha_u, alpha_v, beta, gamma, squared_mode)
        if not scheme.is_symmetric(max_size):
            raise AsymmetricScheme("custom coefficients are not symmetric in (n_u, n_v)")
        return scheme

    def coefficients(self, n_u: int, n_v: int, n_z: int) -> Tuple[float, float, float, float]:
        return (
            self.alpha_u(n_u, n_v, n_z),
            self.alpha_v(n_u, n_v, n_z),
            self.beta(n_u, n_v, n_z),
            self.gamma(n_u, n_v, n_z),
        )

    def update(self, d_zu: float, d_zv: float, d_uv: float, n_u: int, n_v: int, n_z: int) -> float:
        a_u, a_v, b, g = self.coefficients(n_u, n_v, n_z)
        return a_u * d_zu + a_v * d_zv + b * d_uv + g * abs(d_zu - d_zv)

    def _sizes(self, max_size: int):
        return itertools.product(range(1, max_size + 1), repeat=3)

    def is_symmetric(self, max_size: int = 4) -> bool:
        """Swapping ``u`` and ``v`` swaps the alphas and leaves beta and gamma unchanged."""
        for nu, nv, nz in self._sizes(max_size):
            a_u, _, b, g = self.coefficients(nu, nv, nz)
            _, a_v, b_swapped, g_swapped = self.coefficients(nv, nu, nz)
            if abs(a_u - a_v) > TOLERANCE or abs(b - b_swapped) > TOLERANCE or abs(g - g_swapped) > TOLERANCE:
                return False
        return True

    def satisfies_milligan(self, max_size: int = 8) -> bool:
        """
        Reducibility conditions guaranteeing monotone merge heights.

        ``alpha_u + alpha_v + beta >= 1``, both alphas nonnegative, and ``gamma >= 0`` or
        ``|gamma| <= min(alpha_u, alpha_v)``, for all cardinalities up to ``max_size``.
        """
        for sizes in self._sizes(max_size):
            a_u, a_v, b, g = self.coefficients(*sizes)
            if a_u + a_v + b < 1 - TOLERANCE:
                return False
            if a_u < -TOLERANCE or a_v < -TOLERANCE:
                return False
            if g < -TOLERANCE and abs(g) > min(a_u, a_v) + TOLERANCE:
                return False
        return True


def lw_update(
    scheme: LanceWilliamsScheme, d_zu: float, d_zv: float, d_uv: float, n_u: int, n_v: int, n_z: int
) -> float:
    """
    Distance from ``z`` to the merged cluster.

    >>> lw_update(LanceWilliamsScheme.from_kind("single"), 3.0, 5.0, 1.0, 1, 1, 1)
    3.0
    """
    return scheme.update(d_zu, d_zv, d_uv, n_u, n_v, n_z)
