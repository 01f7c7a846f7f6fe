# -*- coding: utf-8 -*-
"""
Search for evidence that an OWA linkage has no Lance-Williams form.

A Lance-Williams update computes ``d(z, u + v)`` from ``d(z, u)``, ``d(z, v)``, ``d(u, v)`` and the three cluster
sizes alone. Two configurations agreeing on all six inputs but not on the merged linkage therefore rule any such
update out.

Configurations place three clusters ``Z``, ``U``, ``V`` in a semimetric space where all distances inside a cluster and
between ``U`` and ``V`` equal 2. The ``Z x U`` blocks of one size are shifted calibrated indicator vectors, which share
a single OWA value; the ``Z x V`` block is constant and shared by both configurations.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np
from toolz import groupby

from owalinkbase.geometry import CondensedDistanceMatrix, matrix_from_square
from owalinkbase.owa import OwaLinkageSpec, e_bar, owa

from .config import DEFAULTS
from .exceptions import InvariantBreach
from .linkage import owa_linkage

log = logging.getLogger(__name__)

FILL = 2.0
RESOLUTION = 1e-9


@dataclass(frozen=True)
class WitnessBudget:
    """Largest block arity ``|Z| * |U|`` and cluster size explored."""

    max_arity: int = DEFAULTS["max_arity"]
    max_cluster_size: int = DEFAULTS["max_cluster_size"]


@dataclass(frozen=True)
class Configuration:
    """Sizes of ``Z``, ``U``, ``V`` and the multisets of the ``Z x U`` and ``Z x V`` blocks."""

    n_z: int
    n_u: int
    n_v: int
    zu: Tuple[float, ...]
    zv: Tuple[float, ...]

    @property
    def members(self) -> Tuple[List[int], List[int], List[int]]:
        z = list(range(self.n_z))
        u = list(range(self.n_z, self.n_z + self.n_u))
        v = list(range(self.n_z + self.n_u, self.n_z + self.n_u + self.n_v))
        return z, u, v

    def distance_matrix(self) -> CondensedDistanceMatrix:
        """Realize the configuration as a semimetric on ``n_z + n_u + n_v`` objects."""
        z, u, v = self.members
        size = self.n_z + self.n_u + self.n_v
        square = np.full((size, size), FILL)
        np.fill_diagonal(square, 0.0)
        square[np.ix_(z, u)] = np.reshape(self.zu, (self.n_z, self.n_u))
        square[np.ix_(z, v)] = np.reshape(self.zv, (self.n_z, self.n_v))
        square[np.ix_(u, z)] = square[np.ix_(z, u)].T
        square[np.ix_(v, z)] = square[np.ix_(z, v)].T
        return matrix_from_square(square)

    def evaluate(self, spec: OwaLinkageSpec) -> Dict[str, float]:
        dm = self.distance_matrix()
        z, u, v = self.members
        return {
            "d_zu": owa_linkage(spec, dm, z, u),
            "d_zv": owa_linkage(spec, dm, z, v),
            "d_uv": owa_linkage(spec, dm, u, v),
            "merged": owa_linkage(spec, dm, z, u + v),
        }

    def to_dict(self) -> dict:
        return {"n_z": self.n_z, "n_u": self.n_u, "n_v": self.n_v, "zu": list(self.zu), "zv": list(self.zv)}


@dataclass(frozen=True)
class RepresentabilityWitness:
    spec: OwaLinkageSpec
    first: Configuration
    second: Configuration
    first_values: Dict[str, float]
    second_values: Dict[str, float]

    def verify(self) -> bool:
        """Re-evaluate both configurations on their distance matrices."""
        a, b = self.first.evaluate(self.spec), self.second.evaluate(self.spec)
        if (self.first.n_z, self.first.n_u, self.first.n_v) != (self.second.n_z, self.second.n_u, self.second.n_v):
            return False
        same_inputs = all(abs(a[key] - b[key]) <= RESOLUTION for key in ("d_zu", "d_zv", "d_uv"))
        return same_inputs and abs(a["merged"] - b["merged"]) > RESOLUTION

    def to_dict(self) -> dict:
        return {
            "spec": str(self.spec),
            "configurations": [
                dict(self.first.to_dict(), **self.first_values),
                dict(self.second.to_dict(), **self.second_values),
            ],
        }


def equal_owa_blocks(spec: OwaLinkageSpec, arity: int) -> List[Tuple[float, ...]]:
    """
    Positive blocks of ``arity`` values, largest first, all with the same OWA value.

    Largest-first blocks are ``1 + e_bar(c, k, arity)`` with OWA 2. Smallest-first blocks mirror them as
    ``t - e_bar(c, k, arity)`` with ``t`` one above the largest calibrated value, giving OWA ``t - 1``.

    >>> equal_owa_blocks(OwaLinkageSpec.parse("hi:1,0.5;zero"), 2)
    [(2.5, 1.0), (2.0, 2.0)]
    """
    vectors = [e_bar(spec.coefficients, k, arity) for k in range(1, arity + 1)]
    if spec.largest_first:
        blocks = [1.0 + vector for vector in vectors]
    else:
        shift = 1.0 + max(float(vector.max()) for vector in vectors)
        blocks = [shift - vector for vector in vectors]
    return list(dict.fromkeys(tuple(float(x) for x in sorted(block, reverse=True)) for block in blocks))


def _levels(blocks: List[Tuple[float, ...]]) -> List[float]:
    """Block entries, midpoints between consecutive ones, and one level below and above them all."""
    entries = sorted(set(itertools.chain.from_iterable(blocks)))
    middles = [(a + b) / 2 for a, b in zip(entries, entries[1:])]
    return sorted(set(entries + middles + [entries[0] / 2, entries[-1] + 1]))


def _sizes(budget: WitnessBudget) -> Iterator[Tuple[int, int, int]]:
    bound = budget.max_cluster_size
    triples = itertools.product(range(1, bound + 1), repeat=3)
    for n_z, n_u, n_v in sorted(triples, key=lambda t: (sum(t), t)):
        if n_z * max(n_u, n_v) <= budget.max_arity:
            yield n_z, n_u, n_v


def _key(value: float) -> int:
    return int(round(value / RESOLUTION))


def representability_witness(
    spec: OwaLinkageSpec, budget: Optional[WitnessBudget] = None
) -> Optional[RepresentabilityWitness]:
    """
    First pair of configurations with equal Lance-Williams inputs and different merged OWA linkages.

    ``None`` means no witness within ``budget``; it is not a proof that a Lance-Williams form exists. For the maximum,
    the minimum and the arithmetic mean none exists at any budget, and the search is skipped.

    :raises InvariantBreach: if a found witness does not survive re-evaluation
    """
    budget = budget or WitnessBudget()
    c = spec.coefficients
    if c.is_extreme or c.is_average:
        log.info("%s is a classical linkage with a Lance-Williams form", spec)
        return None
    for n_z, n_u, n_v in _sizes(budget):
        family = equal_owa_blocks(spec, n_z * n_u)
        if len(family) < 2:
            continue
        u_blocks = {block: owa(spec, block) for block in family}
        v_blocks = {(level,) * (n_z * n_v): level for level in _levels(family)}
        candidates = [(zu, zv, owa(spec, zu + zv)) for zu, zv in itertools.product(u_blocks, v_blocks)]
        groups = groupby(lambda item: (_key(u_blocks[item[0]]), _key(v_blocks[item[1]])), candidates)
        for key in sorted(groups):
            group = groups[key]
            low = min(group, key=lambda item: item[2])
            high = max(group, key=lambda item: item[2])
            if high[2] - low[2] <= RESOLUTION:
                continue
            first = Configuration(n_z, n_u, n_v, low[0], low[1])
            second = Configuration(n_z, n_u, n_v, high[0], high[1])
            witness = RepresentabilityWitness(spec, first, second, first.evaluate(spec), second.evaluate(spec))
            if not witness.verify():
                raise InvariantBreach("witness for {} failed re-evaluation".format(spec))
            log.info("%s has no Lance-Williams form: witness with sizes %s", spec, (n_z, n_u, n_v))
            return witness
    log.warning("no witness for %s within %s", spec, budget)
    return None
