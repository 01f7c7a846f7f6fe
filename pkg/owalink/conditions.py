# -*- coding: utf-8 -*-
"""
Checks of coefficient sequences against conditions under which a largest-first OWA linkage cannot produce inversions.

The underlying requirement is ``OWA(u, v) >= min(OWA(u), OWA(v))`` for all vectors ``u`` and ``v``. Every condition is
evaluated on prefix sums ``P[j] = c1 + ... + cj`` in cross-multiplied form, as a requirement ``left >= right``. A
violation needs ``right - left > 1e-12``; tighter cases are counted as boundary cases.

Sequences with finite support ``s`` are decided exactly from bound ``2s`` on; otherwise verdicts hold up to the bound
only and are flagged ``bounded``.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from funcy import first

from owalinkbase.exceptions import UndefinedConstruction
from owalinkbase.owa import Orientation, OwaLinkageSpec, e_bar, owa
from owalinkbase.sequences import CoefficientSequence, format_number

from .config import DEFAULTS
from .exceptions import InvalidBound, UnsupportedOrientation

log = logging.getLogger(__name__)

TOLERANCE = 1e-12


class ConditionId(Enum):
    NEC_MONOTONE = "NecMonotone"
    NEC_RATIO = "NecRatio"
    NEC_GENERAL = "NecGeneral"
    SUF_MAIN = "SufMain"
    SUF_WEAKENED = "SufWeakened"
    RATIO_INCREASING = "RatioIncreasing"


class VerdictStatus(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Violation:
    """Failed requirement ``left >= right`` at the given indices."""

    indices: Dict[str, int]
    left: float
    right: float
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def margin(self) -> float:
        return self.right - self.left

    def to_dict(self) -> dict:
        out = {"indices": dict(self.indices), "left": self.left, "right": self.right}
        out.update(self.details)
        return out


@dataclass(frozen=True)
class ConditionVerdict:
    condition_id: ConditionId
    status: VerdictStatus
    checked_bound: int
    bounded: bool
    violation: Optional[Violation] = None
    boundary_cases: int = 0

    @property
    def holds(self) -> bool:
        return self.status is VerdictStatus.HOLDS

    def to_dict(self) -> dict:
        out = {
            "holds": self.holds,
            "status": self.status.value,
            "bounded": self.bounded,
            "checked_bound": self.checked_bound,
            "boundary_cases": self.boundary_cases,
        }
        if self.violation is not None:
            out["violation"] = self.violation.to_dict()
        return out


@dataclass(frozen=True)
class CounterexampleCertificate:
    """Vectors with ``OWA(u) = OWA(v) = 1`` whose concatenation aggregates below 1."""

    u: Tuple[float, ...]
    v: Tuple[float, ...]
    owa_u: float
    owa_v: float
    owa_uv: float
    k: int
    n: int
    l: int  # noqa: E741
    m: int

    @property
    def margin(self) -> float:
        return self.owa_uv - min(self.owa_u, self.owa_v)

    def verify(self, c: CoefficientSequence, tolerance: float = TOLERANCE) -> bool:
        spec = OwaLinkageSpec(c)
        values = (owa(spec, self.u), owa(spec, self.v), owa(spec, self.u + self.v))
        return all(abs(a - b) <= tolerance for a, b in zip(values, (self.owa_u, self.owa_v, self.owa_uv)))

    def to_dict(self) -> dict:
        return {
            "u": list(self.u),
            "v": list(self.v),
            "owa_u": self.owa_u,
            "owa_v": self.owa_v,
            "owa_uv": self.owa_uv,
            "margin": self.margin,
            "k": self.k,
            "n": self.n,
            "l": self.l,
            "m": self.m,
        }


SequenceLike = Union[CoefficientSequence, OwaLinkageSpec]


def _coefficients(c: SequenceLike) -> CoefficientSequence:
    if isinstance(c, OwaLinkageSpec):
        if c.orientation is not Orientation.LARGEST_FIRST:
            raise UnsupportedOrientation("conditions are established for largest-first (hi) sequences only")
        return c.coefficients
    return c


def default_bound(c: SequenceLike) -> int:
    """``2s + 2`` for support ``s``, a fixed bound for sequences with infinitely many nonzero terms."""
    support = _coefficients(c).support
    return DEFAULTS["repeat_bound_m"] if support is None else 2 * support + 2


def is_bounded(c: SequenceLike, bound: int) -> bool:
    support = _coefficients(c).support
    return support is None or bound < 2 * support


def _check_bound(bound: int, minimum: int) -> None:
    if bound < minimum:
        raise InvalidBound("bound must be at least {}, got {}".format(minimum, bound))


class _Scan:
    """Collects the first violation in scan order and counts boundary cases."""

    def __init__(self):
        self.violation: Optional[Violation] = None
        self.boundary = 0

    @property
    def done(self) -> bool:
        return self.violation is not None

    def feed(self, left: np.ndarray, right: np.ndarray, indices: Dict[str, np.ndarray], details=None) -> None:
        """``left``, ``right`` and each index array share one shape; the first violation is taken in C order."""
        margin = right - left
        self.boundary += int(np.count_nonzero(np.abs(margin) <= TOLERANCE))
        failing = np.flatnonzero(margin.reshape(-1) > TOLERANCE)
        if len(failing) and self.violation is None:
            at = failing[0]
            found = {name: int(np.broadcast_to(value, margin.shape).reshape(-1)[at]) for name, value in indices.items()}
            self.violation = Violation(
                found,
                float(left.reshape(-1)[at]),
                float(right.reshape(-1)[at]),
                details(found) if details else {},
            )

    def verdict(self, condition_id: ConditionId, c: CoefficientSequence, bound: int) -> ConditionVerdict:
        status = VerdictStatus.FAILS if self.violation else VerdictStatus.HOLDS
        verdict = ConditionVerdict(condition_id, status, bound, is_bounded(c, bound), self.violation, self.boundary)
        if verdict.bounded and verdict.holds:
            log.warning("%s holds for %s up to bound %d only", condition_id.value, c, bound)
        log.debug("%s for %s: %s", condition_id.value, c, status.value)
        return verdict


def check_nec_monotone(c: SequenceLike, bound: Optional[int] = None) -> ConditionVerdict:
    """``c2 >= c3 >= ...`` up to ``c_M``."""
    c = _coefficients(c)
    bound = bound or default_bound(c)
    _check_bound(bound, 3)
    head = c.head(bound)
    scan = _Scan()
    scan.feed(head[1 : bound - 1], head[2:bound], {"i": np.arange(2, bound)})
    return scan.verdict(ConditionId.NEC_MONOTONE, c, bound)


def check_nec_ratio(c: SequenceLike, bound: Optional[int] = None) -> ConditionVerdict:
    """``P[l] / P[m] <= (P[2l] - P[l]) / (P[2m] - P[m])`` for ``l <= m <= M/2``, scanned by ``m`` then ``l``."""
    c = _coefficients(c)
    bound = bound or default_bound(c)
    _check_bound(bound, 2)
    p = c.partial_sums(bound)
    scan = _Scan()
    for m in range(1, bound // 2 + 1):
        l = np.arange(1, m + 1)  # noqa: E741
        scan.feed((p[2 * l] - p[l]) * p[m], p[l] * (p[2 * m] - p[m]), {"l": l, "m": m})
        if scan.done:
            break
    return scan.verdict(ConditionId.NEC_RATIO, c, bound)


def check_nec_general(c: SequenceLike, bound: Optional[int] = None) -> ConditionVerdict:
    """
    For ``k <= n <= M`` and ``l <= m <= M`` with ``P[n] P[l] >= P[m] P[k]``:
    ``(P[k+l] - P[k]) P[m] >= (P[n+m] - P[n]) P[l]``.
    """
    c = _coefficients(c)
    bound = bound or default_bound(c)
    _check_bound(bound, 2)
    p = c.partial_sums(2 * bound)
    scan = _Scan()
    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            k = np.arange(1, n + 1)[:, None]
            l = np.arange(1, m + 1)[None, :]  # noqa: E741
            guard = p[n] * p[l] >= p[m] * p[k]
            left = np.where(guard, (p[k + l] - p[k]) * p[m], np.inf)
            right = (p[n + m] - p[n]) * p[l]
            scan.feed(left, np.broadcast_to(right, left.shape), {"n": n, "m": m, "k": k, "l": l})
            if scan.done:
                return scan.verdict(ConditionId.NEC_GENERAL, c, bound)
    return scan.verdict(ConditionId.NEC_GENERAL, c, bound)


def _hypothesis(c: CoefficientSequence, bound: int, condition_id: ConditionId) -> Optional[ConditionVerdict]:
    """Sufficient conditions assume ``c2 >= c3 >= ...`` on every index they touch."""
    head = c.head(2 * bound + 1)
    rises = np.flatnonzero(head[2:] - head[1:-1] > TOLERANCE)
    if not len(rises):
        return None
    i = int(rises[0]) + 2
    violation = Violation({"i": i}, float(head[i - 1]), float(head[i]), {"reason": "not nonincreasing from c2"})
    log.info("%s is inapplicable to %s: c%d < c%d", condition_id.value, c, i, i + 1)
    return ConditionVerdict(condition_id, VerdictStatus.INAPPLICABLE, bound, is_bounded(c, bound), violation)


def check_suf(c: SequenceLike, bound: Optional[int] = None) -> ConditionVerdict:
    """
    For ``n <= M`` and ``l < m <= M``: ``(P[n+l] - P[n]) P[m] >= (P[n+m] - P[n]) P[l]``.

    Inapplicable unless ``c`` is nonincreasing from ``c2``.
    """
    c = _coefficients(c)
    bound = bound or default_bound(c)
    _check_bound(bound, 2)
    inapplicable = _hypothesis(c, bound, ConditionId.SUF_MAIN)
    if inapplicable:
        return inapplicable
    p = c.partial_sums(2 * bound)
    scan = _Scan()
    for n in range(1, bound + 1):
        for m in range(2, bound + 1):
            l = np.arange(1, m)  # noqa: E741
            scan.feed((p[n + l] - p[n]) * p[m], (p[n + m] - p[n]) * p[l], {"n": n, "m": m, "l": l})
            if scan.done:
                return scan.verdict(ConditionId.SUF_MAIN, c, bound)
    return scan.verdict(ConditionId.SUF_MAIN, c, bound)


def check_suf_weakened(c: SequenceLike, bound: Optional[int] = None) -> ConditionVerdict:
    """
    For ``n <= M`` and ``l < m <= M`` some ``k <= n + 1`` satisfies
    ``(c_k + P[n+l] - P[n+1]) P[m] >= (P[n+m] - P[n]) P[l]``.

    ``k = n + 1`` gives back :func:`check_suf`, so this check never rejects a sequence that one accepts.
    """
    c = _coefficients(c)
    bound = bound or default_bound(c)
    _check_bound(bound, 2)
    inapplicable = _hypothesis(c, bound, ConditionId.SUF_WEAKENED)
    if inapplicable:
        return inapplicable
    p = c.partial_sums(2 * bound)
    head = c.head(bound + 1)
    scan = _Scan()
    for n in range(1, bound + 1):
        k = int(np.argmax(head[: n + 1])) + 1
        for m in range(2, bound + 1):
            l = np.arange(1, m)  # noqa: E741
            left = (head[k - 1] + p[n + l] - p[n + 1]) * p[m]
            scan.feed(left, (p[n + m] - p[n]) * p[l], {"n": n, "m": m, "l": l, "k": k})
            if scan.done:
                return scan.verdict(ConditionId.SUF_WEAKENED, c, bound)
    return scan.verdict(ConditionId.SUF_WEAKENED, c, bound)


def _ratio(a: float, b: float) -> Optional[float]:
    return a / b if b > 0 else None


def check_ratio_increasing(c: SequenceLike, bound: Optional[int] = None) -> ConditionVerdict:
    """``c_i / c_{i+1} <= c_{i+1} / c_{i+2}``, i.e. ``c_i c_{i+2} <= c_{i+1}**2``, for ``i <= M - 2``."""
    c = _coefficients(c)
    bound = bound or default_bound(c)
    _check_bound(bound, 3)
    head = c.head(bound)
    i = np.arange(1, bound - 1)
    scan = _Scan()

    def ratios(found):
        last = found["i"] + 1
        return {"ratios": [_ratio(head[j - 1], head[j]) for j in range(1, last + 1)]}

    scan.feed(head[i] ** 2, head[i - 1] * head[i + 1], {"i": i}, ratios)
    return scan.verdict(ConditionId.RATIO_INCREASING, c, bound)


CHECKS = {
    ConditionId.NEC_MONOTONE: check_nec_monotone,
    ConditionId.NEC_RATIO: check_nec_ratio,
    ConditionId.NEC_GENERAL: check_nec_general,
    ConditionId.SUF_MAIN: check_suf,
    ConditionId.SUF_WEAKENED: check_suf_weakened,
    ConditionId.RATIO_INCREASING: check_ratio_increasing,
}


def _search(c: CoefficientSequence, bound: int) -> Tuple[Optional[CounterexampleCertificate], List[Tuple[int, int]]]:
    spec = OwaLinkageSpec(c)
    vectors: Dict[Tuple[int, int], np.ndarray] = {}
    skipped = []
    for n in range(1, bound + 1):
        for k in range(1, n + 1):
            try:
                vectors[k, n] = e_bar(c, k, n)
            except UndefinedConstruction:
                skipped.append((k, n))
    if skipped:
        log.warning("calibrated vectors undefined for (k, n) in %s, skipped", skipped)
    values = {key: owa(spec, vector) for key, vector in vectors.items()}

    for n in range(1, bound + 1):
        for m in range(1, bound + 1):
            for k in range(1, n + 1):
                for l in range(1, m + 1):  # noqa: E741
                    if (k, n) not in vectors or (l, m) not in vectors:
                        continue
                    u, v = vectors[k, n], vectors[l, m]
                    owa_uv = owa(spec, np.concatenate([u, v]))
                    if owa_uv < min(values[k, n], values[l, m]) - TOLERANCE:
                        certificate = CounterexampleCertificate(
                            tuple(float(x) for x in u),
                            tuple(float(x) for x in v),
                            values[k, n],
                            values[l, m],
                            owa_uv,
                            k,
                            n,
                            l,
                            m,
                        )
                        log.info("counterexample for %s: %s", c, certificate)
                        return certificate, skipped
    return None, skipped


def search_counterexample(c: SequenceLike, bound: int = DEFAULTS["bound_n"]) -> Optional[CounterexampleCertificate]:
    """
    Look for ``u``, ``v`` among the calibrated vectors with ``k <= n <= N`` and ``l <= m <= N``.

    Configurations are tried in lexicographic ``(n, m, k, l)`` order and the first one with
    ``OWA(u, v) < 1 - 1e-12`` is returned. ``None`` means nothing was found within the bound.
    """
    _check_bound(bound, 2)
    return _search(_coefficients(c), bound)[0]


@dataclass(frozen=True)
class AuditReport:
    sequence: CoefficientSequence
    bound_m: int
    bound_n: int
    verdicts: Dict[ConditionId, ConditionVerdict]
    counterexample: Optional[CounterexampleCertificate]
    skipped: Tuple[Tuple[int, int], ...]
    cross_checks: Dict[str, Optional[bool]]

    @property
    def consistent(self) -> bool:
        return all(result is not False for result in self.cross_checks.values())

    def __getitem__(self, condition_id) -> ConditionVerdict:
        return self.verdicts[ConditionId(condition_id)]

    def to_dict(self) -> dict:
        out = {
            "sequence": ",".join(format_number(x) for x in self.sequence.prefix),
            "tail": self.sequence.tail.value,
            "M": self.bound_m,
            "N": self.bound_n,
            "verdicts": {key.value: verdict.to_dict() for key, verdict in self.verdicts.items()},
            "cross_checks": dict(self.cross_checks),
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_dict()
        if self.skipped:
            out["skipped"] = [list(pair) for pair in self.skipped]
        return out


def _cross_checks(
    verdicts: Dict[ConditionId, ConditionVerdict],
    certificate: Optional[CounterexampleCertificate],
    bound_m: int,
    bound_n: int,
) -> Dict[str, Optional[bool]]:
    suf = verdicts[ConditionId.SUF_MAIN]
    general = verdicts[ConditionId.NEC_GENERAL]
    ratio = verdicts[ConditionId.RATIO_INCREASING]
    checks: Dict[str, Optional[bool]] = {}

    # sufficient condition excludes counterexamples of the arities it covers
    covered = suf.holds and (not suf.bounded or bound_m >= bound_n)
    checks["sufficient_excludes_counterexample"] = (certificate is None) if covered else None

    checks["weakened_contains_main"] = verdicts[ConditionId.SUF_WEAKENED].holds if suf.holds else None

    if general.holds:
        checks["general_implies_corollaries"] = (
            verdicts[ConditionId.NEC_MONOTONE].holds and verdicts[ConditionId.NEC_RATIO].holds
        )
    else:
        checks["general_implies_corollaries"] = None

    if certificate is not None and max(certificate.n, certificate.m) <= bound_m:
        checks["counterexample_violates_general"] = not general.holds
    else:
        checks["counterexample_violates_general"] = None

    decided = not ratio.bounded and not suf.bounded
    if ratio.holds and suf.status is not VerdictStatus.INAPPLICABLE and decided:
        checks["ratio_implies_sufficient"] = suf.holds
    else:
        checks["ratio_implies_sufficient"] = None
    return checks


def audit(c: SequenceLike, bound_m: Optional[int] = None, bound_n: int = DEFAULTS["bound_n"]) -> AuditReport:
    """
    All six verdicts, the counterexample search and the consistency checks between them.

    A cross check is ``None`` when it does not apply, ``False`` when the results contradict each other.
    """
    c = _coefficients(c)
    bound_m = bound_m or default_bound(c)
    _check_bound(bound_m, 3)
    _check_bound(bound_n, 2)
    verdicts = {condition_id: check(c, bound_m) for condition_id, check in CHECKS.items()}
    certificate, skipped = _search(c, bound_n)
    checks = _cross_checks(verdicts, certificate, bound_m, bound_n)
    report = AuditReport(c, bound_m, bound_n, verdicts, certificate, tuple(skipped), checks)
    failed = first(name for name, result in checks.items() if result is False)
    if failed:
        log.error("audit of %s is inconsistent: %s", c, failed)
    log.info(
        "audit of %s: %s",
        c,
        ", ".join("{}={}".format(key.value, verdict.status.value) for key, verdict in verdicts.items()),
    )
    return report
