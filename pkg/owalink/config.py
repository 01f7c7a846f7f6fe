# -*- coding: utf-8 -*-
import math
from dataclasses import dataclass, fields
from typing import Optional

from .exceptions import InvalidBound
from .linkage import LinkageMethod

DEFAULTS = {
    "epsilon": 1e-12,
    "bound_n": 8,
    "repeat_bound_m": 64,
    "max_arity": 8,
    "max_cluster_size": 4,
    "strategy": "incremental",
    "format": "points",
}


@dataclass
class RunConfig:
    """
    Settings of one command-line invocation.

    Unset bounds mean "use the default for the sequence at hand".
    """

    command: str
    input: Optional[str] = None
    format: str = DEFAULTS["format"]
    method: Optional[str] = None
    sequence: Optional[str] = None
    strategy: str = DEFAULTS["strategy"]
    epsilon: float = DEFAULTS["epsilon"]
    bound_m: Optional[int] = None
    bound_n: int = DEFAULTS["bound_n"]
    max_arity: int = DEFAULTS["max_arity"]
    max_cluster_size: int = DEFAULTS["max_cluster_size"]
    out: Optional[str] = None
    newick: Optional[str] = None
    debug: bool = False

    def __post_init__(self):
        if not 0 <= self.epsilon < math.inf:
            raise InvalidBound("epsilon must be finite and nonnegative, got {!r}".format(self.epsilon))
        for name in ("bound_n", "max_arity", "max_cluster_size"):
            if getattr(self, name) < 1:
                raise InvalidBound("{} must be positive".format(name))
        if self.bound_m is not None and self.bound_m < 1:
            raise InvalidBound("bound_m must be positive")
        if self.method is not None:
            self.linkage_method()

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        known = {f.name for f in fields(cls)}
        return cls(**{key: value for key, value in vars(args).items() if key in known and value is not None})

    def linkage_method(self) -> LinkageMethod:
        return LinkageMethod.parse(self.method, self.strategy)
