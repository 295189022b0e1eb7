"""Shared value types for the claiming-age analysis engine."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# Rates with magnitude below these thresholds are treated as exactly zero.
# The COLA-adjusted formulas are singular at q = 0 (and the market sums at
# r = 0), so tiny rates are routed to the corresponding zero-rate formulas.
Q_EPS = 1e-9
R_EPS = 1e-9

# Claiming window: benefits may start 1 to 8 years before age 70 (ages 62-70).
K_MIN = 1
K_MAX = 8


class Variant(str, Enum):
    """Which gain function a result was computed from."""

    NO_COLA = "no_cola"
    WITH_COLA = "with_cola"


@dataclass(frozen=True)
class RateParams:
    """The model's rate triple, all per-year fractions.

    p: yearly benefit increase for delayed claims, applied symmetrically
       as the early-claim reduction.
    q: average yearly cost-of-living adjustment.
    r: average yearly market return on invested benefits.
    """

    p: float
    q: float = 0.0
    r: float = 0.0

    def __post_init__(self):
        if not self.p > 0:
            raise ValueError(f"p must be > 0, got {self.p}")
        if self.q < 0:
            raise ValueError(f"q must be >= 0, got {self.q}")
        if self.r < 0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        for name in ("p", "q", "r"):
            value = getattr(self, name)
            if value >= 1:
                raise ValueError(f"{name} is a yearly fraction, got {value}")


@dataclass(frozen=True)
class ClaimScenario:
    """A claiming choice: K years before 70, with age-70 benefit S0."""

    K: float
    S0: float = 1.0

    def __post_init__(self):
        if not 0 < self.K <= K_MAX:
            raise ValueError(f"K must be in (0, {K_MAX}], got {self.K}")
        if not self.S0 > 0:
            raise ValueError(f"S0 must be > 0, got {self.S0}")

    @property
    def claim_age(self) -> float:
        return 70 - self.K


@dataclass(frozen=True)
class GainCurve:
    """A gain function sampled over n (years after age 70)."""

    variant: Variant
    params: RateParams
    K: float
    samples: tuple[tuple[float, float], ...]

    def __post_init__(self):
        ns = [n for n, _ in self.samples]
        if any(n <= 0 for n in ns):
            raise ValueError("curve samples require n > 0")
        if any(b <= a for a, b in zip(ns, ns[1:])):
            raise ValueError("curve samples must be strictly increasing in n")


@dataclass(frozen=True)
class CriticalPoint:
    """The (n*, r*) pair at which the minimum of the gain function is zero.

    `params.r` holds the solved r*; `residual` is the gain evaluated at
    (n*, r*), reported rather than hidden.
    """

    variant: Variant
    K: float
    params: RateParams
    n_star: float
    r_star: float
    residual: float


@dataclass(frozen=True)
class OptResult:
    """Outcome of a claiming-offset optimization.

    K_opt is continuous; K_floor/K_ceil are the admissible integer claiming
    offsets next to it, clamped to [1, 8]. `clamped` marks an optimum that
    fell outside (0, 8] and was pinned to the window boundary.
    """

    K_opt: float
    K_floor: int
    K_ceil: int
    n_eval: float
    gain_at_opt: float
    clamped: bool
