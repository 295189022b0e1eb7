"""Break-even, market-gain, and optimal claiming-age analysis for Social Security benefits."""

from .cola_data import (
    ParseError,
    RangeError,
    RateSeries,
    default_series,
    geometric_average,
    load_series,
    parse_series,
)
from .critical import (
    gain_crossings_between,
    gain_zero_crossings,
    k_opt_at_n,
    k_opt_maximin,
    r_star_cola,
    r_star_no_cola,
)
from .formulas import (
    breakeven_cola,
    breakeven_no_cola,
    cola_adjusted_start,
    cumulative_early,
    cumulative_early_cola,
    cumulative_early_market,
    cumulative_early_market_cola,
    cumulative_late,
    cumulative_late_cola,
    gain,
    gain_cola,
    gain_cola_dK,
    gain_cola_dn,
    market_sum_at_70,
    market_sum_at_70_cola,
    n_star_cola,
    n_star_no_cola,
    reduced_benefit,
    sample_gain_curve,
)
from .ledger import simulate_ledger
from .params import (
    ClaimScenario,
    CriticalPoint,
    GainCurve,
    OptResult,
    Q_EPS,
    R_EPS,
    RateParams,
    Variant,
)
from .solvers import NoBracketError, RootReport, SolverConfig, find_all_roots, find_root

__version__ = "0.1.0"

__all__ = [
    "ClaimScenario",
    "CriticalPoint",
    "GainCurve",
    "NoBracketError",
    "OptResult",
    "ParseError",
    "Q_EPS",
    "R_EPS",
    "RangeError",
    "RateParams",
    "RateSeries",
    "RootReport",
    "SolverConfig",
    "Variant",
    "breakeven_cola",
    "breakeven_no_cola",
    "cola_adjusted_start",
    "cumulative_early",
    "cumulative_early_cola",
    "cumulative_early_market",
    "cumulative_early_market_cola",
    "cumulative_late",
    "cumulative_late_cola",
    "default_series",
    "find_all_roots",
    "find_root",
    "gain",
    "gain_cola",
    "gain_cola_dK",
    "gain_cola_dn",
    "gain_crossings_between",
    "gain_zero_crossings",
    "geometric_average",
    "k_opt_at_n",
    "k_opt_maximin",
    "load_series",
    "market_sum_at_70",
    "market_sum_at_70_cola",
    "n_star_cola",
    "n_star_no_cola",
    "parse_series",
    "r_star_cola",
    "r_star_no_cola",
    "reduced_benefit",
    "sample_gain_curve",
    "simulate_ledger",
]
