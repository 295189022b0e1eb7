"""Critical market rates, gain-curve zero crossings, and claiming-offset optimization.

r* is the market return at which the minimum of the gain function is
exactly zero: above it the early claimer stays ahead at every age. Because
the minimum location n* is known in closed form, solving for r* reduces to
a one-dimensional bracketed root find in r.
"""

from __future__ import annotations

import math

from .formulas import gain, gain_cola, gain_cola_dK, n_star_cola, n_star_no_cola
from .params import CriticalPoint, K_MAX, OptResult, Q_EPS, RateParams, Variant
from .solvers import DEFAULT_CONFIG, SolverConfig, find_all_roots, find_root

# search interval for r*; well above any plausible critical rate
R_SEARCH_HI = 0.25
R_SEARCH_MARGIN = 1e-6

# lower edge of the continuous claiming-offset window (the window is open at 0)
K_SEARCH_LO = 1e-9


def r_star_no_cola(K: float, p: float, cfg: SolverConfig = DEFAULT_CONFIG) -> CriticalPoint:
    """Solve for the rate at which the minimum gain is zero, without COLAs."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if p <= 0:
        raise ValueError(f"p must be > 0, got {p}")

    def at_minimum(r: float) -> float:
        return gain(K, n_star_no_cola(r), p, r)

    report = find_root(at_minimum, R_SEARCH_MARGIN, R_SEARCH_HI, cfg)
    r_star = report.root
    return CriticalPoint(
        variant=Variant.NO_COLA,
        K=K,
        params=RateParams(p=p, q=0.0, r=r_star),
        n_star=n_star_no_cola(r_star),
        r_star=r_star,
        residual=report.residual,
    )


def r_star_cola(K: float, p: float, q: float, cfg: SolverConfig = DEFAULT_CONFIG) -> CriticalPoint:
    """Solve for the critical rate with COLAs; the solution satisfies r* > q.

    Substituting the closed-form minimum location turns the coupled pair of
    conditions into a single root find in r.
    """
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return r_star_no_cola(K, p, cfg)
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if p <= 0:
        raise ValueError(f"p must be > 0, got {p}")

    def at_minimum(r: float) -> float:
        return gain_cola(K, n_star_cola(q, r), p, q, r)

    report = find_root(at_minimum, q + R_SEARCH_MARGIN, R_SEARCH_HI, cfg)
    r_star = report.root
    return CriticalPoint(
        variant=Variant.WITH_COLA,
        K=K,
        params=RateParams(p=p, q=q, r=r_star),
        n_star=n_star_cola(q, r_star),
        r_star=r_star,
        residual=report.residual,
    )


def gain_zero_crossings(
    K: float,
    p: float,
    q: float,
    r: float,
    variant: Variant = Variant.WITH_COLA,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> list[float]:
    """All n in the scan window where the chosen gain function is zero, ascending.

    For r above the critical rate the list is empty; just below it there
    are two crossings; for 0 < r <= q (with COLAs) the gain only falls, so
    there is exactly one. A touching root at r very near r* is reported
    best-effort via the tangency fallback.
    """
    if variant is Variant.NO_COLA:
        fn = lambda n: gain(K, n, p, r)
    else:
        fn = lambda n: gain_cola(K, n, p, q, r)
    return [report.root for report in find_all_roots(fn, cfg)]


def gain_crossings_between(
    K_a: float,
    K_b: float,
    p: float,
    q: float,
    r: float,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> list[float]:
    """Ages (as years after 70) where the gain curves of two claiming offsets cross."""

    def difference(n: float) -> float:
        return gain_cola(K_a, n, p, q, r) - gain_cola(K_b, n, p, q, r)

    return [report.root for report in find_all_roots(difference, cfg)]


def _integer_neighbors(K_opt: float) -> tuple[int, int]:
    floor = min(K_MAX, max(1, math.floor(K_opt)))
    ceil = min(K_MAX, max(1, math.ceil(K_opt)))
    return floor, ceil


def k_opt_at_n(
    n: float, p: float, q: float, r: float, cfg: SolverConfig = DEFAULT_CONFIG
) -> OptResult:
    """Claiming offset in (0, 8] that maximizes the gain at a fixed n.

    Solved as a bracketed root find on the K-derivative of the gain. A
    stationary point outside the window is reported clamped at the nearest
    boundary; at the open K -> 0 end the gain tends to zero, which is used
    as the boundary value.
    """
    if n <= 0:
        raise ValueError(f"n must be > 0, got {n}")
    if not r > q > 0:
        raise ValueError(f"optimization requires r > q > 0, got r={r}, q={q}")

    def slope(K: float) -> float:
        return gain_cola_dK(K, n, p, q, r)

    f_lo = slope(K_SEARCH_LO)
    f_hi = slope(float(K_MAX))
    if (f_lo > 0) and (f_hi < 0):
        report = find_root(slope, K_SEARCH_LO, float(K_MAX), cfg)
        k_opt = report.root
        floor, ceil = _integer_neighbors(k_opt)
        return OptResult(k_opt, floor, ceil, n, gain_cola(k_opt, n, p, q, r), clamped=False)
    if f_lo > 0 and f_hi >= 0:
        # gain still rising at the earliest allowed claim: boundary optimum
        k_opt = float(K_MAX)
        return OptResult(k_opt, K_MAX, K_MAX, n, gain_cola(k_opt, n, p, q, r), clamped=True)
    if f_lo <= 0 and f_hi <= 0:
        # gain falls for every K in the window; the supremum is the late claim itself
        return OptResult(0.0, 1, 1, n, 0.0, clamped=True)
    # interior minimum: the maximum sits on one of the boundaries
    gain_hi = gain_cola(float(K_MAX), n, p, q, r)
    if gain_hi >= 0.0:
        return OptResult(float(K_MAX), K_MAX, K_MAX, n, gain_hi, clamped=True)
    return OptResult(0.0, 1, 1, n, 0.0, clamped=True)


def k_opt_maximin(p: float, q: float, r: float, cfg: SolverConfig = DEFAULT_CONFIG) -> OptResult:
    """Claiming offset that maximizes the minimum (over time) of the gain.

    The minimum location depends only on q and r, not on K, so this is the
    fixed-n optimization evaluated at that point.
    """
    if not r > q > 0:
        raise ValueError(f"optimization requires r > q > 0, got r={r}, q={q}")
    return k_opt_at_n(n_star_cola(q, r), p, q, r, cfg)
