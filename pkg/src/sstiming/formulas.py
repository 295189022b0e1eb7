"""Closed-form benefit streams, cumulative totals, and gain functions.

Two claiming scenarios are compared throughout: claiming K years before
age 70 (the early scenario) versus waiting until 70 (the late scenario).
Time after 70 is measured by n, so age = 70 + n. All cumulative totals
scale linearly with the age-70 benefit S0; the gain functions and
break-even points are independent of it.
"""

from __future__ import annotations

import math

from .params import GainCurve, Q_EPS, R_EPS, RateParams, Variant


def reduced_benefit(K: float, p: float, S0: float = 1.0) -> float:
    """Yearly benefit when claimed K years before 70: S0 / (1+p)^K."""
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    if p <= -1:
        raise ValueError(f"p must be > -1, got {p}")
    if S0 <= 0:
        raise ValueError(f"S0 must be > 0, got {S0}")
    return S0 / (1 + p) ** K


def cumulative_early(K: float, n: float, p: float, S0: float = 1.0) -> float:
    """Total benefits n years after 70 for an early claim: (K+n) * S_K."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return (K + n) * reduced_benefit(K, p, S0)


def cumulative_late(n: float, S0: float = 1.0) -> float:
    """Total benefits n years after 70 when claiming at 70: n * S0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if S0 <= 0:
        raise ValueError(f"S0 must be > 0, got {S0}")
    return n * S0


def breakeven_no_cola(K: float, p: float) -> float:
    """Years after 70 at which the late claimer catches up: K / ((1+p)^K - 1)."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if p <= 0:
        raise ValueError(f"p must be > 0, got {p}")
    return K / ((1 + p) ** K - 1)


def cola_adjusted_start(K: float, p: float, q: float, S0: float = 1.0) -> float:
    """Starting benefit for an early claim net of K future COLAs."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    return reduced_benefit(K, p, S0) / (1 + q) ** K


def cumulative_early_cola(K: float, n: float, p: float, q: float, S0: float = 1.0) -> float:
    """COLA-adjusted total for the early scenario n years after 70.

    Geometric sum of K+n benefit years that start at the discounted level
    and grow by (1+q) each year. Falls back to the flat-benefit total for
    q below the singular-limit threshold.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return cumulative_early(K, n, p, S0)
    return cola_adjusted_start(K, p, q, S0) * ((1 + q) ** (K + n) - 1) / q


def cumulative_late_cola(n: float, q: float, S0: float = 1.0) -> float:
    """COLA-adjusted total for the late scenario: S0 ((1+q)^n - 1) / q."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return cumulative_late(n, S0)
    if S0 <= 0:
        raise ValueError(f"S0 must be > 0, got {S0}")
    return S0 * ((1 + q) ** n - 1) / q


def breakeven_cola(K: float, p: float, q: float) -> float:
    """Break-even point with COLA-adjusted benefits on both sides.

    Defined for q > 0; the q -> 0 limit is the no-COLA break-even, which is
    returned directly for q below the singular-limit threshold.
    """
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return breakeven_no_cola(K, p)
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if p <= 0:
        raise ValueError(f"p must be > 0, got {p}")
    pk = (1 + p) ** K
    qk = (1 + q) ** K
    a1 = math.log((pk * qk - 1) / (qk * (pk - 1)))
    a2 = math.log1p(q)
    return a1 / a2


def market_sum_at_70(K: float, p: float, r: float, S0: float = 1.0) -> float:
    """Market balance at age 70 after investing each year's benefit: S_K ((1+r)^K - 1) / r."""
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    s_k = reduced_benefit(K, p, S0)
    if r < R_EPS:
        return K * s_k
    return s_k * ((1 + r) ** K - 1) / r


def cumulative_early_market(K: float, n: float, p: float, r: float, S0: float = 1.0) -> float:
    """Early-claim total n years after 70 with the age-70 balance left to grow at r."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r < R_EPS:
        return cumulative_early(K, n, p, S0)
    return market_sum_at_70(K, p, r, S0) * (1 + r) ** n + n * reduced_benefit(K, p, S0)


def gain(K: float, n: float, p: float, r: float) -> float:
    """Relative surplus of the invested early claim over the late scenario.

    Positive means the early claimer is ahead at age 70+n. Independent of S0.
    """
    if K <= 0:
        raise ValueError(f"K must be > 0, got {K}")
    if n <= 0:
        raise ValueError(f"n must be > 0, got {n}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if r < R_EPS:
        coef = K
        growth = 1.0
    else:
        coef = ((1 + r) ** K - 1) / r
        growth = (1 + r) ** n
    return (coef * growth / n + 1) / (1 + p) ** K - 1


def n_star_no_cola(r: float) -> float:
    """Location of the gain-function minimum: 1 / ln(1+r). Independent of K and p."""
    if r <= 0:
        raise ValueError(f"r must be > 0, got {r}")
    return 1 / math.log1p(r)


def market_sum_at_70_cola(K: float, p: float, q: float, r: float, S0: float = 1.0) -> float:
    """Market balance at 70 when invested benefits are credited with both COLA and market growth."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return market_sum_at_70(K, p, r, S0)
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    denom = (1 + q) * (1 + r) - 1
    if denom == 0:
        raise ValueError("degenerate growth: (1+q)(1+r) must differ from 1")
    start = cola_adjusted_start(K, p, q, S0)
    return start * ((1 + q) ** K * (1 + r) ** K - 1) / denom


def cumulative_early_market_cola(
    K: float, n: float, p: float, q: float, r: float, S0: float = 1.0
) -> float:
    """Early-claim total n years after 70 with COLAs and market growth combined.

    The age-70 market balance keeps compounding at r; benefits received
    after 70 are kept as cash and grow with the COLA only.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return cumulative_early_market(K, n, p, r, S0)
    invested = market_sum_at_70_cola(K, p, q, r, S0) * (1 + r) ** n
    cash = reduced_benefit(K, p, S0) * ((1 + q) ** n - 1) / q
    return invested + cash


def gain_cola(K: float, n: float, p: float, q: float, r: float) -> float:
    """COLA-adjusted relative gain of the invested early claim over claiming at 70."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return gain(K, n, p, r)
    if K <= 0:
        raise ValueError(f"K must be > 0, got {K}")
    if n <= 0:
        raise ValueError(f"n must be > 0, got {n}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    qk = (1 + q) ** K
    coef = (qk * (1 + r) ** K - 1) / (qk * ((1 + q) * (1 + r) - 1))
    ratio = q * (1 + r) ** n / ((1 + q) ** n - 1)
    return (coef * ratio + 1) / (1 + p) ** K - 1


def _gain_coef(K: float, p: float, q: float, r: float) -> float:
    # the positive prefactor multiplying the time-dependent part of the gain
    qk = (1 + q) ** K
    return q * (qk * (1 + r) ** K - 1) / ((1 + p) ** K * qk * ((1 + q) * (1 + r) - 1))


def _time_shape_coef(n: float, q: float, r: float) -> float:
    # the positive prefactor multiplying the K-dependent part of the gain
    return q * (1 + r) ** n / (((1 + q) * (1 + r) - 1) * ((1 + q) ** n - 1))


def gain_cola_dn(K: float, n: float, p: float, q: float, r: float) -> float:
    """Time derivative of the COLA-adjusted gain with respect to n."""
    if K <= 0:
        raise ValueError(f"K must be > 0, got {K}")
    if n <= 0:
        raise ValueError(f"n must be > 0, got {n}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if q < Q_EPS:
        coef = K if r < R_EPS else ((1 + r) ** K - 1) / r
        lr = math.log1p(r)
        return coef * (1 + r) ** n * (n * lr - 1) / (n * n * (1 + p) ** K)
    a = _gain_coef(K, p, q, r)
    qn = (1 + q) ** n
    num = qn * math.log((1 + r) / (1 + q)) - math.log1p(r)
    return a * (1 + r) ** n * num / (qn - 1) ** 2


def gain_cola_dK(K: float, n: float, p: float, q: float, r: float) -> float:
    """Derivative of the COLA-adjusted gain with respect to the claiming offset K."""
    if K <= 0:
        raise ValueError(f"K must be > 0, got {K}")
    if n <= 0:
        raise ValueError(f"n must be > 0, got {n}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    lp = math.log1p(p)
    if q < Q_EPS:
        if r < 0:
            raise ValueError(f"r must be >= 0, got {r}")
        base = (1 + p) ** K
        if r < R_EPS:
            coef, dcoef, growth = K, 1.0, 1.0
        else:
            coef = ((1 + r) ** K - 1) / r
            dcoef = (1 + r) ** K * math.log1p(r) / r
            growth = (1 + r) ** n
        value = (coef * growth / n + 1) / base
        return growth * dcoef / (n * base) - lp * value
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    b = _time_shape_coef(n, q, r)
    rising = ((1 + r) / (1 + p)) ** K * math.log((1 + r) / (1 + p))
    fading = ((1 + p) * (1 + q)) ** (-K) * math.log((1 + p) * (1 + q))
    return b * (rising + fading) - lp / (1 + p) ** K


def n_star_cola(q: float, r: float) -> float:
    """Location of the COLA-adjusted gain minimum; requires r > q, diverges as r -> q."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if q < Q_EPS:
        return n_star_no_cola(r)
    if r <= q:
        raise ValueError(f"minimum exists only for r > q, got r={r}, q={q}")
    return math.log(math.log1p(r) / math.log((1 + r) / (1 + q))) / math.log1p(q)


def sample_gain_curve(
    K: float, p: float, q: float, r: float, n_lo: float, n_hi: float, step: float
) -> GainCurve:
    """Sample the appropriate gain function on a regular n-grid."""
    if step <= 0:
        raise ValueError(f"step must be > 0, got {step}")
    if not 0 < n_lo < n_hi:
        raise ValueError(f"need 0 < n_lo < n_hi, got [{n_lo}, {n_hi}]")
    with_cola = q >= Q_EPS
    fn = (lambda n: gain_cola(K, n, p, q, r)) if with_cola else (lambda n: gain(K, n, p, r))
    samples = []
    i = 0
    while True:
        n = n_lo + i * step
        if n > n_hi * (1 + 1e-12):
            break
        samples.append((n, fn(n)))
        i += 1
    return GainCurve(
        variant=Variant.WITH_COLA if with_cola else Variant.NO_COLA,
        params=RateParams(p=p, q=q, r=r),
        K=K,
        samples=tuple(samples),
    )
