"""Year-by-year accumulation loop used to cross-check the closed forms.

The ledger walks actual benefit years one at a time instead of summing a
geometric series, so any indexing or timing slip in the closed forms shows
up as a mismatch far above float noise.
"""

from __future__ import annotations

from .params import K_MAX, K_MIN, Q_EPS


def simulate_ledger(
    K: float,
    n: float,
    p: float,
    q: float,
    r: float,
    S0: float = 1.0,
    invest_before_70: bool = True,
    cola_on: bool = True,
) -> float:
    """Accumulated value of the early scenario at age 70+n, year by year.

    Benefits start at the reduced (and, with COLAs, discounted) level and
    are paid once per year. For the K years before 70 they are deposited
    end-of-year when `invest_before_70`; the invested balance is credited
    with market growth and, when COLAs are on, with the same yearly
    indexation the benefit stream receives, so deposits enter at the
    starting-year level. After 70 the balance compounds at r only, while
    new benefits are kept as cash (COLA-grown when `cola_on`).

    K and n must be whole years; the loop is discrete by construction.
    """
    if K != int(K) or not K_MIN <= K <= K_MAX:
        raise ValueError(f"K must be an integer in [{K_MIN}, {K_MAX}], got {K}")
    if n != int(n) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n}")
    if S0 <= 0:
        raise ValueError(f"S0 must be > 0, got {S0}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    K = int(K)
    n = int(n)

    cola = (1 + q) if (cola_on and q >= Q_EPS) else 1.0
    benefit = S0 / ((1 + p) ** K * cola**K)

    invested = 0.0
    cash = 0.0
    for _ in range(K):
        if invest_before_70:
            invested = invested * cola * (1 + r) + benefit
        else:
            cash += benefit
            benefit *= cola
    if invest_before_70:
        # the benefit level reaching age 70 is the starting level plus K COLAs
        benefit = benefit * cola**K

    for _ in range(n):
        invested *= 1 + r
        cash += benefit
        benefit *= cola

    return invested + cash
