"""Bracketed scalar root finding and scan-then-refine multi-root location.

All target functions in this package are smooth with at most two roots in
the ranges of interest, so a derivative-free safeguarded method is
unconditionally safe: a secant step is tried each iteration and a bisection
step is interleaved so the bracket provably shrinks, and every accepted
step keeps opposite signs across the bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# |f| below this counts as a root outright.
RESIDUAL_TOL = 1e-13
# grid minima of |f| below this trigger the tangential (touching) root fallback
TANGENT_TOL = 1e-7


class NoBracketError(ValueError):
    """The supplied interval does not bracket a sign change."""

    def __init__(self, lo: float, hi: float, f_lo: float, f_hi: float):
        self.lo, self.hi, self.f_lo, self.f_hi = lo, hi, f_lo, f_hi
        super().__init__(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )


@dataclass(frozen=True)
class SolverConfig:
    abs_tol: float = 1e-10
    max_iter: int = 200
    scan_lo: float = 0.1
    scan_hi: float = 200.0
    scan_step: float = 0.5

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be > 0")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if not self.scan_lo < self.scan_hi:
            raise ValueError("scan_lo must be < scan_hi")
        if not self.scan_step > 0:
            raise ValueError("scan_step must be > 0")


@dataclass(frozen=True)
class RootReport:
    root: float
    residual: float
    iterations: int
    bracket: tuple[float, float]
    converged: bool = True


DEFAULT_CONFIG = SolverConfig()


def find_root(f, lo: float, hi: float, cfg: SolverConfig = DEFAULT_CONFIG) -> RootReport:
    """Refine a sign-change bracket [lo, hi] down to a root of f.

    Returns the evaluation point with the smallest |f| seen, which for
    smooth functions is far more accurate than the final bracket width.
    Raises NoBracketError when f(lo) and f(hi) have the same sign; if the
    iteration budget runs out the best estimate is returned with
    converged=False.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    f_lo = f(lo)
    f_hi = f(hi)
    if f_lo == 0.0:
        return RootReport(lo, 0.0, 0, (lo, hi))
    if f_hi == 0.0:
        return RootReport(hi, 0.0, 0, (lo, hi))
    if (f_lo > 0) == (f_hi > 0):
        raise NoBracketError(lo, hi, f_lo, f_hi)

    best_x, best_f = (lo, f_lo) if abs(f_lo) < abs(f_hi) else (hi, f_hi)
    iterations = 0
    converged = False
    for i in range(cfg.max_iter):
        iterations = i + 1
        if hi - lo < cfg.abs_tol or abs(best_f) < RESIDUAL_TOL:
            converged = True
            break
        # alternate secant and bisection; bisection guarantees the bracket
        # halves at least every other iteration
        if i % 2 == 0:
            x = hi - f_hi * (hi - lo) / (f_hi - f_lo)
            if not lo < x < hi:
                x = 0.5 * (lo + hi)
        else:
            x = 0.5 * (lo + hi)
        fx = f(x)
        if abs(fx) < abs(best_f):
            best_x, best_f = x, fx
        if fx == 0.0:
            converged = True
            break
        if (fx > 0) == (f_lo > 0):
            lo, f_lo = x, fx
        else:
            hi, f_hi = x, fx
    else:
        converged = hi - lo < cfg.abs_tol or abs(best_f) < RESIDUAL_TOL

    return RootReport(best_x, best_f, iterations, (lo, hi), converged)


def _refine_touching_root(f, lo: float, hi: float, cfg: SolverConfig) -> tuple[float, float, int]:
    # golden-section minimization of |f| for roots that touch zero without crossing
    inv_phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = abs(f(c)), abs(f(d))
    iterations = 0
    for i in range(cfg.max_iter):
        iterations = i + 1
        if b - a < cfg.abs_tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = abs(f(c))
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = abs(f(d))
    x = c if fc < fd else d
    return x, f(x), iterations


def find_all_roots(f, cfg: SolverConfig = DEFAULT_CONFIG) -> list[RootReport]:
    """Locate every root of f on [scan_lo, scan_hi], in ascending order.

    The interval is scanned at scan_step; each sign change is refined with
    find_root. A grid point that is a local minimum of |f| below the
    tangency threshold, with no adjacent sign change, is treated as a
    touching root and refined by minimizing |f|.
    """
    xs = []
    x = cfg.scan_lo
    while x <= cfg.scan_hi * (1 + 1e-12):
        xs.append(min(x, cfg.scan_hi))
        x += cfg.scan_step
    fs = [f(x) for x in xs]

    reports: list[RootReport] = []
    crossing_cells = set()
    for i in range(len(xs) - 1):
        if fs[i] == 0.0:
            reports.append(RootReport(xs[i], 0.0, 0, (xs[i], xs[i])))
            continue
        if fs[i + 1] == 0.0:
            continue  # reported as a grid-point root by the next iteration
        if (fs[i] > 0) != (fs[i + 1] > 0):
            crossing_cells.add(i)
            reports.append(find_root(f, xs[i], xs[i + 1], cfg))
    if fs[-1] == 0.0:
        reports.append(RootReport(xs[-1], 0.0, 0, (xs[-1], xs[-1])))

    for i in range(1, len(xs) - 1):
        near_crossing = (i - 1) in crossing_cells or i in crossing_cells
        is_local_min = abs(fs[i]) <= abs(fs[i - 1]) and abs(fs[i]) <= abs(fs[i + 1])
        if near_crossing or not is_local_min or abs(fs[i]) >= TANGENT_TOL:
            continue
        root, residual, iterations = _refine_touching_root(f, xs[i - 1], xs[i + 1], cfg)
        reports.append(RootReport(root, residual, iterations, (xs[i - 1], xs[i + 1])))

    reports.sort(key=lambda rep: rep.root)
    return reports
