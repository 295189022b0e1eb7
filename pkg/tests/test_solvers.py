"""Root-finder behavior: brackets, determinism, multi-root scans, tangency."""

import math

import pytest

from sstiming.solvers import (
    NoBracketError,
    RootReport,
    SolverConfig,
    find_all_roots,
    find_root,
)


def test_sqrt_two():
    report = find_root(lambda x: x * x - 2, 1.0, 2.0)
    assert report.root == pytest.approx(math.sqrt(2), abs=1e-10)
    assert report.converged


def test_no_bracket_raises_with_diagnostics():
    with pytest.raises(NoBracketError) as excinfo:
        find_root(lambda x: x - 5, 0.0, 1.0)
    assert excinfo.value.lo == 0.0
    assert excinfo.value.hi == 1.0
    assert excinfo.value.f_lo == -5.0


def test_endpoint_root_returned_directly():
    report = find_root(lambda x: x, 0.0, 1.0)
    assert report.root == 0.0
    assert report.residual == 0.0


def test_determinism_bit_identical():
    f = lambda x: math.cos(x) - x * 0.3
    first = find_root(f, 0.0, 3.0)
    second = find_root(f, 0.0, 3.0)
    assert first == second  # dataclass equality covers root, residual, bracket


def test_final_bracket_contains_root_with_sign_opposition():
    f = lambda x: math.exp(x) - 4
    report = find_root(f, 0.0, 3.0)
    lo, hi = report.bracket
    assert lo <= report.root <= hi
    assert f(lo) * f(hi) <= 0
    assert 0.0 <= lo and hi <= 3.0


def test_max_iterations_returns_best_estimate_flagged():
    cfg = SolverConfig(abs_tol=1e-30, max_iter=3)
    f = lambda x: math.copysign(abs(x - 0.3) ** (1 / 3), x - 0.3)
    report = find_root(f, 0.0, 1.0, cfg)
    assert not report.converged
    assert 0.0 <= report.root <= 1.0


def test_tight_tolerance_hits_residual_floor():
    report = find_root(lambda x: x * x - 2, 1.0, 2.0, SolverConfig(abs_tol=1e-14))
    assert abs(report.residual) < 1e-12


class TestFindAllRoots:
    def test_two_roots(self):
        cfg = SolverConfig()
        f = lambda x: (x - 20.0) * (x - 70.0) / 1000.0
        roots = [rep.root for rep in find_all_roots(f, cfg)]
        assert len(roots) == 2
        assert roots[0] == pytest.approx(20.0, abs=1e-8)
        assert roots[1] == pytest.approx(70.0, abs=1e-8)

    def test_no_roots(self):
        assert find_all_roots(lambda x: x + 1.0, SolverConfig()) == []

    def test_roots_sorted_ascending(self):
        f = lambda x: math.sin(x / 10.0)  # roots at 10*pi*k
        roots = [rep.root for rep in find_all_roots(f, SolverConfig())]
        assert roots == sorted(roots)
        assert len(roots) == 6

    def test_tangential_root_detected(self):
        f = lambda x: 1e-6 * (x - 37.3) ** 2
        reports = find_all_roots(f, SolverConfig())
        assert len(reports) == 1
        assert reports[0].root == pytest.approx(37.3, abs=1e-3)
        lo, hi = reports[0].bracket
        assert lo <= reports[0].root <= hi

    def test_tangency_never_fires_above_threshold(self):
        # grid minimum of |f| stays above 1e-7, so nothing may be reported
        f = lambda x: (x - 37.3) ** 2 + 1e-6
        assert find_all_roots(f, SolverConfig()) == []

    def test_scan_respects_config_window(self):
        cfg = SolverConfig(scan_lo=0.1, scan_hi=10.0, scan_step=0.5)
        f = lambda x: x - 50.0  # root outside the window
        assert find_all_roots(f, cfg) == []


def test_config_validation():
    with pytest.raises(ValueError):
        SolverConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        SolverConfig(max_iter=0)
    with pytest.raises(ValueError):
        SolverConfig(scan_lo=5.0, scan_hi=1.0)
    with pytest.raises(ValueError):
        SolverConfig(scan_step=-1.0)


def test_report_is_frozen():
    report = RootReport(1.0, 0.0, 1, (0.0, 2.0))
    with pytest.raises(AttributeError):
        report.root = 2.0
