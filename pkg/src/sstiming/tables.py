"""Computation payloads shared by the CLI and the HTTP service.

Every command/endpoint builds one of these plain-dict payloads, so the two
front ends stay field-for-field identical. Text rendering rounds the way
the reference tables are printed (years to 2 decimals, rates to 5); CSV
and JSON keep full precision.
"""

from __future__ import annotations

import json

from . import cola_data
from .critical import k_opt_at_n, k_opt_maximin, r_star_cola
from .formulas import breakeven_cola, sample_gain_curve
from .params import OptResult

DEFAULT_P = 0.08
DEFAULT_TABLE_QS = [0.025, 0.037]
K_ROWS = list(range(1, 9))


def _columns_qs(qs: list[float] | None) -> list[float]:
    """Column rates: q=0 first, then the requested positive rates, deduplicated."""
    requested = DEFAULT_TABLE_QS if qs is None else qs
    columns = [0.0]
    for q in requested:
        if q > 0 and q not in columns:
            columns.append(q)
    return columns


def breakeven_table(p: float = DEFAULT_P, qs: list[float] | None = None) -> dict:
    columns = _columns_qs(qs)
    rows = [{"K": K, "n1": [breakeven_cola(K, p, q) for q in columns]} for K in K_ROWS]
    return {"kind": "breakeven", "p": p, "qs": columns, "rows": rows}


def breakeven_point(K: float, p: float = DEFAULT_P, q: float = 0.025) -> dict:
    return {"kind": "breakeven_point", "K": K, "p": p, "q": q, "n1": breakeven_cola(K, p, q)}


def critical_table(p: float = DEFAULT_P, qs: list[float] | None = None) -> dict:
    columns = _columns_qs(qs)
    rows = []
    for K in K_ROWS:
        points = []
        for q in columns:
            point = r_star_cola(K, p, q)
            points.append(
                {"q": q, "n_star": point.n_star, "r_star": point.r_star, "residual": point.residual}
            )
        rows.append({"K": K, "points": points})
    return {"kind": "critical", "p": p, "qs": columns, "rows": rows}


def critical_point(K: float, p: float = DEFAULT_P, q: float = 0.025) -> dict:
    point = r_star_cola(K, p, q)
    return {
        "kind": "critical_point",
        "K": K,
        "p": p,
        "q": q,
        "n_star": point.n_star,
        "r_star": point.r_star,
        "residual": point.residual,
    }


def gain_curve_payload(
    K: float,
    p: float = DEFAULT_P,
    q: float = 0.025,
    r: float = 0.05,
    n_lo: float = 1.0,
    n_hi: float = 60.0,
    step: float = 1.0,
) -> dict:
    curve = sample_gain_curve(K, p, q, r, n_lo, n_hi, step)
    return {
        "kind": "gain_curve",
        "variant": curve.variant.value,
        "K": K,
        "p": p,
        "q": q,
        "r": r,
        "n_lo": n_lo,
        "n_hi": n_hi,
        "step": step,
        "samples": [{"n": n, "gain": g} for n, g in curve.samples],
    }


def _opt_row(result: OptResult) -> dict:
    return {
        "K_opt": result.K_opt,
        "K_floor": result.K_floor,
        "K_ceil": result.K_ceil,
        "n_eval": result.n_eval,
        "gain_at_opt": result.gain_at_opt,
        "clamped": result.clamped,
    }


def optimize_payload(
    mode: str,
    p: float = DEFAULT_P,
    q: float = 0.025,
    r: float = 0.05,
    n: float | None = None,
) -> dict:
    if mode == "maximin":
        result = k_opt_maximin(p, q, r)
    elif mode == "at-age":
        if n is None:
            raise ValueError("mode 'at-age' requires n")
        result = k_opt_at_n(n, p, q, r)
    else:
        raise ValueError(f"mode must be 'maximin' or 'at-age', got {mode!r}")
    payload = {"kind": "optimize", "mode": mode, "p": p, "q": q, "r": r, "n": n}
    payload.update(_opt_row(result))
    return payload


def optimize_sweep_payload(
    mode: str,
    p: float = DEFAULT_P,
    q: float = 0.025,
    rs: list[float] | None = None,
    ns: list[float] | None = None,
    r: float | None = None,
    n: float | None = None,
) -> dict:
    rows = []
    if rs is not None:
        for r_value in rs:
            if mode == "maximin":
                result = k_opt_maximin(p, q, r_value)
            else:
                if n is None:
                    raise ValueError("an r-sweep in 'at-age' mode requires a fixed n")
                result = k_opt_at_n(n, p, q, r_value)
            rows.append({"r": r_value, **_opt_row(result)})
        swept = "r"
    elif ns is not None:
        if mode != "at-age":
            raise ValueError("an n-sweep requires mode 'at-age'")
        if r is None:
            raise ValueError("an n-sweep requires a fixed r")
        for n_value in ns:
            rows.append({"n": n_value, "r": r, **_opt_row(k_opt_at_n(n_value, p, q, r))})
        swept = "n"
    else:
        raise ValueError("sweep requires a list of r or n values")
    return {"kind": "optimize_sweep", "mode": mode, "p": p, "q": q, "swept": swept, "rows": rows}


def cola_average_payload(
    from_year: int, to_year: int, data_file: str | None = None
) -> dict:
    series = cola_data.load_series(data_file) if data_file else cola_data.default_series()
    average = cola_data.geometric_average(series, from_year, to_year)
    return {
        "kind": "cola_average",
        "from_year": from_year,
        "to_year": to_year,
        "years": to_year - from_year + 1,
        "average": average,
        "source": series.source_label,
    }


# ---------------------------------------------------------------------------
# rendering


def _q_label(q: float) -> str:
    return "q=0" if q == 0 else f"q={q:g}"


def _aligned(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def render_text(payload: dict) -> str:
    kind = payload["kind"]
    if kind == "breakeven":
        headers = ["K"] + [f"n1({_q_label(q)})" for q in payload["qs"]]
        rows = [
            [str(row["K"])] + [f"{v:.2f}" for v in row["n1"]] for row in payload["rows"]
        ]
        title = f"break-even years after 70 (p={payload['p']:g})\n\n"
        return title + _aligned(headers, rows)
    if kind == "breakeven_point":
        return (
            f"K={payload['K']:g} p={payload['p']:g} q={payload['q']:g}: "
            f"n1={payload['n1']:.2f}\n"
        )
    if kind == "critical":
        headers = ["K"]
        for q in payload["qs"]:
            headers += [f"n*({_q_label(q)})", f"r*({_q_label(q)})"]
        rows = []
        for row in payload["rows"]:
            cells = [str(row["K"])]
            for point in row["points"]:
                cells += [f"{point['n_star']:.2f}", f"{point['r_star']:.5f}"]
            rows.append(cells)
        title = f"critical market rate and minimum-gain age (p={payload['p']:g})\n\n"
        return title + _aligned(headers, rows)
    if kind == "critical_point":
        return (
            f"K={payload['K']:g} p={payload['p']:g} q={payload['q']:g}: "
            f"n*={payload['n_star']:.2f} r*={payload['r_star']:.5f}\n"
        )
    if kind == "gain_curve":
        headers = ["n", "gain"]
        rows = [[f"{s['n']:.2f}", f"{s['gain']:.6f}"] for s in payload["samples"]]
        title = (
            f"gain vs years after 70 (variant={payload['variant']}, K={payload['K']:g}, "
            f"p={payload['p']:g}, q={payload['q']:g}, r={payload['r']:g})\n\n"
        )
        return title + _aligned(headers, rows)
    if kind == "optimize":
        lines = [
            f"mode: {payload['mode']}",
            f"K_opt: {payload['K_opt']:.2f} (claim age {70 - payload['K_opt']:.2f})",
            f"integer neighbors: K={payload['K_floor']} / K={payload['K_ceil']}",
            f"n_eval: {payload['n_eval']:.2f} (age {70 + payload['n_eval']:.2f})",
            f"gain_at_opt: {payload['gain_at_opt']:.4f}",
            f"clamped: {'yes' if payload['clamped'] else 'no'}",
        ]
        return "\n".join(lines) + "\n"
    if kind == "optimize_sweep":
        swept = payload["swept"]
        headers = [swept, "K_opt", "n_eval", "gain_at_opt", "clamped"]
        rows = []
        for row in payload["rows"]:
            label = f"{row[swept]:.4f}" if swept == "r" else f"{row[swept]:.2f}"
            rows.append(
                [
                    label,
                    f"{row['K_opt']:.2f}",
                    f"{row['n_eval']:.2f}",
                    f"{row['gain_at_opt']:.4f}",
                    "yes" if row["clamped"] else "no",
                ]
            )
        title = f"optimized claiming offset ({payload['mode']}, p={payload['p']:g}, q={payload['q']:g})\n\n"
        return title + _aligned(headers, rows)
    if kind == "cola_average":
        return f"{payload['average']:.5f}\n"
    raise ValueError(f"unknown payload kind {kind!r}")


def render_csv(payload: dict) -> str:
    kind = payload["kind"]
    lines: list[str] = []
    if kind == "breakeven":
        lines.append(",".join(["K"] + [f"n1_{_q_label(q)}" for q in payload["qs"]]))
        for row in payload["rows"]:
            lines.append(",".join([str(row["K"])] + [str(v) for v in row["n1"]]))
    elif kind == "breakeven_point":
        lines.append("K,p,q,n1")
        lines.append(
            f"{payload['K']},{payload['p']},{payload['q']},{payload['n1']}"
        )
    elif kind == "critical":
        header = ["K"]
        for q in payload["qs"]:
            header += [f"n_star_{_q_label(q)}", f"r_star_{_q_label(q)}"]
        lines.append(",".join(header))
        for row in payload["rows"]:
            cells = [str(row["K"])]
            for point in row["points"]:
                cells += [str(point["n_star"]), str(point["r_star"])]
            lines.append(",".join(cells))
    elif kind == "critical_point":
        lines.append("K,p,q,n_star,r_star,residual")
        lines.append(
            f"{payload['K']},{payload['p']},{payload['q']},"
            f"{payload['n_star']},{payload['r_star']},{payload['residual']}"
        )
    elif kind == "gain_curve":
        lines.append("n,gain")
        for sample in payload["samples"]:
            lines.append(f"{sample['n']},{sample['gain']}")
    elif kind == "optimize":
        lines.append("mode,p,q,r,n,K_opt,K_floor,K_ceil,n_eval,gain_at_opt,clamped")
        n_text = "" if payload["n"] is None else str(payload["n"])
        lines.append(
            f"{payload['mode']},{payload['p']},{payload['q']},{payload['r']},{n_text},"
            f"{payload['K_opt']},{payload['K_floor']},{payload['K_ceil']},"
            f"{payload['n_eval']},{payload['gain_at_opt']},{payload['clamped']}"
        )
    elif kind == "optimize_sweep":
        swept = payload["swept"]
        lines.append(f"{swept},K_opt,K_floor,K_ceil,n_eval,gain_at_opt,clamped")
        for row in payload["rows"]:
            lines.append(
                f"{row[swept]},{row['K_opt']},{row['K_floor']},{row['K_ceil']},"
                f"{row['n_eval']},{row['gain_at_opt']},{row['clamped']}"
            )
    elif kind == "cola_average":
        lines.append("from_year,to_year,years,average")
        lines.append(
            f"{payload['from_year']},{payload['to_year']},{payload['years']},{payload['average']}"
        )
    else:
        raise ValueError(f"unknown payload kind {kind!r}")
    return "\n".join(lines) + "\n"


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


RENDERERS = {"text": render_text, "csv": render_csv, "json": render_json}
