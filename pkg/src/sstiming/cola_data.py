"""Historical rate series ingestion and geometric-average computation.

The shipped file carries the SSA cost-of-living adjustment series for
1975-2022. Entries are labeled by the year each adjustment was announced
(the 1975-1982 adjustments took effect mid-year; later ones take effect
with the December payment). The same averaging applies to any user-supplied
yearly return series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

DEFAULT_DATA_RESOURCE = "cola_ssa_1975_2022.csv"


class ParseError(ValueError):
    """A malformed series file, with the offending line number."""

    def __init__(self, message: str, line_no: int):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class RangeError(ValueError):
    """An averaging window outside the years covered by a series."""


@dataclass(frozen=True)
class RateSeries:
    """Yearly rates for a contiguous, strictly increasing run of years."""

    entries: tuple[tuple[int, float], ...]
    source_label: str = ""

    def __post_init__(self):
        if not self.entries:
            raise ValueError("series must contain at least one entry")
        years = [year for year, _ in self.entries]
        for a, b in zip(years, years[1:]):
            if b != a + 1:
                raise ValueError(f"years must be contiguous and increasing, got {a} then {b}")
        for year, rate in self.entries:
            if rate <= -1:
                raise ValueError(f"rate for {year} must be > -1, got {rate}")

    @property
    def first_year(self) -> int:
        return self.entries[0][0]

    @property
    def last_year(self) -> int:
        return self.entries[-1][0]

    def rates(self, from_year: int, to_year: int) -> list[float]:
        """Rates for the inclusive year window [from_year, to_year]."""
        if from_year > to_year:
            raise RangeError(f"empty window [{from_year}, {to_year}]")
        if from_year < self.first_year or to_year > self.last_year:
            raise RangeError(
                f"window [{from_year}, {to_year}] outside series "
                f"[{self.first_year}, {self.last_year}]"
            )
        offset = from_year - self.first_year
        return [rate for _, rate in self.entries[offset : offset + (to_year - from_year + 1)]]


def parse_series(text: str, source_label: str = "") -> RateSeries:
    """Parse `year,rate` lines (rate as a decimal fraction; `#` lines ignored)."""
    entries: list[tuple[int, float]] = []
    seen: set[int] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise ParseError(f"expected 'year,rate', got {line!r}", line_no)
        try:
            year = int(parts[0].strip())
        except ValueError:
            raise ParseError(f"bad year {parts[0].strip()!r}", line_no) from None
        try:
            rate = float(parts[1].strip())
        except ValueError:
            raise ParseError(f"bad rate {parts[1].strip()!r}", line_no) from None
        if year in seen:
            raise ParseError(f"duplicate year {year}", line_no)
        if entries and year != entries[-1][0] + 1:
            raise ParseError(f"gap in years: {entries[-1][0]} followed by {year}", line_no)
        seen.add(year)
        entries.append((year, rate))
    if not entries:
        raise ParseError("no data lines found", 1)
    return RateSeries(entries=tuple(entries), source_label=source_label)


def load_series(path: str) -> RateSeries:
    with open(path, encoding="utf-8") as handle:
        return parse_series(handle.read(), source_label=str(path))


def default_series() -> RateSeries:
    """The SSA COLA series shipped with the package."""
    text = resources.files("sstiming.data").joinpath(DEFAULT_DATA_RESOURCE).read_text("utf-8")
    return parse_series(text, source_label=f"builtin:{DEFAULT_DATA_RESOURCE}")


def geometric_average(series: RateSeries, from_year: int, to_year: int) -> float:
    """Rate whose uniform compounding matches the window's actual compounding.

    Equivalently exp(mean(ln(1+rate))) - 1 over the inclusive window, so the
    result is unchanged by reordering the window's rates.
    """
    rates = series.rates(from_year, to_year)
    return math.expm1(math.fsum(math.log1p(rate) for rate in rates) / len(rates))
