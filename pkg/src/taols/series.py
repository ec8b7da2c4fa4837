"""Annual time-series containers and the integration/differencing primitives.

A :class:`TimeSeries` is an immutable, equally spaced annual sequence; the
calendar start year is metadata only, all model arithmetic runs on the index
t = 1..T.  A :class:`ClimateDataset` pairs a radiative-forcing series (W/m^2)
with a temperature-anomaly series (degrees C) over a common year range.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlignmentError, InvalidSeriesError

MIN_LENGTH = 2


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Equally spaced annual observations starting at ``start_year``.

    Values are stored as a read-only float64 array; observation ``k``
    (0-based) corresponds to calendar year ``start_year + k``.
    """

    start_year: int
    values: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=float)
        if arr.ndim != 1:
            raise InvalidSeriesError(f"series values must be 1-d, got shape {arr.shape}")
        if arr.size < MIN_LENGTH:
            raise InvalidSeriesError(
                f"series needs at least {MIN_LENGTH} observations, got {arr.size}"
            )
        if not np.all(np.isfinite(arr)):
            bad = int(np.flatnonzero(~np.isfinite(arr))[0])
            raise InvalidSeriesError(
                f"non-finite value at year {int(self.start_year) + bad}"
            )
        arr.flags.writeable = False
        object.__setattr__(self, "start_year", int(self.start_year))
        object.__setattr__(self, "values", arr)

    def __len__(self) -> int:
        return self.values.size

    @property
    def end_year(self) -> int:
        return self.start_year + len(self) - 1

    @property
    def years(self) -> np.ndarray:
        return np.arange(self.start_year, self.start_year + len(self))


@dataclass(frozen=True, eq=False)
class ClimateDataset:
    """Aligned forcing (W/m^2) and temperature-anomaly (degC) series."""

    forcing: TimeSeries
    temperature: TimeSeries
    label: str = ""

    def __post_init__(self) -> None:
        f, s = self.forcing, self.temperature
        if f.start_year != s.start_year or len(f) != len(s):
            raise AlignmentError(
                "forcing and temperature must cover the same years: "
                f"forcing {f.start_year}..{f.end_year}, "
                f"temperature {s.start_year}..{s.end_year}"
            )

    def __len__(self) -> int:
        return len(self.forcing)

    @property
    def start_year(self) -> int:
        return self.forcing.start_year

    @property
    def end_year(self) -> int:
        return self.forcing.end_year


def cumulative_sum(x: TimeSeries) -> TimeSeries:
    """Running sum: output[t] = sum of x[1..t], so output[1] = x[1]."""
    return TimeSeries(x.start_year, np.cumsum(x.values))


def first_difference(x: TimeSeries) -> TimeSeries:
    """Year-on-year change, with the undefined first difference set to zero.

    The t = 1 convention lives here and only here: output[1] = 0 keeps the
    differenced series aligned with the partial sums, and a single zero row
    has vanishing influence as T grows.  Dropping the first observation
    instead would shift every index; any such alternative belongs in this
    function, not at call sites.
    """
    out = np.empty(len(x))
    out[0] = 0.0
    out[1:] = np.diff(x.values)
    return TimeSeries(x.start_year, out)
