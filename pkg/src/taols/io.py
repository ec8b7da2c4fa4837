"""CSV ingestion and emission for annual climate datasets.

Two on-disk layouts are supported, both UTF-8 with a header row and rows
sorted ascending by year with no gaps:

combined file
    ``year,forcing_wm2,temp_anomaly_c`` -- one row per year.

two-file mode
    a ``year,value`` file for forcing and another for temperature; the pair
    is trimmed to the intersection of their year ranges.

Missing years are rejected, never interpolated: the estimator integrates
every observation, so silently imputed rows would corrupt the partial sums.
"""

from __future__ import annotations

import csv
import logging
from pathlib import Path

import numpy as np

from .errors import EmptyOverlapError, SchemaError, YearGapError
from .series import MIN_LENGTH, ClimateDataset, TimeSeries

log = logging.getLogger(__name__)

DATASET_HEADER = ("year", "forcing_wm2", "temp_anomaly_c")
SINGLE_HEADER = ("year", "value")
CO2_HEADER = ("year", "co2_ppm")
FORCING_HEADER = ("year", "forcing_wm2")


def _read_rows(path: str | Path, header: tuple[str, ...]) -> list[list[float]]:
    """Parse a CSV file against ``header``, returning numeric rows.

    Raises
    ------
    FileNotFoundError
        If ``path`` does not exist.
    SchemaError
        On a wrong header, a short/long row, or a non-numeric cell; the
        message names the offending line.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    rows: list[list[float]] = []
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            got = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, expected header {','.join(header)}")
        if tuple(cell.strip() for cell in got) != header:
            raise SchemaError(
                f"{path}: bad header {','.join(got)!r}, expected {','.join(header)!r}"
            )
        for lineno, cells in enumerate(reader, start=2):
            if not cells or all(not c.strip() for c in cells):
                continue
            if len(cells) != len(header):
                raise SchemaError(
                    f"{path}:{lineno}: expected {len(header)} cells, got {len(cells)}"
                )
            row: list[float] = []
            for name, cell in zip(header, cells):
                text = cell.strip()
                try:
                    value = int(text) if name == "year" else float(text)
                except ValueError:
                    raise SchemaError(
                        f"{path}:{lineno}: non-numeric {name} cell {cell!r}"
                    ) from None
                if name != "year" and not np.isfinite(value):
                    raise SchemaError(f"{path}:{lineno}: non-finite {name} cell {cell!r}")
                row.append(float(value))
            rows.append(row)
    if len(rows) < MIN_LENGTH:
        raise SchemaError(f"{path}: needs at least {MIN_LENGTH} data rows, got {len(rows)}")
    return rows


def _check_years(path: str | Path, years: list[int]) -> None:
    """Enforce strictly ascending, gap-free years."""
    for prev, cur in zip(years, years[1:]):
        if cur == prev:
            raise SchemaError(f"{path}: duplicate year {cur}")
        if cur < prev:
            raise SchemaError(f"{path}: years not sorted ascending ({prev} then {cur})")
        if cur != prev + 1:
            missing = prev + 1
            raise YearGapError(
                f"{path}: year {missing} missing between {prev} and {cur}"
            )


def load_dataset(path: str | Path, label: str | None = None) -> ClimateDataset:
    """Load a combined ``year,forcing_wm2,temp_anomaly_c`` file.

    Parameters
    ----------
    path
        CSV file conforming to the combined schema.
    label
        Provenance string; defaults to the file name.

    Returns
    -------
    ClimateDataset
        Aligned forcing/temperature series over the file's year range.
    """
    rows = _read_rows(path, DATASET_HEADER)
    years = [int(r[0]) for r in rows]
    _check_years(path, years)
    forcing = TimeSeries(years[0], [r[1] for r in rows])
    temperature = TimeSeries(years[0], [r[2] for r in rows])
    dataset = ClimateDataset(forcing, temperature, label or Path(path).name)
    log.info("loaded %d rows (%d-%d) from %s", len(dataset), dataset.start_year,
             dataset.end_year, path)
    return dataset


def _read_single(path: str | Path, header: tuple[str, ...]) -> tuple[list[int], list[float]]:
    rows = _read_rows(path, header)
    years = [int(r[0]) for r in rows]
    _check_years(path, years)
    return years, [r[1] for r in rows]


def load_dataset_pair(
    forcing_path: str | Path,
    temperature_path: str | Path,
    label: str | None = None,
) -> ClimateDataset:
    """Load separate ``year,value`` files and intersect their year ranges.

    Raises
    ------
    EmptyOverlapError
        If the two files share no years (or fewer than two).
    """
    f_years, f_values = _read_single(forcing_path, SINGLE_HEADER)
    t_years, t_values = _read_single(temperature_path, SINGLE_HEADER)
    start = max(f_years[0], t_years[0])
    end = min(f_years[-1], t_years[-1])
    if end - start + 1 < MIN_LENGTH:
        raise EmptyOverlapError(
            f"year ranges {f_years[0]}-{f_years[-1]} and {t_years[0]}-{t_years[-1]} "
            "overlap in fewer than two years"
        )
    forcing = TimeSeries(start, f_values[start - f_years[0] : end - f_years[0] + 1])
    temperature = TimeSeries(start, t_values[start - t_years[0] : end - t_years[0] + 1])
    if label is None:
        label = f"{Path(forcing_path).name}+{Path(temperature_path).name}"
    dataset = ClimateDataset(forcing, temperature, label)
    log.info("loaded %d overlapping rows (%d-%d)", len(dataset), start, end)
    return dataset


def write_dataset_csv(dataset: ClimateDataset, path: str | Path) -> None:
    """Write a dataset in the combined schema, full float precision."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(DATASET_HEADER)
        for year, f, s in zip(dataset.forcing.years, dataset.forcing.values,
                              dataset.temperature.values):
            writer.writerow([int(year), repr(float(f)), repr(float(s))])


def read_annual_csv(path: str | Path, header: tuple[str, ...]) -> TimeSeries:
    """Read any two-column ``year,<name>`` file into a TimeSeries."""
    years, values = _read_single(path, header)
    return TimeSeries(years[0], values)


def write_annual_csv(series: TimeSeries, path: str | Path,
                     header: tuple[str, ...]) -> None:
    """Write a TimeSeries as a two-column ``year,<name>`` file."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for year, value in zip(series.years, series.values):
            writer.writerow([int(year), repr(float(value))])
