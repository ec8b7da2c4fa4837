"""Radiative-forcing computations.

Only the CO2 channel has a formula here; the other forcing components
(solar, sulfate, black carbon, organic carbon, ozone, stratospheric aerosol)
arrive precomputed as data and are combined by :func:`aggregate_forcing`.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from .errors import AlignmentError, DomainError
from .series import TimeSeries

# Empirically derived coefficient converting a log change in CO2 concentration
# into W/m^2.  Fixed, not configurable: the ECS conversion in taols.climate
# must use the identical constant or the two ends of the pipeline disagree.
CO2_LOG_COEFFICIENT_WM2 = 5.35

# Pre-industrial (circa 1850) atmospheric CO2 concentration.
PREINDUSTRIAL_CO2_PPM = 280.0


def rf_co2(concentration_ppm: float, baseline_ppm: float = PREINDUSTRIAL_CO2_PPM) -> float:
    """Radiative forcing of CO2 in W/m^2: 5.35 * ln(C / C0).

    A doubling from the pre-industrial baseline yields about 3.71 W/m^2.
    """
    if concentration_ppm <= 0:
        raise DomainError(f"CO2 concentration must be positive, got {concentration_ppm}")
    if baseline_ppm <= 0:
        raise DomainError(f"CO2 baseline must be positive, got {baseline_ppm}")
    return CO2_LOG_COEFFICIENT_WM2 * math.log(concentration_ppm / baseline_ppm)


def co2_series_to_forcing(concentrations: TimeSeries,
                          baseline_ppm: float = PREINDUSTRIAL_CO2_PPM) -> TimeSeries:
    """Convert an annual CO2 concentration series (ppm) to forcing (W/m^2)."""
    if baseline_ppm <= 0:
        raise DomainError(f"CO2 baseline must be positive, got {baseline_ppm}")
    c = concentrations.values
    if np.any(c <= 0):
        year = concentrations.start_year + int(np.flatnonzero(c <= 0)[0])
        raise DomainError(f"non-positive CO2 concentration at year {year}")
    return TimeSeries(concentrations.start_year,
                      CO2_LOG_COEFFICIENT_WM2 * np.log(c / baseline_ppm))


def aggregate_forcing(components: Sequence[TimeSeries]) -> TimeSeries:
    """Elementwise sum of aligned forcing components (all W/m^2)."""
    if not components:
        raise AlignmentError("no forcing components given")
    head = components[0]
    for k, comp in enumerate(components[1:], start=1):
        if comp.start_year != head.start_year or len(comp) != len(head):
            raise AlignmentError(
                f"component {k} covers {comp.start_year}..{comp.end_year}, "
                f"component 0 covers {head.start_year}..{head.end_year}"
            )
    total = np.sum([c.values for c in components], axis=0)
    return TimeSeries(head.start_year, total)
