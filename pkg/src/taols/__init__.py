"""Transformed and augmented OLS for multicointegrated climate systems.

The pipeline: project cumulative radiative forcing and the temperature
regressors onto K low-frequency sine basis functions, run OLS on the K
transformed equations, and sweep K to map out the cointegrating coefficient,
the heat-feedback coefficient, and the implied equilibrium climate
sensitivity with confidence bands.
"""

from .basis import (
    REGRESSOR_COLUMNS,
    TransformedSystem,
    basis_fn,
    basis_matrix,
    build_transformed_system,
    transform_series,
)
from .climate import (
    ATMOSPHERIC_HEAT_PER_DEGC_WYR,
    CO2_DOUBLING_FORCING_WM2,
    EcsEstimate,
    atmospheric_share,
    ecs_estimate,
    ecs_from_lambda,
    ecs_interval,
    steady_state_warming,
)
from .errors import (
    AlignmentError,
    ConfigError,
    DomainError,
    EmptyOverlapError,
    InsufficientKError,
    InvalidKError,
    InvalidSeriesError,
    NonPhysicalError,
    OverResolutionError,
    SchemaError,
    SingularDesignError,
    TaolsError,
    YearGapError,
)
from .estimator import (
    COEFFICIENTS,
    ConfidenceInterval,
    SweepResult,
    SweepSummary,
    TaolsFit,
    confidence_interval,
    default_k_grid,
    fit_at_k,
    k_sweep,
    ols_solve,
    t_multiplier,
)
from .forcing import (
    CO2_LOG_COEFFICIENT_WM2,
    PREINDUSTRIAL_CO2_PPM,
    aggregate_forcing,
    co2_series_to_forcing,
    rf_co2,
)
from .io import load_dataset, load_dataset_pair, write_dataset_csv
from .series import ClimateDataset, TimeSeries, cumulative_sum, first_difference
from .synthetic import DgpSpec, NoiseSpec, simulate, verify_multicointegration

__version__ = "0.1.0"

__all__ = [
    "ATMOSPHERIC_HEAT_PER_DEGC_WYR",
    "AlignmentError",
    "CO2_DOUBLING_FORCING_WM2",
    "CO2_LOG_COEFFICIENT_WM2",
    "COEFFICIENTS",
    "ClimateDataset",
    "ConfidenceInterval",
    "ConfigError",
    "DgpSpec",
    "DomainError",
    "EcsEstimate",
    "EmptyOverlapError",
    "InsufficientKError",
    "InvalidKError",
    "InvalidSeriesError",
    "NoiseSpec",
    "NonPhysicalError",
    "OverResolutionError",
    "PREINDUSTRIAL_CO2_PPM",
    "REGRESSOR_COLUMNS",
    "SchemaError",
    "SingularDesignError",
    "SweepResult",
    "SweepSummary",
    "TaolsError",
    "TaolsFit",
    "TimeSeries",
    "TransformedSystem",
    "YearGapError",
    "aggregate_forcing",
    "atmospheric_share",
    "basis_fn",
    "basis_matrix",
    "build_transformed_system",
    "co2_series_to_forcing",
    "confidence_interval",
    "cumulative_sum",
    "default_k_grid",
    "ecs_estimate",
    "ecs_from_lambda",
    "ecs_interval",
    "first_difference",
    "fit_at_k",
    "k_sweep",
    "load_dataset",
    "load_dataset_pair",
    "ols_solve",
    "rf_co2",
    "simulate",
    "steady_state_warming",
    "t_multiplier",
    "transform_series",
    "verify_multicointegration",
    "write_dataset_csv",
]
