"""Climate interpretation of the fitted coefficients.

Converts the cointegrating coefficient into an equilibrium climate
sensitivity, the heat-feedback coefficient into the share of system heat
content that warms the atmosphere, and accumulated forcing into a
steady-state warming figure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPhysicalError
from .estimator import ConfidenceInterval, TaolsFit, confidence_interval
from .forcing import CO2_LOG_COEFFICIENT_WM2

# Forcing step from doubling CO2: 5.35 * ln 2, kept unrounded (~3.7083).
# Rounding to 3.71 here would desynchronize ECS output from rf_co2; paper
# tables quoted at 2-3 significant figures are unaffected either way.
CO2_DOUBLING_FORCING_WM2 = CO2_LOG_COEFFICIENT_WM2 * math.log(2.0)

# Heat needed to warm the atmosphere alone by 1 degC, in W-yr/m^2
# (about 5e21 J spread over the Earth's surface for one year).
ATMOSPHERIC_HEAT_PER_DEGC_WYR = 0.31

# Percent of total system heat content warming the atmosphere, per unit of
# the heat-feedback coefficient.
ATMOSPHERIC_SHARE_NUMERATOR = 100.0 * ATMOSPHERIC_HEAT_PER_DEGC_WYR


@dataclass(frozen=True)
class EcsEstimate:
    """ECS point estimate (degC per CO2 doubling) with its interval."""

    ecs: float
    interval: ConfidenceInterval


def ecs_from_lambda(lambda_hat: float) -> float:
    """Equilibrium climate sensitivity implied by the cointegrating coefficient.

    ECS = (5.35 * ln 2) / lambda, the warming that balances the forcing step
    of a CO2 doubling.
    """
    if lambda_hat <= 0:
        raise NonPhysicalError(
            f"cointegrating coefficient must be positive for ECS, got {lambda_hat}"
        )
    return CO2_DOUBLING_FORCING_WM2 / lambda_hat


def ecs_interval(lambda_interval: ConfidenceInterval) -> ConfidenceInterval:
    """Map a lambda interval to an ECS interval.

    ECS is strictly decreasing in lambda, so the endpoints swap: the lower
    ECS bound comes from the upper lambda bound and vice versa.
    """
    if lambda_interval.lower <= 0:
        raise NonPhysicalError(
            "lambda interval must be strictly positive for ECS, got "
            f"[{lambda_interval.lower}, {lambda_interval.upper}]"
        )
    return ConfidenceInterval(
        lower=ecs_from_lambda(lambda_interval.upper),
        upper=ecs_from_lambda(lambda_interval.lower),
        level=lambda_interval.level,
    )


def ecs_estimate(fit: TaolsFit, level: float = 0.95) -> EcsEstimate:
    """ECS point estimate and interval from one fit."""
    return EcsEstimate(
        ecs=ecs_from_lambda(fit.lambda_hat),
        interval=ecs_interval(confidence_interval(fit, "lambda", level)),
    )


def atmospheric_share(phi_hat: float) -> float:
    """Percent of total system heat content that warms the atmosphere.

    A 1 degC surface rise stores phi W-yr/m^2 in the whole system but only
    0.31 W-yr/m^2 in the air, so the air's share is 31/phi percent.
    """
    if phi_hat <= 0:
        raise NonPhysicalError(
            f"heat-feedback coefficient must be positive, got {phi_hat}"
        )
    return ATMOSPHERIC_SHARE_NUMERATOR / phi_hat


def steady_state_warming(forcing_step_wm2: float, duration_years: float,
                         phi_hat: float) -> float:
    """Warming once an accumulated forcing step has equilibrated.

    A sustained step of ``forcing_step_wm2`` over ``duration_years``
    accumulates forcing_step * duration W-yr/m^2 of heat; dividing by the
    heat-feedback coefficient gives the surface response in degC.
    """
    if phi_hat <= 0:
        raise NonPhysicalError(
            f"heat-feedback coefficient must be positive, got {phi_hat}"
        )
    if duration_years < 0:
        raise NonPhysicalError(f"duration must be nonnegative, got {duration_years}")
    return forcing_step_wm2 * duration_years / phi_hat
