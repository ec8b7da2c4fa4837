"""OLS on the transformed system, inference, and the K-sweep driver.

The transformed regression has K equations and five coefficients:

    response = gamma * const + mu * trend + lambda * cum_temp
               + phi * temp + delta * temp_diff + error

Coefficients are named by their roles: ``gamma`` (constant), ``mu``
(per-year trend), ``lambda`` (cointegrating coefficient, W/m^2 per degC),
``phi`` (heat-feedback coefficient, W-yr/m^2 per degC) and ``delta``
(loading on the temperature difference, included to absorb short-run
endogeneity).

The solve uses a Householder QR of the design, never the normal equations:
the cumulative regressors grow like T and T^2, and squaring the design at
T = 165 pushes the condition number past 1e8.  For the same reason the raw
trend column t = 1..T is internally rescaled to t/T before factoring and the
estimate of mu (and its standard error) scaled back afterwards, an exact
algebraic identity that leaves every other estimate unchanged.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
import scipy.stats
from scipy.linalg import solve_triangular

from .basis import MIN_K, REGRESSOR_COLUMNS, TransformedSystem, build_transformed_system
from .errors import InsufficientKError, InvalidKError, SingularDesignError
from .series import ClimateDataset

#: Coefficient names, aligned with REGRESSOR_COLUMNS.
COEFFICIENTS = ("gamma", "mu", "lambda", "phi", "delta")

#: A column whose post-orthogonalization norm falls below this fraction of
#: its original norm is declared collinear.
RANK_RTOL = 1e-10

#: Default sweep of the tuning parameter.
DEFAULT_K_MIN = 10
DEFAULT_K_MAX = 150


@dataclass(frozen=True)
class TaolsFit:
    """Point estimates, standard errors and residual statistics at one K."""

    gamma_hat: float
    mu_hat: float
    lambda_hat: float
    phi_hat: float
    delta_hat: float
    se: Mapping[str, float]
    residual_variance: float
    K: int
    T: int

    @property
    def dof(self) -> int:
        return self.K - len(COEFFICIENTS)

    def estimate(self, coefficient: str) -> float:
        """Look up a point estimate by coefficient name."""
        try:
            return {
                "gamma": self.gamma_hat,
                "mu": self.mu_hat,
                "lambda": self.lambda_hat,
                "phi": self.phi_hat,
                "delta": self.delta_hat,
            }[coefficient]
        except KeyError:
            raise ValueError(
                f"unknown coefficient {coefficient!r}, expected one of {COEFFICIENTS}"
            ) from None


@dataclass(frozen=True)
class ConfidenceInterval:
    lower: float
    upper: float
    level: float

    def __post_init__(self) -> None:
        if not 0.0 < self.level < 1.0:
            raise ValueError(f"confidence level must be in (0, 1), got {self.level}")
        if self.lower > self.upper:
            raise ValueError(f"interval bounds out of order: [{self.lower}, {self.upper}]")

    def __contains__(self, value: float) -> bool:
        return self.lower <= value <= self.upper


@dataclass(frozen=True)
class SweepSummary:
    lambda_min: float
    lambda_mean: float
    lambda_max: float
    phi_min: float
    phi_mean: float
    phi_max: float


@dataclass(frozen=True)
class SweepResult:
    """Per-K fits over a strictly increasing grid, plus aggregate statistics."""

    grid: tuple[int, ...]
    fits: tuple[TaolsFit, ...]
    summary: SweepSummary


def ols_solve(system: TransformedSystem, robust_se: bool = False) -> TaolsFit:
    """Least-squares fit of the transformed regression.

    Parameters
    ----------
    system
        Output of :func:`taols.basis.build_transformed_system`.
    robust_se
        If True, report HC1 sandwich standard errors instead of the
        conventional homoskedastic ones (sensitivity analysis only; the
        default treats the transformed errors as approximately i.i.d.,
        which the basis transform is designed to deliver).

    Raises
    ------
    InsufficientKError
        If K leaves no residual degree of freedom (K < 6).
    SingularDesignError
        If a regressor column is numerically collinear; the error names the
        first offending column.
    """
    y = np.asarray(system.response, dtype=float)
    X = np.array(system.regressors, dtype=float)
    n_obs, n_coef = X.shape
    dof = n_obs - n_coef
    if dof < 1:
        raise InsufficientKError(
            f"K={n_obs} leaves {dof} degrees of freedom; need K >= {n_coef + 1}"
        )

    # Exact reparametrization: trend column t -> t/T.  Undone below.
    X[:, 1] /= system.T

    col_norms = np.linalg.norm(X, axis=0)
    for j, norm in enumerate(col_norms):
        if norm == 0.0:
            raise SingularDesignError(REGRESSOR_COLUMNS[j], "column is identically zero")

    Q, R = np.linalg.qr(X)
    r_diag = np.abs(np.diag(R))
    for j in range(n_coef):
        if r_diag[j] < RANK_RTOL * col_norms[j]:
            raise SingularDesignError(
                REGRESSOR_COLUMNS[j],
                f"orthogonalized norm {r_diag[j]:.3e} below "
                f"{RANK_RTOL:g} * column norm {col_norms[j]:.3e}",
            )

    beta = solve_triangular(R, Q.T @ y)
    residuals = y - X @ beta
    rss = float(residuals @ residuals)
    sigma2 = rss / dof

    r_inv = solve_triangular(R, np.eye(n_coef))
    xtx_inv = r_inv @ r_inv.T
    if robust_se:
        meat = X.T @ (X * residuals[:, None] ** 2)
        cov = xtx_inv @ meat @ xtx_inv * (n_obs / dof)
    else:
        cov = sigma2 * xtx_inv
    se = np.sqrt(np.maximum(np.diag(cov), 0.0))

    # Undo the trend reparametrization.
    beta[1] /= system.T
    se[1] /= system.T

    return TaolsFit(
        gamma_hat=float(beta[0]),
        mu_hat=float(beta[1]),
        lambda_hat=float(beta[2]),
        phi_hat=float(beta[3]),
        delta_hat=float(beta[4]),
        se=dict(zip(COEFFICIENTS, se.tolist())),
        residual_variance=sigma2,
        K=n_obs,
        T=system.T,
    )


def t_multiplier(dof: int, level: float) -> float:
    """Two-sided Student-t critical value at the given confidence level."""
    if not 0.0 < level < 1.0:
        raise ValueError(f"confidence level must be in (0, 1), got {level}")
    if dof < 1:
        raise InsufficientKError(f"need dof >= 1, got {dof}")
    return float(scipy.stats.t.ppf((1.0 + level) / 2.0, dof))


def confidence_interval(fit: TaolsFit, coefficient: str, level: float = 0.95) -> ConfidenceInterval:
    """Two-sided t confidence interval for one coefficient."""
    estimate = fit.estimate(coefficient)
    half_width = t_multiplier(fit.dof, level) * fit.se[coefficient]
    return ConfidenceInterval(estimate - half_width, estimate + half_width, level)


def default_k_grid(T: int) -> list[int]:
    """The standard sweep 10..150 (step 1), clipped to the series length."""
    return list(range(DEFAULT_K_MIN, min(DEFAULT_K_MAX, T) + 1))


def fit_at_k(dataset: ClimateDataset, K: int, robust_se: bool = False) -> TaolsFit:
    """Build the transformed system at one K and solve it."""
    return ols_solve(build_transformed_system(dataset, K), robust_se=robust_se)


def k_sweep(
    dataset: ClimateDataset,
    k_grid: Sequence[int] | None = None,
    robust_se: bool = False,
    workers: int | None = None,
) -> SweepResult:
    """Fit the model at every K in the grid.

    The grid must be strictly increasing with every K in [6, T]; it is
    validated in full before any fit runs.  Each per-K fit is a pure
    function of (dataset, K), so with ``workers`` > 1 they are distributed
    over a thread pool; results are assembled in grid order either way.
    """
    T = len(dataset)
    grid = [int(k) for k in (default_k_grid(T) if k_grid is None else k_grid)]
    if not grid:
        raise InvalidKError("empty K grid")
    for prev, cur in zip(grid, grid[1:]):
        if cur <= prev:
            raise InvalidKError(f"K grid must be strictly increasing ({prev} then {cur})")
    for k in grid:
        if k < MIN_K or k > T:
            raise InvalidKError(f"K={k} outside the valid range [{MIN_K}, {T}]")

    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            fits = list(pool.map(lambda k: fit_at_k(dataset, k, robust_se), grid))
    else:
        fits = [fit_at_k(dataset, k, robust_se) for k in grid]

    lambdas = np.array([f.lambda_hat for f in fits])
    phis = np.array([f.phi_hat for f in fits])
    summary = SweepSummary(
        lambda_min=float(lambdas.min()),
        lambda_mean=float(lambdas.mean()),
        lambda_max=float(lambdas.max()),
        phi_min=float(phis.min()),
        phi_mean=float(phis.mean()),
        phi_max=float(phis.max()),
    )
    return SweepResult(grid=tuple(grid), fits=tuple(fits), summary=summary)
