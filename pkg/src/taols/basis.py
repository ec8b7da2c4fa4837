"""Low-frequency sine basis and the scaled projection of series onto it.

The basis functions are sqrt(2) * sin((i - 1/2) * pi * r) for i = 1..K,
orthonormal on [0, 1].  A length-T series x is projected as

    V[i] = (1 / sqrt(T)) * sum_{t=1..T} x[t] * basis_fn(i, t / T)

so evaluation points run over t/T for t = 1..T: r = 1 is included, r = 0 is
excluded.  Low i captures long trends and swings; growing K mixes in
progressively faster fluctuations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, OverResolutionError
from .series import ClimateDataset, cumulative_sum, first_difference

#: Fixed regressor column order of the transformed system.
REGRESSOR_COLUMNS = ("const", "trend", "cum_temp", "temp", "temp_diff")

#: Minimum K leaving at least one residual degree of freedom in the
#: five-regressor transformed regression.
MIN_K = len(REGRESSOR_COLUMNS) + 1


def basis_fn(i: int, r):
    """Evaluate basis function ``i`` at ``r`` in [0, 1].

    ``r`` may be a scalar or an array; the return matches its shape.
    """
    if i < 1:
        raise DomainError(f"basis index must be >= 1, got {i}")
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0) or np.any(r > 1.0):
        raise DomainError("basis argument r must lie in [0, 1]")
    out = np.sqrt(2.0) * np.sin((i - 0.5) * np.pi * r)
    return float(out) if out.ndim == 0 else out


def basis_matrix(n_basis: int, length: int) -> np.ndarray:
    """Matrix of basis values, shape (n_basis, length), entry [i-1, t-1]
    equal to basis_fn(i, t / length)."""
    if n_basis < 1:
        raise DomainError(f"basis count must be >= 1, got {n_basis}")
    if n_basis > length:
        raise OverResolutionError(
            f"cannot use {n_basis} basis functions on {length} observations"
        )
    indices = np.arange(1, n_basis + 1) - 0.5
    points = np.arange(1, length + 1) / length
    return np.sqrt(2.0) * np.sin(np.outer(indices, points) * np.pi)


def transform_series(x, K: int) -> np.ndarray:
    """Project a series onto the first K basis functions.

    Parameters
    ----------
    x
        TimeSeries or 1-d array of length T.
    K
        Number of basis functions, 1 <= K <= T.

    Returns
    -------
    numpy.ndarray
        K-vector of scaled coefficients (1/sqrt(T)) * sum_t x[t] phi_i(t/T).
    """
    values = np.asarray(getattr(x, "values", x), dtype=float)
    T = values.size
    return basis_matrix(K, T) @ values / np.sqrt(T)


@dataclass(frozen=True, eq=False)
class TransformedSystem:
    """The K-equation regression system produced by the basis transform.

    ``response`` holds the transformed cumulative forcing; ``regressors`` is
    K x 5 with columns in :data:`REGRESSOR_COLUMNS` order: transformed
    constant, transformed raw trend t = 1..T, transformed cumulative
    temperature, transformed temperature, transformed temperature difference.
    Row i corresponds to basis index i (1-based).
    """

    response: np.ndarray
    regressors: np.ndarray
    K: int
    T: int


def build_transformed_system(dataset: ClimateDataset, K: int) -> TransformedSystem:
    """Assemble the transformed regression system for one value of K.

    The response is the transform of the cumulative forcing; the regressors
    are the transforms of the constant, the trend, the cumulative
    temperature, the temperature, and its first difference, in that order.

    Any 1 <= K <= T builds; estimation entry points additionally require
    K >= MIN_K so the solve has a residual degree of freedom.
    """
    T = len(dataset)
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    if K > T:
        raise OverResolutionError(f"K={K} exceeds the {T} available observations")
    design = np.column_stack([
        np.ones(T),
        np.arange(1, T + 1, dtype=float),
        cumulative_sum(dataset.temperature).values,
        dataset.temperature.values,
        first_difference(dataset.temperature).values,
    ])
    phi = basis_matrix(K, T)
    scale = 1.0 / np.sqrt(T)
    response = phi @ cumulative_sum(dataset.forcing).values * scale
    regressors = phi @ design * scale
    return TransformedSystem(response=response, regressors=regressors, K=K, T=T)
