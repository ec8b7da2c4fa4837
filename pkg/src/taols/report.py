"""Sweep reporting: delimited output, figures, and the text summary.

Everything here renders from one :class:`SweepTable` built out of a
:class:`~taols.estimator.SweepResult`, so the CSV, the SVG figures and the
text report always carry identical numbers.  Figures are rendered with
matplotlib to SVG with a fixed hash salt and no date metadata, making every
artifact byte-reproducible from (input bytes, config).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .climate import ATMOSPHERIC_SHARE_NUMERATOR, CO2_DOUBLING_FORCING_WM2
from .estimator import SweepResult, confidence_interval

SWEEP_CSV_COLUMNS = (
    "K", "gamma", "mu", "lambda", "phi", "delta",
    "se_lambda", "se_phi",
    "lambda_ci_lo", "lambda_ci_hi",
    "ecs", "ecs_ci_lo", "ecs_ci_hi",
    "phi_ci_lo", "phi_ci_hi",
)

SVG_HASH_SALT = "taols"


def _safe_ecs(lambda_value: float) -> float:
    """ECS of a lambda value, NaN where the sign makes it meaningless."""
    if lambda_value <= 0:
        return float("nan")
    return CO2_DOUBLING_FORCING_WM2 / lambda_value


def _safe_share(phi_value: float) -> float:
    if phi_value <= 0:
        return float("nan")
    return ATMOSPHERIC_SHARE_NUMERATOR / phi_value


@dataclass(frozen=True)
class SweepTable:
    """Columnar view of a sweep at one confidence level."""

    level: float
    k: np.ndarray
    gamma: np.ndarray
    mu: np.ndarray
    lam: np.ndarray
    phi: np.ndarray
    delta: np.ndarray
    se_lambda: np.ndarray
    se_phi: np.ndarray
    lambda_lo: np.ndarray
    lambda_hi: np.ndarray
    ecs: np.ndarray
    ecs_lo: np.ndarray
    ecs_hi: np.ndarray
    phi_lo: np.ndarray
    phi_hi: np.ndarray
    share: np.ndarray
    share_lo: np.ndarray
    share_hi: np.ndarray


def build_sweep_table(result: SweepResult, level: float = 0.95) -> SweepTable:
    """Flatten per-K fits into aligned arrays, including derived quantities.

    ECS is decreasing in lambda and the atmospheric share decreasing in phi,
    so interval endpoints swap when mapped; endpoints whose source is
    nonpositive become NaN rather than a fake number.
    """
    lam_ci = [confidence_interval(f, "lambda", level) for f in result.fits]
    phi_ci = [confidence_interval(f, "phi", level) for f in result.fits]
    lam = np.array([f.lambda_hat for f in result.fits])
    phi = np.array([f.phi_hat for f in result.fits])
    lam_lo = np.array([ci.lower for ci in lam_ci])
    lam_hi = np.array([ci.upper for ci in lam_ci])
    phi_lo = np.array([ci.lower for ci in phi_ci])
    phi_hi = np.array([ci.upper for ci in phi_ci])
    return SweepTable(
        level=level,
        k=np.array(result.grid, dtype=int),
        gamma=np.array([f.gamma_hat for f in result.fits]),
        mu=np.array([f.mu_hat for f in result.fits]),
        lam=lam,
        phi=phi,
        delta=np.array([f.delta_hat for f in result.fits]),
        se_lambda=np.array([f.se["lambda"] for f in result.fits]),
        se_phi=np.array([f.se["phi"] for f in result.fits]),
        lambda_lo=lam_lo,
        lambda_hi=lam_hi,
        ecs=np.array([_safe_ecs(v) for v in lam]),
        ecs_lo=np.array([_safe_ecs(v) for v in lam_hi]),
        ecs_hi=np.array([_safe_ecs(v) for v in lam_lo]),
        phi_lo=phi_lo,
        phi_hi=phi_hi,
        share=np.array([_safe_share(v) for v in phi]),
        share_lo=np.array([_safe_share(v) for v in phi_hi]),
        share_hi=np.array([_safe_share(v) for v in phi_lo]),
    )


def write_sweep_csv(table: SweepTable, path: str | Path) -> None:
    """Write the per-K table; floats use shortest round-trip formatting."""
    columns = (
        table.k, table.gamma, table.mu, table.lam, table.phi, table.delta,
        table.se_lambda, table.se_phi,
        table.lambda_lo, table.lambda_hi,
        table.ecs, table.ecs_lo, table.ecs_hi,
        table.phi_lo, table.phi_hi,
    )
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SWEEP_CSV_COLUMNS)
        for row in zip(*columns):
            writer.writerow([int(row[0])] + [repr(float(v)) for v in row[1:]])


def _band(ax, x, center, lo, hi, color: str, label: str, unit: str) -> None:
    ax.fill_between(x, lo, hi, color=color, alpha=0.2, linewidth=0)
    ax.plot(x, lo, color=color, linestyle="--", linewidth=0.8)
    ax.plot(x, hi, color=color, linestyle="--", linewidth=0.8)
    ax.plot(x, center, color=color, linewidth=1.6, label=label)
    ax.set_ylabel(unit)
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best")


def render_lambda_ecs_figure(table: SweepTable, path: str | Path) -> None:
    """Cointegrating coefficient and implied ECS against K, with CI bands."""
    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        fig, (ax_lam, ax_ecs) = plt.subplots(2, 1, sharex=True, figsize=(8.0, 6.0))
        pct = int(round(table.level * 100))
        _band(ax_lam, table.k, table.lam, table.lambda_lo, table.lambda_hi,
              "tab:blue", f"lambda with {pct}% CI", "lambda (W/m$^2$ per $^\\circ$C)")
        _band(ax_ecs, table.k, table.ecs, table.ecs_lo, table.ecs_hi,
              "tab:red", f"ECS with {pct}% CI", "ECS ($^\\circ$C per CO$_2$ doubling)")
        ax_ecs.set_xlabel("K (number of basis functions)")
        fig.suptitle("Cointegrating coefficient and implied climate sensitivity")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)


def render_phi_share_figure(table: SweepTable, path: str | Path) -> None:
    """Heat-feedback coefficient and atmospheric heat share against K."""
    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        fig, (ax_phi, ax_share) = plt.subplots(2, 1, sharex=True, figsize=(8.0, 6.0))
        pct = int(round(table.level * 100))
        _band(ax_phi, table.k, table.phi, table.phi_lo, table.phi_hi,
              "tab:green", f"phi with {pct}% CI", "phi (W-yr/m$^2$ per $^\\circ$C)")
        _band(ax_share, table.k, table.share, table.share_lo, table.share_hi,
              "tab:purple", f"atmospheric share with {pct}% CI", "share of heat content (%)")
        ax_share.set_xlabel("K (number of basis functions)")
        fig.suptitle("Heat-feedback coefficient and atmospheric heat share")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)


def _sig4(value: float) -> str:
    return f"{value:.4g}"


def text_summary(
    table: SweepTable,
    label: str,
    T: int,
    year_range: tuple[int, int],
    robust_se: bool = False,
    timestamp: str | None = None,
) -> str:
    """Fixed-format text report; 4 significant digits throughout, the ECS
    headline at two decimals.  ``timestamp`` is the only line that can vary
    between reruns and is omitted when None."""
    k = table.k
    lines = ["TAOLS sweep report"]
    if timestamp is not None:
        lines.append(f"generated: {timestamp}")
    grid_desc = f"{k[0]}..{k[-1]}" if len(k) > 1 else f"{k[0]}"
    se_kind = "HC1 robust" if robust_se else "homoskedastic"
    pct = int(round(table.level * 100))
    lines += [
        f"dataset: {label}",
        f"observations: T={T} ({year_range[0]}-{year_range[1]})",
        f"K grid: {grid_desc} ({len(k)} fits)",
        f"inference: {pct}% t intervals, {se_kind} standard errors",
        "",
        f"lambda (W/m^2 per degC):   min {_sig4(table.lam.min())}"
        f"  mean {_sig4(table.lam.mean())}  max {_sig4(table.lam.max())}",
        f"phi (W-yr/m^2 per degC):   min {_sig4(table.phi.min())}"
        f"  mean {_sig4(table.phi.mean())}  max {_sig4(table.phi.max())}",
        f"ECS (degC per doubling):   min {_sig4(np.nanmin(table.ecs))}"
        f"  mean {_sig4(np.nanmean(table.ecs))}  max {_sig4(np.nanmax(table.ecs))}",
        f"atmospheric share (%):     min {_sig4(np.nanmin(table.share))}"
        f"  mean {_sig4(np.nanmean(table.share))}  max {_sig4(np.nanmax(table.share))}",
        "",
        f"ECS in [{np.nanmin(table.ecs):.2f}, {np.nanmax(table.ecs):.2f}], "
        f"mean {np.nanmean(table.ecs):.2f}",
        "",
    ]
    return "\n".join(lines)
