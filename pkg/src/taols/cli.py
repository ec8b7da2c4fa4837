"""Command-line front-end.

Subcommands: ``estimate`` (load data, sweep K, write CSV/SVG/text report),
``simulate`` (write a synthetic dataset in the standard schema) and
``forcing-from-co2`` (convert a concentration file to forcing).  Options can
come from a ``key = value`` config file; explicit flags win.

Exit codes: 0 success, 2 usage or configuration error, 3 data or I/O error,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import io
from .basis import MIN_K
from .errors import (
    AlignmentError,
    ConfigError,
    DomainError,
    EmptyOverlapError,
    InvalidKError,
    InvalidSeriesError,
    NonPhysicalError,
    OverResolutionError,
    SchemaError,
    SingularDesignError,
)
from .estimator import DEFAULT_K_MAX, DEFAULT_K_MIN, k_sweep
from .forcing import PREINDUSTRIAL_CO2_PPM, co2_series_to_forcing
from .report import (
    build_sweep_table,
    render_lambda_ecs_figure,
    render_phi_share_figure,
    text_summary,
    write_sweep_csv,
)
from .synthetic import NOISE_KINDS, DgpSpec, NoiseSpec, simulate

OUTPUT_FORMATS = ("csv", "svg", "text-report")

SWEEP_CSV_NAME = "sweep.csv"
REPORT_NAME = "report.txt"
LAMBDA_FIGURE_NAME = "lambda_ecs.svg"
PHI_FIGURE_NAME = "phi_share.svg"


@dataclass(frozen=True)
class RunConfig:
    """Resolved settings for the estimate subcommand."""

    data: str | None
    forcing: str | None
    temperature: str | None
    k_min: int
    k_max: int
    k_step: int
    level: float
    out_dir: Path
    formats: tuple[str, ...]
    robust_se: bool
    no_timestamp: bool
    workers: int | None

    def __post_init__(self) -> None:
        if self.k_min < MIN_K:
            raise ConfigError(f"k-min must be >= {MIN_K}, got {self.k_min}")
        if self.k_max < self.k_min:
            raise ConfigError(f"k-max {self.k_max} below k-min {self.k_min}")
        if self.k_step < 1:
            raise ConfigError(f"k-step must be >= 1, got {self.k_step}")
        if not 0.0 < self.level < 1.0:
            raise ConfigError(f"level must be in (0, 1), got {self.level}")
        bad = [f for f in self.formats if f not in OUTPUT_FORMATS]
        if bad:
            raise ConfigError(
                f"unknown output format(s) {bad}, expected subset of {OUTPUT_FORMATS}"
            )
        if self.data is None and (self.forcing is None or self.temperature is None):
            raise ConfigError(
                "need --data FILE, or both --forcing FILE and --temperature FILE"
            )
        if self.data is not None and (self.forcing is not None or self.temperature is not None):
            raise ConfigError("--data and --forcing/--temperature are mutually exclusive")


def parse_config_file(path: str | Path) -> dict[str, str]:
    """Read a ``key = value`` file; '#' starts a comment, blank lines skipped."""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"no such config file: {path}")
    out: dict[str, str] = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep or not key.strip():
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        out[key.strip().lower().replace("-", "_")] = value.strip()
    return out


def _to_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "1", "on"):
        return True
    if lowered in ("false", "no", "0", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


class _Resolver:
    """Flag value if given, else config-file value, else hard default."""

    def __init__(self, args: argparse.Namespace, config: dict[str, str]):
        self.args = args
        self.config = config

    def get(self, name: str, default, convert):
        flag_value = getattr(self.args, name)
        if flag_value is not None:
            return flag_value
        if name in self.config:
            raw = self.config[name]
            try:
                return convert(raw)
            except ConfigError:
                raise
            except (TypeError, ValueError):
                raise ConfigError(f"config key {name!r}: cannot parse {raw!r}") from None
        return default


def _utc_stamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _run_estimate(args: argparse.Namespace) -> int:
    resolver = _Resolver(args, parse_config_file(args.config) if args.config else {})
    config = RunConfig(
        data=resolver.get("data", None, str),
        forcing=resolver.get("forcing", None, str),
        temperature=resolver.get("temperature", None, str),
        k_min=resolver.get("k_min", DEFAULT_K_MIN, int),
        k_max=resolver.get("k_max", DEFAULT_K_MAX, int),
        k_step=resolver.get("k_step", 1, int),
        level=resolver.get("level", 0.95, float),
        out_dir=Path(resolver.get("out_dir", "taols-out", str)),
        formats=tuple(resolver.get("format", ",".join(OUTPUT_FORMATS), str).split(",")),
        robust_se=bool(resolver.get("robust_se", False, _to_bool)),
        no_timestamp=bool(resolver.get("no_timestamp", False, _to_bool)),
        workers=resolver.get("workers", None, int),
    )

    if config.data is not None:
        dataset = io.load_dataset(config.data)
    else:
        dataset = io.load_dataset_pair(config.forcing, config.temperature)

    grid = list(range(config.k_min, config.k_max + 1, config.k_step))
    result = k_sweep(dataset, grid, robust_se=config.robust_se, workers=config.workers)
    table = build_sweep_table(result, config.level)

    config.out_dir.mkdir(parents=True, exist_ok=True)
    if "csv" in config.formats:
        write_sweep_csv(table, config.out_dir / SWEEP_CSV_NAME)
    if "svg" in config.formats:
        render_lambda_ecs_figure(table, config.out_dir / LAMBDA_FIGURE_NAME)
        render_phi_share_figure(table, config.out_dir / PHI_FIGURE_NAME)
    summary = text_summary(
        table,
        label=dataset.label,
        T=len(dataset),
        year_range=(dataset.start_year, dataset.end_year),
        robust_se=config.robust_se,
        timestamp=None if config.no_timestamp else _utc_stamp(),
    )
    if "text-report" in config.formats:
        (config.out_dir / REPORT_NAME).write_text(summary, encoding="utf-8")
    print(summary, end="")
    return 0


def _run_simulate(args: argparse.Namespace) -> int:
    resolver = _Resolver(args, parse_config_file(args.config) if args.config else {})
    noise = NoiseSpec(
        kind=resolver.get("noise", "none", str),
        sigma=resolver.get("sigma", 1.0, float),
        rho=resolver.get("rho", 0.0, float),
        spike_prob=resolver.get("spike_prob", 0.05, float),
        spike_scale=resolver.get("spike_scale", 10.0, float),
    )
    spec = DgpSpec(
        length=resolver.get("length", 165, int),
        lambda_true=resolver.get("lambda_true", 1.5, float),
        phi_true=resolver.get("phi_true", 20.0, float),
        gamma_true=resolver.get("gamma_true", 0.0, float),
        mu_true=resolver.get("mu_true", 0.0, float),
        noise=noise,
        seed=resolver.get("seed", 0, int),
        temp_sigma=resolver.get("temp_sigma", 1.0, float),
        start_year=resolver.get("start_year", 1850, int),
    )
    dataset = simulate(spec)
    out = Path(resolver.get("out", "synthetic.csv", str))
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    io.write_dataset_csv(dataset, out)
    print(f"wrote {len(dataset)} rows ({dataset.start_year}-{dataset.end_year}) to {out}")
    return 0


def _run_forcing_from_co2(args: argparse.Namespace) -> int:
    resolver = _Resolver(args, parse_config_file(args.config) if args.config else {})
    baseline = resolver.get("baseline", PREINDUSTRIAL_CO2_PPM, float)
    concentrations = io.read_annual_csv(args.input, io.CO2_HEADER)
    forcing = co2_series_to_forcing(concentrations, baseline)
    out = Path(resolver.get("out", "forcing.csv", str))
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    io.write_annual_csv(forcing, out, io.FORCING_HEADER)
    print(f"wrote {len(forcing)} rows ({forcing.start_year}-{forcing.end_year}) to {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taols",
        description="Transformed and augmented OLS for multicointegrated "
                    "forcing/temperature systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    est = sub.add_parser("estimate", help="run the K sweep on a dataset")
    est.add_argument("--data", help="combined year,forcing_wm2,temp_anomaly_c CSV")
    est.add_argument("--forcing", help="year,value CSV of forcing (two-file mode)")
    est.add_argument("--temperature", help="year,value CSV of temperature (two-file mode)")
    est.add_argument("--k-min", dest="k_min", type=int)
    est.add_argument("--k-max", dest="k_max", type=int)
    est.add_argument("--k-step", dest="k_step", type=int)
    est.add_argument("--level", type=float, help="confidence level, default 0.95")
    est.add_argument("--out-dir", dest="out_dir")
    est.add_argument("--format", help="comma list from: csv,svg,text-report")
    est.add_argument("--robust-se", dest="robust_se", action="store_true", default=None,
                     help="HC1 sandwich standard errors")
    est.add_argument("--no-timestamp", dest="no_timestamp", action="store_true",
                     default=None, help="omit the generated-at line from the report")
    est.add_argument("--workers", type=int, help="thread pool size for the sweep")
    est.add_argument("--config", help="key = value defaults file")
    est.set_defaults(handler=_run_estimate)

    sim = sub.add_parser("simulate", help="write a synthetic dataset")
    sim.add_argument("--out", help="output CSV path")
    sim.add_argument("-T", "--length", type=int, help="series length, default 165")
    sim.add_argument("--lambda", dest="lambda_true", type=float,
                     help="cointegrating coefficient, default 1.5")
    sim.add_argument("--phi", dest="phi_true", type=float,
                     help="heat-feedback coefficient, default 20")
    sim.add_argument("--gamma", dest="gamma_true", type=float, help="constant, default 0")
    sim.add_argument("--mu", dest="mu_true", type=float, help="per-year trend, default 0")
    sim.add_argument("--noise", choices=list(NOISE_KINDS),
                     help="error regime, default none")
    sim.add_argument("--sigma", type=float, help="noise scale, default 1")
    sim.add_argument("--rho", type=float, help="ar1 coefficient")
    sim.add_argument("--spike-prob", dest="spike_prob", type=float)
    sim.add_argument("--spike-scale", dest="spike_scale", type=float)
    sim.add_argument("--temp-sigma", dest="temp_sigma", type=float,
                     help="random-walk increment scale, default 1")
    sim.add_argument("--seed", type=int, help="RNG seed, default 0")
    sim.add_argument("--start-year", dest="start_year", type=int, help="default 1850")
    sim.add_argument("--config", help="key = value defaults file")
    sim.set_defaults(handler=_run_simulate)

    conv = sub.add_parser("forcing-from-co2",
                          help="convert a year,co2_ppm CSV to year,forcing_wm2")
    conv.add_argument("--input", required=True, help="year,co2_ppm CSV")
    conv.add_argument("--out", help="output CSV path, default forcing.csv")
    conv.add_argument("--baseline", type=float,
                      help=f"baseline concentration, default {PREINDUSTRIAL_CO2_PPM:g} ppm")
    conv.add_argument("--config", help="key = value defaults file")
    conv.set_defaults(handler=_run_forcing_from_co2)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (InvalidKError, OverResolutionError, ConfigError) as exc:
        print(f"taols: usage error: {exc}", file=sys.stderr)
        return 2
    except (SchemaError, EmptyOverlapError, AlignmentError, InvalidSeriesError) as exc:
        print(f"taols: data error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"taols: i/o error: {exc}", file=sys.stderr)
        return 3
    except (SingularDesignError, NonPhysicalError, DomainError) as exc:
        print(f"taols: numerical error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
