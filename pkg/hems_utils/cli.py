"""Command-line interface.

Every command writes its results under ``--out``. Exit code 1 signals an
invalid argument or configuration, exit code 2 an unusable input.

Date:
    10.19.2026

"""


__all__ = ["main"]


import json
import logging
import os

import click
import numpy as np

from hems.errors import DegenerateInputError, ValidationError
from hems.scenarios import CASES, budget_sweep, run_case
from hems_ai.features import build_features
from hems_ai.forecast import resolve_kind, train_and_evaluate
from hems_ai.models import KINDS

from .config import RunConfig, config_to_dict, load_config
from .fixtures import case_config_from_run_config, fit_cooling_model, load_history
from .reports import (
    plot_convergence,
    plot_setpoints,
    plot_sweep,
    read_setpoints_csv,
    write_convergence_csv,
    write_setpoints_csv,
    write_summary_json,
    write_sweep_csv,
    write_transfers_csv,
)
from .synthetic import PROFILES, generate_synthetic
from .timeseries import load_timeseries_csv, write_timeseries_csv


logger = logging.getLogger(__name__)


class _HemsGroup(click.Group):
    """Maps package errors to exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except ValidationError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(1)
        except DegenerateInputError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(2)


def _configure_logging(verbose: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbose, 2)]
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _load(path) -> RunConfig:
    return load_config(path) if path else RunConfig()


def _outdir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


config_option = click.option("--config", "config_path", type=click.Path(dir_okay=False),
                             default=None, help="Run configuration (JSON or YAML).")
out_option = click.option("--out", "out_dir", type=click.Path(file_okay=False), default="out",
                          show_default=True, help="Output directory.")
plot_option = click.option("--plot/--no-plot", default=False, help="Also write PNG plots.")


@click.group(cls=_HemsGroup)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
def main(verbose):
    """Robust home energy management with demand response."""
    _configure_logging(verbose)


@main.command("synth-data")
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@click.option("--profile", type=click.Choice(PROFILES), default=PROFILES[0], show_default=True)
@click.option("--days", default=28, show_default=True, help="Number of days.")
@out_option
def synth_data(seed, profile, days, out_dir):
    """Write synthetic demand, weather and cooling CSV files."""
    data = generate_synthetic(seed, profile, days, _outdir(out_dir))
    for path in data.paths.values():
        click.echo(path)


@main.command("forecast")
@click.option("--input", "input_path", required=True, type=click.Path(dir_okay=False),
              help="CSV with timestamp,demand_kw,occupancy.")
@click.option("--model", type=click.Choice(["rf", "gbm", "mlp", "all"]), default="all",
              show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.option("--lags", default=13, show_default=True, help="Lagged demands per sample.")
@click.option("--report", "report_name", default="forecast_report.json", show_default=True)
@out_option
def forecast(input_path, model, seed, lags, report_name, out_dir):
    """Train occupancy regressors and report their test errors."""
    table = load_timeseries_csv(input_path, ["demand_kw", "occupancy"])
    data = build_features(table["demand_kw"], lags, occupancy=table["occupancy"], hours=table.hours)
    kinds = KINDS if model == "all" else (resolve_kind(model),)
    run = train_and_evaluate(data, kinds, seed)
    out_dir = _outdir(out_dir)
    document = {"best": run.best, "reports": {k: r.as_dict() for k, r in run.reports.items()}}
    with open(os.path.join(out_dir, report_name), "w") as f:
        json.dump(document, f, indent=2, sort_keys=True)
    rows = data.test_idx + lags
    columns = {"occupancy": data.y_test}
    for kind, fitted in run.models.items():
        columns[f"forecast_{kind}"] = fitted.predict(data.X_test)
    write_timeseries_csv(os.path.join(out_dir, "forecast.csv"), table.timestamps[rows], columns)
    click.echo(f"best model: {run.best}")


@main.command("fit-arx")
@config_option
@out_option
def fit_arx(config_path, out_dir):
    """Fit the ARX cooling-load model to the household history."""
    rc = _load(config_path)
    model = fit_cooling_model(load_history(rc), rc)
    document = {"lag_set": list(model.lag_set), "alpha": model.alpha.tolist(),
                "beta": model.beta.tolist()}
    path = os.path.join(_outdir(out_dir), "arx.json")
    with open(path, "w") as f:
        json.dump(document, f, indent=2)
    click.echo(path)


def _write_case(out_dir, report, rc, plot):
    write_summary_json(os.path.join(out_dir, "summary.json"), [report], config_to_dict(rc),
                       rc.start_hour)
    setpoints = os.path.join(out_dir, "setpoints.csv")
    write_setpoints_csv(setpoints, {report.case: report}, rc.start_hour)
    write_transfers_csv(os.path.join(out_dir, "transfers.csv"), report.transfers)
    if report.history:
        write_convergence_csv(os.path.join(out_dir, "convergence.csv"), report.history)
    if plot:
        plot_setpoints(os.path.join(out_dir, "setpoints.png"), read_setpoints_csv(setpoints))
        if report.history:
            plot_convergence(os.path.join(out_dir, "convergence.png"), report.history)


@main.command("run-case")
@click.option("--case", "case", type=click.Choice(CASES), required=True)
@click.option("--gamma-d", default=0.0, show_default=True, help="Demand budget.")
@click.option("--gamma-occ", default=0.0, show_default=True, help="Occupancy budget.")
@config_option
@out_option
@plot_option
def run_case_command(case, gamma_d, gamma_occ, config_path, out_dir, plot):
    """Run one case study."""
    rc = _load(config_path)
    cfg = case_config_from_run_config(rc)
    report = run_case(case, cfg, (gamma_d, gamma_occ), rc.ga.to_params(rc.seed))
    _write_case(_outdir(out_dir), report, rc, plot)
    click.echo(f"case {case}: cost {report.cost:.4f}")


@main.command("sweep-budgets")
@click.option("--case", "case", type=click.Choice(["b", "d"]), default="b", show_default=True)
@click.option("--jobs", default=1, show_default=True, help="Parallel sweep points.")
@config_option
@out_option
@plot_option
def sweep_budgets(case, jobs, config_path, out_dir, plot):
    """Cost over the diagonal budgets of the configuration."""
    rc = _load(config_path)
    cfg = case_config_from_run_config(rc)
    sweep = budget_sweep(cfg, case, rc.budgets, rc.ga.to_params(rc.seed), jobs)
    out_dir = _outdir(out_dir)
    write_sweep_csv(os.path.join(out_dir, "sweep.csv"), sweep)
    if plot:
        plot_sweep(os.path.join(out_dir, "sweep.png"), [sweep])
    for row in sweep.rows:
        click.echo(f"gamma={row.gamma:g} cost={row.cost:.4f}")
    if sweep.anomalies:
        click.echo(f"cost decreased at {len(sweep.anomalies)} budget step(s)", err=True)


@main.command("compare")
@click.option("--gamma", default=None, type=float,
              help="Budget for both uncertain parameters (default: the largest configured).")
@config_option
@out_option
@plot_option
def compare(gamma, config_path, out_dir, plot):
    """Run all four cases and write their side-by-side results."""
    rc = _load(config_path)
    cfg = case_config_from_run_config(rc)
    gamma = float(np.max(rc.budgets)) if gamma is None else gamma
    params = rc.ga.to_params(rc.seed)
    reports = [run_case("a", cfg), run_case("b", cfg, (gamma, gamma)),
               run_case("c", cfg, ga_params=params), run_case("d", cfg, (gamma, gamma), params)]
    out_dir = _outdir(out_dir)
    write_summary_json(os.path.join(out_dir, "summary.json"), reports, config_to_dict(rc),
                       rc.start_hour)
    setpoints = os.path.join(out_dir, "setpoints.csv")
    write_setpoints_csv(setpoints, {"c": reports[2], "d": reports[3]}, rc.start_hour)
    write_transfers_csv(os.path.join(out_dir, "transfers.csv"), reports[2].transfers)
    write_convergence_csv(os.path.join(out_dir, "convergence.csv"), reports[2].history)
    if plot:
        plot_setpoints(os.path.join(out_dir, "setpoints.png"), read_setpoints_csv(setpoints))
        plot_convergence(os.path.join(out_dir, "convergence.png"), reports[2].history)
    for report in reports:
        click.echo(f"case {report.case}: cost {report.cost:.4f}")


if __name__ == "__main__":
    main()
