"""Result files of case runs and budget sweeps.

CSV files are written with full float precision so that reading them back
reproduces the in-memory results exactly. Plots are optional PNG
companions of the CSV files.

Date:
    10.19.2026

"""


__all__ = [
    "write_sweep_csv",
    "read_sweep_csv",
    "write_convergence_csv",
    "read_convergence_csv",
    "write_setpoints_csv",
    "read_setpoints_csv",
    "write_transfers_csv",
    "read_transfers_csv",
    "write_summary_json",
    "case_summary",
    "plot_sweep",
    "plot_convergence",
    "plot_setpoints",
]


import json
import logging
import os
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from hems.moga import HistoryRow
from hems.scenarios import (
    CaseReport,
    SweepResult,
    SweepRow,
    Transfer,
    TransferReport,
    clock_hour,
    cost_decreases,
)


logger = logging.getLogger(__name__)


PathLike = Union[str, os.PathLike]

_FLOAT = "%.17g"


def _write(frame: pd.DataFrame, path: PathLike) -> str:
    frame.to_csv(path, index=False, float_format=_FLOAT)
    logger.debug("wrote %s rows=%d", path, len(frame))
    return str(path)


def _read(path: PathLike) -> pd.DataFrame:
    return pd.read_csv(path, float_precision="round_trip", keep_default_na=False)


def _join(values: Sequence[int]) -> str:
    return ";".join(str(int(v)) for v in values)


def _split(text) -> tuple:
    text = str(text)
    return tuple(int(v) for v in text.split(";")) if text else ()


def write_sweep_csv(path: PathLike, sweep: SweepResult) -> str:
    frame = pd.DataFrame({
        "gamma": [r.gamma for r in sweep.rows],
        "cost": [r.cost for r in sweep.rows],
        "starts": [_join(r.starts) for r in sweep.rows],
        "total_deviation": [r.total_deviation for r in sweep.rows],
    })
    return _write(frame, path)


def read_sweep_csv(path: PathLike, case: str) -> SweepResult:
    frame = _read(path)
    rows = [SweepRow(float(g), float(c), _split(s), float(d))
            for g, c, s, d in zip(frame["gamma"], frame["cost"], frame["starts"],
                                  frame["total_deviation"])]
    return SweepResult(case, rows, cost_decreases(rows))


def write_convergence_csv(path: PathLike, history: Sequence[HistoryRow]) -> str:
    return _write(pd.DataFrame(list(history), columns=list(HistoryRow._fields)), path)


def read_convergence_csv(path: PathLike) -> List[HistoryRow]:
    frame = _read(path)
    return [HistoryRow(int(r.generation), float(r.best_o1), float(r.best_o2), float(r.best_o3),
                       float(r.hypervolume)) for r in frame.itertuples(index=False)]


def write_setpoints_csv(path: PathLike, reports: Mapping[str, CaseReport],
                        start_hour: int = 1) -> str:
    """Hourly setpoints of several runs, one ``setpoint_<label>`` column each."""
    horizon = next(iter(reports.values())).schedule.horizon
    frame = pd.DataFrame({"hour": [clock_hour(h, start_hour) for h in range(1, horizon + 1)]})
    for label, report in reports.items():
        frame[f"setpoint_{label}"] = report.schedule.setpoints.values
    return _write(frame, path)


def read_setpoints_csv(path: PathLike) -> Dict[str, np.ndarray]:
    frame = _read(path)
    return {name: frame[name].to_numpy(dtype=float if name != "hour" else int)
            for name in frame.columns}


def write_transfers_csv(path: PathLike, transfers: TransferReport) -> str:
    frame = pd.DataFrame(list(transfers.rows), columns=list(Transfer._fields))
    return _write(frame.rename(columns={"power": "power_kw"}), path)


def read_transfers_csv(path: PathLike) -> TransferReport:
    frame = _read(path)
    return TransferReport([Transfer(str(r.appliance), int(r.from_hour), int(r.to_hour),
                                    float(r.power_kw)) for r in frame.itertuples(index=False)])


def case_summary(report: CaseReport, start_hour: int = 1) -> dict:
    summary = {
        "case": report.case,
        "budgets": list(report.budgets),
        "cost": report.cost,
        "purchased_kw": report.purchased.values.tolist(),
        "setpoints_c": report.schedule.setpoints.values.tolist(),
        "starts": [clock_hour(report.schedule.on_hours(s)[0], start_hour)
                   for s in range(report.schedule.u.shape[0])],
        "transfers": [t._asdict() for t in report.transfers.rows],
    }
    if report.objectives is not None:
        summary["objectives"] = dict(report.objectives._asdict())
        summary["front_size"] = report.front_size
    return summary


def write_summary_json(path: PathLike, reports: Sequence[CaseReport],
                       config: Optional[dict] = None, start_hour: int = 1) -> str:
    document = {"cases": [case_summary(r, start_hour) for r in reports],
                "config": config or {}}
    with open(path, "w") as f:
        json.dump(document, f, indent=2, sort_keys=True, default=float)
    return str(path)


def _figure():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def plot_sweep(path: PathLike, sweeps: Sequence[SweepResult]) -> str:
    plt = _figure()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    for sweep in sweeps:
        ax.plot([r.gamma for r in sweep.rows], [r.cost for r in sweep.rows], "o-",
                label=f"case {sweep.case}")
    ax.set_xlabel("budget of uncertainty")
    ax.set_ylabel("total cost ($)")
    ax.legend()
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return str(path)


def plot_convergence(path: PathLike, history: Sequence[HistoryRow]) -> str:
    plt = _figure()
    fig, axes = plt.subplots(1, 4, figsize=(14.0, 3.2))
    generations = [r.generation for r in history]
    for ax, name in zip(axes, HistoryRow._fields[1:]):
        ax.plot(generations, [getattr(r, name) for r in history])
        ax.set_title(name)
        ax.set_xlabel("generation")
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return str(path)


def plot_setpoints(path: PathLike, setpoints: Mapping[str, np.ndarray]) -> str:
    plt = _figure()
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    hours = setpoints["hour"]
    for name, values in setpoints.items():
        if name != "hour":
            ax.step(np.arange(len(hours)), values, where="mid", label=name)
    ax.set_xticks(np.arange(len(hours)))
    ax.set_xticklabels([str(h) for h in hours])
    ax.set_xlabel("hour")
    ax.set_ylabel("setpoint (°C)")
    ax.legend()
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return str(path)
