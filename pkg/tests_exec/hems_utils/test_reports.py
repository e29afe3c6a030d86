"""Result files of case runs and sweeps.

Date:
    10.19.2026

"""


import json

import numpy as np

from hems import *
from hems_utils import *


def _sweep():
    rows = [SweepRow(0.0, 1.25, (3, 5), 0.0),
            SweepRow(1.0, 1.5, (4, 6), 0.3333333333333333),
            SweepRow(2.0, 1.4, (), 1.0)]
    return SweepResult("b", rows, cost_decreases(rows))


def test_sweep_round_trip(tmp_path):
    sweep = _sweep()
    path = write_sweep_csv(tmp_path / "sweep.csv", sweep)
    back = read_sweep_csv(path, "b")
    assert back.rows == sweep.rows
    assert back.anomalies == [(1.0, 2.0)]
    assert not back.monotone
    assert "3;5" in (tmp_path / "sweep.csv").read_text()


def test_convergence_round_trip(tmp_path):
    history = [HistoryRow(0, 0.5, 1.0, 2.0, 3.0), HistoryRow(1, 0.25, 0.75, 1.9, 3.5)]
    path = write_convergence_csv(tmp_path / "convergence.csv", history)
    assert read_convergence_csv(path) == history


def test_setpoints_round_trip(tmp_path, toy_case):
    report = run_case("a", toy_case)
    path = write_setpoints_csv(tmp_path / "setpoints.csv", {"a": report}, start_hour=12)
    table = read_setpoints_csv(path)
    np.testing.assert_array_equal(table["hour"], [12, 13, 14, 15])
    np.testing.assert_array_equal(table["setpoint_a"], report.schedule.setpoints.values)


def test_transfers_round_trip(tmp_path):
    transfers = TransferReport([Transfer("washer", 17, 21, 1.5), Transfer("dishwasher", 15, 12, 0.5)])
    path = write_transfers_csv(tmp_path / "transfers.csv", transfers)
    assert (tmp_path / "transfers.csv").read_text().splitlines()[0] == \
        "appliance,from_hour,to_hour,power_kw"
    assert read_transfers_csv(path).rows == transfers.rows


def test_summary_json(tmp_path, toy_case):
    reports = [run_case("a", toy_case), run_case("b", toy_case, (1.0, 1.0))]
    path = write_summary_json(tmp_path / "summary.json", reports, {"horizon": 4})
    with open(path) as f:
        document = json.load(f)
    assert [c["case"] for c in document["cases"]] == ["a", "b"]
    assert document["cases"][1]["budgets"] == [1.0, 1.0]
    assert document["cases"][0]["cost"] == reports[0].cost
    assert document["cases"][0]["starts"] == [1, 2]
    assert "objectives" not in document["cases"][0]
    assert document["config"] == {"horizon": 4}


def test_plots_write_png(tmp_path):
    history = [HistoryRow(g, 1.0 / (g + 1), 1.0, 2.0, float(g)) for g in range(5)]
    for path in (plot_sweep(tmp_path / "sweep.png", [_sweep()]),
                 plot_convergence(tmp_path / "convergence.png", history),
                 plot_setpoints(tmp_path / "setpoints.png",
                                {"hour": np.array([12, 13]), "setpoint_c": np.array([23.5, 24.0])})):
        with open(path, "rb") as f:
            assert f.read(8) == b"\x89PNG\r\n\x1a\n"
