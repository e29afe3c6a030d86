"""Hourly CSV reading and writing.

Date:
    10.19.2026

"""


import numpy as np
import pandas as pd
import pytest

from hems.errors import CsvFormatError, GapError
from hems.series import Unit
from hems_utils import *


HEADER = "timestamp,demand_kw,occupancy\n"


def _rows(stamps, demand=1.0, occupancy=2.0):
    return "".join(f"{s},{demand},{occupancy}\n" for s in stamps)


def _hours(n, start="2026-07-06 00:00:00"):
    return [t.strftime("%Y-%m-%dT%H:%M:%S") for t in pd.date_range(start, periods=n, freq="h")]


def _write(tmp_path, text):
    path = tmp_path / "demand.csv"
    path.write_text(text)
    return path


def test_twelve_rows(tmp_path):
    table = load_timeseries_csv(_write(tmp_path, HEADER + _rows(_hours(12))), DEMAND_COLUMNS)
    assert len(table) == 12
    assert table.gaps == []
    series = table.series("demand_kw", Unit.KW, horizon=12)
    assert series.horizon == 12
    assert table.hours.tolist() == list(range(12))


def test_duplicate_timestamp_row(tmp_path):
    stamps = _hours(5)
    stamps[2] = stamps[1]
    with pytest.raises(CsvFormatError) as excinfo:
        load_timeseries_csv(_write(tmp_path, HEADER + _rows(stamps)), DEMAND_COLUMNS)
    assert excinfo.value.row == 3


def test_bad_value_row(tmp_path):
    text = HEADER + _rows(_hours(3)) + f"{_hours(4)[3]},abc,2\n"
    with pytest.raises(CsvFormatError) as excinfo:
        load_timeseries_csv(_write(tmp_path, text), DEMAND_COLUMNS)
    assert excinfo.value.row == 4


def test_every_bad_value_row_is_reported(tmp_path):
    stamps = _hours(6)
    values = ["1.0", "", "2.5", "n/a", "x", "0.5"]
    text = HEADER + "".join(f"{s},{v},2\n" for s, v in zip(stamps, values))
    with pytest.raises(CsvFormatError) as excinfo:
        load_timeseries_csv(_write(tmp_path, text), DEMAND_COLUMNS)
    assert excinfo.value.row == 2
    assert "rows 2, 4, 5" in str(excinfo.value)


def test_bad_timestamp_row(tmp_path):
    text = HEADER + _rows(_hours(2)) + "yesterday,1,2\n"
    with pytest.raises(CsvFormatError) as excinfo:
        load_timeseries_csv(_write(tmp_path, text), DEMAND_COLUMNS)
    assert excinfo.value.row == 3


def test_wrong_header(tmp_path):
    with pytest.raises(CsvFormatError) as excinfo:
        load_timeseries_csv(_write(tmp_path, "timestamp,demand\n"), DEMAND_COLUMNS)
    assert excinfo.value.row is None


def test_off_grid_timestamp(tmp_path):
    stamps = _hours(3) + ["2026-07-06T03:30:00"]
    with pytest.raises(CsvFormatError) as excinfo:
        load_timeseries_csv(_write(tmp_path, HEADER + _rows(stamps)), DEMAND_COLUMNS)
    assert excinfo.value.row == 4


def test_gap_report(tmp_path):
    stamps = _hours(8)
    del stamps[4]
    path = _write(tmp_path, HEADER + _rows(stamps))
    table = load_timeseries_csv(path, DEMAND_COLUMNS)
    assert len(table.gaps) == 1
    before, after = table.gaps[0]
    assert (before.hour, after.hour) == (3, 5)
    with pytest.raises(GapError) as excinfo:
        load_timeseries_csv(path, DEMAND_COLUMNS, strict=True)
    assert len(excinfo.value.gaps) == 1


def test_round_trip(tmp_path, rng):
    stamps = pd.date_range("2026-07-06", periods=48, freq="h")
    columns = {"demand_kw": rng.uniform(0.0, 5.0, size=48),
               "occupancy": rng.integers(0, 5, size=48).astype(float)}
    path = write_timeseries_csv(tmp_path / "out.csv", stamps, columns)
    table = load_timeseries_csv(path, DEMAND_COLUMNS)
    assert (table.timestamps == stamps).all()
    for name, values in columns.items():
        assert np.array_equal(table[name], values)
    assert list(table.to_frame().columns) == ["timestamp", *DEMAND_COLUMNS]
