"""Synthetic summer-weekday household data.

Date:
    10.19.2026

"""


import numpy as np
import pytest

from hems.errors import ValidationError
from hems_utils import *


def test_same_seed_same_files(tmp_path):
    a = generate_synthetic(3, out_dir=tmp_path / "a")
    b = generate_synthetic(3, out_dir=tmp_path / "b")
    assert sorted(a.paths) == ["cooling", "demand", "weather"]
    for name in a.paths:
        with open(a.paths[name], "rb") as fa, open(b.paths[name], "rb") as fb:
            assert fa.read() == fb.read()


def test_files_load_strictly(tmp_path):
    data = generate_synthetic(0, days=3, out_dir=tmp_path)
    table = load_timeseries_csv(data.paths["demand"], DEMAND_COLUMNS, strict=True)
    assert len(table) == 72
    np.testing.assert_array_equal(table["occupancy"], data.demand["occupancy"].to_numpy())
    assert len(load_timeseries_csv(data.paths["cooling"], COOLING_COLUMNS, strict=True)) == 72


def test_presence_dominates():
    occupancy = generate_synthetic(0).demand["occupancy"].to_numpy()
    assert set(np.unique(occupancy)) <= {0.0, 1.0, 2.0, 3.0, 4.0}
    assert np.mean(occupancy > 0) >= 0.8


def test_demand_follows_occupancy():
    demand = generate_synthetic(1).demand
    assert np.corrcoef(demand["demand_kw"], demand["occupancy"])[0, 1] >= 0.6


def test_afternoon_is_hottest():
    weather = generate_synthetic(2).weather
    by_hour = weather.groupby(weather["timestamp"].dt.hour)["outdoor_temp_c"].mean()
    assert 13 <= int(by_hour.idxmax()) <= 17


def test_cooling_is_non_negative():
    cooling = generate_synthetic(0).cooling
    assert (cooling["ac_kw"] >= 0.0).all()
    assert (cooling["setpoint_c"] >= 23.33).all()


def test_unknown_profile():
    with pytest.raises(ValidationError):
        generate_synthetic(0, profile="winter_weekend")
    with pytest.raises(ValidationError):
        generate_synthetic(0, days=0)
