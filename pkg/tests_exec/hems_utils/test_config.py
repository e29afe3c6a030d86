"""Run configuration loading and validation.

Date:
    10.19.2026

"""


import json
import os

import pytest

from hems.errors import ConfigError, ConfigPathError
from hems_utils import *


BUNDLED = os.path.join(os.path.dirname(__file__), "..", "..", "configs", "summer_weekday.json")


def _write(tmp_path, text, name="run.json"):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_defaults():
    rc = RunConfig()
    assert rc.horizon == 12
    assert rc.uncertainty.deviation == 0.1
    assert rc.uncertainty.budgets is None
    assert rc.budgets == tuple(float(g) for g in range(13))
    assert rc.comfort.desired_temp == 23.33
    assert rc.demand_deviation == 0.1


def test_minimal_document(tmp_path):
    rc = load_config(_write(tmp_path, "{}"))
    assert rc.horizon == 12
    assert rc.uncertainty.deviation == 0.1
    assert rc.source == os.path.abspath(tmp_path / "run.json")


def test_bundled_config_loads():
    rc = load_config(BUNDLED)
    assert [a.name for a in rc.appliances] == ["dishwasher", "washer"]
    assert rc.arx.lag_set == (1,)
    assert rc.ga.to_params(rc.seed).pop_size == 100


def test_zero_horizon(tmp_path):
    with pytest.raises(ConfigError) as excinfo:
        load_config(_write(tmp_path, json.dumps({"horizon": 0})))
    assert excinfo.value.field == "horizon"
    assert excinfo.value.line == 1


def test_missing_tariff_file(tmp_path):
    with pytest.raises(ConfigPathError) as excinfo:
        load_config(_write(tmp_path, json.dumps({"tariff": {"file": "rates.csv"}})))
    assert excinfo.value.field == "tariff.file"
    assert excinfo.value.path.endswith("rates.csv")


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigPathError):
        load_config(tmp_path / "absent.json")


def test_parse_error_has_line(tmp_path):
    text = '{\n  "horizon": 12,\n  "seed": [1, 2\n}\n'
    with pytest.raises(ConfigError) as excinfo:
        load_config(_write(tmp_path, text))
    assert excinfo.value.line in (3, 4)


def test_unknown_entry_names_field_and_line(tmp_path):
    text = '{\n  "ga": {\n    "popsize": 10\n  }\n}\n'
    with pytest.raises(ConfigError) as excinfo:
        load_config(_write(tmp_path, text))
    assert excinfo.value.field == "ga.popsize"
    assert excinfo.value.line == 3


def test_wrong_type(tmp_path):
    with pytest.raises(ConfigError) as excinfo:
        load_config(_write(tmp_path, json.dumps({"seed": "zero"})))
    assert excinfo.value.field == "seed"


def test_invalid_values():
    with pytest.raises(ConfigError) as excinfo:
        RunConfig(uncertainty={"deviation": 1.0})
    assert excinfo.value.field == "uncertainty.deviation"

    washer = ApplianceConfig(name="washer", power_kw=1.5, cycle_hours=2, window_start=3, window_end=5)
    with pytest.raises(ConfigError) as excinfo:
        RunConfig(appliances=(washer,))
    assert excinfo.value.field == "appliances[0].window_start"

    with pytest.raises(ConfigError) as excinfo:
        RunConfig(ga={"pop_size": 3})
    assert excinfo.value.field == "ga.pop_size"

    with pytest.raises(ConfigError) as excinfo:
        RunConfig(ga={"pop_size": 5})
    assert excinfo.value.field == "ga"


def test_relative_paths_follow_the_config(tmp_path):
    generate_synthetic(0, days=2, out_dir=tmp_path)
    document = {"data": {"demand": "demand.csv", "weather": "weather.csv", "cooling": "cooling.csv"}}
    rc = load_config(_write(tmp_path, json.dumps(document)))
    assert rc.resolve(rc.data.demand) == os.path.join(str(tmp_path), "demand.csv")


def test_config_echo():
    echoed = config_to_dict(RunConfig())
    assert echoed["horizon"] == 12
    assert echoed["tariff"]["peak_rate"] == 0.32


def test_section_errors_name_the_entry():
    with pytest.raises(ConfigError) as excinfo:
        UncertaintyConfig(deviation=-0.1)
    assert excinfo.value.field == "deviation"


def test_negative_seed(tmp_path):
    with pytest.raises(ConfigError) as excinfo:
        load_config(_write(tmp_path, json.dumps({"seed": -1})))
    assert excinfo.value.field == "seed"


def test_budgets_follow_the_horizon(tmp_path):
    document = {"horizon": 6, "start_hour": 16, "appliances": []}
    rc = load_config(_write(tmp_path, json.dumps(document)))
    assert rc.budgets == (0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0)

    with pytest.raises(ConfigError) as excinfo:
        RunConfig(horizon=6, start_hour=16, appliances=(), uncertainty={"budgets": [0, 7]})
    assert excinfo.value.field == "uncertainty.budgets"


def test_clock_hours_stay_on_the_clock():
    with pytest.raises(ConfigError) as excinfo:
        RunConfig(tariff={"peak_start": 25})
    assert excinfo.value.field == "tariff.peak_start"

    with pytest.raises(ConfigError) as excinfo:
        RunConfig(appliances=({"name": "washer", "power_kw": 1.5, "cycle_hours": 2,
                               "window_start": 36, "window_end": 23},))
    assert excinfo.value.field == "appliances[0].window_start"


def test_unknown_max_features(tmp_path):
    with pytest.raises(ConfigError) as excinfo:
        load_config(_write(tmp_path, json.dumps({"forecast": {"max_features": "bogus"}})))
    assert excinfo.value.field == "forecast.max_features"
    assert RunConfig(forecast={"max_features": 0.5}).forecast.max_features == 0.5


def test_unknown_occupancy_source():
    with pytest.raises(ConfigError) as excinfo:
        RunConfig(household={"occupancy_source": "guess"})
    assert excinfo.value.field == "household.occupancy_source"
