"""Optimization cases built from run configurations.

Date:
    10.19.2026

"""


import numpy as np
import pytest
from numpy.testing import assert_allclose

from hems import *
from hems_utils import *


SMALL_GA = GaParams(pop_size=12, generations=6, seed=0)


@pytest.fixture(scope="module")
def fixture_case():
    return build_fixture(0)


def test_horizon_index():
    assert horizon_index(12, 12) == 1
    assert horizon_index(23, 12) == 12
    assert horizon_index(0, 12) == 13


def test_fixture_shape(fixture_case):
    assert fixture_case.horizon == 12
    assert fixture_case.start_hour == 12
    windows = [(a.name, a.window_start, a.window_end, a.preferred_start)
               for a in fixture_case.appliances]
    assert windows == [("dishwasher", 4, 11, 4), ("washer", 6, 12, 6)]
    assert_allclose(fixture_case.tariff.rate.values,
                    [0.12, 0.12] + [0.32] * 6 + [0.12] * 4)
    assert np.all(fixture_case.occupancy.nominal.values <= 1.0)


def test_fitted_cooling_responds_to_setpoint(fixture_case):
    assert fixture_case.arx.beta_for("setpoint")[0] < 0.0
    assert fixture_case.arx.alpha[0] < 0.0


def test_fixture_is_deterministic(fixture_case):
    again = build_fixture(0)
    assert_allclose(again.arx.beta, fixture_case.arx.beta)
    assert again.desired_demand == fixture_case.desired_demand


def test_case_a_on_fixture(fixture_case):
    demand = derive_demand(baseline_schedule(fixture_case), fixture_case).values
    expected = sum(c * p for c, p in zip(fixture_case.tariff.rate.values, demand))
    assert run_case("a", fixture_case).cost == pytest.approx(expected)


def test_demand_response_lowers_cost(fixture_case):
    a = run_case("a", fixture_case)
    c = run_case("c", fixture_case, ga_params=SMALL_GA)
    assert c.cost < a.cost


def test_sweep_b_on_fixture(fixture_case):
    sweep = budget_sweep(fixture_case, "b")
    assert len(sweep.rows) == 13
    assert sweep.monotone
    assert sweep.rows[0].cost == pytest.approx(run_case("a", fixture_case).cost)


def test_tariff_from_file(tmp_path):
    path = tmp_path / "rates.csv"
    path.write_text("hour,rate\n" + "".join(f"{h},{0.1 + 0.01 * h}\n" for h in range(24)))
    rc = RunConfig(tariff=TariffConfig(file=str(path)))
    assert_allclose(build_tariff(rc).rate.values, [0.1 + 0.01 * h for h in range(12, 24)])


def test_explicit_rates():
    rc = RunConfig(horizon=2, start_hour=20, appliances=(), tariff=TariffConfig(rates=(0.2, 0.1)))
    assert_allclose(build_tariff(rc).rate.values, [0.2, 0.1])


def test_history_from_files(tmp_path):
    generate_synthetic(4, days=3, out_dir=tmp_path)
    rc = RunConfig(data=DataConfig(demand=str(tmp_path / "demand.csv"),
                                   weather=str(tmp_path / "weather.csv"),
                                   cooling=str(tmp_path / "cooling.csv")))
    history = load_history(rc)
    assert history.demand.shape == (72,)
    assert horizon_start(history, rc) == 60
    assert history.window(0, 24).timestamps[-1].hour == 23


def test_history_needs_all_files(tmp_path):
    generate_synthetic(4, days=1, out_dir=tmp_path)
    rc = RunConfig(data=DataConfig(demand=str(tmp_path / "demand.csv")))
    with pytest.raises(ValidationError):
        load_history(rc)


def test_forecast_occupancy_source():
    rc = RunConfig(household=HouseholdConfig(occupancy_source="forecast"),
                   forecast=ForecastConfig(n_trees=10), data=DataConfig(days=7))
    cfg = case_config_from_run_config(rc)
    assert cfg.occupancy.nominal.horizon == 12
    assert np.all(cfg.occupancy.nominal.values >= 0.0)


def _history(seed=0, days=7):
    return load_history(RunConfig(seed=seed, data=DataConfig(days=days)))


def _with(history, **columns):
    values = {name: getattr(history, name) for name in
              ("timestamps", "demand", "occupancy", "outdoor_temp", "ac", "setpoint")}
    values.update(columns)
    return HouseholdHistory(**values)


def test_horizon_start_needs_a_full_day():
    rc = RunConfig()
    history = _history(days=7)
    assert horizon_start(history, rc) == 6 * 24 + 12
    with pytest.raises(MissingHistoryError):
        horizon_start(history.window(0, 36), rc)
    with pytest.raises(MissingHistoryError):
        horizon_start(history.window(0, 24 + 12 + 11), rc)


def test_horizon_weather_comes_from_the_history():
    rc = RunConfig(data=DataConfig(days=7))
    history = _history(days=7)
    start = horizon_start(history, rc)
    cfg = case_config_from_run_config(rc, history)
    assert_allclose(cfg.outdoor_temp.values, history.outdoor_temp[start:start + 12])

    hot = _with(history, outdoor_temp=history.outdoor_temp + 10.0)
    hot_cfg = case_config_from_run_config(rc, hot)
    assert_allclose(hot_cfg.outdoor_temp.values, cfg.outdoor_temp.values + 10.0)
    assert_allclose(hot_cfg.ac_warmup, history.ac[start - 1:start])


def test_forecast_ignores_the_horizon_day():
    rc = RunConfig(household=HouseholdConfig(occupancy_source="forecast"),
                   forecast=ForecastConfig(n_trees=10), data=DataConfig(days=7))
    history = _history(days=7)
    start = horizon_start(history, rc)
    demand = history.demand.copy()
    demand[start:] *= 5.0
    base = case_config_from_run_config(rc, history).occupancy.nominal.values
    changed = case_config_from_run_config(rc, _with(history, demand=demand)).occupancy.nominal.values
    assert_allclose(changed, base)
