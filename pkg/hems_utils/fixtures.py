"""Building optimization cases from a run configuration.

The household history (demand, occupancy, weather, cooling) comes from the
configured CSV files or, when none are given, from the synthetic generator.
The ARX cooling model is fitted to it, the occupancy of the horizon is taken
from its hourly profile or from a forecast, and the desired demand is
derived from the baseline schedule.

Date:
    10.19.2026

"""


__all__ = [
    "HouseholdHistory",
    "load_history",
    "horizon_start",
    "horizon_index",
    "build_tariff",
    "fit_cooling_model",
    "case_config_from_run_config",
    "build_fixture",
]


import logging
from dataclasses import dataclass
import numpy as np
import pandas as pd

from hems.arx import ArxModel, arx_fit
from hems.case import CaseConfig
from hems.errors import CsvFormatError, MissingHistoryError, ValidationError
from hems.objectives import baseline_schedule, demand_breakdown
from hems.series import ApplianceSpec, HorizonSeries, Tariff, Unit
from hems.uncertainty import UncertainParam
from hems_ai.features import build_features
from hems_ai.forecast import fit_model, forecast_occupancy, resolve_kind

from .config import RunConfig
from .synthetic import COOLING_COLUMNS, DEMAND_COLUMNS, WEATHER_COLUMNS, generate_synthetic
from .timeseries import load_timeseries_csv


logger = logging.getLogger(__name__)


@dataclass
class HouseholdHistory:
    """Aligned hourly records of one household."""

    timestamps: pd.DatetimeIndex
    demand: np.ndarray
    occupancy: np.ndarray
    outdoor_temp: np.ndarray
    ac: np.ndarray
    setpoint: np.ndarray

    @property
    def hours(self) -> np.ndarray:
        return self.timestamps.hour.to_numpy()

    @property
    def occupancy_scale(self) -> float:
        top = float(self.occupancy.max())
        return top if top > 0.0 else 1.0

    def __len__(self) -> int:
        return self.demand.shape[0]

    def window(self, start: int, stop: int) -> "HouseholdHistory":
        """Records ``start`` up to but excluding ``stop``."""
        return HouseholdHistory(self.timestamps[start:stop], self.demand[start:stop],
                                self.occupancy[start:stop], self.outdoor_temp[start:stop],
                                self.ac[start:stop], self.setpoint[start:stop])


def load_history(rc: RunConfig) -> HouseholdHistory:
    paths = {name: rc.resolve(getattr(rc.data, name)) for name in ("demand", "weather", "cooling")}
    if all(p is None for p in paths.values()):
        data = generate_synthetic(rc.seed, days=rc.data.days)
        frames = {"demand": data.demand, "weather": data.weather, "cooling": data.cooling}
        tables = {name: (pd.DatetimeIndex(f["timestamp"]), f) for name, f in frames.items()}
    elif any(p is None for p in paths.values()):
        missing = [name for name, p in paths.items() if p is None]
        raise ValidationError(f"data files missing: {', '.join(missing)}")
    else:
        tables = {}
        for name, cols in (("demand", DEMAND_COLUMNS), ("weather", WEATHER_COLUMNS),
                           ("cooling", COOLING_COLUMNS)):
            table = load_timeseries_csv(paths[name], cols, strict=True)
            tables[name] = (table.timestamps, table.columns)
    stamps = tables["demand"][0]
    for name, (other, _) in tables.items():
        if len(other) != len(stamps) or not np.all(other == stamps):
            raise ValidationError(f"{name} timestamps do not match the demand file")
    return HouseholdHistory(
        stamps,
        np.asarray(tables["demand"][1]["demand_kw"], dtype=float),
        np.asarray(tables["demand"][1]["occupancy"], dtype=float),
        np.asarray(tables["weather"][1]["outdoor_temp_c"], dtype=float),
        np.asarray(tables["cooling"][1]["ac_kw"], dtype=float),
        np.asarray(tables["cooling"][1]["setpoint_c"], dtype=float),
    )


def horizon_index(clock: int, start_hour: int) -> int:
    """1-based horizon hour of a clock hour."""
    return (clock - start_hour) % 24 + 1


def build_tariff(rc: RunConfig) -> Tariff:
    t = rc.tariff
    clock = (rc.start_hour + np.arange(rc.horizon)) % 24
    if t.rates is not None:
        rates = np.asarray(t.rates, dtype=float)
    elif t.file is not None:
        path = rc.resolve(t.file)
        frame = pd.read_csv(path)
        if list(frame.columns) != ["hour", "rate"]:
            raise CsvFormatError(path, None, "expected header hour,rate")
        table = dict(zip(frame["hour"].astype(int), frame["rate"].astype(float)))
        missing = [int(h) for h in clock if int(h) not in table]
        if missing:
            raise CsvFormatError(path, None, f"no rate for clock hours {missing}")
        rates = np.array([table[int(h)] for h in clock])
    else:
        peak = (clock >= t.peak_start) & (clock <= t.peak_end)
        rates = np.where(peak, t.peak_rate, t.offpeak_rate)
    return Tariff(HorizonSeries(rates, Unit.PRICE), t.penalty_reward)


def fit_cooling_model(history: HouseholdHistory, rc: RunConfig) -> ArxModel:
    """ARX fit of the AC load; occupancy scaled like the optimizer's input."""
    scale = history.occupancy_scale if rc.household.normalize_occupancy else 1.0
    exog = {"outdoor_temp": history.outdoor_temp,
            "occupancy": history.occupancy / scale,
            "setpoint": history.setpoint}
    return arx_fit(history.ac, exog, rc.arx.lag_set)


def horizon_start(history: HouseholdHistory, rc: RunConfig) -> int:
    """Index of the first horizon hour in the history.

    The optimization day is the last one that starts at ``start_hour``, has
    the whole horizon recorded and at least one day of records before it.
    """
    idx = np.flatnonzero(history.hours == rc.start_hour)
    idx = idx[(idx >= 24) & (idx + rc.horizon <= len(history))]
    if idx.size == 0:
        raise MissingHistoryError(
            f"history has no {rc.horizon}-hour window from clock hour {rc.start_hour} "
            f"with a day of records before it"
        )
    return int(idx[-1])


def _horizon_occupancy(history: HouseholdHistory, rc: RunConfig, start: int) -> np.ndarray:
    scale = history.occupancy_scale if rc.household.normalize_occupancy else 1.0
    past = history.window(0, start)
    if rc.household.occupancy_source == "profile":
        clock = (rc.start_hour + np.arange(rc.horizon)) % 24
        return np.array([past.occupancy[past.hours == h].mean() for h in clock]) / scale
    fc = rc.forecast
    kind = resolve_kind(fc.model)
    options = fc.options()[kind]
    occupancy = build_features(past.demand, fc.lag_count, occupancy=past.occupancy,
                               hours=past.hours, test_fraction=fc.test_fraction)
    demand = build_features(past.demand, fc.lag_count, hours=past.hours,
                            test_fraction=fc.test_fraction)
    return forecast_occupancy(fit_model(kind, occupancy, fc.seed, **options), past.demand,
                              rc.horizon, lag_count=fc.lag_count, hours=past.hours,
                              demand_model=fit_model(kind, demand, fc.seed, **options),
                              normalize_by=scale).values


def case_config_from_run_config(rc: RunConfig, history: HouseholdHistory = None) -> CaseConfig:
    """Optimization case of the configured household on its last recorded day."""
    history = load_history(rc) if history is None else history
    H = rc.horizon
    start = horizon_start(history, rc)
    arx = fit_cooling_model(history, rc)
    outdoor = HorizonSeries(history.outdoor_temp[start:start + H], Unit.CELSIUS)
    occupancy = HorizonSeries(_horizon_occupancy(history, rc, start), Unit.PERSONS)
    warmup = tuple(history.ac[max(0, start - arx.max_lag):start])
    appliances = tuple(
        ApplianceSpec(a.name, a.power_kw, a.cycle_hours,
                      horizon_index(a.window_start, rc.start_hour),
                      horizon_index(a.window_end, rc.start_hour),
                      None if a.preferred_start is None
                      else horizon_index(a.preferred_start, rc.start_hour))
        for a in rc.appliances
    )
    tariff = build_tariff(rc)
    cfg = CaseConfig(
        tariff=tariff,
        appliances=appliances,
        non_shiftable=HorizonSeries.constant(rc.household.non_shiftable_kw, Unit.KW, H),
        miscellaneous=HorizonSeries.constant(rc.household.miscellaneous_kw, Unit.KW, H),
        desired_demand=HorizonSeries.constant(0.0, Unit.KW, H),
        occupancy=UncertainParam.from_fraction(occupancy, rc.uncertainty.deviation),
        arx=arx,
        outdoor_temp=outdoor,
        desired_temp=rc.comfort.desired_temp,
        dev_cap=rc.comfort.dev_cap,
        total_dev_cap=rc.comfort.total_dev_cap,
        demand_deviation=rc.demand_deviation,
        ac_warmup=warmup,
        start_hour=rc.start_hour,
    )
    base = demand_breakdown(baseline_schedule(cfg), cfg).demand
    clock = (rc.start_hour + np.arange(H)) % 24
    peak = (clock >= rc.tariff.peak_start) & (clock <= rc.tariff.peak_end)
    hh = rc.household
    desired = np.where(peak, hh.desired_peak_factor * base, base + hh.desired_headroom_kw)
    logger.info("case horizon=%d start=%d baseline_kwh=%.4g desired_kwh=%.4g",
                H, rc.start_hour, base.sum(), desired.sum())
    return cfg.with_changes(desired_demand=HorizonSeries(desired, Unit.KW))


def build_fixture(seed: int = 0) -> CaseConfig:
    """The reference household of the default configuration, from synthetic data."""
    return case_config_from_run_config(RunConfig(seed=seed))
