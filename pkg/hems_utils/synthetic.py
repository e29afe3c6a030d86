"""Synthetic household data for a summer weekday.

Occupancy follows the time of day: nights at home, frequent absences in
working hours, a full house in the evening. Demand responds to occupancy,
and the AC load follows an autoregressive response to the outdoor
temperature, the occupancy and the setpoint.

Date:
    10.19.2026

"""


__all__ = [
    "PROFILES",
    "DEMAND_COLUMNS",
    "WEATHER_COLUMNS",
    "COOLING_COLUMNS",
    "SyntheticData",
    "generate_synthetic",
]


import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

import numpy as np
import pandas as pd

from exterior_variables import OutdoorTemperature
from hems.case import DESIRED_TEMP
from hems.errors import ValidationError

from .timeseries import write_timeseries_csv


logger = logging.getLogger(__name__)


PROFILES = ("summer_weekday",)

DEMAND_COLUMNS = ("demand_kw", "occupancy")
WEATHER_COLUMNS = ("outdoor_temp_c",)
COOLING_COLUMNS = ("ac_kw", "setpoint_c")


@dataclass
class SyntheticData:
    demand: pd.DataFrame
    weather: pd.DataFrame
    cooling: pd.DataFrame
    paths: Dict[str, str] = field(default_factory=dict)


def _occupancy(hours: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    n = hours.shape[0]
    night = rng.integers(3, 5, size=n)
    day = np.where(rng.random(n) < 0.3, 0, rng.integers(1, 3, size=n))
    evening = rng.integers(2, 5, size=n)
    occ = np.where((hours >= 8) & (hours <= 17), day, night)
    return np.where((hours >= 18) & (hours <= 21), evening, occ).astype(float)


def generate_synthetic(seed: int = 0,
                       profile: str = "summer_weekday",
                       days: int = 28,
                       out_dir: Optional[Union[str, os.PathLike]] = None,
                       start: str = "2026-07-06") -> SyntheticData:
    """Hourly demand, occupancy, weather and cooling records.

    With ``out_dir`` the three tables are written as ``demand.csv``,
    ``weather.csv`` and ``cooling.csv``.
    """
    if profile not in PROFILES:
        raise ValidationError(f"unknown profile {profile!r}, expected one of {', '.join(PROFILES)}")
    if days < 1:
        raise ValidationError(f"days must be positive, got {days}")
    rng = np.random.default_rng(seed)
    n = 24 * days
    weather = OutdoorTemperature("outdoor", pd.Timestamp(start).to_pydatetime(), n,
                                 noise=0.5, seed=int(rng.integers(2 ** 31 - 1)))
    timestamps = weather.timestamps
    hours = timestamps.hour.to_numpy()
    occ = _occupancy(hours, rng)
    setpoint = DESIRED_TEMP + rng.uniform(0.0, 2.0, size=n)

    ac = np.zeros(n)
    prev = 1.0
    noise = rng.normal(0.0, 0.02, size=n)
    for t in range(n):
        value = 0.5 * prev + 0.06 * weather.data[t] + 0.2 * occ[t] - 0.06 * setpoint[t] + noise[t]
        ac[t] = prev = max(value, 0.0)
    demand = np.maximum(ac + 0.5 * occ + 0.3 + rng.normal(0.0, 0.1, size=n), 0.0)

    data = SyntheticData(
        demand=pd.DataFrame({"timestamp": timestamps, "demand_kw": demand, "occupancy": occ}),
        weather=weather.to_frame(),
        cooling=pd.DataFrame({"timestamp": timestamps, "ac_kw": ac, "setpoint_c": setpoint}),
    )
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        for name, frame, cols in (("demand", data.demand, DEMAND_COLUMNS),
                                  ("weather", data.weather, WEATHER_COLUMNS),
                                  ("cooling", data.cooling, COOLING_COLUMNS)):
            path = os.path.join(str(out_dir), f"{name}.csv")
            data.paths[name] = write_timeseries_csv(path, frame["timestamp"],
                                                    {c: frame[c] for c in cols})
        logger.info("synthetic profile=%s seed=%d days=%d written to %s", profile, seed, days, out_dir)
    return data
