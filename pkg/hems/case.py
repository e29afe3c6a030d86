"""Decision variables and the data of one home/day optimization case.

Date:
    10.19.2026

"""


__all__ = [
    "DESIRED_TEMP",
    "DEVIATION_CAP",
    "TOTAL_DEVIATION_CAP",
    "Schedule",
    "CaseConfig",
    "ObjectiveVector",
]


from dataclasses import dataclass, replace
from typing import NamedTuple, Tuple

import numpy as np

from .arx import ArxModel
from .errors import DomainError
from .series import ApplianceSpec, HorizonSeries, Tariff, Unit
from .uncertainty import DEFAULT_DEVIATION, UncertainParam


DESIRED_TEMP = 23.33
DEVIATION_CAP = 5.22
TOTAL_DEVIATION_CAP = 19.44


@dataclass(frozen=True)
class Schedule:
    """Appliance on/off flags ``u[s, h]`` and hourly AC setpoints."""

    u: np.ndarray
    setpoints: HorizonSeries

    def __post_init__(self) -> None:
        u = np.array(self.u, dtype=np.int8)
        if u.ndim == 1:
            u = u.reshape(1, -1)
        if u.ndim != 2:
            raise DomainError("on/off matrix must be two-dimensional")
        if not np.all((u == 0) | (u == 1)):
            raise DomainError("on/off matrix entries must be 0 or 1")
        if self.setpoints.unit is not Unit.CELSIUS:
            raise DomainError("setpoints must be in °C")
        if u.shape[1] != self.setpoints.horizon:
            raise DomainError(
                f"on/off matrix covers {u.shape[1]} hours, setpoints {self.setpoints.horizon}"
            )
        u.flags.writeable = False
        object.__setattr__(self, "u", u)

    @property
    def horizon(self) -> int:
        return self.setpoints.horizon

    def on_hours(self, s: int) -> Tuple[int, ...]:
        """1-based hours at which appliance ``s`` is on."""
        return tuple(int(h) + 1 for h in np.flatnonzero(self.u[s]))


@dataclass(frozen=True)
class CaseConfig:
    """Everything the objectives need about the home and the day.

    ``ac_warmup`` holds AC loads before the horizon (last element is hour 0);
    exogenous inputs before the horizon repeat their first value.
    ``demand_deviation`` is the multiplicative box half-width applied to the
    demand each candidate schedule produces.
    """

    tariff: Tariff
    appliances: Tuple[ApplianceSpec, ...]
    non_shiftable: HorizonSeries
    miscellaneous: HorizonSeries
    desired_demand: HorizonSeries
    occupancy: UncertainParam
    arx: ArxModel
    outdoor_temp: HorizonSeries
    desired_temp: float = DESIRED_TEMP
    dev_cap: float = DEVIATION_CAP
    total_dev_cap: float = TOTAL_DEVIATION_CAP
    demand_deviation: float = DEFAULT_DEVIATION
    ac_warmup: Tuple[float, ...] = ()
    start_hour: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "appliances", tuple(self.appliances))
        object.__setattr__(self, "ac_warmup", tuple(float(v) for v in self.ac_warmup))
        H = self.tariff.horizon
        for name in ("non_shiftable", "miscellaneous", "desired_demand", "outdoor_temp"):
            series = getattr(self, name)
            if series.horizon != H:
                raise DomainError(f"{name} covers {series.horizon} hours, tariff {H}")
        if self.occupancy.nominal.horizon != H:
            raise DomainError(f"occupancy covers {self.occupancy.nominal.horizon} hours, tariff {H}")
        for spec in self.appliances:
            spec.check_horizon(H)
        if self.dev_cap <= 0.0 or self.total_dev_cap <= 0.0:
            raise DomainError("setpoint deviation caps must be positive")
        if not 0.0 <= self.demand_deviation < 1.0:
            raise DomainError(f"demand deviation must lie in [0, 1), got {self.demand_deviation}")

    @property
    def horizon(self) -> int:
        return self.tariff.horizon

    @property
    def n_appliances(self) -> int:
        return len(self.appliances)

    def with_changes(self, **changes) -> "CaseConfig":
        return replace(self, **changes)


class ObjectiveVector(NamedTuple):
    """Demand mismatch (kW), discomfort (°C·persons) and cost ($)."""

    o1: float
    o2: float
    o3: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=float)
