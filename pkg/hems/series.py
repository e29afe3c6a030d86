"""Hourly horizon series and the household's physical/economic types.

Date:
    10.19.2026

"""


__all__ = [
    "DEFAULT_HORIZON",
    "Unit",
    "HorizonSeries",
    "ApplianceSpec",
    "Tariff",
]


from dataclasses import dataclass, field
from enum import Enum
from numbers import Number
from typing import Optional, Sequence, Union

import numpy as np

from .errors import DomainError


DEFAULT_HORIZON = 12


class Unit(str, Enum):
    """Physical unit carried by a ``HorizonSeries``."""

    KW = "kW"
    PERSONS = "persons"
    PRICE = "$/kWh"
    CELSIUS = "°C"


_NON_NEGATIVE = (Unit.KW, Unit.PERSONS)


class HorizonSeries:
    """A fixed-length vector with one value per hour of the horizon.

    The values are stored in a read-only numpy array; the series is
    immutable after construction.

    Arguments:
        values -- One value per hour.
        unit -- One of the ``Unit`` members (or its string value).

    Keyword Arguments:
        horizon -- If given, the length must equal it exactly.
    """

    __slots__ = ("_values", "_unit")

    def __init__(self,
                 values: Union[Sequence[Number], np.ndarray],
                 unit: Union[Unit, str],
                 *,
                 horizon: Optional[int] = None) -> None:
        arr = np.array(values, dtype=float).reshape(-1)
        unit = Unit(unit)
        if horizon is not None and arr.shape[0] != horizon:
            raise DomainError(
                f"series has {arr.shape[0]} values, horizon is {horizon}"
            )
        if not np.all(np.isfinite(arr)):
            raise DomainError(f"{unit.value} series contains non-finite values")
        if unit in _NON_NEGATIVE and np.any(arr < 0.0):
            raise DomainError(f"{unit.value} series must be non-negative")
        arr.flags.writeable = False
        self._values = arr
        self._unit = unit

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def unit(self) -> Unit:
        return self._unit

    @property
    def horizon(self) -> int:
        return self._values.shape[0]

    def __len__(self) -> int:
        return self._values.shape[0]

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._values
        return self._values.astype(dtype)

    def __iter__(self):
        return iter(self._values.tolist())

    def __getitem__(self, idx):
        return self._values[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HorizonSeries):
            return NotImplemented
        return self._unit == other._unit and np.array_equal(self._values, other._values)

    def __hash__(self) -> int:
        return hash((self._unit, self._values.tobytes()))

    def __repr__(self) -> str:
        vals = ", ".join(f"{v:.4g}" for v in self._values)
        return f"HorizonSeries([{vals}], unit='{self._unit.value}')"

    def replace(self, values: Union[Sequence[Number], np.ndarray]) -> "HorizonSeries":
        """Return a series with the same unit and new values."""
        return HorizonSeries(values, self._unit, horizon=self.horizon)

    @classmethod
    def constant(cls, value: Number, unit: Union[Unit, str],
                 horizon: int = DEFAULT_HORIZON) -> "HorizonSeries":
        return cls(np.full(horizon, float(value)), unit)


@dataclass(frozen=True)
class ApplianceSpec:
    """A shiftable load with a contiguous operating cycle.

    Hours are 1-based horizon indices. ``preferred_start`` is the start the
    household uses without a demand-response contract.
    """

    name: str
    power: float
    cycle_len: int
    window_start: int
    window_end: int
    preferred_start: Optional[int] = field(default=None)

    def __post_init__(self) -> None:
        if self.power < 0.0:
            raise DomainError(f"{self.name}: power must be non-negative")
        if self.window_start < 1 or self.window_end < self.window_start:
            raise DomainError(
                f"{self.name}: window [{self.window_start}, {self.window_end}] is empty"
            )
        span = self.window_end - self.window_start + 1
        if not 1 <= self.cycle_len <= span:
            raise DomainError(
                f"{self.name}: cycle of {self.cycle_len} h does not fit window of {span} h"
            )
        if self.preferred_start is None:
            object.__setattr__(self, "preferred_start", self.window_start)
        elif not self.window_start <= self.preferred_start <= self.latest_start:
            raise DomainError(
                f"{self.name}: preferred start {self.preferred_start} outside "
                f"[{self.window_start}, {self.latest_start}]"
            )

    @property
    def latest_start(self) -> int:
        return self.window_end - self.cycle_len + 1

    def starts(self) -> range:
        """All admissible start hours."""
        return range(self.window_start, self.latest_start + 1)

    def check_horizon(self, horizon: int) -> None:
        if self.window_end > horizon:
            raise DomainError(
                f"{self.name}: window end {self.window_end} exceeds horizon {horizon}"
            )


@dataclass(frozen=True)
class Tariff:
    """Hourly energy rate and the constant demand-response penalty/reward."""

    rate: HorizonSeries
    penalty_reward: float = 0.0

    def __post_init__(self) -> None:
        if self.rate.unit is not Unit.PRICE:
            raise DomainError(f"tariff rate must be in $/kWh, got {self.rate.unit.value}")
        if np.any(self.rate.values <= 0.0):
            raise DomainError("tariff rates must be strictly positive")
        if self.penalty_reward < 0.0:
            raise DomainError("penalty/reward price must be non-negative")

    @property
    def horizon(self) -> int:
        return self.rate.horizon
