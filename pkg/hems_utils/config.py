"""Run configuration.

A run is described by one JSON (or YAML) document. Every section has
defaults matching the reference household: a 12-hour horizon from noon,
deviation fraction 0.1, budgets 0..H and a desired temperature of 23.33 °C.
Unknown entries, wrong types, out-of-range values and missing files raise
``ConfigError`` naming the dotted field and, when known, its line.

Date:
    10.19.2026

"""


__all__ = [
    "TariffConfig",
    "ApplianceConfig",
    "DEFAULT_APPLIANCES",
    "UncertaintyConfig",
    "ComfortConfig",
    "HouseholdConfig",
    "ArxConfig",
    "GaConfig",
    "ForecastConfig",
    "DataConfig",
    "RunConfig",
    "load_config",
    "config_to_dict",
    "validate_run_config",
]


import logging
import os
from typing import Annotated, Any, Dict, Literal, Optional, Sequence, Tuple, Union

import pydantic
import yaml
from pydantic import BaseModel, ConfigDict, Field

from hems.case import DESIRED_TEMP, DEVIATION_CAP, TOTAL_DEVIATION_CAP
from hems.errors import ConfigError, ConfigPathError, HemsError
from hems.moga import GaParams
from hems.series import DEFAULT_HORIZON
from hems.uncertainty import DEFAULT_DEVIATION
from hems_ai.models import KINDS
from hems_ai.trees import resolve_max_features


logger = logging.getLogger(__name__)


ClockHour = Annotated[int, Field(ge=0, le=23)]
Fraction = Annotated[float, Field(ge=0.0, lt=1.0)]
NonNegative = Annotated[float, Field(ge=0.0)]
Positive = Annotated[float, Field(gt=0.0)]


def _dotted(loc: Sequence[Union[str, int]]) -> str:
    name = ""
    for part in loc:
        if isinstance(part, int):
            name += f"[{part}]"
        else:
            name = f"{name}.{part}" if name else str(part)
    return name or "<document>"


def _config_error(exc: pydantic.ValidationError) -> ConfigError:
    err = exc.errors()[0]
    message = "unknown entry" if err["type"] == "extra_forbidden" else err["msg"]
    return ConfigError(_dotted(err["loc"]), message)


class _Section(BaseModel):
    """Frozen, closed configuration section raising ``ConfigError``."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    def __init__(self, **data: Any) -> None:
        try:
            super().__init__(**data)
        except pydantic.ValidationError as exc:
            raise _config_error(exc) from None


class TariffConfig(_Section):
    """Time-of-use tariff.

    ``rates`` (one per horizon hour) or ``file`` (CSV ``hour,rate`` over
    clock hours) override the two-level peak/off-peak tariff.
    """

    rates: Optional[Tuple[Positive, ...]] = None
    file: Optional[str] = None
    peak_start: ClockHour = 14
    peak_end: ClockHour = 19
    peak_rate: Positive = 0.32
    offpeak_rate: Positive = 0.12
    penalty_reward: NonNegative = 0.05


class ApplianceConfig(_Section):
    """A shiftable appliance; window and start hours are clock hours."""

    name: str
    power_kw: NonNegative
    cycle_hours: Annotated[int, Field(ge=1)]
    window_start: ClockHour
    window_end: ClockHour
    preferred_start: Optional[ClockHour] = None


DEFAULT_APPLIANCES = (
    ApplianceConfig(name="dishwasher", power_kw=0.5, cycle_hours=2,
                    window_start=15, window_end=22, preferred_start=15),
    ApplianceConfig(name="washer", power_kw=1.5, cycle_hours=2,
                    window_start=17, window_end=23, preferred_start=17),
)


class UncertaintyConfig(_Section):
    """Deviation fractions and the budgets of a sweep; ``budgets`` defaults
    to every integer budget ``0..H``."""

    deviation: Fraction = DEFAULT_DEVIATION
    demand_deviation: Optional[Fraction] = None
    budgets: Optional[Tuple[NonNegative, ...]] = None


class ComfortConfig(_Section):
    desired_temp: float = DESIRED_TEMP
    dev_cap: Positive = DEVIATION_CAP
    total_dev_cap: Positive = TOTAL_DEVIATION_CAP


class HouseholdConfig(_Section):
    """Fixed loads and the desired demand profile.

    Desired demand is ``desired_peak_factor`` times the baseline demand in
    peak hours and the baseline plus ``desired_headroom_kw`` otherwise.
    ``occupancy_source`` is ``profile`` (hourly means of the history) or
    ``forecast`` (the configured regressor).
    """

    non_shiftable_kw: NonNegative = 0.4
    miscellaneous_kw: NonNegative = 0.2
    desired_peak_factor: NonNegative = 0.8
    desired_headroom_kw: float = 2.0
    normalize_occupancy: bool = True
    occupancy_source: Literal["profile", "forecast"] = "profile"


class ArxConfig(_Section):
    lag_set: Tuple[Annotated[int, Field(ge=1)], ...] = Field(default=(1,), min_length=1)


class GaConfig(_Section):
    pop_size: Annotated[int, Field(ge=4)] = 100
    generations: Annotated[int, Field(ge=1)] = 300
    crossover_rate: Annotated[float, Field(ge=0.0, le=1.0)] = 0.9
    mutation_rate: Optional[Annotated[float, Field(ge=0.0, le=1.0)]] = None
    setpoint_sigma: Positive = 0.5
    setpoint_levels: Optional[Tuple[NonNegative, ...]] = None
    tournament_size: Annotated[int, Field(ge=1)] = 2
    n_jobs: int = 1

    def to_params(self, seed: int) -> GaParams:
        return GaParams(seed=seed, **self.model_dump())


class ForecastConfig(_Section):
    model: str = "random_forest"
    lag_count: Annotated[int, Field(ge=1)] = 13
    test_fraction: Fraction = 0.2
    n_trees: Annotated[int, Field(ge=1)] = 400
    max_features: Union[int, float, str] = "auto"
    gbm_trees: Annotated[int, Field(ge=1)] = 400
    learning_rate: Positive = 0.1
    num_leaves: Annotated[int, Field(ge=2)] = 31
    mlp_max_iter: Annotated[int, Field(ge=1)] = 4000
    seed: Annotated[int, Field(ge=0)] = 42

    def options(self) -> Dict[str, dict]:
        return {
            "random_forest": {"n_trees": self.n_trees, "max_features": self.max_features},
            "gbm": {"n_trees": self.gbm_trees, "learning_rate": self.learning_rate,
                    "num_leaves": self.num_leaves},
            "mlp": {"max_iter": self.mlp_max_iter},
        }


class DataConfig(_Section):
    """Input CSV files; missing ones are generated from the run seed."""

    demand: Optional[str] = None
    weather: Optional[str] = None
    cooling: Optional[str] = None
    days: Annotated[int, Field(ge=1)] = 28


class RunConfig(_Section):
    horizon: Annotated[int, Field(ge=1)] = DEFAULT_HORIZON
    start_hour: ClockHour = 12
    seed: Annotated[int, Field(ge=0)] = 0
    tariff: TariffConfig = TariffConfig()
    appliances: Tuple[ApplianceConfig, ...] = DEFAULT_APPLIANCES
    uncertainty: UncertaintyConfig = UncertaintyConfig()
    comfort: ComfortConfig = ComfortConfig()
    household: HouseholdConfig = HouseholdConfig()
    arx: ArxConfig = ArxConfig()
    ga: GaConfig = GaConfig()
    forecast: ForecastConfig = ForecastConfig()
    data: DataConfig = DataConfig()
    source: Optional[str] = None

    def __init__(self, **data: Any) -> None:
        super().__init__(**data)
        validate_run_config(self)

    @property
    def base_dir(self) -> str:
        return os.path.dirname(os.path.abspath(self.source)) if self.source else os.getcwd()

    def resolve(self, path: Optional[str]) -> Optional[str]:
        if path is None or os.path.isabs(path):
            return path
        return os.path.join(self.base_dir, path)

    @property
    def demand_deviation(self) -> float:
        dev = self.uncertainty.demand_deviation
        return self.uncertainty.deviation if dev is None else dev

    @property
    def budgets(self) -> Tuple[float, ...]:
        """Sweep budgets; every integer budget of the horizon by default."""
        if self.uncertainty.budgets is None:
            return tuple(float(g) for g in range(self.horizon + 1))
        return self.uncertainty.budgets


def _require(ok: bool, name: str, message: str) -> None:
    if not ok:
        raise ConfigError(name, message)


def _in_horizon_clock(hour: int, cfg: RunConfig) -> bool:
    return 0 <= (hour - cfg.start_hour) % 24 < cfg.horizon


def validate_run_config(cfg: RunConfig) -> None:
    """Checks across fields and file existence; raises ``ConfigError``."""
    H = cfg.horizon
    t = cfg.tariff
    if t.rates is not None:
        _require(len(t.rates) == H, "tariff.rates", f"{len(t.rates)} rates for horizon {H}")
    _require(t.peak_start <= t.peak_end, "tariff.peak_start", "peak_start must not follow peak_end")

    for i, a in enumerate(cfg.appliances):
        for attr in ("window_start", "window_end", "preferred_start"):
            hour = getattr(a, attr)
            if hour is not None:
                _require(_in_horizon_clock(hour, cfg), f"appliances[{i}].{attr}",
                         f"clock hour {hour} outside the horizon")

    _require(all(g <= H for g in cfg.budgets), "uncertainty.budgets",
             f"budgets must lie in [0, {H}]")

    _require(cfg.forecast.model in KINDS or cfg.forecast.model == "rf", "forecast.model",
             f"expected one of {', '.join(KINDS)}, got {cfg.forecast.model!r}")
    try:
        resolve_max_features(cfg.forecast.max_features)
    except HemsError as exc:
        raise ConfigError("forecast.max_features", str(exc)) from None
    try:
        cfg.ga.to_params(cfg.seed)
    except HemsError as exc:
        raise ConfigError("ga", str(exc)) from None

    files = [("tariff.file", t.file)] + [(f"data.{name}", getattr(cfg.data, name))
                                          for name in ("demand", "weather", "cooling")]
    for name, path in files:
        if path is not None and not os.path.isfile(cfg.resolve(path)):
            raise ConfigPathError(name, cfg.resolve(path))


def _line_index(node, prefix: str = "", index: Optional[Dict[str, int]] = None) -> Dict[str, int]:
    index = {} if index is None else index
    if isinstance(node, yaml.MappingNode):
        for key, value in node.value:
            name = f"{prefix}.{key.value}" if prefix else str(key.value)
            index[name] = key.start_mark.line + 1
            _line_index(value, name, index)
    elif isinstance(node, yaml.SequenceNode):
        for i, item in enumerate(node.value):
            name = f"{prefix}[{i}]"
            index[name] = item.start_mark.line + 1
            _line_index(item, name, index)
    return index


def load_config(path: Union[str, os.PathLike]) -> RunConfig:
    """Parse and validate a run configuration file.

    Relative file paths are resolved against the directory of the file.
    """
    path = str(path)
    if not os.path.isfile(path):
        raise ConfigPathError("<config>", path)
    with open(path) as f:
        text = f.read()
    try:
        data = yaml.safe_load(text)
        lines = _line_index(yaml.compose(text)) if text.strip() else {}
    except yaml.MarkedYAMLError as exc:
        line = exc.problem_mark.line + 1 if exc.problem_mark is not None else None
        raise ConfigError("<document>", exc.problem or "cannot parse", line=line) from None
    except yaml.YAMLError as exc:
        raise ConfigError("<document>", str(exc)) from None
    data = {} if data is None else data
    if not isinstance(data, dict):
        raise ConfigError("<document>", f"expected a mapping, got {type(data).__name__}", line=1)
    if "source" in data:
        raise ConfigError("source", "unknown entry", line=lines.get("source"))
    try:
        cfg = RunConfig(source=os.path.abspath(path), **{str(k): v for k, v in data.items()})
    except ConfigError as exc:
        line = lines.get(exc.field) or lines.get(exc.field.split(".")[0].split("[")[0])
        if type(exc) is ConfigError and exc.line is None and line is not None:
            raise ConfigError(exc.field, exc.message, line=line) from None
        raise
    logger.info("config=%s horizon=%d seed=%d", path, cfg.horizon, cfg.seed)
    return cfg


def config_to_dict(cfg: RunConfig) -> dict:
    """Plain nested dictionary, for echoing the configuration in reports."""
    return cfg.model_dump(mode="json")
