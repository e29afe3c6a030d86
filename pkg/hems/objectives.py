"""Objective values of the four case formulations.

Case a: deterministic cost without demand response.
Case b: robust cost without demand response.
Case c: deterministic (mismatch, discomfort, cost) with demand response.
Case d: robust counterpart of case c.

Date:
    10.19.2026

"""


__all__ = [
    "DemandProfile",
    "demand_breakdown",
    "derive_demand",
    "baseline_schedule",
    "cost_case_a",
    "robust_cost_case_b",
    "robust_purchase_case_b",
    "demand_mismatch",
    "discomfort",
    "drp_cost",
    "objectives_case_c",
    "objectives_case_d",
]


import logging
from dataclasses import dataclass

import numpy as np

from .arx import arx_predict
from .case import CaseConfig, ObjectiveVector, Schedule
from .errors import DomainError
from .loads import decompose_load
from .series import HorizonSeries, Tariff, Unit
from .uncertainty import robust_penalty, worst_case_perturbation


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DemandProfile:
    """Hourly load categories of one schedule, all in kW."""

    shift: np.ndarray
    non_shift: np.ndarray
    mis: np.ndarray
    ac: np.ndarray
    demand: np.ndarray
    internal: np.ndarray


def _exogenous(schedule: Schedule, cfg: CaseConfig, occupancy: np.ndarray = None):
    occ = cfg.occupancy.nominal.values if occupancy is None else occupancy
    exog = {
        "outdoor_temp": cfg.outdoor_temp.values,
        "occupancy": occ,
        "setpoint": schedule.setpoints.values,
    }
    pad = cfg.arx.max_lag
    warm = {name: np.repeat(values[0], pad) for name, values in exog.items()}
    return exog, warm


def demand_breakdown(schedule: Schedule, cfg: CaseConfig,
                     occupancy: np.ndarray = None) -> DemandProfile:
    """Shiftable, fixed and AC loads of a schedule; AC follows the ARX model.

    ``occupancy`` overrides the nominal occupancy (used to evaluate
    perturbed scenarios).
    """
    if schedule.u.shape != (cfg.n_appliances, cfg.horizon):
        raise DomainError(
            f"schedule is {schedule.u.shape}, case needs {(cfg.n_appliances, cfg.horizon)}"
        )
    powers = np.array([spec.power for spec in cfg.appliances], dtype=float)
    shift = powers @ schedule.u if cfg.n_appliances else np.zeros(cfg.horizon)
    exog, warm = _exogenous(schedule, cfg, occupancy)
    ac = np.zeros(cfg.horizon)
    for h in range(1, cfg.horizon + 1):
        ac[h - 1] = arx_predict(cfg.arx, ac[:h - 1], exog, h,
                                warmup=cfg.ac_warmup, exog_warmup=warm)
    split = decompose_load(shift, cfg.non_shiftable.values, cfg.miscellaneous.values, ac)
    return DemandProfile(shift, cfg.non_shiftable.values, cfg.miscellaneous.values,
                         ac, split.demand, split.internal)


def derive_demand(schedule: Schedule, cfg: CaseConfig) -> HorizonSeries:
    """Hourly demand ``p^d`` of a schedule."""
    return HorizonSeries(demand_breakdown(schedule, cfg).demand, Unit.KW)


def baseline_schedule(cfg: CaseConfig) -> Schedule:
    """Appliances at their preferred start, setpoints at the desired temperature."""
    u = np.zeros((cfg.n_appliances, cfg.horizon), dtype=np.int8)
    for s, spec in enumerate(cfg.appliances):
        start = spec.preferred_start - 1
        u[s, start:start + spec.cycle_len] = 1
    setpoints = HorizonSeries.constant(cfg.desired_temp, Unit.CELSIUS, cfg.horizon)
    return Schedule(u, setpoints)


def cost_case_a(demand: HorizonSeries, tariff: Tariff) -> float:
    """Energy cost with purchased power equal to demand."""
    demand = np.asarray(demand, dtype=float)
    if demand.shape[0] != tariff.horizon:
        raise DomainError(f"demand covers {demand.shape[0]} hours, tariff {tariff.horizon}")
    return float(np.dot(tariff.rate.values, demand))


def _check_budgets(cfg: CaseConfig, gamma_d: float, gamma_occ: float) -> None:
    for name, gamma in (("demand", gamma_d), ("occupancy", gamma_occ)):
        if not 0.0 <= gamma <= cfg.horizon:
            raise DomainError(f"{name} budget {gamma} outside [0, {cfg.horizon}]")


def _occupancy_coupling(cfg: CaseConfig) -> np.ndarray:
    # delta_h = sum_k beta_{k,occ} * dOcc_{h-k+1}; occupancy before the
    # horizon is observed, so it carries no deviation.
    beta = cfg.arx.beta_for("occupancy")
    dev = cfg.occupancy.deviation
    H = cfg.horizon
    delta = np.zeros(H)
    for i, k in enumerate(cfg.arx.lag_set):
        shifted = np.zeros(H)
        shifted[k - 1:] = dev[:H - k + 1] if k <= H else 0.0
        delta += beta[i] * shifted
    return delta


def _case_b_terms(cfg: CaseConfig, gamma_d: float, gamma_occ: float):
    _check_budgets(cfg, gamma_d, gamma_occ)
    demand = demand_breakdown(baseline_schedule(cfg), cfg).demand
    rate = cfg.tariff.rate.values
    d_demand = cfg.demand_deviation * demand
    d_occ = np.abs(_occupancy_coupling(cfg))
    return demand, rate, d_demand, d_occ


def robust_cost_case_b(cfg: CaseConfig, gamma_d: float, gamma_occ: float) -> float:
    """Robust energy cost of the baseline schedule.

    Nominal cost plus the budgeted worst-case increase caused by demand
    deviations and by occupancy deviations propagated through the ARX
    occupancy coefficients.
    """
    demand, rate, d_demand, d_occ = _case_b_terms(cfg, gamma_d, gamma_occ)
    nominal = float(np.dot(rate, demand))
    cost = (nominal
            + robust_penalty(rate * d_demand, gamma_d)
            + robust_penalty(rate * d_occ, gamma_occ))
    logger.debug("case_b gamma_d=%s gamma_occ=%s nominal=%.6g robust=%.6g",
                 gamma_d, gamma_occ, nominal, cost)
    return cost


def robust_purchase_case_b(cfg: CaseConfig, gamma_d: float, gamma_occ: float) -> HorizonSeries:
    """Hourly purchased power at the binding robust right-hand side.

    ``p^u >= p^d`` holds hour by hour and ``rate . p^u`` equals the robust cost.
    """
    demand, rate, d_demand, d_occ = _case_b_terms(cfg, gamma_d, gamma_occ)
    zeta_d = worst_case_perturbation(rate * d_demand, gamma_d)
    zeta_occ = worst_case_perturbation(rate * d_occ, gamma_occ)
    return HorizonSeries(demand + zeta_d * d_demand + zeta_occ * d_occ, Unit.KW)


def demand_mismatch(demand, desired) -> float:
    """Excess of demand over desired demand; hours below desired count zero."""
    excess = np.asarray(demand, dtype=float) - np.asarray(desired, dtype=float)
    return float(np.maximum(excess, 0.0).sum())


def discomfort(setpoints, desired_temp: float, occupancy) -> float:
    """Setpoint deviation above desired, weighted by occupancy."""
    dev = np.asarray(setpoints, dtype=float) - desired_temp
    return float(np.dot(dev, np.asarray(occupancy, dtype=float)))


def drp_cost(demand, desired, tariff: Tariff) -> float:
    """Energy cost plus the demand-response penalty (or reward when negative)."""
    demand = np.asarray(demand, dtype=float)
    excess = demand - np.asarray(desired, dtype=float)
    return float(np.dot(tariff.rate.values, demand) + tariff.penalty_reward * excess.sum())


def objectives_case_c(schedule: Schedule, cfg: CaseConfig) -> ObjectiveVector:
    demand = demand_breakdown(schedule, cfg).demand
    return ObjectiveVector(
        demand_mismatch(demand, cfg.desired_demand.values),
        discomfort(schedule.setpoints.values, cfg.desired_temp, cfg.occupancy.nominal.values),
        drp_cost(demand, cfg.desired_demand.values, cfg.tariff),
    )


def objectives_case_d(schedule: Schedule, cfg: CaseConfig,
                      gamma_d: float, gamma_occ: float) -> ObjectiveVector:
    """Robust counterparts of the case-c objectives.

    Demand deviations are ``demand_deviation`` times the schedule's own
    demand. Occupancy deviations enter the discomfort through the current
    setpoint deviation.
    """
    _check_budgets(cfg, gamma_d, gamma_occ)
    demand = demand_breakdown(schedule, cfg).demand
    nominal = ObjectiveVector(
        demand_mismatch(demand, cfg.desired_demand.values),
        discomfort(schedule.setpoints.values, cfg.desired_temp, cfg.occupancy.nominal.values),
        drp_cost(demand, cfg.desired_demand.values, cfg.tariff),
    )
    d_demand = cfg.demand_deviation * demand
    d_comfort = cfg.occupancy.deviation * (schedule.setpoints.values - cfg.desired_temp)
    return ObjectiveVector(
        nominal.o1 + robust_penalty(d_demand, gamma_d),
        nominal.o2 + robust_penalty(d_comfort, gamma_occ),
        nominal.o3 + robust_penalty(cfg.tariff.rate.values * d_demand, gamma_d),
    )
