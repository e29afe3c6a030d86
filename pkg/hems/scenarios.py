"""Case studies, the diagonal budget sweep and schedule comparison.

Date:
    10.19.2026

"""


__all__ = [
    "CASES",
    "Transfer",
    "TransferReport",
    "CaseReport",
    "SweepRow",
    "SweepResult",
    "cost_decreases",
    "clock_hour",
    "verify_schedule",
    "compare_schedules",
    "run_case",
    "budget_sweep",
]


import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from .case import CaseConfig, ObjectiveVector, Schedule
from .constraints import check_ac_constraints, check_shift_constraints
from .errors import InfeasibleScheduleError, ValidationError
from .moga import GaParams, HistoryRow, decode, evolve, select_solution
from .objectives import (
    baseline_schedule,
    cost_case_a,
    derive_demand,
    robust_cost_case_b,
    robust_purchase_case_b,
)
from .series import ApplianceSpec, HorizonSeries, Unit
from .uncertainty import worst_case_perturbation


logger = logging.getLogger(__name__)


CASES = ("a", "b", "c", "d")


class Transfer(NamedTuple):
    appliance: str
    from_hour: int
    to_hour: int
    power: float


@dataclass
class TransferReport:
    """Moved ON-hours of each appliance, one row per moved hour."""

    rows: List[Transfer] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def total_kw(self, appliance: Optional[str] = None) -> float:
        return float(sum(r.power for r in self.rows
                         if appliance is None or r.appliance == appliance))


@dataclass
class CaseReport:
    case: str
    budgets: Tuple[float, float]
    cost: float
    schedule: Schedule
    baseline: Schedule
    purchased: HorizonSeries
    objectives: Optional[ObjectiveVector] = None
    transfers: TransferReport = field(default_factory=TransferReport)
    history: List[HistoryRow] = field(default_factory=list)
    front_size: int = 0


class SweepRow(NamedTuple):
    gamma: float
    cost: float
    starts: Tuple[int, ...]
    total_deviation: float


@dataclass
class SweepResult:
    case: str
    rows: List[SweepRow]
    anomalies: List[Tuple[float, float]] = field(default_factory=list)

    @property
    def monotone(self) -> bool:
        return not self.anomalies


def cost_decreases(rows: Sequence[SweepRow], tol: float = 1e-9) -> List[Tuple[float, float]]:
    """Consecutive budget pairs at which the cost drops."""
    return [(prev.gamma, row.gamma) for prev, row in zip(rows, rows[1:])
            if row.cost < prev.cost - tol]


def clock_hour(hour: int, start_hour: int) -> int:
    """Clock hour (0-23) of a 1-based horizon hour."""
    return (start_hour + hour - 1) % 24


def verify_schedule(schedule: Schedule, cfg: CaseConfig) -> None:
    """Raise ``InfeasibleScheduleError`` unless both constraint checkers pass."""
    violations = (check_shift_constraints(schedule.u, cfg.appliances).violations
                  + check_ac_constraints(schedule.setpoints, cfg).violations)
    if violations:
        detail = "; ".join(f"{v.subject}: {v.message}" for v in violations)
        raise InfeasibleScheduleError(f"schedule violates {len(violations)} constraint(s): {detail}")


def compare_schedules(baseline: Schedule,
                      optimized: Schedule,
                      appliances: Sequence[ApplianceSpec],
                      start_hour: Optional[int] = None) -> TransferReport:
    """Pair the hours an appliance left with the hours it took, earliest first.

    Hours are reported as horizon indices, or as clock hours when
    ``start_hour`` is given.
    """
    report = TransferReport()
    for s, spec in enumerate(appliances):
        before = set(baseline.on_hours(s))
        after = set(optimized.on_hours(s))
        removed = sorted(before - after)
        added = sorted(after - before)
        for src, dst in zip(removed, added):
            if start_hour is not None:
                src, dst = clock_hour(src, start_hour), clock_hour(dst, start_hour)
            report.rows.append(Transfer(spec.name, src, dst, float(spec.power)))
    return report


def _robust_purchase_case_d(schedule: Schedule, cfg: CaseConfig, gamma_d: float) -> HorizonSeries:
    demand = derive_demand(schedule, cfg).values
    d_demand = cfg.demand_deviation * demand
    zeta = worst_case_perturbation(cfg.tariff.rate.values * d_demand, gamma_d)
    return HorizonSeries(demand + zeta * d_demand, Unit.KW)


def run_case(case: str,
             cfg: CaseConfig,
             budgets: Tuple[float, float] = (0.0, 0.0),
             ga_params: GaParams = None) -> CaseReport:
    """Run one of the four case studies.

    Cases a and b price the baseline schedule. Cases c and d run the genetic
    algorithm and report the selected front member. The same seed is used
    for both GA cases so that case d at zero budgets reproduces case c.
    """
    if case not in CASES:
        raise ValidationError(f"unknown case {case!r}, expected one of {', '.join(CASES)}")
    budgets = (float(budgets[0]), float(budgets[1]))
    baseline = baseline_schedule(cfg)

    if case == "a":
        demand = derive_demand(baseline, cfg)
        report = CaseReport(case, budgets, cost_case_a(demand, cfg.tariff), baseline, baseline, demand)
    elif case == "b":
        report = CaseReport(case, budgets, robust_cost_case_b(cfg, *budgets), baseline, baseline,
                            robust_purchase_case_b(cfg, *budgets))
    else:
        result = evolve(cfg, case, budgets, ga_params)
        chosen = select_solution(result.front)
        schedule = decode(chosen.chromosome, cfg)
        if case == "c":
            purchased = derive_demand(schedule, cfg)
        else:
            purchased = _robust_purchase_case_d(schedule, cfg, budgets[0])
        report = CaseReport(
            case, budgets, float(chosen.objectives.o3), schedule, baseline, purchased,
            objectives=ObjectiveVector(*map(float, chosen.objectives)),
            transfers=compare_schedules(baseline, schedule, cfg.appliances, cfg.start_hour),
            history=result.history,
            front_size=len(result.front),
        )
    verify_schedule(report.schedule, cfg)
    logger.info("case=%s budgets=%s cost=%.6g", case, budgets, report.cost)
    return report


def _sweep_row(case: str, cfg: CaseConfig, gamma: float, ga_params: GaParams) -> SweepRow:
    report = run_case(case, cfg, (gamma, gamma), ga_params)
    starts = tuple(int(report.schedule.on_hours(s)[0]) for s in range(cfg.n_appliances))
    deviation = float(np.sum(report.schedule.setpoints.values - cfg.desired_temp))
    return SweepRow(float(gamma), report.cost, starts, deviation)


def budget_sweep(cfg: CaseConfig,
                 case: str = "b",
                 gammas: Sequence[float] = None,
                 ga_params: GaParams = None,
                 n_jobs: int = 1) -> SweepResult:
    """Cost along the diagonal ``gamma_d = gamma_occ = gamma``.

    Decreases in cost between consecutive budgets are kept as anomalies.
    """
    if case not in ("b", "d"):
        raise ValidationError(f"budget sweeps run cases 'b' and 'd', got {case!r}")
    gammas = list(range(cfg.horizon + 1)) if gammas is None else [float(g) for g in gammas]
    for gamma in gammas:
        if not 0.0 <= gamma <= cfg.horizon:
            raise ValidationError(f"budget {gamma} outside [0, {cfg.horizon}]")
    if n_jobs == 1:
        rows = [_sweep_row(case, cfg, g, ga_params) for g in gammas]
    else:
        rows = Parallel(n_jobs=n_jobs)(delayed(_sweep_row)(case, cfg, g, ga_params) for g in gammas)

    result = SweepResult(case, rows, cost_decreases(rows))
    for prev, row in zip(rows, rows[1:]):
        if (prev.gamma, row.gamma) in result.anomalies:
            logger.warning("sweep case=%s cost decreased from %.6g at gamma=%g to %.6g at gamma=%g",
                           case, prev.cost, prev.gamma, row.cost, row.gamma)
    return result
