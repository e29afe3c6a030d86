"""Feasibility checks for appliance cycles and AC setpoints.

The checkers return a verdict with the list of violated rules instead of
raising; repair and penalty policy belong to the search layer.

Date:
    10.19.2026

"""


__all__ = [
    "FEASIBILITY_TOL",
    "Violation",
    "ConstraintReport",
    "check_shift_constraints",
    "check_ac_constraints",
]


from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .case import CaseConfig
from .errors import DomainError
from .series import ApplianceSpec, HorizonSeries


FEASIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class Violation:
    """One violated rule. ``hour`` is 1-based when the rule is hourly."""

    rule: str
    subject: str
    message: str
    hour: Optional[int] = None


@dataclass
class ConstraintReport:
    feasible: bool = True
    violations: List[Violation] = field(default_factory=list)

    def add(self, violation: Violation) -> None:
        self.violations.append(violation)
        self.feasible = False

    def __bool__(self) -> bool:
        return self.feasible


def check_shift_constraints(u: np.ndarray,
                            appliances: Sequence[ApplianceSpec]) -> ConstraintReport:
    """Cycle length, contiguity and window rules for every appliance.

    Contiguity follows the recursion
    ``u[h+1] >= u[h] / N * (N - sum_{tau <= h} u[tau])``: once switched on, an
    appliance stays on until its cycle of ``N`` hours is complete.
    """
    u = np.asarray(u)
    if u.ndim == 1:
        u = u.reshape(1, -1)
    if u.shape[0] != len(appliances):
        raise DomainError(f"{u.shape[0]} rows for {len(appliances)} appliances")
    report = ConstraintReport()
    H = u.shape[1]
    for s, spec in enumerate(appliances):
        row = u[s]
        n = spec.cycle_len
        total = int(row.sum())
        if total != n:
            report.add(Violation(
                "cycle_length", spec.name, f"on for {total} h, cycle needs {n} h"
            ))
        cumulative = np.cumsum(row)
        for h in range(H - 1):
            required = row[h] / n * (n - cumulative[h])
            if row[h + 1] < required - FEASIBILITY_TOL:
                report.add(Violation(
                    "contiguity", spec.name,
                    f"switched off at hour {h + 2} before completing its cycle", h + 2
                ))
        for h in np.flatnonzero(row):
            hour = int(h) + 1
            if hour < spec.window_start:
                report.add(Violation(
                    "window_start", spec.name,
                    f"on at hour {hour}, window opens at {spec.window_start}", hour
                ))
            elif hour > spec.window_end:
                report.add(Violation(
                    "window_end", spec.name,
                    f"on at hour {hour}, window closes at {spec.window_end}", hour
                ))
    return report


def check_ac_constraints(setpoints: HorizonSeries, cfg: CaseConfig) -> ConstraintReport:
    """Per-hour cap, total cap and no-overcooling rules on the setpoints."""
    report = ConstraintReport()
    deviation = np.asarray(setpoints, dtype=float) - cfg.desired_temp
    for h, dev in enumerate(deviation, start=1):
        if abs(dev) > cfg.dev_cap + FEASIBILITY_TOL:
            report.add(Violation(
                "deviation_cap", "setpoint",
                f"deviation {dev:.3f} °C exceeds {cfg.dev_cap} °C", h
            ))
        if dev < -FEASIBILITY_TOL:
            report.add(Violation(
                "overcooling", "setpoint",
                f"setpoint {cfg.desired_temp + dev:.2f} °C below desired {cfg.desired_temp} °C", h
            ))
    total = float(np.abs(deviation).sum())
    if total > cfg.total_dev_cap + FEASIBILITY_TOL:
        report.add(Violation(
            "total_deviation_cap", "setpoint",
            f"total deviation {total:.3f} °C exceeds {cfg.total_dev_cap} °C"
        ))
    return report
