"""Box uncertainty sets with a budget, and the robust penalty they induce.

For deviations ``delta`` and a budget ``gamma`` the robust penalty is

    max { delta . zeta : |zeta_l| <= 1, sum_l |zeta_l| <= gamma }
      = min { sum_l |Z_l| + gamma * max_l |W_l| : Z + W = delta },

i.e. the sum of the floor(gamma) largest |delta_l| plus the fractional part
of gamma times the next largest one. The closed form is what the optimizer
uses; the explicit split, the LP and the vertex enumeration are kept as
independent routes to the same number.

Date:
    10.19.2026

"""


__all__ = [
    "DEFAULT_DEVIATION",
    "UncertainParam",
    "RobustSplit",
    "robust_penalty",
    "robust_penalty_dual",
    "robust_penalty_lp",
    "robust_penalty_by_enumeration",
    "worst_case_perturbation",
    "perturbation_vertices",
    "linearize_abs",
    "is_abs_feasible",
    "perturb_worst_case",
]


import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import DomainError
from .series import HorizonSeries


DEFAULT_DEVIATION = 0.1


@dataclass(frozen=True)
class UncertainParam:
    """Nominal series, per-hour deviation magnitudes and a budget."""

    nominal: HorizonSeries
    deviation: np.ndarray
    budget: float = 0.0

    def __post_init__(self) -> None:
        dev = np.array(self.deviation, dtype=float).reshape(-1)
        if dev.shape[0] != self.nominal.horizon:
            raise DomainError(
                f"{dev.shape[0]} deviations for a horizon of {self.nominal.horizon}"
            )
        if np.any(dev < 0.0) or not np.all(np.isfinite(dev)):
            raise DomainError("deviations must be finite and non-negative")
        _check_budget(self.budget, dev.shape[0])
        dev.flags.writeable = False
        object.__setattr__(self, "deviation", dev)

    @property
    def size(self) -> int:
        """Number of uncertain entries, the largest admissible budget."""
        return self.deviation.shape[0]

    @classmethod
    def from_fraction(cls, nominal: HorizonSeries, fraction: float = DEFAULT_DEVIATION,
                      budget: float = 0.0) -> "UncertainParam":
        if not 0.0 <= fraction < 1.0:
            raise DomainError(f"deviation fraction must lie in [0, 1), got {fraction}")
        return cls(nominal, fraction * np.abs(nominal.values), budget)


@dataclass(frozen=True)
class RobustSplit:
    """An explicit ``Z + W = delta`` split and its penalty value."""

    z: np.ndarray
    w: np.ndarray
    value: float


def _check_budget(budget: float, size: int) -> None:
    if not (0.0 <= budget <= size) or math.isnan(budget):
        raise DomainError(f"budget {budget} outside [0, {size}]")


def _magnitudes(deviations: Sequence[float], budget: float) -> np.ndarray:
    mags = np.abs(np.asarray(deviations, dtype=float).reshape(-1))
    if not np.all(np.isfinite(mags)):
        raise DomainError("deviations must be finite")
    _check_budget(budget, mags.shape[0])
    return mags


def robust_penalty(deviations: Sequence[float], budget: float) -> float:
    """Worst-case increase of a linear term under a budgeted box."""
    mags = _magnitudes(deviations, budget)
    ordered = np.sort(mags)[::-1]
    whole = int(math.floor(budget))
    value = float(ordered[:whole].sum())
    if whole < ordered.shape[0]:
        value += (budget - whole) * float(ordered[whole])
    return value


def worst_case_perturbation(deviations: Sequence[float], budget: float) -> np.ndarray:
    """The perturbation ``zeta`` attaining ``robust_penalty``.

    The ``floor(budget)`` largest magnitudes get ``sign(delta)``, the next one
    gets the fractional part of the budget. Ties go to the earlier index.
    """
    delta = np.asarray(deviations, dtype=float).reshape(-1)
    mags = _magnitudes(delta, budget)
    order = np.argsort(-mags, kind="stable")
    whole = int(math.floor(budget))
    zeta = np.zeros_like(mags)
    signs = np.where(delta < 0.0, -1.0, 1.0)
    zeta[order[:whole]] = signs[order[:whole]]
    if whole < mags.shape[0]:
        zeta[order[whole]] = (budget - whole) * signs[order[whole]]
    return zeta


def robust_penalty_dual(deviations: Sequence[float], budget: float) -> RobustSplit:
    """An explicit optimal split of the deviations into ``Z`` and ``W``.

    The penalty of a split is ``sum|Z| + budget * max|W|``: ``Z`` is charged
    in full and ``W`` at the budget rate. With ``t`` the (floor(budget)+1)-th
    largest magnitude, or the smallest one when the budget covers every
    entry, ``Z`` holds the sign-preserved overflow of the top floor(budget)
    magnitudes above ``t`` and ``W`` the remainder, each entry clipped to
    ``t``. That split attains the closed-form penalty.
    """
    delta = np.asarray(deviations, dtype=float).reshape(-1)
    mags = _magnitudes(delta, budget)
    if mags.shape[0] == 0:
        return RobustSplit(np.zeros(0), np.zeros(0), 0.0)
    ordered = np.sort(mags)[::-1]
    whole = int(math.floor(budget))
    threshold = ordered[whole] if whole < ordered.shape[0] else ordered[-1]
    # |w| <= threshold everywhere; z is zero outside the top floor(budget) entries
    w = np.sign(delta) * np.minimum(mags, threshold)
    z = delta - w
    value = float(np.abs(z).sum() + budget * (np.abs(w).max() if w.size else 0.0))
    return RobustSplit(z, w, value)


def robust_penalty_lp(deviations: Sequence[float], budget: float) -> float:
    """The split formulation solved as a linear program.

    Variables are ``Z``, ``W``, ``s >= |Z|`` and ``t >= max|W|``; the
    objective is ``sum(s) + budget * t`` subject to ``Z + W = delta``.
    """
    delta = np.asarray(deviations, dtype=float).reshape(-1)
    _magnitudes(delta, budget)
    n = delta.shape[0]
    if n == 0:
        return 0.0
    eye = np.eye(n)
    zero = np.zeros((n, n))
    ones = np.ones((n, 1))
    zcol = np.zeros((n, 1))
    # Column order: Z, W, s, t.
    c = np.concatenate([np.zeros(2 * n), np.ones(n), [budget]])
    a_ub = np.block([
        [eye, zero, -eye, zcol],
        [-eye, zero, -eye, zcol],
        [zero, eye, zero, -ones],
        [zero, -eye, zero, -ones],
    ])
    b_ub = np.zeros(4 * n)
    a_eq = np.hstack([eye, eye, zero, zcol])
    bounds = [(None, None)] * (2 * n) + [(0, None)] * (n + 1)
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=delta,
                  bounds=bounds, method="highs")
    if not res.success:
        raise DomainError(f"robust split LP failed: {res.message}")
    return float(res.fun)


def perturbation_vertices(size: int, budget: float, signed: bool = True) -> Iterator[np.ndarray]:
    """Extreme points of ``{|zeta|_inf <= 1, |zeta|_1 <= budget}``.

    With ``signed=False`` only the non-negative orthant is enumerated, which
    suffices to maximize against magnitudes.
    """
    _check_budget(budget, size)
    whole = min(int(math.floor(budget)), size)
    frac = budget - whole if whole < size else 0.0
    sign_choices = (1.0, -1.0) if signed else (1.0,)
    for support in itertools.combinations(range(size), whole):
        rest = [l for l in range(size) if l not in support] if frac > 0.0 else [None]
        for extra in rest:
            n_signed = whole + (extra is not None)
            for signs in itertools.product(sign_choices, repeat=n_signed):
                zeta = np.zeros(size)
                for pos, s in zip(support, signs):
                    zeta[pos] = s
                if extra is not None:
                    zeta[extra] = frac * signs[-1]
                yield zeta


def robust_penalty_by_enumeration(deviations: Sequence[float], budget: float) -> float:
    """Brute-force maximum of ``|delta| . zeta`` over the polytope's vertices."""
    mags = _magnitudes(deviations, budget)
    vertices = np.array(list(perturbation_vertices(mags.shape[0], budget, signed=False)))
    if vertices.size == 0:
        return 0.0
    return float(np.max(vertices @ mags))


def linearize_abs(expr_value: float) -> float:
    """Tightest ``alpha`` with ``-alpha <= expr_value <= alpha``."""
    return abs(float(expr_value))


def is_abs_feasible(alpha: float, w: float) -> bool:
    return -alpha <= w <= alpha


def perturb_worst_case(param: UncertainParam) -> HorizonSeries:
    """Nominal plus deviation, the adversarial direction for costs."""
    return param.nominal.replace(param.nominal.values + param.deviation)
