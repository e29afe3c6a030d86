"""Pareto dominance utilities for minimization problems.

Date:
    10.19.2026

"""


__all__ = [
    "dominates",
    "non_dominated_sort",
    "crowding_distance",
    "hypervolume",
    "pareto_mask",
]


from typing import Sequence

import numpy as np
from pymoo.indicators.hv import HV
from pymoo.operators.survival.rank_and_crowding.metrics import calc_crowding_distance
from pymoo.util.nds.non_dominated_sorting import NonDominatedSorting


def dominates(a: Sequence[float], b: Sequence[float]) -> bool:
    """``a`` is no worse than ``b`` everywhere and better somewhere."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return bool(np.all(a <= b) and np.any(a < b))


def non_dominated_sort(objectives) -> np.ndarray:
    """1-based Pareto rank of every point.

    Rank 1 is the non-dominated set; rank r is non-dominated once ranks
    below r are removed. Equal points share a rank.
    """
    F = np.asarray(objectives, dtype=float)
    if F.ndim == 1:
        F = F.reshape(-1, 1)
    ranks = np.zeros(F.shape[0], dtype=int)
    if F.shape[0] == 0:
        return ranks
    fronts = NonDominatedSorting().do(F)
    for rank, front in enumerate(fronts, start=1):
        ranks[front] = rank
    return ranks


def pareto_mask(objectives) -> np.ndarray:
    """Boolean mask of the non-dominated points."""
    return non_dominated_sort(objectives) == 1


def crowding_distance(objectives) -> np.ndarray:
    """Crowding distance within one front.

    Boundary points get infinity; the gaps are normalized by each
    objective's span and averaged over objectives.
    """
    F = np.asarray(objectives, dtype=float)
    if F.ndim == 1:
        F = F.reshape(-1, 1)
    if F.shape[0] == 0:
        return np.zeros(0)
    return np.asarray(calc_crowding_distance(F), dtype=float)


def hypervolume(objectives, reference_point: Sequence[float]) -> float:
    """Volume dominated by the points and bounded by the reference point."""
    ref = np.asarray(reference_point, dtype=float)
    F = np.asarray(objectives, dtype=float).reshape(-1, ref.shape[0])
    F = F[np.all(F < ref, axis=1)]
    if F.shape[0] == 0:
        return 0.0
    value = HV(ref_point=ref)(F)
    return float(value) if value is not None else 0.0
