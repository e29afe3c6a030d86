"""Decomposition of the household load.

Date:
    10.19.2026

"""


__all__ = ["LoadDecomposition", "decompose_load"]


from typing import NamedTuple

import numpy as np

from .errors import DomainError


class LoadDecomposition(NamedTuple):
    """Total demand and its non-AC (internal) part, in kW."""

    demand: float
    internal: float


def decompose_load(shift: float, n_shift: float, mis: float, ac: float) -> LoadDecomposition:
    """Total demand of one hour from its four load categories.

    ``demand = shift + n_shift + mis + ac`` and ``internal = demand - ac``.
    Works elementwise on numpy arrays as well.
    """
    parts = {"shift": shift, "n_shift": n_shift, "mis": mis, "ac": ac}
    for name, value in parts.items():
        if np.any(np.asarray(value) < 0.0):
            raise DomainError(f"{name} load must be non-negative, got {value}")
    internal = shift + n_shift + mis
    return LoadDecomposition(internal + ac, internal)
