"""Shared fixtures: a small case factory and the enumerable toy instance.

Date:
    10.19.2026

"""


import numpy as np
import pytest

from hems import *


def make_case(horizon=4,
              rates=None,
              appliances=None,
              occupancy=None,
              outdoor=30.0,
              non_shiftable=0.5,
              miscellaneous=0.2,
              desired=100.0,
              alpha=0.0,
              beta_temp=0.1,
              beta_occ=0.2,
              beta_set=-0.1,
              occupancy_fraction=0.1,
              penalty_reward=0.05,
              demand_deviation=0.1,
              ac_warmup=(0.0,),
              **changes):
    """A ``CaseConfig`` with a single-lag ARX model and constant fixed loads."""
    H = horizon
    rates = np.linspace(0.3, 0.1, H) if rates is None else rates
    occupancy = np.full(H, 2.0) if occupancy is None else occupancy
    if appliances is None:
        appliances = (ApplianceSpec("washer", 1.0, 2, 1, H),)

    def series(value, unit):
        value = np.asarray(value, dtype=float)
        if value.ndim == 0:
            return HorizonSeries.constant(float(value), unit, H)
        return HorizonSeries(value, unit, horizon=H)

    arx = ArxModel.from_coefficients([alpha], outdoor_temp=[beta_temp],
                                     occupancy=[beta_occ], setpoint=[beta_set])
    return CaseConfig(
        tariff=Tariff(series(rates, Unit.PRICE), penalty_reward),
        appliances=tuple(appliances),
        non_shiftable=series(non_shiftable, Unit.KW),
        miscellaneous=series(miscellaneous, Unit.KW),
        desired_demand=series(desired, Unit.KW),
        occupancy=UncertainParam.from_fraction(series(occupancy, Unit.PERSONS), occupancy_fraction),
        arx=arx,
        outdoor_temp=series(outdoor, Unit.CELSIUS),
        demand_deviation=demand_deviation,
        ac_warmup=ac_warmup,
        **changes,
    )


def make_toy_case():
    """Two appliances over four hours; unequal tariffs, occupied only at the end.

    Setpoint levels above a whole-degree desired temperature keep the
    discomfort values exact.
    """
    return make_case(
        desired_temp=23.0,
        horizon=4,
        rates=[0.30, 0.10, 0.20, 0.15],
        appliances=(ApplianceSpec("washer", 1.0, 2, 1, 4),
                    ApplianceSpec("dishwasher", 0.5, 1, 2, 4)),
        occupancy=[0.0, 0.0, 3.0, 3.0],
    )


@pytest.fixture
def case_factory():
    return make_case


@pytest.fixture
def toy_case():
    return make_toy_case()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
