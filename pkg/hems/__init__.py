"""Robust home energy management: appliance scheduling and AC setpoints."""


from .errors import *
from .series import *
from .arx import *
from .loads import *
from .uncertainty import *
from .case import *
from .constraints import *
from .objectives import *
from .pareto import *
from .moga import *
from .scenarios import *
