"""Configuration, data files, synthetic data, reports and the command line."""


from .timeseries import *
from .config import *
from .synthetic import *
from .fixtures import *
from .reports import *
