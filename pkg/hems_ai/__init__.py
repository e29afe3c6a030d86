"""Occupancy forecasting from household demand history."""


from .features import *
from .trees import *
from .models import *
from .ensembles import *
from .mlp import *
from .metrics import *
from .forecast import *
