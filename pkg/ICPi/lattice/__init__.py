from . import *
from .subgroup_set import *
from .normal_subgroups import *
from .chief_factors import *
from .subgroups import *
