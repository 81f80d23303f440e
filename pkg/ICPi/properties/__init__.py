from . import *
from .report import *
from .products_permute import *
from .pi_property import *
from .classical import *
