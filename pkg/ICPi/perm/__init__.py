from . import *
from .permutation import *
from .stabilizer_chain import *
from .group import *
from .element_sets import *
