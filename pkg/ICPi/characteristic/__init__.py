from . import *
from .primes import *
from .closures import *
from .sylow import *
from .radicals import *
from .hypercenter import *
from .classify import *
from .tower import *
