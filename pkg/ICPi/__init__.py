import logging

from . import utils
from . import perm
from . import constructions
from . import lattice
from . import characteristic
from . import properties
from . import theorems
from .settings import ENGINE_VERSION, params


stream_handler = logging.StreamHandler()
stream_handler.setLevel(logging.WARNING)
logging.getLogger(__name__).addHandler(stream_handler)

__author__ = "ICPi developers"
__version__ = ENGINE_VERSION
__copyright__ = "Copyright (C) ICPi developers"
__license__ = "GNU General Public License 3.0"
