from . import *
from .json_utils import *
from .cache import *
from .write_campaign_csv import *
