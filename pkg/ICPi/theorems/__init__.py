from . import *
from .instances import *
from .conditions import *
from .theorem_checks import *
from .lemma_checks import *
from .evaluate import *
from .strategies import *
from .suites import *
from .CampaignRunner import *
