from . import *
from .group_spec import *
from .named_groups import *
from .epimorphism import *
from .products import *
from .quotient import *
from .group_file import *
from .corpus import *
from .labels import *
