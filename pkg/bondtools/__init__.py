from . import graph as graphModule
from .graph import *
from . import numeric as numericModule
from .numeric import *
from . import embedding as embeddingModule
from .embedding import *
from . import domination as dominationModule
from .domination import *
from . import bondage as bondageModule
from .bondage import *
from . import bounds as boundsModule
from .bounds import *
from . import corpus as corpusModule
from .corpus import *
from . import harness as harnessModule
from .harness import *
from .__version__ import __version__

__all__ = (["__version__"] + graphModule.__all__ + numericModule.__all__ + embeddingModule.__all__
           + dominationModule.__all__ + bondageModule.__all__ + boundsModule.__all__
           + corpusModule.__all__ + harnessModule.__all__)

del graphModule
del numericModule
del embeddingModule
del dominationModule
del bondageModule
del boundsModule
del corpusModule
del harnessModule
