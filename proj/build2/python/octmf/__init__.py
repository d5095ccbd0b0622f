from ._octmf import *  # noqa: F401,F403
from ._octmf import __version__  # noqa: F401
