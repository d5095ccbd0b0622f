import os as _os

# point the library at the packaged data unless the caller overrides it
_data = _os.path.join(_os.path.dirname(_os.path.abspath(__file__)), "data")
if _os.path.isdir(_data):
    _os.environ.setdefault("OCTMF_DATA", _data)

from ._octmf import *  # noqa: F401,F403,E402
from ._octmf import __version__  # noqa: F401,E402
