"""Queen labelings of 1-regular digraphs and their products."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
