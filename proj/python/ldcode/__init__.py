"""Location-domination invariants, associated graphs and extremal constructions."""

from ._ldcode import *  # noqa: F401,F403
from ._ldcode import __version__  # noqa: F401
