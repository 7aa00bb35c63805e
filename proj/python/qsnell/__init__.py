"""Snell law and reflection amplitudes for complex and quaternionic step potentials."""

from ._qsnell import *  # noqa: F401,F403
from ._qsnell import __doc__  # noqa: F401
