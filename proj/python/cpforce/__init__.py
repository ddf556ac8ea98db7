"""Casimir-Polder shifts, forces and spin-flip rates near a slab."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
