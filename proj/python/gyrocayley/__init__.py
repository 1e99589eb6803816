"""Finite gyrogroups, their Cayley graphs, and structure-theorem checks."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
