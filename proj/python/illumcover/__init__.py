"""Covering numbers of the flat torus and illumination numbers of polydiscs,
zonotopes and discrete zonoids."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
