"""Coherent lower previsions with exchangeability, in exact rational arithmetic.

All numeric values cross the boundary as exact "p/q" strings; convert with
fractions.Fraction when arithmetic is needed on the Python side.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
