"""Spectral densities of Jacobi matrices a_n = sqrt(n) + c_n with diagonal b_n."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
