"""Exact handle homology of compact manifolds.

Thin package wrapper around the compiled extension module.
"""

from ._handlehom import *  # noqa: F401,F403
from ._handlehom import __doc__  # noqa: F401
