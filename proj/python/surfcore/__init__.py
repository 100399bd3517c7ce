"""Exact lattice computations on resolution graphs of normal surface singularities."""

from ._surfcore import *  # noqa: F401,F403
from ._surfcore import InputError, PreconditionError, TheoremViolation  # noqa: F401

__version__ = "0.1.0"
