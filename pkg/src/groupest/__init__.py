"""Minimum estimation error for group transformations under an energy
constraint: exact curves, asymptotic expansions, optimal input states, and
Monte-Carlo validation of sampling-plus-maximum-likelihood protocols."""

from . import groups, legendre, mathieu, simulate, spectra
from .errors import GroupestError

__version__ = "0.1.0"

__all__ = ["groups", "legendre", "mathieu", "simulate", "spectra",
           "GroupestError", "__version__"]
