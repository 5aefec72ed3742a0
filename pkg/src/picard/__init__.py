"""Finite symmetric 2-groups, 2-rings and R-2-modules as explicit tables.

Every coherence law is an exhaustive check over the tables, and every
construction (kernels, cokernels, pips, copips, roots, coroots, images,
biproducts, endomorphism rings) builds new tables that must pass them.
"""

from .errors import PicardError
from .report import CheckEntry, CheckReport
from .search import SearchBudget

__version__ = "0.1.0"

__all__ = ["PicardError", "CheckEntry", "CheckReport", "SearchBudget", "__version__"]
