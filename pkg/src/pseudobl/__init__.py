"""Pseudo hoops, pseudo BL- and pseudo MV-algebras: finite tables, filters,
quotients, inequality schemas, computable infinite examples and model search."""

__version__ = "0.1.0"

from .core import FiniteAlgebra, Profile, load_algebra, read_algebra, validate_axioms  # noqa: F401
from .filters import Filter, all_filters, in_mnp  # noqa: F401
