"""Exact computations with the higher tetrahedral algebras Lambda(m, lambda).

The package builds these algebras from their quiver and relations over a
prime field or the rationals, and checks the structural facts about them:
dimension, symmetry, the path identities, periodicity of simple modules,
the bimodule resolution and the related families of algebras.
"""

from .path_algebra import Presentation, normal_form, quotient_basis, tetrahedral_relations
from .scalars import Field, Scalar

__version__ = "0.1.0"

__all__ = ["Field", "Scalar", "Presentation", "tetrahedral_relations", "quotient_basis",
           "normal_form", "__version__"]
