"""glab: an exact-arithmetic laboratory for group codes over finite rings.

The package builds finite rings and finite groups as dense operation
tables, forms their group algebras, and verifies structural laws about
one-sided ideals in them: duality, annihilators, idempotent splittings,
linear complementary pairs, and checkability. Everything is exhaustive
and exact at desk scale; nothing is sampled or approximated.
"""

from .errors import (ConstructionError, FalsificationError, GlabError,
                     ParseError, ScaleError)

__version__ = "0.1.0"

__all__ = [
    "ConstructionError",
    "FalsificationError",
    "GlabError",
    "ParseError",
    "ScaleError",
    "__version__",
]
