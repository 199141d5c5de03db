"""sgquot: decision procedures for semigroups of left quotients.

Finite semigroups are Cayley tables; the package decides Green-relation
structure, starred relations and square cancellability, every
order-of-quotients notion (weak/left/straight/local/very-large, both
sides), *-pair embeddability and the straight-order conditions, and
machine-verifies the supporting claims on enumerated universes, curated
fixtures and three windowed symbolic infinite semigroups.
"""

__version__ = "0.1.0"

from .core import (
    EmptySeed,
    FiniteSemigroup,
    IndexOutOfRange,
    NotAssociative,
    NotClosed,
    OrderTooLarge,
    SemigroupError,
    SubSemigroup,
    adjoin_identity,
    canonical_table,
    closure,
    enumerate_semigroups,
    is_cancellative,
    is_left_reversible,
    is_right_reversible,
    make_semigroup,
    opposite,
)
from .relations import Relation

__all__ = [
    "EmptySeed",
    "FiniteSemigroup",
    "IndexOutOfRange",
    "NotAssociative",
    "NotClosed",
    "OrderTooLarge",
    "Relation",
    "SemigroupError",
    "SubSemigroup",
    "adjoin_identity",
    "canonical_table",
    "closure",
    "enumerate_semigroups",
    "is_cancellative",
    "is_left_reversible",
    "is_right_reversible",
    "make_semigroup",
    "opposite",
    "__version__",
]
