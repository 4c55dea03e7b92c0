"""Power semigroups of finite groups and embeddings of inverse semigroups into them."""

from .kernels import BACKEND
from .semigroup import (
    AssociativityError,
    ClassFlags,
    FiniteSemigroup,
    GroupFacts,
    IdempotentPoset,
    NotInverseError,
    ObstructionReport,
    ParseError,
    SemigroupError,
    Subset,
    class_flags,
    class_h_obstructions,
    conjugated,
    group_facts,
    idempotent_poset,
    incomparable,
    inverse_of,
    maximal_subgroup,
    parse_semigroup,
    regular_witnesses,
    serialize,
)
from .hyperspace import (
    PowerSemigroup,
    SubsetClassification,
    SubsetMap,
    classify_subset,
    power_semigroup,
    regular_oracle,
    subgroups,
    subset_product,
    union_tighten,
)
from .morphism import Morphism

__version__ = "0.1.0"
