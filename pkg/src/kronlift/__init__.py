"""Exact topological generation in ``R^n x T^m`` with number-field coordinates."""

from .errors import (
    InputError,
    InternalVerificationFailed,
    KronliftError,
    PreconditionViolated,
)
from .gentest import (
    GenerationVerdict,
    closure,
    density_oracle,
    extract_irredundant,
    generates,
    generates_torus,
    irredundant_witness,
    is_dense_with,
    redundancy_rank,
)
from .group import (
    ClosedSubgroupDescriptor,
    GroupElement,
    GroupShape,
    QuotientChart,
    make_element,
)
from .kernels import BACKEND
from .lifting import LiftProblem, LiftWitness, correct_torus, lift_basis, lift_generators
from .numfield import QQ, FieldElement, NumberField, make_field

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClosedSubgroupDescriptor",
    "FieldElement",
    "GenerationVerdict",
    "GroupElement",
    "GroupShape",
    "InputError",
    "InternalVerificationFailed",
    "KronliftError",
    "LiftProblem",
    "LiftWitness",
    "NumberField",
    "PreconditionViolated",
    "QQ",
    "QuotientChart",
    "closure",
    "correct_torus",
    "density_oracle",
    "extract_irredundant",
    "generates",
    "generates_torus",
    "irredundant_witness",
    "is_dense_with",
    "lift_basis",
    "lift_generators",
    "make_element",
    "make_field",
    "redundancy_rank",
]
