"""
Actors of Unitary Non-Associative Algebras

Exact computation of external weak actors, bimultipliers, derivations and the
Poisson actor of finite-dimensional algebras given by structure constants,
with mechanical checks of the representability theorems for unital
associative, alternative and Poisson algebras.
"""

from .core import ActorKit, ActorKitConfig
from .linalg import Field, Subspace, nullspace_basis, solve_linear, subspace_membership
from .algebra import Algebra
from .identities import MultilinearIdentity, check_identity, evaluate_identity, parse_identity
from .varieties import LambdaMuRules, VarietyPreset, VarietyRegistry, default_registry, get_preset
from .actor import (
    ActorElement,
    ActorSpace,
    alt_actor_equations_check,
    bimultipliers,
    derivations,
    external_weak_actor,
    multipliers,
    operator_constraints,
    partial_product,
)
from .extensions import (
    ActingMorphism,
    SplitExtensionData,
    enumerate_split_extensions,
    extension_to_acting_morphism,
    inn_map,
    permutability_check,
    semidirect_product,
    verify_bijection,
)
from .poisson import (
    PoissonActorElement,
    PoissonActorSpace,
    poisson_acting_check,
    usga,
    usga_bracket,
    usga_multiply,
    z_center_actor_check,
)
from .theorems import TheoremReport, TheoremRouter
from .logger import VerificationLogger
from .examples import list_examples, load_example
from .formats import load_algebra, load_variety

__version__ = "0.1.0"
__author__ = "actorkit developers"

__all__ = [
    "ActorKit",
    "ActorKitConfig",
    "Field",
    "Subspace",
    "nullspace_basis",
    "solve_linear",
    "subspace_membership",
    "Algebra",
    "MultilinearIdentity",
    "check_identity",
    "evaluate_identity",
    "parse_identity",
    "LambdaMuRules",
    "VarietyPreset",
    "VarietyRegistry",
    "default_registry",
    "get_preset",
    "ActorElement",
    "ActorSpace",
    "alt_actor_equations_check",
    "bimultipliers",
    "derivations",
    "external_weak_actor",
    "multipliers",
    "operator_constraints",
    "partial_product",
    "ActingMorphism",
    "SplitExtensionData",
    "enumerate_split_extensions",
    "extension_to_acting_morphism",
    "inn_map",
    "permutability_check",
    "semidirect_product",
    "verify_bijection",
    "PoissonActorElement",
    "PoissonActorSpace",
    "poisson_acting_check",
    "usga",
    "usga_bracket",
    "usga_multiply",
    "z_center_actor_check",
    "TheoremReport",
    "TheoremRouter",
    "VerificationLogger",
    "list_examples",
    "load_example",
    "load_algebra",
    "load_variety",
]
