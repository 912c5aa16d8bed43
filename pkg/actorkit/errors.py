"""
Errors Module

Exception hierarchy shared by every actorkit module.
"""

from typing import Any, Optional, Tuple


class ActorKitError(Exception):
    """Base class for all actorkit errors."""


class DimensionMismatchError(ActorKitError):
    """Vectors, matrices or algebras have incompatible shapes."""


class FieldMismatchError(ActorKitError):
    """Operands live over different fields."""


class IdentityParseError(ActorKitError):
    """
    Identity source text is malformed.

    Attributes:
        position: 0-based character offset of the offending token
    """

    def __init__(self, message: str, position: int, source: str = ""):
        self.position = position
        self.source = source
        super().__init__(f"{message} at position {position}")


class ArityError(ActorKitError):
    """An identity was evaluated with the wrong number of arguments."""


class VarietyViolationError(ActorKitError):
    """
    An algebra fails one of the identities of a variety.

    Attributes:
        identity: printed form of the failing identity
        witness: basis indices on which the identity does not vanish
    """

    def __init__(self, message: str, identity: str = "", witness: Optional[Tuple[int, ...]] = None):
        self.identity = identity
        self.witness = witness
        super().__init__(message)


class CharacteristicError(ActorKitError):
    """A variety preset refuses the characteristic of the field."""


class PreconditionError(ActorKitError):
    """An operation was called outside its documented domain."""


class NotInActorError(ActorKitError):
    """An actor element does not belong to the actor space it is used with."""


class PartialOperationError(ActorKitError):
    """A partial operation produced an element outside the actor space."""

    def __init__(self, message: str, result: Any = None):
        self.result = result
        super().__init__(message)


class ConsistencyError(ActorKitError):
    """A constructed object violates one of its construction invariants."""


class BudgetExceededError(ActorKitError):
    """Brute-force enumeration would exceed the configured candidate budget."""

    def __init__(self, candidates: int, budget: int):
        self.candidates = candidates
        self.budget = budget
        super().__init__(f"{candidates} candidates exceed the enumeration budget of {budget}")


class AlgebraFormatError(ActorKitError):
    """An algebra or variety file does not match its schema."""


class UnknownPresetError(ActorKitError):
    """A variety preset name is not registered."""
