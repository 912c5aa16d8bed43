"""
Core Module

The ActorKit facade used by the CLI and by applications embedding actorkit.
"""

import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

from .actor import ActorSpace, external_weak_actor, partial_product
from .algebra import Algebra
from .errors import ActorKitError, PreconditionError
from .extensions import (
    ActingMorphism,
    enumerate_split_extensions,
    extension_to_acting_morphism,
    inn_map,
    resolve_budget,
    semidirect_extension,
)
from .formats import dump_algebra, load_algebra, load_morphism, load_variety
from .linalg import Field
from .logger import VerificationLogger
from .poisson import PoissonActorSpace, usga, z_center_actor_check
from .theorems import TheoremReport, TheoremRouter
from .varieties import ACTOR_KINDS, VarietyPreset, VarietyRegistry, default_registry

LOG_LEVEL_ENV = "ACTORKIT_LOG_LEVEL"


@dataclass
class ActorKitConfig:
    """
    Runtime configuration.

    Attributes:
        budget: Enumeration candidate budget; ``ACTORKIT_BUDGET`` or 2^16 when None
        log_level: Root logging level name; ``ACTORKIT_LOG_LEVEL`` or WARNING when None
    """
    budget: Optional[int] = None
    log_level: Optional[str] = None

    def __post_init__(self):
        """Resolve unset values from the environment."""
        self.budget = resolve_budget(self.budget)
        self.log_level = (self.log_level or os.getenv(LOG_LEVEL_ENV) or "WARNING").upper()


class ActorKit:
    """
    Facade over loading, actor computations and theorem verification.
    """

    def __init__(self, config: Optional[ActorKitConfig] = None, registry: Optional[VarietyRegistry] = None):
        """
        Initialize the facade.

        Args:
            config: Runtime configuration
            registry: Variety registry; the built-in presets when None
        """
        self.config = config or ActorKitConfig()
        self._logger = logging.getLogger(__name__)
        self.registry = registry or default_registry()
        self.logger = VerificationLogger()
        self.router = TheoremRouter(registry=self.registry, logger=self.logger, budget=self.config.budget)
        self._logger.info(f"ActorKit initialized (budget {self.config.budget})")

    # ------------------------------------------------------------------
    # loading
    # ------------------------------------------------------------------

    def load_algebra(self, source: str, field: Optional[Field] = None) -> Algebra:
        """
        Load an algebra file or a bundled example.

        Args:
            source: File path or example name
            field: Ground field override

        Returns:
            The Algebra
        """
        return load_algebra(source, field)

    def resolve_variety(
        self, path: Optional[str] = None, preset: Optional[str] = None, default: Optional[str] = None
    ) -> Optional[VarietyPreset]:
        """
        A variety from a file, else a preset name, else the default preset name.

        A ``path`` that names a registered preset and no existing file is read as the preset.
        """
        if path is not None:
            if not os.path.exists(path) and path in self.registry:
                return self.registry.require(path)
            return load_variety(path, self.registry)
        name = preset or default
        return self.registry.require(name) if name else None

    # ------------------------------------------------------------------
    # computations
    # ------------------------------------------------------------------

    def compute_actor(self, a: Algebra, v: VarietyPreset) -> ActorSpace:
        """E(X) for single-product varieties, [X] for Poisson ones."""
        try:
            s = usga(a) if v.num_products == 2 else external_weak_actor(a, v)
        except ActorKitError as e:
            self._logger.error(f"Error computing the actor of {a.name}: {e}")
            self.logger.log_error(type(e).__name__, str(e), {"algebra": a.name, "variety": v.name})
            raise
        self.logger.log_actor_computation(a.name, v.name, s.dim)
        return s

    def actor_report(self, a: Algebra, v: VarietyPreset) -> Dict[str, Any]:
        """
        Compute the actor of ``a`` in ``v``.

        Returns:
            The exported space: algebra, variety, dimension and canonical basis
        """
        return self.compute_actor(a, v).export()

    def inn_report(self, a: Algebra, v: VarietyPreset) -> Dict[str, Any]:
        """Kernel, image and bijectivity of Inn: X -> E(X)."""
        s = self.compute_actor(a, v)
        report = {"algebra": a.name, "variety": v.name, "actor_dim": s.dim}
        report.update(inn_map(a, s).summary())
        return report

    def product_report(self, a: Algebra, v: VarietyPreset, left: int, right: int, product: str = "mul") -> Dict[str, Any]:
        """
        Product (or bracket) of two canonical basis elements of the actor.

        Args:
            a: The algebra X
            v: Variety
            left: Index of the first factor in the canonical basis
            right: Index of the second factor
            product: "mul", or "bracket" for the Poisson actor

        Returns:
            Report with ``defined`` and, when defined, the result and its coordinates
        """
        s = self.compute_actor(a, v)
        basis = s.basis
        for index in (left, right):
            if not 0 <= index < len(basis):
                raise PreconditionError(f"basis index {index} out of range for an actor of dimension {s.dim}")
        f, g = basis[left], basis[right]
        if isinstance(s, PoissonActorSpace):
            h = s.compose(f, g, 1 if product == "bracket" else 0)
        else:
            if product != "mul":
                raise PreconditionError(f"E({a.name}) has no '{product}'")
            h = partial_product(s, f, g)
        report: Dict[str, Any] = {
            "algebra": a.name,
            "variety": v.name,
            "product": product,
            "left": left,
            "right": right,
            "defined": h is not None,
        }
        if h is not None:
            report["result"] = h.export(s.field)
            report["coordinates"] = [s.field.format(c) for c in s.coordinates(h)]
        return report

    def usga_report(self, a: Algebra) -> Dict[str, Any]:
        """
        Compute the Poisson actor [X].

        Args:
            a: A Poisson algebra

        Returns:
            The exported space with ``closed``, the result of testing closure of both operations
        """
        s = usga(a)
        self.logger.log_actor_computation(a.name, "usga", s.dim)
        report = s.export()
        report["closed"] = s.is_closed()
        return report

    def center_report(self, a: Algebra) -> Dict[str, Any]:
        """
        Z(X) of the bracket: the Lie center, with the center/actor comparison
        for unital Poisson algebras.
        """
        bracket = 1 if a.num_products == 2 else 0
        center = a.lie_center(bracket)
        report: Dict[str, Any] = {
            "algebra": a.name,
            "center_dim": center.dim,
            "basis": [[a.field.format(c) for c in v] for v in center.basis],
        }
        if a.num_products == 2 and a.find_unit() is not None:
            report["actor_check"] = z_center_actor_check(a).to_dict()
        return report

    def semidirect_report(self, B: Algebra, X: Algebra, v: VarietyPreset, morphism_path: str) -> Dict[str, Any]:
        """
        Build B ⋉ X from a morphism file and check that the extension gives the morphism back.
        """
        s = self.compute_actor(X, v)
        images = load_morphism(morphism_path).matrices(X.field, X.dim)
        phi = ActingMorphism(B, s, tuple(s.element_from_blocks(blocks) for blocks in images))
        extension = semidirect_extension(B, X, phi, v)
        recovered = extension_to_acting_morphism(extension, s)
        return {
            "algebra": dump_algebra(extension.A),
            "variety": v.name,
            "round_trip": recovered.key() == phi.key(),
        }

    def enumerate_report(self, B: Algebra, X: Algebra, v: VarietyPreset) -> Dict[str, Any]:
        """Counts of split extensions and acting morphisms found within the budget."""
        result = enumerate_split_extensions(B, X, v, self.config.budget)
        return {
            "B": B.name,
            "X": X.name,
            "variety": v.name,
            "candidates": result.candidates,
            "split_extensions": len(result),
            "acting_morphisms": result.num_classes,
        }

    def validate_report(self, a: Optional[Algebra], v: Optional[VarietyPreset]) -> Dict[str, Any]:
        """
        Summary of an algebra and/or a variety, with membership when both are given.

        For a member, ``unitary_closed`` tells whether its unitization stays in the variety.
        """
        report: Dict[str, Any] = {"valid": True}
        if a is not None:
            unit = a.find_unit()
            report["algebra"] = {
                "name": a.name,
                "field": a.field.name,
                "dim": a.dim,
                "products": list(a.product_names),
                "unit": None if unit is None else [a.field.format(c) for c in unit],
            }
        if v is not None:
            report["variety"] = v.to_dict()
        if a is not None and v is not None:
            v.ensure_characteristic(a.field)
            membership = v.check(a)
            report["membership"] = membership.to_dict()
            report["valid"] = membership.satisfied
            if membership.satisfied:
                report["unitary_closed"] = v.unitary_closed_on(a)
        return report

    # ------------------------------------------------------------------
    # theorems
    # ------------------------------------------------------------------

    def verify(
        self,
        theorem: str,
        algebra: Optional[Algebra] = None,
        variety: Optional[VarietyPreset] = None,
        B: Optional[Algebra] = None,
        X: Optional[Algebra] = None,
    ) -> TheoremReport:
        """
        Verify a theorem through the router.

        Args:
            theorem: Theorem name, e.g. "thm-assoc1"
            algebra: The algebra X
            variety: Variety; the theorem's default when None
            B: Acting algebra for "bijection"
            X: Kernel algebra for "bijection"

        Returns:
            The TheoremReport
        """
        return self.router.verify(theorem, algebra=algebra, variety=variety, B=B, X=X)

    def list_varieties(self) -> Dict[str, Any]:
        """
        Registered presets, grouped by actor kind and by number of products.

        Returns:
            ``presets`` (name -> preset), ``actor_kinds`` (kind -> names) and
            ``products`` (product count -> names)
        """
        return {
            "presets": {name: self.registry.get_info(name) for name in self.registry.list_all()},
            "actor_kinds": {kind: self.registry.list_by_actor_kind(kind) for kind in ACTOR_KINDS},
            "products": {str(count): self.registry.list_by_product_count(count) for count in (1, 2)},
        }

    def get_system_status(self) -> Dict[str, Any]:
        """
        Get system status information.

        Returns:
            Budget, log level, number of presets and the router configuration
        """
        return {
            "budget": self.config.budget,
            "log_level": self.config.log_level,
            "varieties": len(self.registry),
            "routing_config": self.router.get_routing_info(),
        }

    def export_trace(self) -> str:
        """All verification traces as a JSON string."""
        return self.logger.export_logs()
