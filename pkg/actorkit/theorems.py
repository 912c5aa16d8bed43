"""
Theorem Router Module

Routes verification requests to theorem checkers and records every check
step in a VerificationLogger.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from dataclasses_json import dataclass_json

from .actor import ActorSpace, alt_actor_equations_space, bimultipliers, external_weak_actor
from .algebra import Algebra
from .errors import ActorKitError, PreconditionError
from .extensions import first_non_permutable_pair, inn_map, resolve_budget, verify_bijection
from .linalg import Subspace
from .logger import CheckStep, VerificationLogger
from .poisson import usga, z_center_actor_check
from .varieties import VarietyPreset, VarietyRegistry, default_registry


@dataclass_json
@dataclass
class TheoremReport:
    """Outcome of one theorem verification."""
    theorem: str
    passed: bool
    algebra: str = ""
    variety: str = ""
    details: Dict[str, Any] = field(default_factory=dict)


Checker = Callable[..., TheoremReport]


class TheoremRouter:
    """
    Routes theorem names to checkers.

    Each checker runs on concrete algebras and returns a TheoremReport; the
    intermediate results are logged as CheckSteps under one run id.
    """

    def __init__(
        self,
        registry: Optional[VarietyRegistry] = None,
        logger: Optional[VerificationLogger] = None,
        budget: Optional[int] = None,
    ):
        """
        Initialize the router.

        Args:
            registry: Variety registry used to resolve default varieties
            logger: Verification logger (optional)
            budget: Enumeration budget for the bijection check
        """
        self.registry = registry or default_registry()
        self.logger = logger or VerificationLogger()
        self.budget = resolve_budget(budget)
        self._logger = logging.getLogger(__name__)

        # Theorem to checker mapping
        self._theorem_mapping: Dict[str, Checker] = {
            "thm-assoc1": self._check_assoc1,
            "thm-alt": self._check_alt,
            "thm-pois": self._check_pois,
            "bijection": self._check_bijection,
            "eq2": self._check_eq2,
        }
        self._default_varieties: Dict[str, str] = {
            "thm-assoc1": "assoc",
            "thm-alt": "alt",
            "thm-pois": "pois",
            "bijection": "cassoc",
            "eq2": "assoc",
        }
        # independent descriptions of E(X), compared as canonical subspaces
        self._oracles: Dict[str, Callable[[Algebra], Subspace]] = {
            "assoc": bimultipliers,
            "alt": alt_actor_equations_space,
        }

    def list_theorems(self) -> List[str]:
        return list(self._theorem_mapping.keys())

    def verify(
        self,
        theorem: str,
        algebra: Optional[Algebra] = None,
        variety: Optional[VarietyPreset] = None,
        B: Optional[Algebra] = None,
        X: Optional[Algebra] = None,
        run_id: Optional[str] = None,
    ) -> TheoremReport:
        """
        Verify a theorem on concrete algebras.

        Args:
            theorem: One of ``list_theorems()``
            algebra: The algebra X (all theorems except "bijection")
            variety: Variety; the theorem's default preset when None
            B: Acting algebra ("bijection")
            X: Kernel algebra ("bijection")
            run_id: Trace identifier, the theorem name by default

        Returns:
            The TheoremReport

        Raises:
            PreconditionError: unknown theorem or missing algebra
        """
        checker = self._theorem_mapping.get(theorem)
        if checker is None:
            raise PreconditionError(f"unknown theorem '{theorem}' (known: {', '.join(self.list_theorems())})")
        run_id = run_id or theorem
        if variety is None:
            variety = self.registry.require(self._default_varieties[theorem])
        self.logger.log("verification_started", {"theorem": theorem, "variety": variety.name}, run_id)
        try:
            if theorem == "bijection":
                if B is None or X is None:
                    raise PreconditionError("the bijection check needs both B and X")
                report = checker(B, X, variety, run_id)
            else:
                if algebra is None:
                    raise PreconditionError(f"'{theorem}' needs an algebra")
                report = checker(algebra, variety, run_id)
        except ActorKitError as e:
            self._logger.error(f"Error verifying {theorem}: {e}")
            self.logger.log_error(type(e).__name__, str(e), {"theorem": theorem}, run_id)
            raise
        self._step(run_id, "verdict", f"{theorem}: {'PASS' if report.passed else 'FAIL'}", {}, {}, report.passed)
        self._logger.info(f"{theorem} on {report.algebra}: {'PASS' if report.passed else 'FAIL'}")
        return report

    def _step(
        self,
        run_id: str,
        step_type: str,
        description: str,
        input_data: Dict[str, Any],
        output_data: Dict[str, Any],
        passed: Optional[bool] = None,
    ) -> None:
        step = CheckStep(
            step_id=f"{run_id}:{len(self.logger.get_logs(run_id))}",
            step_type=step_type,
            description=description,
            input_data=input_data,
            output_data=output_data,
            passed=passed,
        )
        self.logger.log_check_step(step, run_id)

    def _self_actor(self, theorem: str, a: Algebra, v: VarietyPreset, run_id: str) -> TheoremReport:
        """The actor of a unital X in v is X: dim E(X) = dim X and Inn is bijective."""
        unit = a.find_unit()
        self._step(run_id, "unit", f"unit of {a.name}", {"algebra": a.name}, {"unital": unit is not None}, unit is not None)
        s = external_weak_actor(a, v)
        self.logger.log_actor_computation(a.name, v.name, s.dim, run_id=run_id)
        inner = inn_map(a, s)
        self._step(run_id, "inn_map", f"Inn: {a.name} -> E({a.name})", {"dim": a.dim}, inner.summary(), inner.is_bijective)
        oracle_match = None
        oracle = self._oracles.get(v.name)
        if oracle is not None:
            oracle_match = s.subspace == oracle(a)
            self._step(run_id, "oracle", f"E({a.name}) against the displayed equations", {}, {"match": oracle_match}, oracle_match)
        passed = unit is not None and s.dim == a.dim and inner.is_bijective and oracle_match is not False
        details = {
            "algebra_dim": a.dim,
            "actor_dim": s.dim,
            "unital": unit is not None,
            "inn": inner.summary(),
            "oracle_match": oracle_match,
        }
        return TheoremReport(theorem=theorem, passed=passed, algebra=a.name, variety=v.name, details=details)

    def _check_assoc1(self, a: Algebra, v: VarietyPreset, run_id: str) -> TheoremReport:
        return self._self_actor("thm-assoc1", a, v, run_id)

    def _check_alt(self, a: Algebra, v: VarietyPreset, run_id: str) -> TheoremReport:
        report = self._self_actor("thm-alt", a, v, run_id)
        associativity = self.registry.require("assoc").check(a)
        report.details["associative"] = associativity.satisfied
        report.details["associator_witness"] = associativity.witness_names
        self._step(
            run_id, "identity", f"associativity of {a.name}", {}, {"satisfied": associativity.satisfied, "witness": associativity.witness_names}
        )
        return report

    def _check_pois(self, a: Algebra, v: VarietyPreset, run_id: str) -> TheoremReport:
        if v.actor_kind != "center":
            choices = ", ".join(self.registry.list_by_actor_kind("center"))
            raise PreconditionError(f"'thm-pois' needs a Poisson variety ({choices}), got '{v.name}'")
        v.require(a)
        center = z_center_actor_check(a)
        self.logger.log_actor_computation(a.name, "usga", center.usga_dim, run_id=run_id)
        self._step(run_id, "center", f"Z({a.name}) against [{a.name}]", {"algebra": a.name}, center.to_dict(), center.passed)
        return TheoremReport(theorem="thm-pois", passed=center.passed, algebra=a.name, variety=v.name, details=center.to_dict())

    def _check_bijection(self, B: Algebra, X: Algebra, v: VarietyPreset, run_id: str) -> TheoremReport:
        result = verify_bijection(B, X, v, self.budget)
        details = result.to_dict()
        self._step(
            run_id,
            "enumeration",
            f"split extensions of {B.name} by {X.name}",
            {"B": B.name, "X": X.name, "budget": self.budget},
            {"split_extensions": result.split_extensions, "acting_morphisms": result.acting_morphisms},
            result.match,
        )
        return TheoremReport(theorem="bijection", passed=result.match, algebra=X.name, variety=v.name, details=details)

    def _check_eq2(self, a: Algebra, v: VarietyPreset, run_id: str) -> TheoremReport:
        """(b*x)*b' = b*(x*b') for every pair of basis elements of the actor space."""
        s: ActorSpace = usga(a) if v.num_products == 2 else external_weak_actor(a, v)
        self.logger.log_actor_computation(a.name, v.name, s.dim, run_id=run_id)
        basis = s.basis
        pair = first_non_permutable_pair(basis)
        details: Dict[str, Any] = {"actor_dim": s.dim, "witness": None}
        if pair is not None:
            i, j = pair
            details["witness"] = {"f": basis[i].export(s.field), "g": basis[j].export(s.field), "indices": [i, j]}
        self._step(run_id, "permutability", f"permutability on E({a.name})", {"dim": s.dim}, details, pair is None)
        return TheoremReport(theorem="eq2", passed=pair is None, algebra=a.name, variety=v.name, details=details)

    def add_theorem(self, name: str, checker: Checker, default_variety: str) -> None:
        """
        Add or replace a theorem checker.

        Args:
            name: Theorem name
            checker: Callable ``(algebra, variety, run_id) -> TheoremReport``
            default_variety: Preset used when no variety is given
        """
        self._theorem_mapping[name] = checker
        self._default_varieties[name] = default_variety
        self._logger.info(f"Added theorem mapping: {name} -> {getattr(checker, '__name__', checker)}")

    def get_routing_info(self) -> Dict[str, Any]:
        return {
            "theorems": self.list_theorems(),
            "default_varieties": dict(self._default_varieties),
            "oracles": sorted(self._oracles),
            "budget": self.budget,
        }
