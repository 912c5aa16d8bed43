"""
Variety Registry Module

Variety presets (defining identities, λ/μ rules, characteristic
restrictions) and a registry for looking them up by name.
"""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .algebra import Algebra
from .errors import (
    CharacteristicError,
    PreconditionError,
    UnknownPresetError,
    VarietyViolationError,
)
from .identities import MultilinearIdentity, SatisfactionReport, check_identity, parse_identity
from .linalg import Field, Scalar

PRODUCT_RULES = ("lambda_mu", "alt")
ACTOR_KINDS = ("self", "center")


@dataclass(frozen=True)
class LambdaMuRules:
    """
    Coefficients λ1..λ8 and μ1..μ8 of the partial product on E(X).

    The eight terms, in order, are (x*f)*g, (f*x)*g, g*(x*f), g*(f*x),
    (x*g)*f, (g*x)*f, f*(x*g), f*(g*x); x*h uses the λ's and h*x the μ's.
    Coefficients are kept as scalar strings so one rule set serves every field.
    """
    lambdas: Tuple[str, ...]
    mus: Tuple[str, ...]

    def __post_init__(self):
        """Normalize to strings and check there are eight of each."""
        object.__setattr__(self, "lambdas", tuple(str(c).strip() for c in self.lambdas))
        object.__setattr__(self, "mus", tuple(str(c).strip() for c in self.mus))
        if len(self.lambdas) != 8 or len(self.mus) != 8:
            raise PreconditionError(f"λ/μ rules need 8 + 8 coefficients, got {len(self.lambdas)} + {len(self.mus)}")

    @classmethod
    def from_dict(cls, data: Dict[str, Sequence[Any]]) -> "LambdaMuRules":
        return cls(tuple(data["lambda"]), tuple(data["mu"]))

    def to_dict(self) -> Dict[str, List[str]]:
        return {"lambda": list(self.lambdas), "mu": list(self.mus)}

    def resolve(self, f: Field) -> Tuple[Tuple[Scalar, ...], Tuple[Scalar, ...]]:
        """The coefficients as scalars of ``f``."""
        return tuple(f.parse(c) for c in self.lambdas), tuple(f.parse(c) for c in self.mus)


def _rules(lambdas: Dict[int, int], mus: Dict[int, int]) -> LambdaMuRules:
    return LambdaMuRules(
        tuple(str(lambdas.get(i, 0)) for i in range(1, 9)),
        tuple(str(mus.get(i, 0)) for i in range(1, 9)),
    )


# x*h = (x*f)*g and h*x = f*(g*x): composition in Bim(X)
STANDARD_RULES = _rules({1: 1}, {8: 1})
# commutator of derivations
LIE_RULES = _rules({1: 1, 5: -1}, {8: 1, 4: -1})


@dataclass
class VarietyPreset:
    """
    A variety of algebras given by multilinear identities.

    Attributes:
        name: Registry key, e.g. "assoc"
        identities: Identity sources in the ``parse_identity`` grammar
        num_products: 1, or 2 for Poisson-type varieties
        lambda_mu: λ/μ rules for the partial product on E(X), if any
        excluded_characteristics: Field characteristics the preset refuses
        product_rule: "lambda_mu", or "alt" for the alternative-algebra formulas
        permutability_required: Acting morphisms must satisfy (b*x)*b' = b*(x*b')
        actor_kind: "self" if the actor of a unital X is X, "center" if it is Z(X)
        description: Free text
    """
    name: str
    identities: Tuple[str, ...]
    num_products: int = 1
    lambda_mu: Optional[LambdaMuRules] = None
    excluded_characteristics: Tuple[int, ...] = ()
    product_rule: str = "lambda_mu"
    permutability_required: bool = False
    actor_kind: Optional[str] = None
    description: str = ""

    def __post_init__(self):
        """Validate the preset and parse its identities once."""
        self.identities = tuple(self.identities)
        self.excluded_characteristics = tuple(self.excluded_characteristics)
        if self.num_products not in (1, 2):
            raise PreconditionError(f"variety '{self.name}' must have 1 or 2 products, not {self.num_products}")
        if self.product_rule not in PRODUCT_RULES:
            raise PreconditionError(f"unknown product rule '{self.product_rule}' (expected one of {PRODUCT_RULES})")
        if self.actor_kind is not None and self.actor_kind not in ACTOR_KINDS:
            raise PreconditionError(f"unknown actor kind '{self.actor_kind}' (expected one of {ACTOR_KINDS})")
        if not self.identities:
            raise PreconditionError(f"variety '{self.name}' has no identities")
        self._parsed = tuple(parse_identity(src, self.num_products) for src in self.identities)

    @property
    def parsed_identities(self) -> Tuple[MultilinearIdentity, ...]:
        return self._parsed

    def ensure_characteristic(self, f: Field) -> None:
        if f.characteristic in self.excluded_characteristics:
            raise CharacteristicError(f"variety '{self.name}' is not defined over {f.name}")

    def check(self, a: Algebra) -> SatisfactionReport:
        """
        Check every identity on ``a``.

        Returns:
            The report of the first failing identity, or a satisfied report
        """
        if a.num_products < self.num_products:
            raise PreconditionError(f"variety '{self.name}' needs {self.num_products} product(s), '{a.name}' has {a.num_products}")
        for phi in self._parsed:
            report = check_identity(phi, a)
            if not report.satisfied:
                return report
        return SatisfactionReport(identity="; ".join(str(phi) for phi in self._parsed), satisfied=True)

    def contains(self, a: Algebra) -> bool:
        return self.check(a).satisfied

    def require(self, a: Algebra) -> None:
        """
        Raise unless ``a`` lies in the variety over an allowed field.

        Raises:
            CharacteristicError: characteristic excluded
            VarietyViolationError: an identity fails; carries identity and witness
        """
        self.ensure_characteristic(a.field)
        report = self.check(a)
        if not report.satisfied:
            witness = tuple(report.witness or ())
            raise VarietyViolationError(
                f"'{a.name or 'algebra'}' is not in {self.name}: '{report.identity}' fails on {report.witness_names}",
                identity=report.identity,
                witness=witness,
            )

    def unitary_closed_on(self, a: Algebra) -> bool:
        """Whether adjoining an external unit to ``a`` stays inside the variety."""
        return self.contains(a.unitize())

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["identities"] = list(self.identities)
        data["excluded_characteristics"] = list(self.excluded_characteristics)
        data["lambda_mu"] = self.lambda_mu.to_dict() if self.lambda_mu else None
        return data


_ASSOC = "(x1*x2)*x3 - x1*(x2*x3)"
_COMM = "x1*x2 - x2*x1"
_POISSON = (
    _ASSOC,
    "[x1,x2] + [x2,x1]",
    "[x1,[x2,x3]] + [x2,[x3,x1]] + [x3,[x1,x2]]",
    "[x1,x2*x3] - [x1,x2]*x3 - x2*[x1,x3]",
)


def builtin_presets() -> List[VarietyPreset]:
    """Fresh instances of the bundled presets."""
    return [
        VarietyPreset(
            name="assoc",
            identities=(_ASSOC,),
            lambda_mu=STANDARD_RULES,
            permutability_required=True,
            actor_kind="self",
            description="associative algebras",
        ),
        VarietyPreset(
            name="cassoc",
            identities=(_ASSOC, _COMM),
            lambda_mu=STANDARD_RULES,
            permutability_required=True,
            actor_kind="self",
            description="commutative associative algebras",
        ),
        VarietyPreset(
            name="lie",
            identities=("x1*x2 + x2*x1", "x1*(x2*x3) + x2*(x3*x1) + x3*(x1*x2)"),
            lambda_mu=LIE_RULES,
            excluded_characteristics=(2,),
            description="Lie algebras; E(X) is Der(X)",
        ),
        VarietyPreset(
            name="alt",
            identities=(
                "(x1*x2)*x3 + (x1*x3)*x2 - x1*(x2*x3) - x1*(x3*x2)",
                "(x1*x2)*x3 + (x2*x1)*x3 - x1*(x2*x3) - x2*(x1*x3)",
            ),
            excluded_characteristics=(2,),
            product_rule="alt",
            actor_kind="self",
            description="alternative algebras (polarized right and left alternative laws)",
        ),
        VarietyPreset(
            name="abalg",
            identities=("x1*x2",),
            lambda_mu=STANDARD_RULES,
            description="abelian algebras (zero product)",
        ),
        VarietyPreset(
            name="leib",
            identities=("(x1*x2)*x3 - (x1*x3)*x2 - x1*(x2*x3)",),
            description="right Leibniz algebras",
        ),
        VarietyPreset(
            name="pois",
            identities=_POISSON,
            num_products=2,
            excluded_characteristics=(2,),
            permutability_required=True,
            actor_kind="center",
            description="Poisson algebras: associative product, Lie bracket, Leibniz rule",
        ),
        VarietyPreset(
            name="cpois",
            identities=_POISSON + (_COMM,),
            num_products=2,
            excluded_characteristics=(2,),
            permutability_required=True,
            actor_kind="center",
            description="commutative Poisson algebras",
        ),
    ]


class VarietyRegistry:
    """
    Registry of variety presets keyed by name.

    Presets are registered by name and listed by product count or actor kind.
    """

    def __init__(self):
        """Initialize an empty registry."""
        self._presets: Dict[str, VarietyPreset] = {}
        self._logger = logging.getLogger(__name__)

    def register(self, preset: VarietyPreset) -> None:
        """
        Register a preset under its own name.

        Args:
            preset: The variety preset
        """
        if preset.name in self._presets:
            self._logger.warning(f"Variety '{preset.name}' already registered. Overwriting.")
        self._presets[preset.name] = preset
        self._logger.info(f"Registered variety '{preset.name}' with {len(preset.identities)} identities")

    def get(self, name: str) -> Optional[VarietyPreset]:
        return self._presets.get(name)

    def require(self, name: str) -> VarietyPreset:
        """
        Get a preset by name or fail.

        Raises:
            UnknownPresetError: if the name is not registered
        """
        preset = self.get(name)
        if preset is None:
            raise UnknownPresetError(f"unknown variety preset '{name}' (known: {', '.join(self.list_all())})")
        return preset

    def list_all(self) -> List[str]:
        return list(self._presets.keys())

    def list_by_product_count(self, num_products: int) -> List[str]:
        return [name for name, preset in self._presets.items() if preset.num_products == num_products]

    def list_by_actor_kind(self, actor_kind: str) -> List[str]:
        """Presets whose unital members have an actor of the given kind."""
        return [name for name, preset in self._presets.items() if preset.actor_kind == actor_kind]

    def get_info(self, name: str) -> Optional[Dict[str, Any]]:
        preset = self._presets.get(name)
        return preset.to_dict() if preset else None

    def __len__(self) -> int:
        return len(self._presets)

    def __contains__(self, name: str) -> bool:
        return name in self._presets


def default_registry() -> VarietyRegistry:
    """A registry preloaded with every bundled preset."""
    registry = VarietyRegistry()
    for preset in builtin_presets():
        registry.register(preset)
    return registry


def get_preset(name: str) -> VarietyPreset:
    return default_registry().require(name)
