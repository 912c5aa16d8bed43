"""
File Formats Module

Pydantic schemas for algebra, variety and acting-morphism files (JSON
syntax) and the loaders that turn them into actorkit objects.

Algebra file::

    {"name": "dual", "field": "Q" | {"GF": 5}, "dim": 2, "basis": ["1", "x"],
     "products": [{"name": "mul", "entries": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}]}

Variety file::

    {"name": "assoc", "identities": ["(x1*x2)*x3 - x1*(x2*x3)"], "products": 1,
     "lambda_mu": {"lambda": [...8...], "mu": [...8...]}, "preset": null}
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field as SchemaField, ValidationError, field_validator, model_validator

from .algebra import Algebra
from .errors import ActorKitError, AlgebraFormatError
from .examples import is_example, load_example
from .linalg import Field, matrix_from_rows
from .varieties import LambdaMuRules, VarietyPreset, VarietyRegistry, default_registry

Coefficient = Union[int, str]
PathLike = Union[str, os.PathLike]

_logger = logging.getLogger(__name__)


def _field_name(value: Any) -> str:
    """Canonical "Q" / "GF(p)" name for the accepted field spellings."""
    if isinstance(value, dict):
        if set(value) != {"GF"}:
            raise ValueError('field object must be {"GF": p}')
        value = f"GF{value['GF']}"
    if not isinstance(value, str):
        raise ValueError('field must be "Q", "GFp" or {"GF": p}')
    try:
        return Field.from_name(value).name
    except ActorKitError as e:
        raise ValueError(str(e)) from None


class ProductSpec(BaseModel):
    """One structure-constant tensor as sparse entries."""
    model_config = ConfigDict(extra="forbid")

    name: str
    entries: List[Tuple[int, int, int, Coefficient]] = SchemaField(default_factory=list)


class AlgebraFile(BaseModel):
    """Schema of an algebra file."""
    model_config = ConfigDict(extra="forbid")

    name: str = ""
    field: str = "Q"
    dim: int = SchemaField(ge=0)
    basis: List[str] = SchemaField(default_factory=list)
    products: List[ProductSpec] = SchemaField(min_length=1, max_length=2)

    @field_validator("field", mode="before")
    @classmethod
    def _normalize_field(cls, value: Any) -> str:
        return _field_name(value)

    @model_validator(mode="after")
    def _check_shape(self) -> "AlgebraFile":
        if self.basis and len(self.basis) != self.dim:
            raise ValueError(f"{len(self.basis)} basis labels for dimension {self.dim}")
        names = [p.name for p in self.products]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate product names {names}")
        for product in self.products:
            for i, j, k, _ in product.entries:
                if not all(0 <= index < self.dim for index in (i, j, k)):
                    raise ValueError(f"entry ({i}, {j}, {k}) of '{product.name}' out of range for dimension {self.dim}")
        return self

    def to_algebra(self, field: Optional[Field] = None) -> Algebra:
        """
        Build the Algebra, optionally over another field than the file's.

        Raises:
            AlgebraFormatError: a coefficient is not a valid scalar of the field
        """
        target = field or Field.from_name(self.field)
        try:
            return Algebra.from_entries(
                target,
                self.dim,
                [(p.name, p.entries) for p in self.products],
                self.basis or None,
                self.name,
            )
        except ActorKitError as e:
            raise AlgebraFormatError(f"algebra '{self.name}': {e}") from e

    @classmethod
    def from_algebra(cls, a: Algebra) -> "AlgebraFile":
        field = a.field
        return cls(
            name=a.name,
            field=field.name,
            dim=a.dim,
            basis=list(a.basis_names),
            products=[
                ProductSpec(name=name, entries=[(i, j, k, field.format(c)) for i, j, k, c in a.entries(r)])
                for r, name in enumerate(a.product_names)
            ],
        )


class LambdaMuSpec(BaseModel):
    """Eight λ and eight μ coefficients as scalar strings."""
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    lambdas: List[Coefficient] = SchemaField(alias="lambda", min_length=8, max_length=8)
    mus: List[Coefficient] = SchemaField(alias="mu", min_length=8, max_length=8)

    def to_rules(self) -> LambdaMuRules:
        return LambdaMuRules(tuple(str(c) for c in self.lambdas), tuple(str(c) for c in self.mus))


class VarietyFile(BaseModel):
    """Schema of a variety file; ``preset`` overrides everything else."""
    model_config = ConfigDict(extra="forbid")

    name: str = "custom"
    identities: List[str] = SchemaField(default_factory=list)
    products: int = SchemaField(default=1, ge=1, le=2)
    lambda_mu: Optional[LambdaMuSpec] = None
    preset: Optional[str] = None

    @model_validator(mode="after")
    def _check_source(self) -> "VarietyFile":
        if self.preset is None and not self.identities:
            raise ValueError("a variety file needs identities or a preset")
        return self

    def to_preset(self, registry: Optional[VarietyRegistry] = None) -> VarietyPreset:
        """
        Resolve to a VarietyPreset.

        Raises:
            UnknownPresetError: ``preset`` is not registered
            IdentityParseError: an identity is malformed
        """
        if self.preset is not None:
            return (registry or default_registry()).require(self.preset)
        return VarietyPreset(
            name=self.name,
            identities=tuple(self.identities),
            num_products=self.products,
            lambda_mu=self.lambda_mu.to_rules() if self.lambda_mu else None,
        )


class ActorElementSpec(BaseModel):
    """One element of an actor space as scalar-string matrices."""
    model_config = ConfigDict(extra="forbid")

    left: List[List[Coefficient]]
    right: List[List[Coefficient]]
    der: Optional[List[List[Coefficient]]] = None

    def blocks(self) -> List[List[List[Coefficient]]]:
        return [self.left, self.right] + ([self.der] if self.der is not None else [])


class MorphismFile(BaseModel):
    """Images of B's basis vectors in an actor space."""
    model_config = ConfigDict(extra="forbid")

    images: List[ActorElementSpec]

    def matrices(self, field: Field, n: int) -> List[List[Any]]:
        """
        Parsed blocks, one list of matrices per image.

        Raises:
            AlgebraFormatError: a block is not n x n or holds an invalid scalar
        """
        result = []
        for index, spec in enumerate(self.images):
            blocks = []
            for block in spec.blocks():
                if len(block) != n or any(len(row) != n for row in block):
                    raise AlgebraFormatError(f"image {index}: blocks must be {n}x{n}")
                try:
                    blocks.append(matrix_from_rows(field, [[field.parse(c) for c in row] for row in block], n))
                except ActorKitError as e:
                    raise AlgebraFormatError(f"image {index}: {e}") from e
            result.append(blocks)
        return result


def _read(model: type, path: PathLike) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise AlgebraFormatError(f"{path}: {e}") from None


def load_algebra(source: PathLike, field: Optional[Field] = None) -> Algebra:
    """
    Load an algebra from a file path or a bundled example name.

    Args:
        source: Path to an algebra file, or a catalog name such as "M2"
        field: Ground field override

    Returns:
        The Algebra

    Raises:
        FileNotFoundError: neither a file nor a bundled example
        AlgebraFormatError: the file does not match the schema
    """
    if not os.path.exists(source) and is_example(str(source)):
        return load_example(str(source), field)
    algebra = _read(AlgebraFile, source).to_algebra(field)
    _logger.info(f"Loaded algebra '{algebra.name}' (dim {algebra.dim}, {algebra.field.name}) from {source}")
    return algebra


def load_variety(source: PathLike, registry: Optional[VarietyRegistry] = None) -> VarietyPreset:
    """Load a variety file."""
    preset = _read(VarietyFile, source).to_preset(registry)
    _logger.info(f"Loaded variety '{preset.name}' from {source}")
    return preset


def load_morphism(source: PathLike) -> MorphismFile:
    return _read(MorphismFile, source)


def parse_algebra(data: Dict[str, Any], field: Optional[Field] = None) -> Algebra:
    """Validate an in-memory algebra document."""
    try:
        return AlgebraFile.model_validate(data).to_algebra(field)
    except ValidationError as e:
        raise AlgebraFormatError(str(e)) from None


def parse_variety(data: Dict[str, Any], registry: Optional[VarietyRegistry] = None) -> VarietyPreset:
    try:
        return VarietyFile.model_validate(data).to_preset(registry)
    except ValidationError as e:
        raise AlgebraFormatError(str(e)) from None


def dump_algebra(a: Algebra) -> Dict[str, Any]:
    return AlgebraFile.from_algebra(a).model_dump(mode="json")


def save_algebra(a: Algebra, path: PathLike) -> None:
    Path(path).write_text(json.dumps(dump_algebra(a), indent=2), encoding="utf-8")
