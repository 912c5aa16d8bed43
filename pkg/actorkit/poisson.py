"""
Poisson Actor Module

The universal strict general actor [X] of a Poisson algebra: triples
(f*-, -*f, [f,-]) with (L, R) a bimultiplier, D a derivation of both
products, and the two mixed rules

    f*[x,y] = [f*x, y] - [f,y]x        [x,y]*f = [x*f, y] - x[f,y]

Unknowns are the entries of L, R and D, each block row-major.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from dataclasses_json import dataclass_json

from .actor import ActorElement, ActorSpace, LEFT, RIGHT
from .algebra import Algebra
from .constraints import LinearSystem, SymbolicVector
from .errors import NotInActorError, PartialOperationError, PreconditionError
from .extensions import permutability_check
from .linalg import Matrix, Scalar, Subspace, mat_combination, mat_mul
from .varieties import VarietyPreset, get_preset

MUL = 0
BRACKET = 1
DER = 2

_logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PoissonActorElement(ActorElement):
    """(L_f, R_f, D_f) with D_f the map x -> [f, x]."""
    der: Matrix

    @property
    def blocks(self):
        return (self.left, self.right, self.der)

    @classmethod
    def inner(cls, a: Algebra, x: Sequence[Scalar]) -> "PoissonActorElement":
        """(L_x, R_x, [x, -])"""
        return cls(a.left_multiplication(x, MUL), a.right_multiplication(x, MUL), a.left_multiplication(x, BRACKET))


@dataclass(frozen=True)
class PoissonActorSpace(ActorSpace):
    """[X] as a canonical subspace of F^(3n^2)."""

    element_type = PoissonActorElement
    num_operations = 2

    def multiply(self, f: PoissonActorElement, g: PoissonActorElement) -> PoissonActorElement:
        return usga_multiply(self, f, g)

    def bracket(self, f: PoissonActorElement, g: PoissonActorElement) -> PoissonActorElement:
        return usga_bracket(self, f, g)

    def compose(self, f: PoissonActorElement, g: PoissonActorElement, product: int = MUL) -> Optional[PoissonActorElement]:
        """Product (0) or bracket (1); None when the result leaves [X]."""
        h = _raw_multiply(self, f, g) if product == MUL else _raw_bracket(self, f, g)
        return h if self.contains(h) else None

    def is_closed(self) -> bool:
        """Whether both operations map pairs of basis elements back into [X]."""
        basis = self.basis
        for f, g in itertools.product(basis, repeat=2):
            if not self.contains(_raw_multiply(self, f, g)) or not self.contains(_raw_bracket(self, f, g)):
                return False
        return True


def poisson_preset(a: Algebra) -> VarietyPreset:
    return get_preset("cpois" if a.is_commutative(MUL) else "pois")


def is_poisson(a: Algebra) -> bool:
    """Whether a has two products forming a Poisson algebra over an allowed field."""
    if a.num_products != 2:
        return False
    preset = get_preset("pois")
    if a.field.characteristic in preset.excluded_characteristics:
        return False
    return preset.contains(a)


def require_poisson(a: Algebra) -> None:
    """
    Raises:
        PreconditionError: a does not have two products
        CharacteristicError: characteristic 2
        VarietyViolationError: a Poisson identity fails, with its witness
    """
    if a.num_products != 2:
        raise PreconditionError(f"'{a.name}' needs a product and a bracket, it has {a.num_products} product(s)")
    get_preset("pois").require(a)


def _op(a: Algebra, block: int, x) -> SymbolicVector:
    return SymbolicVector.operator_image(a.dim, block, x)


def usga(a: Algebra) -> PoissonActorSpace:
    """
    Compute [X] for a Poisson algebra.

    Args:
        a: Poisson algebra (product 0 associative, product 1 the bracket)

    Returns:
        The PoissonActorSpace

    Raises:
        VarietyViolationError: a is not Poisson
    """
    require_poisson(a)
    n, F = a.dim, a.field
    minus = -F.one
    system = LinearSystem(F, 3 * n * n)
    basis = [a.basis_vector(i) for i in range(n)]
    for x, y in itertools.product(basis, repeat=2):
        xy = a.multiply(x, y, MUL)
        bxy = a.multiply(x, y, BRACKET)
        # bimultiplier
        system.require_zero(_op(a, LEFT, xy).iadd(_op(a, LEFT, x).times(a, y), minus))
        system.require_zero(_op(a, RIGHT, xy).iadd(_op(a, RIGHT, y).rtimes(a, x), minus))
        system.require_zero(_op(a, LEFT, y).rtimes(a, x).iadd(_op(a, RIGHT, x).times(a, y), minus))
        # [f, xy] = [f, x]y + x[f, y]
        system.require_zero(
            _op(a, DER, xy).iadd(_op(a, DER, x).times(a, y), minus).iadd(_op(a, DER, y).rtimes(a, x), minus)
        )
        # [f, [x, y]] = [[f, x], y] + [x, [f, y]]
        system.require_zero(
            _op(a, DER, bxy)
            .iadd(_op(a, DER, x).times(a, y, BRACKET), minus)
            .iadd(_op(a, DER, y).rtimes(a, x, BRACKET), minus)
        )
        # f*[x, y] = [f*x, y] - [f, y]x
        system.require_zero(
            _op(a, LEFT, bxy).iadd(_op(a, LEFT, x).times(a, y, BRACKET), minus).iadd(_op(a, DER, y).times(a, x))
        )
        # [x, y]*f = [x*f, y] - x[f, y]
        system.require_zero(
            _op(a, RIGHT, bxy).iadd(_op(a, RIGHT, x).times(a, y, BRACKET), minus).iadd(_op(a, DER, y).rtimes(a, x))
        )
    subspace = system.solution_space()
    _logger.info(f"[{a.name}]: {system.num_rows} constraints, dimension {subspace.dim}")
    return PoissonActorSpace(algebra=a, variety=poisson_preset(a), subspace=subspace)


def _raw_multiply(s: PoissonActorSpace, f: PoissonActorElement, g: PoissonActorElement) -> PoissonActorElement:
    F, n = s.field, s.n
    one = F.one
    der = mat_combination(F, [(one, mat_mul(f.left, g.der)), (one, mat_mul(g.right, f.der))], n, n)
    return PoissonActorElement(mat_mul(f.left, g.left), mat_mul(g.right, f.right), der)


def _raw_bracket(s: PoissonActorSpace, f: PoissonActorElement, g: PoissonActorElement) -> PoissonActorElement:
    F, n = s.field, s.n
    one, minus = F.one, -F.one

    def commutator(p: Matrix, q: Matrix) -> Matrix:
        return mat_combination(F, [(one, mat_mul(p, q)), (minus, mat_mul(q, p))], n, n)

    return PoissonActorElement(commutator(f.left, g.der), commutator(f.right, g.der), commutator(f.der, g.der))


def _checked(s: PoissonActorSpace, h: PoissonActorElement, operation: str) -> PoissonActorElement:
    if not s.contains(h):
        raise PartialOperationError(f"{operation} leaves [{s.algebra.name}]", result=h)
    return h


def usga_multiply(s: PoissonActorSpace, f: PoissonActorElement, g: PoissonActorElement) -> PoissonActorElement:
    """
    f·g = (f*(g*-), (-*f)*g, f*[g,-] + [f,-]*g).

    Raises:
        NotInActorError: f or g is not in s
        PartialOperationError: the product is outside s
    """
    s.require(f, "left factor")
    s.require(g, "right factor")
    return _checked(s, _raw_multiply(s, f, g), "product")


def usga_bracket(s: PoissonActorSpace, f: PoissonActorElement, g: PoissonActorElement) -> PoissonActorElement:
    """
    [f,g] = (f*[g,-] - [g,f*-], [g,-]*f - [g,-*f], [f,[g,-]] - [g,[f,-]]).

    Raises:
        NotInActorError: f or g is not in s
        PartialOperationError: the bracket is outside s
    """
    s.require(f, "left factor")
    s.require(g, "right factor")
    return _checked(s, _raw_bracket(s, f, g), "bracket")


@dataclass_json
@dataclass
class CenterActorReport:
    """Comparison of Z(X) with [X] for a unital Poisson algebra."""
    algebra: str
    center_dim: int
    usga_dim: int
    unit_in_center: bool
    center_closed: bool
    bracket_trivial_on_center: bool
    der_components_zero: bool
    map_bijective: bool
    passed: bool


def z_center_actor_check(a: Algebra) -> CenterActorReport:
    """
    Check that [X] is Z(X) for a unital Poisson algebra.

    Verifies that Z(X) holds the unit, is closed under the product with
    trivial bracket, that every element of [X] has zero derivation block,
    and that z -> (L_z, R_z, 0) is a bijection Z(X) -> [X].

    Raises:
        PreconditionError: a has no unit
    """
    unit = a.find_unit()
    if unit is None:
        raise PreconditionError(f"'{a.name}' is not unital")
    s = usga(a)
    center = a.lie_center(BRACKET)
    pairs = list(itertools.product(center.basis, repeat=2))
    closed = all(center.contains(a.multiply(u, w, MUL)) for u, w in pairs)
    trivial = all(not any(a.multiply(u, w, BRACKET)) for u, w in pairs)
    der_zero = all(not any(e.flatten()[2 * s.n * s.n:]) for e in s.basis)
    images = [s.subspace.coordinates(PoissonActorElement.inner(a, z).flatten()) for z in center.basis]
    in_actor = all(c is not None for c in images)
    bijective = (
        in_actor
        and center.dim == s.dim
        and Subspace.span(a.field, s.dim, images).dim == s.dim
    )
    report = CenterActorReport(
        algebra=a.name,
        center_dim=center.dim,
        usga_dim=s.dim,
        unit_in_center=center.contains(unit),
        center_closed=closed,
        bracket_trivial_on_center=trivial,
        der_components_zero=der_zero,
        map_bijective=bijective,
        passed=False,
    )
    report.passed = all(
        (report.unit_in_center, closed, trivial, der_zero, bijective)
    )
    _logger.info(f"Z({a.name}) = {center.dim}, [{a.name}] = {s.dim}, passed={report.passed}")
    return report


def poisson_acting_check(s: PoissonActorSpace, images: Sequence[PoissonActorElement]) -> bool:
    """
    Whether a linear map B -> [X], given by the images of B's basis, is acting:
    its (L, R) part must satisfy (b*x)*b' = b*(x*b') for all basis pairs.

    Raises:
        NotInActorError: some image is not in s
    """
    for i, e in enumerate(images):
        if not s.contains(e):
            raise NotInActorError(f"image {i} is not in [{s.algebra.name}]")
    return all(permutability_check(f, g) for f, g in itertools.product(images, repeat=2))

