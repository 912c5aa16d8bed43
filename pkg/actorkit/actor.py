"""
Actor Engine Module

Computes the external weak actor E(X) of an algebra in a variety by
substituting an unknown pair of operators (f*-, -*f) into every defining
identity, together with the partial product on E(X) and the classical
special cases Bim(X), M(X) and Der(X).

Unknowns are ordered as the entries of L_f (row-major) followed by the
entries of R_f (row-major).
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .algebra import Algebra, Element
from .constraints import LinearSystem, SymbolicVector
from .errors import DimensionMismatchError, NotInActorError, PreconditionError
from .identities import MUL, MultilinearIdentity, Tree, Variable, check_identity, parse_identity
from .linalg import (
    Field,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    field_of,
    mat_combination,
    mat_mul,
    mat_vec,
    matrix_from_rows,
    matrix_rows,
    vec_add,
)
from .varieties import LambdaMuRules, VarietyPreset

LEFT = 0
RIGHT = 1

_logger = logging.getLogger(__name__)


def _flatten(m: Matrix) -> Tuple[Scalar, ...]:
    return tuple(a for row in matrix_rows(m) for a in row)


def _unflatten(field: Field, n: int, flat: Sequence[Scalar]) -> Matrix:
    return matrix_from_rows(field, [flat[r * n:(r + 1) * n] for r in range(n)], n)


@dataclass(frozen=True, eq=False)
class ActorElement:
    """
    A pair (L_f, R_f) of n x n matrices: L_f is x -> f*x and R_f is x -> x*f.
    """
    left: Matrix
    right: Matrix

    def __post_init__(self):
        """Check both blocks are square of the same size and domain."""
        for block in self.blocks:
            if block.shape != self.left.shape or block.shape[0] != block.shape[1]:
                raise DimensionMismatchError(f"actor blocks must be square of equal size, got {[b.shape for b in self.blocks]}")
            if block.domain != self.left.domain:
                raise DimensionMismatchError("actor blocks live over different fields")

    @property
    def blocks(self) -> Tuple[Matrix, ...]:
        return (self.left, self.right)

    @property
    def n(self) -> int:
        return self.left.shape[0]

    @classmethod
    def from_blocks(cls, blocks: Sequence[Matrix]) -> "ActorElement":
        return cls(*blocks)

    @classmethod
    def from_flat(cls, field: Field, n: int, flat: Sequence[Scalar]) -> "ActorElement":
        """Inverse of ``flatten``."""
        blocks = len(cls.__dataclass_fields__)
        if len(flat) != blocks * n * n:
            raise DimensionMismatchError(f"{len(flat)} coordinates for {blocks} blocks of size {n}x{n}")
        return cls(*(_unflatten(field, n, flat[b * n * n:(b + 1) * n * n]) for b in range(blocks)))

    @classmethod
    def zero(cls, field: Field, n: int) -> "ActorElement":
        return cls.from_flat(field, n, [field.zero] * (len(cls.__dataclass_fields__) * n * n))

    @classmethod
    def inner(cls, a: Algebra, x: Sequence[Scalar]) -> "ActorElement":
        """Inn(x) = (L_x, R_x) for product 0."""
        return cls(a.left_multiplication(x, MUL), a.right_multiplication(x, MUL))

    def flatten(self) -> Tuple[Scalar, ...]:
        return tuple(a for block in self.blocks for a in _flatten(block))

    def act_left(self, x: Sequence[Scalar]) -> Element:
        """f * x"""
        return mat_vec(self.left, x)

    def act_right(self, x: Sequence[Scalar]) -> Element:
        """x * f"""
        return mat_vec(self.right, x)

    def __add__(self, other: "ActorElement") -> "ActorElement":
        return type(self).from_flat(self._field(), self.n, vec_add(self.flatten(), other.flatten()))

    def scale(self, c: Scalar) -> "ActorElement":
        return type(self).from_flat(self._field(), self.n, tuple(c * a for a in self.flatten()))

    def is_zero(self) -> bool:
        return not any(self.flatten())

    def _field(self) -> Field:
        return field_of(self.left)

    def export(self, field: Field) -> Dict[str, List[List[str]]]:
        """Blocks as nested lists of scalar strings."""
        names = list(self.__dataclass_fields__)
        return {
            name: [[field.format(a) for a in row] for row in matrix_rows(block)]
            for name, block in zip(names, self.blocks)
        }

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, ActorElement) or type(other) is not type(self):
            return NotImplemented
        return self.left.domain == other.left.domain and self.flatten() == other.flatten()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.flatten()))


@dataclass(frozen=True)
class ActorSpace:
    """
    E(X) as a canonical subspace of F^(2n^2).

    Attributes:
        algebra: The algebra X
        variety: The variety it was computed in
        subspace: Flattened (L_f, R_f) pairs in RREF
        rules: λ/μ rules of the partial product, if the variety has them
    """
    algebra: Algebra
    variety: VarietyPreset
    subspace: Subspace
    rules: Optional[LambdaMuRules] = None

    element_type = ActorElement
    num_operations = 1

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def n(self) -> int:
        return self.algebra.dim

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def num_blocks(self) -> int:
        """Operators per element: 2 for (L, R), 3 when a derivation block is carried."""
        return len(self.element_type.__dataclass_fields__)

    @property
    def basis(self) -> List[ActorElement]:
        return [self.element_type.from_flat(self.field, self.n, v) for v in self.subspace.basis]

    def contains(self, e: ActorElement) -> bool:
        if not isinstance(e, self.element_type) or e.n != self.n:
            return False
        return self.subspace.contains(e.flatten())

    def require(self, e: ActorElement, label: str = "element") -> None:
        if not self.contains(e):
            raise NotInActorError(f"{label} is not in the actor space of '{self.algebra.name}'")

    def coordinates(self, e: ActorElement) -> Vector:
        """Coordinates of ``e`` in the canonical basis."""
        self.require(e)
        return self.subspace.coordinates(e.flatten())

    def element(self, coeffs: Sequence[Any]) -> ActorElement:
        """Combination of the canonical basis with the given coefficients."""
        values = [self.field.parse(c) if isinstance(c, (int, str)) else c for c in coeffs]
        return self.element_type.from_flat(self.field, self.n, self.subspace.combination(values))

    def element_from_blocks(self, blocks: Sequence[Matrix]) -> ActorElement:
        return self.element_type.from_blocks(blocks)

    def inner(self, x: Sequence[Scalar]) -> ActorElement:
        return self.element_type.inner(self.algebra, x)

    def zero(self) -> ActorElement:
        return self.element_type.zero(self.field, self.n)

    def compose(self, f: ActorElement, g: ActorElement, product: int = MUL) -> Optional[ActorElement]:
        """The structure product of the space; only product 0 exists here."""
        if product != MUL:
            raise PreconditionError("E(X) carries a single partial product")
        return partial_product(self, f, g)

    def export(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra.name,
            "variety": self.variety.name,
            "dimension": self.dim,
            "basis": [e.export(self.field) for e in self.basis],
        }


# ---------------------------------------------------------------------------
# operator substitution
# ---------------------------------------------------------------------------

Value = Union[Element, SymbolicVector]


def _substitute(tree: Tree, a: Algebra, slot: int, args: Dict[int, Element]) -> Value:
    """
    Evaluate a monomial with the unknown f in variable ``slot``.

    A node whose child is the bare f leaf contributes L_f (f on the left)
    or R_f (f on the right); higher up, the symbolic vector is multiplied
    through the structure constants.
    """
    if isinstance(tree, Variable):
        return args[tree.index]
    product = tree.product
    if isinstance(tree.left, Variable) and tree.left.index == slot:
        return SymbolicVector.operator_image(a.dim, LEFT, _substitute(tree.right, a, slot, args))
    if isinstance(tree.right, Variable) and tree.right.index == slot:
        return SymbolicVector.operator_image(a.dim, RIGHT, _substitute(tree.left, a, slot, args))
    left = _substitute(tree.left, a, slot, args)
    right = _substitute(tree.right, a, slot, args)
    if isinstance(left, SymbolicVector):
        return left.times(a, right, product)
    if isinstance(right, SymbolicVector):
        return right.rtimes(a, left, product)
    return a.multiply(left, right, product)


def _add_substitution_constraints(system: LinearSystem, phi: MultilinearIdentity, a: Algebra, j: int) -> None:
    if phi.degree < 2:
        raise PreconditionError("operator substitution needs an identity of degree at least 2")
    if any(tag != MUL for tag in phi.product_tags):
        raise PreconditionError("operator substitution needs a single-product identity")
    n = a.dim
    others = [t for t in range(1, phi.degree + 1) if t != j]
    basis = [a.basis_vector(i) for i in range(n)]
    for indices in itertools.product(range(n), repeat=len(others)):
        args = {t: basis[i] for t, i in zip(others, indices)}
        total = SymbolicVector.zero(n)
        for term in phi.terms:
            value = _substitute(term.tree, a, j, args)
            if isinstance(value, SymbolicVector):
                total.iadd(value, a.field(term.coefficient))
        system.require_zero(total)


def operator_constraints(phi: MultilinearIdentity, a: Algebra, j: int) -> Matrix:
    """
    Constraints on (L_f, R_f) expressing phi(..., f at slot j, ...) = 0.

    Args:
        phi: Single-product identity
        a: The algebra X
        j: 1-based slot receiving f

    Returns:
        A homogeneous coefficient matrix with 2n^2 columns
    """
    if not 1 <= j <= phi.degree:
        raise PreconditionError(f"slot {j} out of range for an identity of degree {phi.degree}")
    system = LinearSystem(a.field, 2 * a.dim * a.dim)
    _add_substitution_constraints(system, phi, a, j)
    return system.matrix()


def _substitution_system(a: Algebra, identities: Sequence[MultilinearIdentity]) -> LinearSystem:
    system = LinearSystem(a.field, 2 * a.dim * a.dim)
    for phi in identities:
        for j in range(1, phi.degree + 1):
            _add_substitution_constraints(system, phi, a, j)
    return system


def external_weak_actor(a: Algebra, v: VarietyPreset) -> ActorSpace:
    """
    Compute E(X) for X = a in the variety v.

    Stacks the substitution constraints of every identity at every slot and
    returns their common solution space.

    Args:
        a: The algebra X
        v: A single-product variety containing a

    Returns:
        The ActorSpace E(X)

    Raises:
        CharacteristicError: the variety excludes the field
        VarietyViolationError: a is not in v
    """
    if v.num_products != 1:
        raise PreconditionError(f"variety '{v.name}' has two products; use poisson.usga")
    v.require(a)
    system = _substitution_system(a, v.parsed_identities)
    subspace = system.solution_space()
    _logger.info(f"E({a.name}) in {v.name}: {system.num_rows} constraints, dimension {subspace.dim}")
    return ActorSpace(algebra=a, variety=v, subspace=subspace, rules=v.lambda_mu)


# ---------------------------------------------------------------------------
# displayed equation systems
# ---------------------------------------------------------------------------

def _op(a: Algebra, block: int, x: Element) -> SymbolicVector:
    return SymbolicVector.operator_image(a.dim, block, x)


def _equation_system(a: Algebra, equations) -> LinearSystem:
    """Constraints from ``equations(x, y, xy, yx)`` over all basis pairs."""
    n = a.dim
    system = LinearSystem(a.field, 2 * n * n)
    basis = [a.basis_vector(i) for i in range(n)]
    for x, y in itertools.product(basis, repeat=2):
        for expression in equations(x, y, a.multiply(x, y), a.multiply(y, x)):
            system.require_zero(expression)
    return system


def _combine(n: int, *parts: Tuple[int, SymbolicVector], field: Field) -> SymbolicVector:
    total = SymbolicVector.zero(n)
    for sign, part in parts:
        total.iadd(part, field(sign))
    return total


def bimultipliers(a: Algebra) -> Subspace:
    """
    Bim(X): pairs with f*(xy) = (f*x)y, (xy)*f = x(y*f) and x(f*y) = (x*f)y.

    Returns:
        Canonical subspace of F^(2n^2) in the (L_f, R_f) ordering
    """
    n, F = a.dim, a.field

    def equations(x, y, xy, yx):
        yield _combine(n, (1, _op(a, LEFT, xy)), (-1, _op(a, LEFT, x).times(a, y)), field=F)
        yield _combine(n, (1, _op(a, RIGHT, xy)), (-1, _op(a, RIGHT, y).rtimes(a, x)), field=F)
        yield _combine(n, (1, _op(a, LEFT, y).rtimes(a, x)), (-1, _op(a, RIGHT, x).times(a, y)), field=F)

    return _equation_system(a, equations).solution_space()


def _alt_equations(a: Algebra):
    n, F = a.dim, a.field

    def equations(x, y, xy, yx):
        # f*(xy) = (x*f)y + (f*x)y - x(f*y)
        yield _combine(
            n,
            (1, _op(a, LEFT, xy)),
            (-1, _op(a, RIGHT, x).times(a, y)),
            (-1, _op(a, LEFT, x).times(a, y)),
            (1, _op(a, LEFT, y).rtimes(a, x)),
            field=F,
        )
        # (xy)*f = x(f*y) + x(y*f) - (x*f)y
        yield _combine(
            n,
            (1, _op(a, RIGHT, xy)),
            (-1, _op(a, LEFT, y).rtimes(a, x)),
            (-1, _op(a, RIGHT, y).rtimes(a, x)),
            (1, _op(a, RIGHT, x).times(a, y)),
            field=F,
        )
        # x(y*f) = (yx)*f + (xy)*f - y(x*f)
        yield _combine(
            n,
            (1, _op(a, RIGHT, y).rtimes(a, x)),
            (-1, _op(a, RIGHT, yx)),
            (-1, _op(a, RIGHT, xy)),
            (1, _op(a, RIGHT, x).rtimes(a, y)),
            field=F,
        )
        # (f*x)y = f*(yx) + f*(xy) - (f*y)x
        yield _combine(
            n,
            (1, _op(a, LEFT, x).times(a, y)),
            (-1, _op(a, LEFT, yx)),
            (-1, _op(a, LEFT, xy)),
            (1, _op(a, LEFT, y).times(a, x)),
            field=F,
        )

    return equations


def alt_actor_equations_space(a: Algebra) -> Subspace:
    """Solution space of the four alternative-actor equations, in F^(2n^2)."""
    return _equation_system(a, _alt_equations(a)).solution_space()


def alt_actor_equations_check(e: ActorElement, a: Algebra) -> bool:
    """
    Whether (L_f, R_f) satisfies the four alternative-actor equations on all
    basis pairs, evaluated directly with the concrete matrices.
    """
    if e.n != a.dim:
        raise DimensionMismatchError(f"actor element of size {e.n} for an algebra of dimension {a.dim}")
    L, R = e.act_left, e.act_right
    m = a.multiply
    basis = [a.basis_vector(i) for i in range(a.dim)]
    for x, y in itertools.product(basis, repeat=2):
        xy, yx = m(x, y), m(y, x)
        checks = (
            (L(xy), [(1, m(R(x), y)), (1, m(L(x), y)), (-1, m(x, L(y)))]),
            (R(xy), [(1, m(x, L(y))), (1, m(x, R(y))), (-1, m(R(x), y))]),
            (m(x, R(y)), [(1, R(yx)), (1, R(xy)), (-1, m(y, R(x)))]),
            (m(L(x), y), [(1, L(yx)), (1, L(xy)), (-1, m(L(y), x))]),
        )
        for lhs, rhs in checks:
            total = list(lhs)
            for sign, vector in rhs:
                for k, c in enumerate(vector):
                    total[k] -= a.field(sign) * c
            if any(total):
                return False
    return True


# ---------------------------------------------------------------------------
# partial product
# ---------------------------------------------------------------------------

def _lambda_mu_terms(f: ActorElement, g: ActorElement) -> List[Matrix]:
    """
    Matrices of the eight bracketings, as maps of x:
    (x*f)*g, (f*x)*g, g*(x*f), g*(f*x), (x*g)*f, (g*x)*f, f*(x*g), f*(g*x).
    """
    Lf, Rf, Lg, Rg = f.left, f.right, g.left, g.right
    return [
        mat_mul(Rg, Rf),
        mat_mul(Rg, Lf),
        mat_mul(Lg, Rf),
        mat_mul(Lg, Lf),
        mat_mul(Rf, Rg),
        mat_mul(Rf, Lg),
        mat_mul(Lf, Rg),
        mat_mul(Lf, Lg),
    ]


def raw_product(s: ActorSpace, f: ActorElement, g: ActorElement) -> ActorElement:
    """
    The pair (h*-, -*h) defined by the space's product rule, without the
    membership test.
    """
    F, n = s.field, s.n
    if s.variety.product_rule == "alt":
        Lf, Rf, Lg, Rg = f.left, f.right, g.left, g.right
        one, minus = F.one, -F.one
        # h*x = -(f*x)*g + f*(g*x) + f*(x*g)
        left = mat_combination(F, [(minus, mat_mul(Rg, Lf)), (one, mat_mul(Lf, Lg)), (one, mat_mul(Lf, Rg))], n, n)
        # x*h = (x*f)*g + (f*x)*g - f*(x*g)
        right = mat_combination(F, [(one, mat_mul(Rg, Rf)), (one, mat_mul(Rg, Lf)), (minus, mat_mul(Lf, Rg))], n, n)
        return ActorElement(left, right)
    if s.rules is None:
        raise PreconditionError(f"variety '{s.variety.name}' has no λ/μ rules")
    lambdas, mus = s.rules.resolve(F)
    terms = _lambda_mu_terms(f, g)
    right = mat_combination(F, zip(lambdas, terms), n, n)
    left = mat_combination(F, zip(mus, terms), n, n)
    return ActorElement(left, right)


def partial_product(s: ActorSpace, f: ActorElement, g: ActorElement) -> Optional[ActorElement]:
    """
    The partial product <f, g> on E(X).

    Args:
        s: The actor space
        f: First factor, must lie in s
        g: Second factor, must lie in s

    Returns:
        The product if it lies in s, None when (f, g) is outside the domain

    Raises:
        NotInActorError: f or g is not in s
    """
    s.require(f, "left factor")
    s.require(g, "right factor")
    h = raw_product(s, f, g)
    if s.contains(h):
        return h
    _logger.debug(f"partial product undefined on a pair in E({s.algebra.name})")
    return None


# ---------------------------------------------------------------------------
# classical actors
# ---------------------------------------------------------------------------

def matrices_of(space: Subspace, n: int) -> List[Matrix]:
    """Basis of a subspace of F^(n^2) read as row-major n x n matrices."""
    return [_unflatten(space.field, n, v) for v in space.basis]


def derivations(a: Algebra, product: int = MUL) -> Subspace:
    """
    Der(X) for one product: all D with D(xy) = (Dx)y + x(Dy).

    Returns:
        Canonical subspace of F^(n^2), matrices flattened row-major
    """
    n = a.dim
    system = LinearSystem(a.field, n * n)
    basis = [a.basis_vector(i) for i in range(n)]
    minus = -a.field.one
    for x, y in itertools.product(basis, repeat=2):
        expression = _op(a, 0, a.multiply(x, y, product))
        expression.iadd(_op(a, 0, x).times(a, y, product), minus)
        expression.iadd(_op(a, 0, y).rtimes(a, x, product), minus)
        system.require_zero(expression)
    space = system.solution_space()
    _logger.info(f"Der({a.name}) for '{a.product_names[product]}': dimension {space.dim}")
    return space


def multipliers(a: Algebra) -> Subspace:
    """
    M(X) = {f : f(xy) = f(x)y} for a commutative associative algebra.

    Returns:
        Canonical subspace of F^(n^2), matrices flattened row-major
    """
    if not a.is_commutative() or not check_identity(parse_identity("(x1*x2)*x3 - x1*(x2*x3)"), a).satisfied:
        raise PreconditionError(f"multipliers need a commutative associative algebra, '{a.name}' is not")
    n = a.dim
    system = LinearSystem(a.field, n * n)
    basis = [a.basis_vector(i) for i in range(n)]
    for x, y in itertools.product(basis, repeat=2):
        expression = _op(a, 0, a.multiply(x, y))
        expression.iadd(_op(a, 0, x).times(a, y), -a.field.one)
        system.require_zero(expression)
    return system.solution_space()
