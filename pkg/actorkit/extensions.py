"""
Split Extensions Module

Split extensions 0 -> X -k-> A <-alpha/beta-> B -> 0, the acting morphisms
they induce, semidirect products and a brute-force enumeration over small
prime fields comparing extensions with morphisms into the actor.

Every enumerated extension is in normal form: A = B + X as vector spaces
with the basis of B first, alpha the projection, beta the inclusion of B
and k the inclusion of X.
"""

import itertools
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from dataclasses_json import dataclass_json

from .actor import ActorElement, ActorSpace
from .algebra import Algebra, Element
from .errors import (
    BudgetExceededError,
    ConsistencyError,
    DimensionMismatchError,
    NotInActorError,
    PreconditionError,
)
from .linalg import (
    Field,
    Matrix,
    Scalar,
    Subspace,
    identity,
    mat_mul,
    mat_vec,
    matrices_equal,
    matrix_from_columns,
    matrix_from_rows,
    matrix_rows,
    nullspace_basis,
    solve_linear,
)
from .varieties import VarietyPreset

DEFAULT_BUDGET = 2 ** 16
BUDGET_ENV = "ACTORKIT_BUDGET"

_logger = logging.getLogger(__name__)


def resolve_budget(budget: Optional[int] = None) -> int:
    """
    Enumeration budget: the explicit value, else ``ACTORKIT_BUDGET``, else 2^16.
    """
    if budget is not None:
        return int(budget)
    raw = os.getenv(BUDGET_ENV)
    if raw:
        try:
            return int(raw)
        except ValueError:
            _logger.warning(f"Ignoring non-integer {BUDGET_ENV}={raw!r}")
    return DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# morphisms
# ---------------------------------------------------------------------------

def _columns(m: Matrix) -> List[Tuple[Scalar, ...]]:
    rows = matrix_rows(m)
    return [tuple(row[j] for row in rows) for j in range(m.shape[1])]


def is_morphism(source: Algebra, target: Algebra, matrix: Matrix) -> bool:
    """Whether ``matrix`` preserves every product on all basis pairs."""
    if matrix.shape != (target.dim, source.dim) or source.num_products != target.num_products:
        return False
    images = _columns(matrix)
    for r in range(source.num_products):
        for i in range(source.dim):
            for j in range(source.dim):
                lhs = mat_vec(matrix, source.multiply(source.basis_vector(i), source.basis_vector(j), r))
                if lhs != target.multiply(images[i], images[j], r):
                    return False
    return True


@dataclass(frozen=True)
class AlgebraMorphism:
    """
    A linear map between algebras preserving every product.

    Attributes:
        source: Domain algebra
        target: Codomain algebra
        matrix: target.dim x source.dim matrix, column i is the image of basis vector i
    """
    source: Algebra
    target: Algebra
    matrix: Matrix

    def __post_init__(self):
        """Validate the shape and multiplicativity."""
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(
                f"morphism matrix of shape {self.matrix.shape}, expected {(self.target.dim, self.source.dim)}"
            )
        if self.source.num_products != self.target.num_products:
            raise DimensionMismatchError("source and target have different numbers of products")
        if not is_morphism(self.source, self.target, self.matrix):
            raise PreconditionError(f"map {self.source.name} -> {self.target.name} does not preserve the products")

    def __call__(self, x: Sequence[Scalar]) -> Element:
        return mat_vec(self.matrix, x)

    def images(self) -> List[Element]:
        return _columns(self.matrix)

    def compose(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """self ∘ other"""
        return AlgebraMorphism(other.source, self.target, mat_mul(self.matrix, other.matrix))

    def kernel(self) -> Subspace:
        return nullspace_basis(self.matrix)

    def image(self) -> Subspace:
        return Subspace.span(self.source.field, self.target.dim, self.images())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, AlgebraMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and matrices_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.source.dim, self.target.dim, tuple(matrix_rows(self.matrix))))


def _inclusion(F: Field, dim: int, offset: int, size: int) -> Matrix:
    return matrix_from_columns(F, [tuple(F.one if r == offset + c else F.zero for r in range(dim)) for c in range(size)], dim)


def _projection(F: Field, dim: int, offset: int, size: int) -> Matrix:
    return matrix_from_columns(
        F, [tuple(F.one if c == offset + r else F.zero for r in range(size)) for c in range(dim)], size
    )


@dataclass(frozen=True)
class SplitExtensionData:
    """
    A split extension of B by X: alpha ∘ beta = id_B and (X, k) is the kernel of alpha.
    """
    X: Algebra
    A: Algebra
    B: Algebra
    k: AlgebraMorphism
    alpha: AlgebraMorphism
    beta: AlgebraMorphism

    def __post_init__(self):
        """Check the shape of the diagram and its exactness."""
        if self.k.source != self.X or self.k.target != self.A:
            raise ConsistencyError("k must map X to A")
        if self.alpha.source != self.A or self.alpha.target != self.B:
            raise ConsistencyError("alpha must map A to B")
        if self.beta.source != self.B or self.beta.target != self.A:
            raise ConsistencyError("beta must map B to A")
        if not matrices_equal(mat_mul(self.alpha.matrix, self.beta.matrix), identity(self.B.field, self.B.dim)):
            raise ConsistencyError("alpha ∘ beta is not the identity of B")
        if self.k.kernel().dim != 0:
            raise ConsistencyError("k is not injective")
        if self.k.image() != self.alpha.kernel():
            raise ConsistencyError("the image of k is not the kernel of alpha")


def canonical_extension(B: Algebra, X: Algebra, A: Algebra) -> SplitExtensionData:
    """Package A = B + X (basis of B first) with its canonical k, alpha and beta."""
    F, m, n = A.field, B.dim, X.dim
    if A.dim != m + n:
        raise DimensionMismatchError(f"algebra of dimension {A.dim} cannot split as {m} + {n}")
    return SplitExtensionData(
        X=X,
        A=A,
        B=B,
        k=AlgebraMorphism(X, A, _inclusion(F, m + n, m, n)),
        alpha=AlgebraMorphism(A, B, _projection(F, m + n, 0, m)),
        beta=AlgebraMorphism(B, A, _inclusion(F, m + n, 0, m)),
    )


# ---------------------------------------------------------------------------
# acting morphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ActingMorphism:
    """
    A linear map B -> actor space, given by the images of B's basis vectors.

    Attributes:
        B: The acting algebra
        target: Actor space of X (E(X) or the Poisson actor)
        assignment: Image of each basis vector of B
    """
    B: Algebra
    target: ActorSpace
    assignment: Tuple[ActorElement, ...]

    def __post_init__(self):
        """Check membership and, where the variety asks for it, permutability."""
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if len(self.assignment) != self.B.dim:
            raise DimensionMismatchError(f"{len(self.assignment)} images for {self.B.dim} basis vectors")
        for i, e in enumerate(self.assignment):
            if not self.target.contains(e):
                raise NotInActorError(f"image of {self.B.basis_names[i]} is not in the actor of '{self.target.algebra.name}'")
        if self.target.variety.permutability_required:
            pair = first_non_permutable_pair(self.assignment)
            if pair is not None:
                i, j = pair
                raise PreconditionError(
                    f"(b*x)*b' = b*(x*b') fails for b = {self.B.basis_names[i]}, b' = {self.B.basis_names[j]}"
                )

    def __call__(self, b: Sequence[Scalar]) -> ActorElement:
        total = self.target.zero()
        for c, e in zip(b, self.assignment):
            if c:
                total = total + e.scale(c)
        return total

    def key(self) -> Tuple[Scalar, ...]:
        """All images flattened in order; equal keys mean equal morphisms."""
        return tuple(a for e in self.assignment for a in e.flatten())

    def is_multiplicative(self) -> bool:
        """Whether phi(bb') equals the structure product of phi(b), phi(b') for every product of B."""
        B = self.B
        for r in range(min(B.num_products, self.target.num_operations)):
            for i, j in itertools.product(range(B.dim), repeat=2):
                value = self.target.compose(self.assignment[i], self.assignment[j], r)
                if value is None or value != self(B.multiply(B.basis_vector(i), B.basis_vector(j), r)):
                    return False
        return True

    def export(self) -> Dict[str, Any]:
        F = self.target.field
        return {name: e.export(F) for name, e in zip(self.B.basis_names, self.assignment)}


def permutability_check(f: ActorElement, g: ActorElement) -> bool:
    """
    Whether (f*x)*g = f*(x*g) for all x, i.e. R_g ∘ L_f = L_f ∘ R_g.
    """
    if f.n != g.n:
        raise DimensionMismatchError(f"actor elements of sizes {f.n} and {g.n}")
    return matrices_equal(mat_mul(g.right, f.left), mat_mul(f.left, g.right))


def first_non_permutable_pair(elements: Sequence[ActorElement]) -> Optional[Tuple[int, int]]:
    for i, j in itertools.product(range(len(elements)), repeat=2):
        if not permutability_check(elements[i], elements[j]):
            return i, j
    return None


def extension_to_acting_morphism(e: SplitExtensionData, s: ActorSpace) -> ActingMorphism:
    """
    The acting morphism b -> (b*-, -*b) induced by a split extension.

    b*x = k^-1(beta(b) k(x)) and x*b = k^-1(k(x) beta(b)); when s carries a
    derivation block, the bracket gives the third operator the same way.

    Args:
        e: A split extension of B by X
        s: Actor space of X

    Returns:
        The ActingMorphism, validated against s
    """
    if e.X != s.algebra:
        raise PreconditionError("the extension's kernel algebra is not the algebra of the actor space")
    A, F, n = e.A, e.A.field, e.X.dim
    K = e.k.matrix
    kx = [e.k(e.X.basis_vector(j)) for j in range(n)]

    def pullback(v: Element) -> Element:
        x = solve_linear(K, v)
        if x is None:
            raise ConsistencyError("X is not an ideal of A")
        return x

    products = [(0, True), (0, False)] + ([(1, True)] if s.num_blocks == 3 else [])
    assignment = []
    for i in range(e.B.dim):
        u = e.beta(e.B.basis_vector(i))
        blocks = []
        for product, on_left in products:
            columns = [pullback(A.multiply(u, v, product) if on_left else A.multiply(v, u, product)) for v in kx]
            blocks.append(matrix_from_columns(F, columns, n))
        assignment.append(s.element_from_blocks(blocks))
    return ActingMorphism(e.B, s, tuple(assignment))


def acting_morphism_from_homomorphism(B: Algebra, s: ActorSpace, images: Sequence[Sequence[Scalar]]) -> ActingMorphism:
    """b_i -> Inn(images[i]), for a homomorphism B -> X given by the images of B's basis."""
    if len(images) != B.dim:
        raise DimensionMismatchError(f"{len(images)} images for {B.dim} basis vectors")
    return ActingMorphism(B, s, tuple(s.inner(x) for x in images))


@dataclass(frozen=True)
class InnerMap:
    """
    The linear map x -> Inn(x) from X into an actor space, in actor coordinates.

    Attributes:
        matrix: actor_dim x n matrix, column i holds the coordinates of Inn(b_i)
        kernel: Kernel as a subspace of X
        image: Image as a subspace of F^actor_dim
    """
    matrix: Matrix
    kernel: Subspace
    image: Subspace

    @property
    def is_injective(self) -> bool:
        return self.kernel.dim == 0

    @property
    def is_surjective(self) -> bool:
        return self.image.dim == self.image.ambient_dim

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def summary(self) -> Dict[str, Any]:
        return {
            "kernel_dim": self.kernel.dim,
            "image_dim": self.image.dim,
            "actor_dim": self.image.ambient_dim,
            "injective": self.is_injective,
            "surjective": self.is_surjective,
            "bijective": self.is_bijective,
        }


def inn_map(a: Algebra, s: ActorSpace) -> InnerMap:
    """
    Inn: X -> actor space, x -> (x*-, -*x) (and [x,-] for a derivation block).

    Args:
        a: The algebra X
        s: An actor space computed from a

    Returns:
        The InnerMap with its kernel and image

    Raises:
        ConsistencyError: some Inn(b_i) is outside s
    """
    if s.algebra != a:
        raise PreconditionError("the actor space was computed from another algebra")
    columns = []
    for i in range(a.dim):
        coords = s.subspace.coordinates(s.inner(a.basis_vector(i)).flatten())
        if coords is None:
            raise ConsistencyError(f"Inn({a.basis_names[i]}) is not in the actor space of '{a.name}'")
        columns.append(coords)
    matrix = matrix_from_columns(a.field, columns, s.dim)
    result = InnerMap(matrix=matrix, kernel=nullspace_basis(matrix), image=Subspace.span(a.field, s.dim, columns))
    _logger.info(f"Inn for '{a.name}': kernel {result.kernel.dim}, image {result.image.dim} of {s.dim}")
    return result


# ---------------------------------------------------------------------------
# semidirect products
# ---------------------------------------------------------------------------

def _semidirect_algebra(B: Algebra, X: Algebra, cross: Sequence[Sequence[Matrix]], name: str = "") -> Algebra:
    """
    B + X with (b, x)(b', x') = (bb', xx' + L_b x' + R_b' x) and, for a
    bracket, [(b, x), (b', x')] = ([b, b'], [x, x'] + D_b x' - D_b' x).

    ``cross[i]`` holds (L, R[, D]) for basis vector i of B.
    """
    if B.field != X.field:
        raise PreconditionError("B and X live over different fields")
    if B.num_products != X.num_products:
        raise PreconditionError("B and X have different numbers of products")
    m, n = B.dim, X.dim
    products = []
    for r, product_name in enumerate(X.product_names):
        entries = [(i, j, k, c) for i, j, k, c in B.entries(r)]
        entries += [(m + i, m + j, m + k, c) for i, j, k, c in X.entries(r)]
        for i, blocks in enumerate(cross):
            if r == 0:
                left, right = _columns(blocks[0]), _columns(blocks[1])
                for j in range(n):
                    entries += [(i, m + j, m + k, c) for k, c in enumerate(left[j]) if c]
                    entries += [(m + j, i, m + k, c) for k, c in enumerate(right[j]) if c]
            elif len(blocks) > 2:
                der = _columns(blocks[2])
                for j in range(n):
                    entries += [(i, m + j, m + k, c) for k, c in enumerate(der[j]) if c]
                    entries += [(m + j, i, m + k, -c) for k, c in enumerate(der[j]) if c]
        products.append((product_name, entries))
    if set(B.basis_names) & set(X.basis_names):
        basis = tuple(f"b_{s}" for s in B.basis_names) + tuple(f"x_{s}" for s in X.basis_names)
    else:
        basis = B.basis_names + X.basis_names
    return Algebra.from_entries(B.field, m + n, products, basis, name or f"{B.name} ⋉ {X.name}")


def semidirect_extension(B: Algebra, X: Algebra, phi: ActingMorphism, v: VarietyPreset) -> SplitExtensionData:
    """
    Semidirect product B ⋉_phi X with its canonical split extension data.

    Raises:
        VarietyViolationError: the product leaves the variety (phi is not acting)
    """
    if phi.B != B:
        raise PreconditionError("phi is defined on another algebra than B")
    if phi.target.algebra != X:
        raise PreconditionError("phi does not act on X")
    A = _semidirect_algebra(B, X, [e.blocks for e in phi.assignment])
    v.require(A)
    _logger.debug(f"semidirect product {A.name} passes {v.name}")
    return canonical_extension(B, X, A)


def semidirect_product(B: Algebra, X: Algebra, phi: ActingMorphism, v: VarietyPreset) -> Algebra:
    """
    The algebra B ⋉_phi X on B + X.

    Args:
        B: Acting algebra
        X: Algebra acted on
        phi: Acting morphism B -> actor of X
        v: Variety the result must belong to

    Returns:
        The semidirect product, basis of B first
    """
    return semidirect_extension(B, X, phi, v).A


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

Key = Tuple[int, ...]


@dataclass
class EnumerationResult:
    """Split extensions in normal form, each with the key of its acting morphism."""
    extensions: List[SplitExtensionData]
    keys: List[Key]
    candidates: int

    @property
    def groups(self) -> Dict[Key, int]:
        counts: Dict[Key, int] = {}
        for key in self.keys:
            counts[key] = counts.get(key, 0) + 1
        return counts

    @property
    def num_classes(self) -> int:
        return len(self.groups)

    def __len__(self) -> int:
        return len(self.extensions)

    def __iter__(self):
        return iter(self.extensions)


def _require_finite(F: Field) -> None:
    if F.characteristic == 0:
        raise PreconditionError("brute-force enumeration needs a prime field")


def _check_budget(candidates: int, budget: int) -> None:
    if candidates > budget:
        raise BudgetExceededError(candidates, budget)


def _cross_from_values(F: Field, m: int, n: int, blocks: int, values: Sequence[Scalar]) -> List[List[Matrix]]:
    size = n * n
    cross = []
    for i in range(m):
        element = []
        for b in range(blocks):
            start = (i * blocks + b) * size
            flat = values[start:start + size]
            element.append(matrix_from_rows(F, [flat[r * n:(r + 1) * n] for r in range(n)], n))
        cross.append(element)
    return cross


def enumerate_split_extensions(B: Algebra, X: Algebra, v: VarietyPreset, budget: Optional[int] = None) -> EnumerationResult:
    """
    All split extensions of B by X in v, in normal form.

    Loops over every table of cross terms (L_b, R_b and, for two products,
    D_b) in lexicographic order and keeps the algebras satisfying v.

    Args:
        B: Acting algebra over GF(p)
        X: Kernel algebra over the same field
        v: Variety
        budget: Maximum number of candidate tables

    Returns:
        The surviving extensions with their acting-morphism keys

    Raises:
        BudgetExceededError: p^(blocks * dim B * (dim X)^2) exceeds the budget
    """
    F = X.field
    _require_finite(F)
    if v.num_products != X.num_products:
        raise PreconditionError(f"variety '{v.name}' and '{X.name}' have different numbers of products")
    v.require(B)
    v.require(X)
    m, n = B.dim, X.dim
    blocks = 2 if v.num_products == 1 else 3
    entries = blocks * m * n * n
    candidates = F.characteristic ** entries
    _check_budget(candidates, resolve_budget(budget))
    extensions, keys = [], []
    for values in itertools.product(F.elements(), repeat=entries):
        A = _semidirect_algebra(B, X, _cross_from_values(F, m, n, blocks, values))
        if not v.contains(A):
            continue
        extensions.append(canonical_extension(B, X, A))
        keys.append(tuple(F.to_int(c) for c in values))
    _logger.info(f"{len(extensions)} of {candidates} cross tables give split extensions of {B.name} by {X.name} in {v.name}")
    return EnumerationResult(extensions=extensions, keys=keys, candidates=candidates)


def variety_morphisms(B: Algebra, T: Algebra, budget: Optional[int] = None) -> List[AlgebraMorphism]:
    """
    Every algebra morphism B -> T, by brute force over all linear maps.

    Raises:
        BudgetExceededError: p^(dim B * dim T) exceeds the budget
    """
    F = T.field
    _require_finite(F)
    m, t = B.dim, T.dim
    candidates = F.characteristic ** (m * t)
    _check_budget(candidates, resolve_budget(budget))
    found = []
    for values in itertools.product(F.elements(), repeat=m * t):
        columns = [values[i * t:(i + 1) * t] for i in range(m)]
        matrix = matrix_from_columns(F, columns, t)
        if is_morphism(B, T, matrix):
            found.append(AlgebraMorphism(B, T, matrix))
    _logger.info(f"{len(found)} morphisms {B.name} -> {T.name}")
    return found


@dataclass_json
@dataclass
class BijectionReport:
    """Split extensions of B by X against morphisms from B into the actor of X."""
    variety: str
    B: str
    X: str
    split_extensions: int
    acting_morphisms: int
    match: bool
    witness: Optional[str] = None
    actor: str = ""
    candidates: int = 0
    keys: List[List[int]] = field(default_factory=list)


def _inner_key(X: Algebra, z: Element) -> Key:
    F = X.field
    blocks = [X.left_multiplication(z, 0), X.right_multiplication(z, 0)]
    if X.num_products == 2:
        blocks.append(X.left_multiplication(z, 1))
    return tuple(F.to_int(a) for block in blocks for row in matrix_rows(block) for a in row)


def verify_bijection(B: Algebra, X: Algebra, v: VarietyPreset, budget: Optional[int] = None) -> BijectionReport:
    """
    Compare split extensions of B by X with morphisms B -> X (or B -> Z(X)).

    Each morphism psi is sent to the acting morphism b -> Inn(psi(b)); the
    two sides match when they give the same set of acting morphisms.

    Args:
        B: Acting algebra over GF(p)
        X: Unital algebra in v
        v: Variety with a known actor kind
        budget: Candidate budget for both enumerations

    Returns:
        A BijectionReport; ``witness`` names the first acting morphism found on one side only
    """
    if v.actor_kind is None:
        raise PreconditionError(f"variety '{v.name}' has no actor description to compare with")
    if X.find_unit() is None:
        raise PreconditionError(f"'{X.name}' is not unital")
    enumeration = enumerate_split_extensions(B, X, v, budget)
    if v.actor_kind == "center":
        center = X.lie_center()
        T = X.subalgebra(center, name=f"Z({X.name})")
        embed = center.combination
    else:
        T = X
        embed = tuple
    morphisms = variety_morphisms(B, T, budget)
    morphism_keys = [
        tuple(a for image in psi.images() for a in _inner_key(X, embed(image)))
        for psi in morphisms
    ]
    extension_side, morphism_side = set(enumeration.keys), set(morphism_keys)
    difference = sorted(extension_side ^ morphism_side)
    witness = None
    if difference:
        key = difference[0]
        side = "split extension" if key in extension_side else "morphism"
        witness = f"{side} only: cross table {list(key)}"
    report = BijectionReport(
        variety=v.name,
        B=B.name,
        X=X.name,
        split_extensions=len(extension_side),
        acting_morphisms=len(morphism_side),
        match=not difference,
        witness=witness,
        actor=T.name,
        candidates=enumeration.candidates,
        keys=[list(key) for key in sorted(extension_side)],
    )
    _logger.info(f"bijection {B.name} / {X.name} in {v.name}: {report.split_extensions} vs {report.acting_morphisms}")
    return report
