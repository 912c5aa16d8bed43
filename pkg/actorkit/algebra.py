"""
Algebra Module

Finite-dimensional algebras given by structure constants, with one product
(index 0) or two (index 0 = associative product, index 1 = bracket).
"""

import logging
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import ConsistencyError, DimensionMismatchError, PreconditionError
from .linalg import (
    Field,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    matrix_from_columns,
    matrix_from_rows,
    nullspace_from_rows,
    solve_linear,
    unit_vector,
    vec_add,
    vec_scale,
    zero_vector,
)

Element = Vector
Tensor = Tuple[Tuple[Tuple[Scalar, ...], ...], ...]
EntryList = Iterable[Tuple[int, int, int, Any]]

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Algebra:
    """
    A non-associative algebra over an exact field.

    Attributes:
        field: Ground field
        dim: Dimension n
        products: One tensor per product, ``products[r][i][j][k]`` is the
            coefficient of b_k in the product b_i * b_j
        basis_names: Labels of the basis vectors
        product_names: Labels of the products (e.g. "mul", "bracket")
        name: Human-readable name
    """
    field: Field
    dim: int
    products: Tuple[Tensor, ...]
    basis_names: Tuple[str, ...] = ()
    product_names: Tuple[str, ...] = ()
    name: str = dataclass_field(default="", compare=False)

    def __post_init__(self):
        """Validate tensor shapes and fill default labels."""
        n = self.dim
        if not self.products:
            raise PreconditionError("an algebra needs at least one product")
        for tensor in self.products:
            if len(tensor) != n or any(len(row) != n or any(len(c) != n for c in row) for row in tensor):
                raise DimensionMismatchError(f"structure constants must have shape {n}x{n}x{n}")
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i}" for i in range(n)))
        if len(self.basis_names) != n:
            raise DimensionMismatchError(f"{len(self.basis_names)} basis names for dimension {n}")
        if not self.product_names:
            defaults = ("mul", "bracket")
            names = tuple(defaults[r] if r < 2 else f"product{r}" for r in range(len(self.products)))
            object.__setattr__(self, "product_names", names)
        if len(self.product_names) != len(self.products):
            raise DimensionMismatchError("one name is required per product")

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_entries(
        cls,
        field: Field,
        dim: int,
        products: Union[Mapping[str, EntryList], Sequence[Tuple[str, EntryList]]],
        basis: Optional[Sequence[str]] = None,
        name: str = "",
    ) -> "Algebra":
        """
        Build an algebra from sparse structure-constant entries.

        Args:
            field: Ground field
            dim: Dimension
            products: Product name -> iterable of ``(i, j, k, coeff)``;
                omitted entries are zero, coefficients may be ints or scalar strings
            basis: Optional basis labels
            name: Optional algebra name

        Returns:
            The Algebra
        """
        items = list(products.items()) if isinstance(products, Mapping) else list(products)
        tensors = []
        for product_name, entries in items:
            dense = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
            for i, j, k, coeff in entries:
                if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                    raise DimensionMismatchError(f"entry ({i}, {j}, {k}) of '{product_name}' out of range for dimension {dim}")
                dense[i][j][k] += field.parse(coeff) if isinstance(coeff, (int, str)) else coeff
            tensors.append(tuple(tuple(tuple(c) for c in row) for row in dense))
        return cls(
            field=field,
            dim=dim,
            products=tuple(tensors),
            basis_names=tuple(basis or ()),
            product_names=tuple(name_ for name_, _ in items),
            name=name,
        )

    @classmethod
    def from_table(
        cls,
        field: Field,
        basis: Sequence[str],
        tables: Sequence[Mapping[Tuple[int, int], Sequence[Scalar]]],
        product_names: Sequence[str] = (),
        name: str = "",
    ) -> "Algebra":
        """Build an algebra from ``{(i, j): coordinates of b_i * b_j}`` tables."""
        n = len(basis)
        tensors = []
        for table in tables:
            dense = [[tuple(table.get((i, j), zero_vector(field, n))) for j in range(n)] for i in range(n)]
            tensors.append(tuple(tuple(row) for row in dense))
        return cls(field, n, tuple(tensors), tuple(basis), tuple(product_names), name)

    def entries(self, product: int = 0) -> List[Tuple[int, int, int, Scalar]]:
        """Nonzero structure constants of one product as ``(i, j, k, coeff)``."""
        return [
            (i, j, k, c)
            for i in range(self.dim)
            for j in range(self.dim)
            for k, c in self._sparse[product][i][j]
        ]

    @cached_property
    def _sparse(self) -> Tuple[Tuple[Tuple[Tuple[Tuple[int, Scalar], ...], ...], ...], ...]:
        return tuple(
            tuple(
                tuple(tuple((k, c) for k, c in enumerate(tensor[i][j]) if c) for j in range(self.dim))
                for i in range(self.dim)
            )
            for tensor in self.products
        )

    @property
    def num_products(self) -> int:
        return len(self.products)

    def product_index(self, name: str) -> int:
        if name not in self.product_names:
            raise PreconditionError(f"algebra '{self.name}' has no product named '{name}'")
        return self.product_names.index(name)

    def basis_product(self, i: int, j: int, product: int = 0) -> Tuple[Tuple[int, Scalar], ...]:
        """Sparse coordinates of b_i * b_j."""
        return self._sparse[product][i][j]

    # ------------------------------------------------------------------
    # elements
    # ------------------------------------------------------------------

    def zero(self) -> Element:
        return zero_vector(self.field, self.dim)

    def basis_vector(self, i: int) -> Element:
        return unit_vector(self.field, self.dim, i)

    def element(self, coords: Sequence[Any]) -> Element:
        """Element from coordinates given as scalars, ints or scalar strings."""
        self._check_length(coords)
        return tuple(self.field.parse(c) if isinstance(c, (int, str)) else c for c in coords)

    def add(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Element:
        self._check_length(u)
        self._check_length(v)
        return vec_add(u, v)

    def scale(self, c: Any, u: Sequence[Scalar]) -> Element:
        self._check_length(u)
        c = self.field.parse(c) if isinstance(c, (int, str)) else c
        return vec_scale(c, u)

    def _check_length(self, u: Sequence[Scalar]) -> None:
        if len(u) != self.dim:
            raise DimensionMismatchError(f"element of length {len(u)} in algebra of dimension {self.dim}")

    def _check_product(self, product: int) -> None:
        if not 0 <= product < self.num_products:
            raise PreconditionError(f"product index {product} out of range for {self.num_products} product(s)")

    def multiply(self, u: Sequence[Scalar], v: Sequence[Scalar], product: int = 0) -> Element:
        """
        Bilinear product of two elements.

        Args:
            u: Left factor
            v: Right factor
            product: Index of the product to use

        Returns:
            sum_{i,j} u_i v_j c_ij
        """
        self._check_length(u)
        self._check_length(v)
        self._check_product(product)
        result = [self.field.zero] * self.dim
        table = self._sparse[product]
        for i, a in enumerate(u):
            if not a:
                continue
            row = table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    result[k] += ab * c
        return tuple(result)

    def left_multiplication(self, x: Sequence[Scalar], product: int = 0) -> Matrix:
        """Matrix of y -> x * y (column j is x * b_j)."""
        columns = [self.multiply(x, self.basis_vector(j), product) for j in range(self.dim)]
        return matrix_from_columns(self.field, columns, self.dim)

    def right_multiplication(self, x: Sequence[Scalar], product: int = 0) -> Matrix:
        """Matrix of y -> y * x (column j is b_j * x)."""
        columns = [self.multiply(self.basis_vector(j), x, product) for j in range(self.dim)]
        return matrix_from_columns(self.field, columns, self.dim)

    # ------------------------------------------------------------------
    # structural invariants
    # ------------------------------------------------------------------

    def is_commutative(self, product: int = 0) -> bool:
        tensor = self.products[product]
        return all(tensor[i][j] == tensor[j][i] for i in range(self.dim) for j in range(i + 1, self.dim))

    def is_anticommutative(self, product: int = 0) -> bool:
        tensor = self.products[product]
        n = self.dim
        return all(not any(tensor[i][i]) for i in range(n)) and all(
            all(a == -b for a, b in zip(tensor[i][j], tensor[j][i])) for i in range(n) for j in range(i + 1, n)
        )

    def find_unit(self) -> Optional[Element]:
        """
        The two-sided unit of product 0, if there is one.

        Solves e*b_i = b_i = b_i*e for all i as one linear system; the
        homogeneous solution space must then be trivial, so the unit is unique.

        Returns:
            The unit element, or None
        """
        n = self.dim
        rows: List[List[Scalar]] = []
        rhs: List[Scalar] = []
        tensor = self.products[0]
        for i in range(n):
            for k in range(n):
                target = self.field.one if i == k else self.field.zero
                rows.append([tensor[j][i][k] for j in range(n)])
                rhs.append(target)
                rows.append([tensor[i][j][k] for j in range(n)])
                rhs.append(target)
        system = matrix_from_rows(self.field, rows, n)
        unit = solve_linear(system, rhs)
        if unit is None:
            return None
        sparse = {r: {j: a for j, a in enumerate(row) if a} for r, row in enumerate(rows)}
        kernel = nullspace_from_rows(self.field, {r: e for r, e in sparse.items() if e}, n)
        if kernel.dim != 0:
            raise ConsistencyError(f"unit of '{self.name}' is not unique: homogeneous solutions of dimension {kernel.dim}")
        _logger.debug(f"unit of '{self.name}' found")
        return unit

    def annihilator(self) -> Subspace:
        """
        Ann(X) = {z : z x = x z = 0 for all x}, intersected over all products.
        """
        n = self.dim
        sparse: Dict[int, Dict[int, Scalar]] = {}
        for tensor in self.products:
            for i in range(n):
                for k in range(n):
                    left = {j: tensor[j][i][k] for j in range(n) if tensor[j][i][k]}
                    right = {j: tensor[i][j][k] for j in range(n) if tensor[i][j][k]}
                    for row in (left, right):
                        if row:
                            sparse[len(sparse)] = row
        return nullspace_from_rows(self.field, sparse, n)

    def product_subspace(self, product: int = 0) -> Subspace:
        """X^2 for the given product: the span of all b_i * b_j."""
        self._check_product(product)
        tensor = self.products[product]
        return Subspace.span(self.field, self.dim, (tensor[i][j] for i in range(self.dim) for j in range(self.dim)))

    def is_perfect(self, product: int = 0) -> bool:
        return self.product_subspace(product).dim == self.dim

    def lie_center(self, bracket: int = 1) -> Subspace:
        """
        Z(X) = {z : [z, b_i] = 0 for all i} for an anticommutative product.

        Args:
            bracket: Index of the bracket product

        Returns:
            The center as a canonical Subspace
        """
        self._check_product(bracket)
        if not self.is_anticommutative(bracket):
            raise PreconditionError(f"product '{self.product_names[bracket]}' of '{self.name}' is not anticommutative")
        n = self.dim
        tensor = self.products[bracket]
        sparse: Dict[int, Dict[int, Scalar]] = {}
        for i in range(n):
            for k in range(n):
                row = {j: tensor[j][i][k] for j in range(n) if tensor[j][i][k]}
                if row:
                    sparse[len(sparse)] = row
        return nullspace_from_rows(self.field, sparse, n)

    def unitize(self) -> "Algebra":
        """
        The unitization F x X with (a, x)(a', x') = (aa', xx' + a x' + a' x).

        The adjoined unit is basis vector 0 and X sits on basis vectors 1..n.
        A second product (bracket) is extended by [(a, x), (a', x')] = (0, [x, x']).
        """
        n = self.dim
        F = self.field
        tensors = []
        for r, tensor in enumerate(self.products):
            dense = [[[F.zero] * (n + 1) for _ in range(n + 1)] for _ in range(n + 1)]
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        dense[i + 1][j + 1][k + 1] = tensor[i][j][k]
            if r == 0:
                dense[0][0][0] = F.one
                for i in range(n):
                    dense[0][i + 1][i + 1] = F.one
                    dense[i + 1][0][i + 1] = F.one
            tensors.append(tuple(tuple(tuple(c) for c in row) for row in dense))
        return Algebra(
            field=F,
            dim=n + 1,
            products=tuple(tensors),
            basis_names=("1",) + self.basis_names,
            product_names=self.product_names,
            name=f"unitize({self.name})",
        )

    def subalgebra(self, space: Subspace, name: str = "") -> "Algebra":
        """
        The subalgebra carried by ``space``, in the coordinates of its RREF basis.

        Raises:
            PreconditionError: if some product of basis vectors leaves the subspace
        """
        if space.ambient_dim != self.dim:
            raise DimensionMismatchError(f"subspace of F^{space.ambient_dim} in an algebra of dimension {self.dim}")
        d = space.dim
        tensors = []
        for r in range(self.num_products):
            dense = []
            for u in space.basis:
                row = []
                for w in space.basis:
                    coords = space.coordinates(self.multiply(u, w, r))
                    if coords is None:
                        raise PreconditionError(f"subspace is not closed under '{self.product_names[r]}' of '{self.name}'")
                    row.append(coords)
                dense.append(tuple(row))
            tensors.append(tuple(dense))
        return Algebra(
            field=self.field,
            dim=d,
            products=tuple(tensors),
            basis_names=tuple(f"z{i}" for i in range(d)),
            product_names=self.product_names,
            name=name or f"sub({self.name})",
        )

    def with_field(self, field: Field) -> "Algebra":
        """Reinterpret integer structure constants over another field."""
        entries = {
            name_: [(i, j, k, self.field.format(c)) for i, j, k, c in self.entries(r)]
            for r, name_ in enumerate(self.product_names)
        }
        return Algebra.from_entries(field, self.dim, entries, self.basis_names, self.name)

    def __str__(self) -> str:
        return f"Algebra({self.name or 'unnamed'}, dim={self.dim}, field={self.field.name}, products={list(self.product_names)})"


# module-level aliases

def multiply(a: Algebra, u: Sequence[Scalar], v: Sequence[Scalar], product_index: int = 0) -> Element:
    return a.multiply(u, v, product_index)


def find_unit(a: Algebra) -> Optional[Element]:
    return a.find_unit()


def annihilator(a: Algebra) -> Subspace:
    return a.annihilator()


def product_subspace(a: Algebra, product_index: int = 0) -> Subspace:
    return a.product_subspace(product_index)


def is_perfect(a: Algebra, product_index: int = 0) -> bool:
    return a.is_perfect(product_index)


def unitize(a: Algebra) -> Algebra:
    return a.unitize()


def lie_center(a: Algebra, bracket_index: int = 1) -> Subspace:
    return a.lie_center(bracket_index)
