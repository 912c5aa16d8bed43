"""
Exact Linear Algebra Module

Exact scalars (rationals or a prime field), matrices and canonical subspaces.
Every linear system in actorkit is solved here, on top of sympy's
``DomainMatrix`` so that no floating point ever enters a computation.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .errors import DimensionMismatchError, FieldMismatchError, PreconditionError

Scalar = Any
Vector = Tuple[Scalar, ...]
Matrix = DomainMatrix

_logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _domain_for(characteristic: int):
    if characteristic == 0:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class Field:
    """
    Exact scalar domain: the rationals (characteristic 0) or GF(p).

    Scalars are sympy domain elements; rationals are always in lowest terms
    with a positive denominator and GF(p) residues lie in [0, p).
    """
    characteristic: int = 0

    def __post_init__(self):
        """Reject composite moduli."""
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise PreconditionError(f"GF({self.characteristic}) is not a field: modulus must be prime")

    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def from_name(cls, name: str) -> "Field":
        """
        Parse a field name such as ``Q``, ``GF5`` or ``GF(5)``.

        Args:
            name: Field name

        Returns:
            The corresponding Field
        """
        text = name.strip().upper().replace(" ", "")
        if text in ("Q", "QQ"):
            return cls(0)
        if text.startswith("GF"):
            digits = text[2:].strip("()")
            if digits.isdigit():
                return cls(int(digits))
        raise PreconditionError(f"Unknown field '{name}' (expected Q or GFp)")

    @property
    def domain(self):
        """The sympy domain backing this field."""
        return _domain_for(self.characteristic)

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def zero(self) -> Scalar:
        return self.domain.zero

    @property
    def one(self) -> Scalar:
        return self.domain.one

    def __call__(self, value: int) -> Scalar:
        """Embed an integer."""
        return self.domain(int(value))

    def is_zero(self, value: Scalar) -> bool:
        return not value

    def inverse(self, value: Scalar) -> Scalar:
        if self.is_zero(value):
            raise ZeroDivisionError(f"zero has no inverse in {self.name}")
        return self.domain.quo(self.one, value)

    def to_int(self, value: Scalar) -> int:
        """Residue of a GF(p) scalar as a Python int in [0, p)."""
        if self.characteristic == 0:
            raise PreconditionError("to_int is only defined for prime fields")
        return int(self.domain.to_int(value)) % self.characteristic

    def parse(self, text: Any) -> Scalar:
        """
        Parse the scalar string format ``"p/q"`` or ``"p"``.

        Integers are accepted as well. Over GF(p) a fraction is read as
        p * q^-1 and the denominator must be invertible.
        """
        if isinstance(text, int):
            return self(text)
        raw = str(text).strip()
        try:
            if "/" in raw:
                num, den = raw.split("/", 1)
                numerator, denominator = int(num), int(den)
            else:
                numerator, denominator = int(raw), 1
        except ValueError:
            raise PreconditionError(f"'{text}' is not a valid scalar for {self.name}") from None
        if denominator == 0:
            raise PreconditionError(f"'{text}' has a zero denominator")
        if self.characteristic == 0:
            return self.domain(numerator, denominator)
        if denominator % self.characteristic == 0:
            raise PreconditionError(f"'{text}' has a denominator divisible by {self.characteristic}")
        return self.domain.quo(self(numerator), self(denominator))

    def format(self, value: Scalar) -> str:
        """Serialize a scalar as ``"p/q"`` / ``"p"`` (rationals) or a residue."""
        if self.characteristic == 0:
            numerator = int(self.domain.numer(value))
            denominator = int(self.domain.denom(value))
            return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"
        return str(self.to_int(value))

    def elements(self) -> List[Scalar]:
        """All elements of a prime field, in residue order."""
        if self.characteristic == 0:
            raise PreconditionError("the rationals cannot be enumerated")
        return [self(i) for i in range(self.characteristic)]

    def __str__(self) -> str:
        return self.name


# ---------------------------------------------------------------------------
# vectors and matrices
# ---------------------------------------------------------------------------

def zero_vector(field: Field, n: int) -> Vector:
    return tuple(field.zero for _ in range(n))


def unit_vector(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot add vectors of length {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in v)


def matrix_from_rows(field: Field, rows: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> Matrix:
    """
    Build a dense matrix from rows of scalars.

    Args:
        field: Field of the entries
        rows: Row-major entries
        ncols: Column count, needed only when ``rows`` is empty

    Returns:
        A DomainMatrix over ``field.domain``
    """
    data = [list(row) for row in rows]
    width = len(data[0]) if data else (ncols or 0)
    for row in data:
        if len(row) != width:
            raise DimensionMismatchError("ragged matrix rows")
    return DomainMatrix(data, (len(data), width), field.domain)


def zeros(field: Field, nrows: int, ncols: int) -> Matrix:
    return matrix_from_rows(field, [[field.zero] * ncols for _ in range(nrows)], ncols)


def identity(field: Field, n: int) -> Matrix:
    return matrix_from_rows(field, [unit_vector(field, n, i) for i in range(n)], n)


def matrix_rows(m: Matrix) -> List[Vector]:
    """Rows of a matrix as tuples of scalars."""
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return [tuple() for _ in range(nrows)]
    return [tuple(row) for row in m.to_list()]


def matrix_from_columns(field: Field, columns: Sequence[Sequence[Scalar]], nrows: int) -> Matrix:
    """Build the matrix whose i-th column is ``columns[i]``."""
    return matrix_from_rows(field, [[col[r] for col in columns] for r in range(nrows)], len(columns))


def mat_vec(m: Matrix, v: Sequence[Scalar]) -> Vector:
    """Product of a matrix with a column vector."""
    nrows, ncols = m.shape
    if ncols != len(v):
        raise DimensionMismatchError(f"matrix with {ncols} columns applied to a vector of length {len(v)}")
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), m.domain.zero) for row in matrix_rows(m))


def matrices_equal(a: Matrix, b: Matrix) -> bool:
    return a.shape == b.shape and matrix_rows(a) == matrix_rows(b)


def _normalized(m: Matrix) -> Matrix:
    # rref output may come back in another internal format; rebuild from rows
    return matrix_from_rows(field_of(m), matrix_rows(m), m.shape[1])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product a·b (composition: apply b, then a)."""
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot compose {a.shape} with {b.shape}")
    if a.domain != b.domain:
        raise FieldMismatchError(f"cannot compose matrices over {a.domain} and {b.domain}")
    return _normalized(a) * _normalized(b)


def mat_combination(field: Field, terms: Iterable[Tuple[Scalar, Matrix]], nrows: int, ncols: int) -> Matrix:
    """
    Linear combination sum(c * M) of equally shaped matrices.

    Args:
        field: Field of the coefficients and entries
        terms: Pairs ``(c, M)``; zero coefficients are skipped
        nrows: Row count of the result
        ncols: Column count of the result

    Returns:
        The combined matrix (the zero matrix for an empty combination)
    """
    total = [[field.zero] * ncols for _ in range(nrows)]
    for c, m in terms:
        if not c:
            continue
        if m.shape != (nrows, ncols):
            raise DimensionMismatchError(f"matrix of shape {m.shape} in a combination of shape {(nrows, ncols)}")
        _require_same_field(field, m)
        for r, row in enumerate(matrix_rows(m)):
            target = total[r]
            for j, a in enumerate(row):
                if a:
                    target[j] += c * a
    return matrix_from_rows(field, total, ncols)


def _require_same_field(field: Field, m: Matrix) -> None:
    if m.domain != field.domain:
        raise FieldMismatchError(f"matrix over {m.domain} used with field {field.name}")


def _rref(field: Field, rows: Sequence[Sequence[Scalar]], ncols: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Nonzero RREF rows and pivot columns of a row list (sparse elimination)."""
    sparse: Dict[int, Dict[int, Scalar]] = {}
    for row in rows:
        entries = {j: a for j, a in enumerate(row) if a}
        if entries:
            sparse[len(sparse)] = entries
    return _rref_sparse(field, sparse, ncols)


def _rref_sparse(field: Field, sparse: Dict[int, Dict[int, Scalar]], ncols: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    if not sparse or ncols == 0:
        return [], ()
    rows = {r: dict(entries) for r, entries in enumerate(sparse.values())}
    reduced, pivots = DomainMatrix(rows, (len(rows), ncols), field.domain).rref()
    pivots = tuple(pivots)
    dense = reduced[: len(pivots), :].to_list() if pivots else []
    return [tuple(row) for row in dense], pivots


def rank(m: Matrix) -> int:
    field = field_of(m)
    return len(_rref(field, matrix_rows(m), m.shape[1])[1])


def field_of(m: Matrix) -> Field:
    if m.domain == QQ:
        return Field(0)
    return Field(int(m.domain.characteristic()))


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """
    A subspace of field^ambient_dim with its basis in reduced row-echelon form.

    The RREF basis is canonical, so two Subspace values are equal exactly when
    they describe the same subspace.
    """
    field: Field
    ambient_dim: int
    basis: Tuple[Vector, ...] = ()

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        """
        Canonical span of a family of vectors.

        Args:
            field: Field of the coordinates
            ambient_dim: Length of every vector
            vectors: Spanning family (may be dependent or contain zeros)

        Returns:
            The Subspace they span
        """
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in a space of dimension {ambient_dim}")
            rows.append(tuple(v))
        basis, _ = _rref(field, rows, ambient_dim)
        return cls(field, ambient_dim, tuple(basis))

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, tuple(unit_vector(field, ambient_dim, i) for i in range(ambient_dim)))

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, a in enumerate(row) if a) for row in self.basis)

    def coordinates(self, v: Sequence[Scalar]) -> Optional[Vector]:
        """
        Coefficients of ``v`` with respect to the RREF basis.

        Returns:
            The coefficient tuple, or None when v is not in the subspace
        """
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} tested against a subspace of F^{self.ambient_dim}")
        coeffs = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, a in enumerate(row):
                    if a:
                        residual[j] -= c * a
        if any(residual):
            return None
        return coeffs

    def contains(self, v: Sequence[Scalar]) -> bool:
        return self.coordinates(v) is not None

    def combination(self, coeffs: Sequence[Scalar]) -> Vector:
        """The vector with the given coordinates in the RREF basis."""
        if len(coeffs) != self.dim:
            raise DimensionMismatchError(f"{len(coeffs)} coordinates for a {self.dim}-dimensional subspace")
        result = list(zero_vector(self.field, self.ambient_dim))
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, a in enumerate(row):
                    if a:
                        result[j] += c * a
        return tuple(result)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __len__(self) -> int:
        return self.dim


# ---------------------------------------------------------------------------
# solvers
# ---------------------------------------------------------------------------

def nullspace_from_rows(field: Field, sparse_rows: Dict[int, Dict[int, Scalar]], ncols: int) -> Subspace:
    """Nullspace of a sparse row system given as ``{row: {col: value}}``."""
    reduced, pivots = _rref_sparse(field, sparse_rows, ncols)
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, p in zip(reduced, pivots):
            if row[free]:
                v[p] = -row[free]
        vectors.append(v)
    _logger.debug(f"nullspace of {len(sparse_rows)}x{ncols} system: rank {len(pivots)}, dim {len(vectors)}")
    return Subspace.span(field, ncols, vectors)


def nullspace_basis(m: Matrix) -> Subspace:
    """
    Solution space of m·v = 0 in canonical RREF form.

    Args:
        m: Coefficient matrix

    Returns:
        Subspace of dimension cols - rank(m)
    """
    field = field_of(m)
    sparse: Dict[int, Dict[int, Scalar]] = {}
    for row in matrix_rows(m):
        entries = {j: a for j, a in enumerate(row) if a}
        if entries:
            sparse[len(sparse)] = entries
    return nullspace_from_rows(field, sparse, m.shape[1])


def subspace_membership(s: Subspace, v: Sequence[Scalar]) -> bool:
    """True iff ``v`` lies in the span of ``s``; raises on dimension mismatch."""
    return s.contains(v)


def solve_linear(m: Matrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """
    Some solution x of m·x = b.

    Args:
        m: Coefficient matrix
        b: Right-hand side, one entry per row of m

    Returns:
        A solution (free variables set to zero), or None if inconsistent
    """
    nrows, ncols = m.shape
    if nrows != len(b):
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for a matrix with {nrows} rows")
    field = field_of(m)
    augmented = [tuple(row) + (rhs,) for row, rhs in zip(matrix_rows(m), b)]
    reduced, pivots = _rref(field, augmented, ncols + 1)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, p in zip(reduced, pivots):
        x[p] = row[ncols]
    return tuple(x)
