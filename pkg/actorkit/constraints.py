"""
Linear constraint assembly.

Actor computations are homogeneous linear systems whose unknowns are the
entries of one or more n x n matrices (L_f, R_f, D_f), stored block after
block, each block row-major. A ``SymbolicVector`` is an element of X whose
coordinates are linear forms in those unknowns.
"""

import logging
from typing import Dict, List, Sequence

from .algebra import Algebra
from .linalg import Field, Matrix, Scalar, Subspace, matrix_from_rows, nullspace_from_rows

LinearForm = Dict[int, Scalar]

_logger = logging.getLogger(__name__)


class SymbolicVector:
    """An element of X whose k-th coordinate is the linear form ``coords[k]``."""

    __slots__ = ("coords",)

    def __init__(self, coords: List[LinearForm]):
        self.coords = coords

    @classmethod
    def zero(cls, n: int) -> "SymbolicVector":
        return cls([{} for _ in range(n)])

    @classmethod
    def operator_image(cls, n: int, block: int, x: Sequence[Scalar]) -> "SymbolicVector":
        """
        The unknown matrix of ``block`` applied to a concrete vector x.

        Coordinate k is sum_i M[k][i] x_i, with M[k][i] the unknown
        ``block * n^2 + k * n + i``.
        """
        offset = block * n * n
        return cls([{offset + k * n + i: a for i, a in enumerate(x) if a} for k in range(n)])

    def iadd(self, other: "SymbolicVector", coeff: Scalar = None) -> "SymbolicVector":
        """In-place ``self += coeff * other``."""
        for mine, theirs in zip(self.coords, other.coords):
            for var, a in theirs.items():
                value = a if coeff is None else coeff * a
                total = mine.get(var)
                total = value if total is None else total + value
                if total:
                    mine[var] = total
                else:
                    mine.pop(var, None)
        return self

    def times(self, algebra: Algebra, v: Sequence[Scalar], product: int = 0) -> "SymbolicVector":
        """self * v, with v concrete."""
        result = SymbolicVector.zero(algebra.dim)
        for i, form in enumerate(self.coords):
            if not form:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in algebra.basis_product(i, j, product):
                    result._accumulate(k, form, b * c)
        return result

    def rtimes(self, algebra: Algebra, v: Sequence[Scalar], product: int = 0) -> "SymbolicVector":
        """v * self, with v concrete."""
        result = SymbolicVector.zero(algebra.dim)
        for j, form in enumerate(self.coords):
            if not form:
                continue
            for i, a in enumerate(v):
                if not a:
                    continue
                for k, c in algebra.basis_product(i, j, product):
                    result._accumulate(k, form, a * c)
        return result

    def _accumulate(self, k: int, form: LinearForm, factor: Scalar) -> None:
        target = self.coords[k]
        for var, a in form.items():
            value = a * factor
            total = target.get(var)
            total = value if total is None else total + value
            if total:
                target[var] = total
            else:
                target.pop(var, None)

    def is_zero(self) -> bool:
        return not any(self.coords)


class LinearSystem:
    """
    Homogeneous linear constraints over ``num_unknowns`` scalars.

    Rows are stored sparsely; redundant rows are harmless.
    """

    def __init__(self, field: Field, num_unknowns: int):
        self.field = field
        self.num_unknowns = num_unknowns
        self._rows: Dict[int, LinearForm] = {}

    def require_zero(self, expression: SymbolicVector) -> None:
        """Add one constraint per nonzero coordinate of ``expression``."""
        for form in expression.coords:
            if form:
                self._rows[len(self._rows)] = dict(form)

    def add_row(self, form: LinearForm) -> None:
        cleaned = {var: a for var, a in form.items() if a}
        if cleaned:
            self._rows[len(self._rows)] = cleaned

    def extend(self, other: "LinearSystem") -> None:
        for form in other._rows.values():
            self._rows[len(self._rows)] = dict(form)

    @property
    def num_rows(self) -> int:
        return len(self._rows)

    def matrix(self) -> Matrix:
        """Dense coefficient matrix, one row per constraint."""
        zero = self.field.zero
        rows = []
        for form in self._rows.values():
            row = [zero] * self.num_unknowns
            for var, a in form.items():
                row[var] = a
            rows.append(row)
        return matrix_from_rows(self.field, rows, self.num_unknowns)

    def solution_space(self) -> Subspace:
        _logger.debug(f"solving {self.num_rows} constraints in {self.num_unknowns} unknowns")
        return nullspace_from_rows(self.field, self._rows, self.num_unknowns)
