"""
Example Catalog Module

Bundled algebras used by the CLI (``--algebra NAME``) and the test suite.
Every builder takes the ground field; structure constants are integers so
the same table is valid over Q and over GF(p).
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence

from ..algebra import Algebra
from ..errors import AlgebraFormatError
from ..linalg import Field

_logger = logging.getLogger(__name__)

Builder = Callable[[Field], Algebra]


def field_algebra(field: Field) -> Algebra:
    """The ground field as a 1-dimensional algebra."""
    return Algebra.from_entries(field, 1, {"mul": [(0, 0, 0, 1)]}, ["1"], "F")


def product_of_fields(field: Field) -> Algebra:
    """F x F with orthogonal idempotents e0, e1."""
    return Algebra.from_entries(field, 2, {"mul": [(0, 0, 0, 1), (1, 1, 1, 1)]}, ["e0", "e1"], "FxF")


def truncated_polynomials(field: Field, degree: int = 2, name: str = "") -> Algebra:
    """F[x]/(x^degree) with basis 1, x, ..., x^(degree-1)."""
    entries = [(i, j, i + j, 1) for i in range(degree) for j in range(degree) if i + j < degree]
    basis = ["1", "x"] + [f"x{i}" for i in range(2, degree)]
    return Algebra.from_entries(field, degree, {"mul": entries}, basis[:degree], name or f"F[x]/(x^{degree})")


def dual_numbers(field: Field) -> Algebra:
    return truncated_polynomials(field, 2, "dual")


def truncated_cubic(field: Field) -> Algebra:
    return truncated_polynomials(field, 3, "trunc3")


def x_ideal(field: Field) -> Algebra:
    """The ideal <x, x^2> of F[x]/(x^3): non-unital, x * x = x^2."""
    return Algebra.from_entries(field, 2, {"mul": [(0, 0, 1, 1)]}, ["x", "x2"], "x-ideal")


def abelian(field: Field, dim: int, name: str = "") -> Algebra:
    """The algebra with zero multiplication."""
    return Algebra.from_entries(field, dim, {"mul": []}, [f"a{i}" for i in range(dim)], name or f"abelian{dim}")


def matrix_entries(n: int = 2) -> List[tuple]:
    """E_ij E_kl = δ_jk E_il with E_ij at index i*n + j."""
    return [
        (i * n + j, j * n + l, i * n + l, 1)
        for i in range(n)
        for j in range(n)
        for l in range(n)
    ]


def commutator_entries(n: int = 2) -> List[tuple]:
    """[E_ij, E_kl] = δ_jk E_il - δ_li E_kj."""
    entries = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        entries.append((i * n + j, k * n + l, i * n + l, 1))
                    if l == i:
                        entries.append((i * n + j, k * n + l, k * n + j, -1))
    return entries


def _matrix_basis(n: int) -> List[str]:
    return [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]


def matrix_algebra(field: Field) -> Algebra:
    """M2(F) with the matrix product."""
    return Algebra.from_entries(field, 4, {"mul": matrix_entries(2)}, _matrix_basis(2), "M2")


def lie2(field: Field) -> Algebra:
    """The 2-dimensional non-abelian Lie algebra, [e0, e1] = e1."""
    return Algebra.from_entries(field, 2, {"bracket": [(0, 1, 1, 1), (1, 0, 1, -1)]}, ["e0", "e1"], "lie2")


# ---------------------------------------------------------------------------
# Cayley-Dickson
# ---------------------------------------------------------------------------

def _conj(u: Sequence[int]) -> List[int]:
    return [u[0]] + [-c for c in u[1:]]


def _add(u: Sequence[int], v: Sequence[int]) -> List[int]:
    return [a + b for a, b in zip(u, v)]


def _sub(u: Sequence[int], v: Sequence[int]) -> List[int]:
    return [a - b for a, b in zip(u, v)]


def cayley_dickson_multiply(u: Sequence[int], v: Sequence[int]) -> List[int]:
    """
    (a, b)(c, d) = (ac - d̄b, da + bc̄) on integer coordinate vectors of length 2^k.
    """
    if len(u) == 1:
        return [u[0] * v[0]]
    h = len(u) // 2
    a, b, c, d = u[:h], u[h:], v[:h], v[h:]
    first = _sub(cayley_dickson_multiply(a, c), cayley_dickson_multiply(_conj(d), b))
    second = _add(cayley_dickson_multiply(d, a), cayley_dickson_multiply(b, _conj(c)))
    return first + second


def cayley_dickson(field: Field, doublings: int = 3, name: str = "") -> Algebra:
    """
    The algebra obtained from F by ``doublings`` Cayley-Dickson steps.

    1 step gives the complex-type algebra, 2 the quaternions, 3 the octonions.
    Basis vector e0 is the unit.
    """
    n = 2 ** doublings
    units = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    entries = []
    for i in range(n):
        for j in range(n):
            product = cayley_dickson_multiply(units[i], units[j])
            entries.extend((i, j, k, c) for k, c in enumerate(product) if c)
    return Algebra.from_entries(field, n, {"mul": entries}, [f"e{i}" for i in range(n)], name or f"CD{n}")


def octonions(field: Field) -> Algebra:
    return cayley_dickson(field, 3, "octonions")


# ---------------------------------------------------------------------------
# Poisson
# ---------------------------------------------------------------------------

def matrix_poisson(field: Field) -> Algebra:
    """M2(F) with the commutator as bracket."""
    return Algebra.from_entries(
        field, 4, [("mul", matrix_entries(2)), ("bracket", commutator_entries(2))], _matrix_basis(2), "M2-poisson"
    )


def with_zero_bracket(a: Algebra, name: str = "") -> Algebra:
    """A commutative associative algebra viewed as Poisson with [-,-] = 0."""
    entries = [(i, j, k, a.field.format(c)) for i, j, k, c in a.entries(0)]
    return Algebra.from_entries(
        a.field, a.dim, [(a.product_names[0], entries), ("bracket", [])], a.basis_names, name or f"{a.name}-zero-bracket"
    )


def idempotent_line(field: Field) -> Algebra:
    return Algebra.from_entries(field, 1, {"mul": [(0, 0, 0, 1)]}, ["e"], "idempotent-line")


def nilpotent_line(field: Field) -> Algebra:
    return Algebra.from_entries(field, 1, {"mul": []}, ["n"], "nilpotent-line")


def zero_algebra(field: Field) -> Algebra:
    return Algebra.from_entries(field, 0, {"mul": []}, [], "zero")


CATALOG: Dict[str, Builder] = {
    "F": field_algebra,
    "FxF": product_of_fields,
    "dual": dual_numbers,
    "trunc3": truncated_cubic,
    "x-ideal": x_ideal,
    "abelian1": lambda field: abelian(field, 1),
    "abelian2": lambda field: abelian(field, 2),
    "M2": matrix_algebra,
    "lie2": lie2,
    "octonions": octonions,
    "M2-poisson": matrix_poisson,
    "zero-bracket-FxF": lambda field: with_zero_bracket(product_of_fields(field), "zero-bracket-FxF"),
    "zero-bracket-dual": lambda field: with_zero_bracket(dual_numbers(field), "zero-bracket-dual"),
    "idempotent-line": idempotent_line,
    "nilpotent-line": nilpotent_line,
    "zero": zero_algebra,
}


def list_examples() -> List[str]:
    return sorted(CATALOG)


def is_example(name: str) -> bool:
    return name in CATALOG


def load_example(name: str, field: Optional[Field] = None) -> Algebra:
    """
    Build a bundled algebra.

    Args:
        name: Catalog name, e.g. "M2" or "octonions"
        field: Ground field, Q by default

    Returns:
        The Algebra

    Raises:
        AlgebraFormatError: unknown name
    """
    builder = CATALOG.get(name)
    if builder is None:
        raise AlgebraFormatError(f"unknown example algebra '{name}' (known: {', '.join(list_examples())})")
    algebra = builder(field or Field.rationals())
    _logger.debug(f"loaded example '{name}' over {algebra.field.name}")
    return algebra
