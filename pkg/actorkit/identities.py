"""
Identity Language Module

Parser, printer and evaluator for multilinear non-associative polynomial
identities such as ``(x1*x2)*x3 - x1*(x2*x3)``.

Products must be fully parenthesized: ``x1*x2*x3`` is rejected. The second
product of a two-product variety is written as a bracket ``[u,v]``.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from dataclasses_json import dataclass_json

from .algebra import Algebra, Element
from .errors import ArityError, IdentityParseError, PreconditionError

_logger = logging.getLogger(__name__)

MUL = 0
BRACKET = 1


@dataclass(frozen=True)
class Variable:
    """Leaf x_index (1-based)."""
    index: int


@dataclass(frozen=True)
class Product:
    """Binary node; ``product`` is 0 for ``*`` and 1 for the bracket."""
    left: "Tree"
    right: "Tree"
    product: int = MUL


Tree = Union[Variable, Product]


@dataclass(frozen=True)
class Term:
    coefficient: int
    tree: Tree


@dataclass(frozen=True)
class MultilinearIdentity:
    """
    A multilinear polynomial sum(coefficient * monomial) in x1..x_degree.

    Every monomial contains each variable exactly once; terms with equal
    monomials are merged and zero terms dropped, so equal identities compare equal.
    """
    degree: int
    terms: Tuple[Term, ...]
    num_products: int = 1

    @property
    def product_tags(self) -> Tuple[int, ...]:
        tags = set()
        for term in self.terms:
            tags.update(_tags(term.tree))
        return tuple(sorted(tags))

    def __str__(self) -> str:
        return format_identity(self)


def leaves(tree: Tree) -> List[int]:
    """Variable indices of a monomial, left to right."""
    if isinstance(tree, Variable):
        return [tree.index]
    return leaves(tree.left) + leaves(tree.right)


def _tags(tree: Tree) -> List[int]:
    if isinstance(tree, Variable):
        return []
    return [tree.product] + _tags(tree.left) + _tags(tree.right)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_]\w*)|(?P<op>[*+\-()\[\],]))")
_VARIABLE = re.compile(r"x([1-9]\d*)$")


class _Parser:
    """Recursive-descent parser over a token list with source positions."""

    def __init__(self, source: str, num_products: int):
        self.source = source
        self.num_products = num_products
        self.tokens = self._tokenize(source)
        self.index = 0

    def _tokenize(self, source: str) -> List[Tuple[str, str, int]]:
        tokens = []
        position = 0
        while position < len(source):
            if source[position:].strip() == "":
                break
            match = _TOKEN.match(source, position)
            if not match:
                offset = position + len(source[position:]) - len(source[position:].lstrip())
                raise IdentityParseError(f"unexpected character '{source[offset]}'", offset, source)
            kind = match.lastgroup
            text = match.group(kind)
            tokens.append((kind, text, match.start(kind)))
            position = match.end()
        tokens.append(("end", "", len(source)))
        return tokens

    def peek(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> None:
        kind, value, position = self.advance()
        if value != text or kind != "op":
            found = value or "end of input"
            raise IdentityParseError(f"expected '{text}' but found '{found}'", position, self.source)

    def error(self, message: str) -> IdentityParseError:
        return IdentityParseError(message, self.peek()[2], self.source)

    def parse(self) -> List[Tuple[int, Tree, int]]:
        terms = []
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.advance()
        while True:
            terms.append(self.term(sign))
            kind, value, _ = self.peek()
            if kind == "end":
                return terms
            if kind == "op" and value in ("+", "-"):
                sign = -1 if value == "-" else 1
                self.advance()
                continue
            raise self.error(f"unexpected '{value}'")

    def term(self, sign: int) -> Tuple[int, Tree, int]:
        coefficient = 1
        position = self.peek()[2]
        if self.peek()[0] == "int":
            coefficient = int(self.advance()[1])
            if self.peek()[:2] == ("op", "*"):
                self.advance()
        return sign * coefficient, self.monomial(), position

    def monomial(self) -> Tree:
        left = self.operand()
        if self.peek()[:2] != ("op", "*"):
            return left
        self.advance()
        right = self.operand()
        if self.peek()[:2] == ("op", "*"):
            raise self.error("ambiguous product: parenthesize every binary product")
        return Product(left, right, MUL)

    def operand(self) -> Tree:
        kind, value, position = self.advance()
        if kind == "var":
            match = _VARIABLE.match(value)
            if not match:
                raise IdentityParseError(f"unknown variable '{value}' (use x1, x2, ...)", position, self.source)
            return Variable(int(match.group(1)))
        if (kind, value) == ("op", "("):
            inner = self.monomial()
            self.expect(")")
            return inner
        if (kind, value) == ("op", "["):
            if self.num_products < 2:
                raise IdentityParseError("bracket requires a two-product variety", position, self.source)
            left = self.monomial()
            self.expect(",")
            right = self.monomial()
            self.expect("]")
            return Product(left, right, BRACKET)
        found = value or "end of input"
        raise IdentityParseError(f"expected a variable, '(' or '[' but found '{found}'", position, self.source)


def parse_identity(src: str, num_products: int = 1) -> MultilinearIdentity:
    """
    Parse an identity into its canonical multilinear form.

    Args:
        src: Source text, e.g. ``"(x1*x2)*x3 - x1*(x2*x3)"``
        num_products: 1, or 2 to allow the bracket ``[u,v]``

    Returns:
        The canonical MultilinearIdentity

    Raises:
        IdentityParseError: on syntax errors, repeated or unknown variables,
            missing variables and unparenthesized product chains
    """
    raw_terms = _Parser(src, num_products).parse()
    degree = max(max(leaves(tree)) for _, tree, _ in raw_terms)
    for _, tree, position in raw_terms:
        seen = leaves(tree)
        repeated = sorted({v for v in seen if seen.count(v) > 1})
        if repeated:
            raise IdentityParseError(f"variable x{repeated[0]} repeated in a term (identity must be multilinear)", position, src)
        missing = sorted(set(range(1, degree + 1)) - set(seen))
        if missing:
            raise IdentityParseError(f"term does not contain x{missing[0]} (identity must be multilinear)", position, src)
    merged: Dict[Tree, int] = {}
    for coefficient, tree, _ in raw_terms:
        merged[tree] = merged.get(tree, 0) + coefficient
    terms = tuple(Term(c, tree) for tree, c in merged.items() if c != 0)
    if not terms:
        raise IdentityParseError("identity has no nonzero terms", 0, src)
    return MultilinearIdentity(degree=degree, terms=terms, num_products=num_products)


def _format_tree(tree: Tree, top: bool = False) -> str:
    if isinstance(tree, Variable):
        return f"x{tree.index}"
    if tree.product == BRACKET:
        return f"[{_format_tree(tree.left, True)},{_format_tree(tree.right, True)}]"
    body = f"{_format_tree(tree.left)}*{_format_tree(tree.right)}"
    return body if top else f"({body})"


def format_identity(phi: MultilinearIdentity) -> str:
    """Print an identity in the grammar accepted by ``parse_identity``."""
    parts = []
    for position, term in enumerate(phi.terms):
        magnitude = abs(term.coefficient)
        prefix = "" if magnitude == 1 else f"{magnitude}*"
        body = prefix + _format_tree(term.tree, True)
        if position == 0:
            parts.append(f"-{body}" if term.coefficient < 0 else body)
        else:
            parts.append(f"{'-' if term.coefficient < 0 else '+'} {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _check_products(phi: MultilinearIdentity, a: Algebra) -> None:
    tags = phi.product_tags
    if tags and tags[-1] >= a.num_products:
        raise PreconditionError(f"identity uses product {tags[-1]} but '{a.name}' has {a.num_products} product(s)")


def evaluate_tree(tree: Tree, a: Algebra, args: Sequence[Element]) -> Element:
    if isinstance(tree, Variable):
        return tuple(args[tree.index - 1])
    return a.multiply(evaluate_tree(tree.left, a, args), evaluate_tree(tree.right, a, args), tree.product)


def evaluate_identity(phi: MultilinearIdentity, a: Algebra, args: Sequence[Element]) -> Element:
    """
    Value of phi(args) in the algebra.

    Args:
        phi: Identity of degree k
        a: Algebra whose products cover every tag used by phi
        args: k elements of a

    Returns:
        sum of coefficient * monomial(args)
    """
    if len(args) != phi.degree:
        raise ArityError(f"identity of degree {phi.degree} evaluated on {len(args)} argument(s)")
    _check_products(phi, a)
    total = list(a.zero())
    for term in phi.terms:
        coefficient = a.field(term.coefficient)
        if not coefficient:
            continue
        value = evaluate_tree(term.tree, a, args)
        for k, x in enumerate(value):
            if x:
                total[k] += coefficient * x
    return tuple(total)


@dataclass_json
@dataclass
class SatisfactionReport:
    """Outcome of checking one identity on all basis tuples of an algebra."""
    identity: str
    satisfied: bool
    witness: Optional[List[int]] = None
    witness_names: List[str] = field(default_factory=list)


def check_identity(phi: MultilinearIdentity, a: Algebra) -> SatisfactionReport:
    """
    Check phi on every k-tuple of basis vectors (sufficient by multilinearity).

    Args:
        phi: Identity to check
        a: Algebra

    Returns:
        A report with the first failing basis tuple, in lexicographic order, as witness
    """
    _check_products(phi, a)
    basis = [a.basis_vector(i) for i in range(a.dim)]
    for indices in itertools.product(range(a.dim), repeat=phi.degree):
        value = evaluate_identity(phi, a, [basis[i] for i in indices])
        if any(value):
            _logger.debug(f"'{phi}' fails on '{a.name}' at {indices}")
            return SatisfactionReport(
                identity=format_identity(phi),
                satisfied=False,
                witness=list(indices),
                witness_names=[a.basis_names[i] for i in indices],
            )
    return SatisfactionReport(identity=format_identity(phi), satisfied=True)
