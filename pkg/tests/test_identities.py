"""
Tests for the identity parser, printer and evaluator.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from actorkit.algebra import Algebra
from actorkit.errors import ArityError, IdentityParseError, PreconditionError
from actorkit.examples import load_example
from actorkit.identities import (
    BRACKET,
    MUL,
    Product,
    Variable,
    check_identity,
    evaluate_identity,
    format_identity,
    leaves,
    parse_identity,
)
from actorkit.linalg import Field, vec_add
from actorkit.varieties import get_preset

GF3 = Field.prime(3)
GF5 = Field.prime(5)
ASSOCIATIVITY = "(x1*x2)*x3 - x1*(x2*x3)"


class TestParseIdentity:
    """Test cases for parse_identity."""

    def test_associativity(self):
        """Test parsing the associative law."""
        phi = parse_identity(ASSOCIATIVITY)
        assert phi.degree == 3
        assert len(phi.terms) == 2
        first, second = phi.terms
        assert first.coefficient == 1
        assert first.tree == Product(Product(Variable(1), Variable(2)), Variable(3))
        assert second.coefficient == -1
        assert leaves(second.tree) == [1, 2, 3]

    def test_bracket(self):
        """Test the second product written as a bracket."""
        phi = parse_identity("[x1,x2*x3] - [x1,x2]*x3 - x2*[x1,x3]", num_products=2)
        assert phi.degree == 3
        assert phi.product_tags == (MUL, BRACKET)

    def test_coefficients_and_merging(self):
        phi = parse_identity("2*x1*x2 + x1*x2 - x2*x1")
        assert [t.coefficient for t in phi.terms] == [3, -1]

    def test_cancelling_terms_rejected(self):
        with pytest.raises(IdentityParseError):
            parse_identity("x1*x2 - x1*x2")

    def test_ambiguous_chain(self):
        """Test that x1*x2*x3 is rejected at the second product."""
        with pytest.raises(IdentityParseError) as info:
            parse_identity("x1*x2*x3")
        assert info.value.position == 5

    def test_repeated_variable(self):
        """Test that non-multilinear input is rejected."""
        with pytest.raises(IdentityParseError) as info:
            parse_identity("x1*x1")
        assert info.value.position == 0
        assert "repeated" in str(info.value)

    def test_missing_variable(self):
        with pytest.raises(IdentityParseError) as info:
            parse_identity("x1*x2 + x1")
        assert info.value.position == 8

    def test_unknown_variable(self):
        with pytest.raises(IdentityParseError) as info:
            parse_identity("x1*y")
        assert info.value.position == 3

    def test_unclosed_parenthesis(self):
        with pytest.raises(IdentityParseError) as info:
            parse_identity("(x1*x2")
        assert info.value.position == 6

    def test_bracket_needs_two_products(self):
        with pytest.raises(IdentityParseError):
            parse_identity("[x1,x2]")

    def test_bad_character(self):
        with pytest.raises(IdentityParseError) as info:
            parse_identity("x1 ? x2")
        assert info.value.position == 3

    def test_format_round_trip(self):
        """Test that printing then parsing gives the same identity."""
        sources = [
            (ASSOCIATIVITY, 1),
            ("-x1*x2 + 2*x2*x1", 1),
            ("[x1,[x2,x3]] + [x2,[x3,x1]] + [x3,[x1,x2]]", 2),
            ("((x1*x2)*x3)*x4 - x1*(x2*(x3*x4))", 1),
        ]
        for source, num_products in sources:
            phi = parse_identity(source, num_products)
            assert parse_identity(format_identity(phi), num_products) == phi

    def test_format(self):
        assert format_identity(parse_identity(ASSOCIATIVITY)) == ASSOCIATIVITY
        assert str(parse_identity("x1*x2 - 3*x2*x1")) == "x1*x2 - 3*x2*x1"


class TestEvaluation:
    """Test cases for evaluate_identity and check_identity."""

    def setup_method(self):
        """Set up test fixtures."""
        self.assoc = parse_identity(ASSOCIATIVITY)
        self.m2 = load_example("M2", GF5)

    def test_arity(self):
        with pytest.raises(ArityError):
            evaluate_identity(self.assoc, self.m2, [self.m2.zero()])

    def test_bracket_on_single_product_algebra(self):
        phi = parse_identity("[x1,x2] + [x2,x1]", 2)
        with pytest.raises(PreconditionError):
            check_identity(phi, self.m2)

    def test_matrices_are_associative(self):
        assert check_identity(self.assoc, self.m2).satisfied

    def test_octonions_are_not_associative(self):
        """Test that the witness is a failing basis triple."""
        o = load_example("octonions")
        report = check_identity(self.assoc, o)
        assert not report.satisfied
        assert len(report.witness) == 3
        assert 0 not in report.witness
        args = [o.basis_vector(i) for i in report.witness]
        assert any(evaluate_identity(self.assoc, o, args))
        assert report.witness_names == [o.basis_names[i] for i in report.witness]

    def test_commutator_fails_on_matrices(self):
        report = check_identity(parse_identity("x1*x2 - x2*x1"), self.m2)
        assert not report.satisfied
        assert report.witness == [0, 1]

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
    )
    def test_multilinear_in_first_argument(self, u, v, y, z):
        """Test phi(u + v, y, z) = phi(u, y, z) + phi(v, y, z) over GF(5)."""
        phi = parse_identity("(x1*x2)*x3 - 2*x2*(x3*x1)")
        a = load_example("M2", GF5)
        u, v, y, z = (a.element(c) for c in (u, v, y, z))
        lhs = evaluate_identity(phi, a, [vec_add(u, v), y, z])
        rhs = vec_add(evaluate_identity(phi, a, [u, y, z]), evaluate_identity(phi, a, [v, y, z]))
        assert lhs == rhs

    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(0, 4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
        st.lists(st.integers(0, 4), min_size=4, max_size=4),
    )
    def test_homogeneous_in_first_argument(self, alpha, u, y, z):
        """Test phi(alpha u, y, z) = alpha phi(u, y, z) over GF(5)."""
        phi = parse_identity("(x1*x2)*x3 - 2*x2*(x3*x1)")
        a = load_example("M2", GF5)
        u, y, z = (a.element(c) for c in (u, y, z))
        lhs = evaluate_identity(phi, a, [a.scale(alpha, u), y, z])
        assert lhs == a.scale(alpha, evaluate_identity(phi, a, [u, y, z]))


def _associator(a, x, y, z):
    return a.add(a.multiply(a.multiply(x, y), z), a.scale(-1, a.multiply(x, a.multiply(y, z))))


def _alternative_by_hand(a):
    """(yx)x - y(xx) and x(xy) - (xx)y on every basis y and every x = e_i or e_i + e_j."""
    basis = [a.basis_vector(i) for i in range(a.dim)]
    xs = basis + [a.add(u, v) for u, v in itertools.combinations(basis, 2)]
    for x, y in itertools.product(xs, basis):
        if any(_associator(a, y, x, x)) or any(_associator(a, x, x, y)):
            return False
    return True


class TestAlternativeLaws:
    """Test cases comparing the polarized alt preset with the unpolarized laws."""

    def setup_method(self):
        """Set up test fixtures."""
        self.alt = get_preset("alt")

    def _agree(self, a):
        expected = _alternative_by_hand(a)
        assert self.alt.contains(a) == expected
        assert all(check_identity(phi, a).satisfied for phi in self.alt.parsed_identities) == expected
        return expected

    def test_octonions(self):
        assert self._agree(load_example("octonions"))

    def test_matrices(self):
        assert self._agree(load_example("M2"))

    def test_not_alternative_over_gf3(self):
        """Test e0e0 = e1, e1e0 = e1, where (e1e0)e0 - e1(e0e0) = e1."""
        a = Algebra.from_entries(GF3, 2, {"mul": [(0, 0, 1, 1), (1, 0, 1, 1)]})
        assert not self._agree(a)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 2), min_size=8, max_size=8))
    def test_random_algebras_over_gf3(self, constants):
        """Test agreement on every 2-dimensional algebra drawn over GF(3)."""
        entries = [(i, j, k, c) for (i, j, k), c in zip(itertools.product(range(2), repeat=3), constants)]
        self._agree(Algebra.from_entries(GF3, 2, {"mul": entries}))
