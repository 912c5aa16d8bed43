"""
Tests for the actor engine: E(X), the partial product and the classical actors.
"""

import itertools
import random

import pytest

from actorkit.actor import (
    ActorElement,
    alt_actor_equations_check,
    alt_actor_equations_space,
    bimultipliers,
    derivations,
    external_weak_actor,
    multipliers,
    operator_constraints,
    partial_product,
)
from actorkit.errors import NotInActorError, PreconditionError, VarietyViolationError
from actorkit.examples import load_example
from actorkit.identities import Variable, parse_identity
from actorkit.linalg import Field, Subspace, identity, matrix_rows, zeros
from actorkit.varieties import get_preset

Q = Field.rationals()

SPLICE_CASES = list(itertools.product(("assoc", "cassoc", "lie", "leib"), ("dual", "trunc3", "abelian2", "lie2")))


def _spliced(tree, slot, f, a, args):
    """A monomial with the pair f in place of x_slot: L_f(x) as a left child, R_f(x) as a right child."""
    if isinstance(tree, Variable):
        return tuple(args[tree.index - 1])
    if tree.left == Variable(slot):
        return f.act_left(_spliced(tree.right, slot, f, a, args))
    if tree.right == Variable(slot):
        return f.act_right(_spliced(tree.left, slot, f, a, args))
    return a.multiply(_spliced(tree.left, slot, f, a, args), _spliced(tree.right, slot, f, a, args), tree.product)


def _spliced_identity(phi, slot, f, a, args):
    total = a.zero()
    for term in phi.terms:
        total = a.add(total, a.scale(term.coefficient, _spliced(term.tree, slot, f, a, args)))
    return total


class TestExternalWeakActor:
    """Test cases for external_weak_actor."""

    def setup_method(self):
        """Set up test fixtures."""
        self.assoc = get_preset("assoc")

    def test_field_is_its_own_actor(self):
        s = external_weak_actor(load_example("F"), self.assoc)
        assert s.dim == 1
        assert s.basis[0] == ActorElement.inner(load_example("F"), (Q.one,))

    def test_abelian_algebra_has_every_pair(self):
        """Test that the zero product puts no constraint on (L, R)."""
        assert external_weak_actor(load_example("abelian1"), self.assoc).dim == 2
        assert external_weak_actor(load_example("abelian2"), self.assoc).dim == 8

    def test_abelian_in_abelian_variety(self):
        assert external_weak_actor(load_example("abelian2"), get_preset("abalg")).dim == 0

    def test_matrices_match_bimultipliers(self):
        """Test E(M2) against the bimultiplier equations."""
        m2 = load_example("M2")
        s = external_weak_actor(m2, self.assoc)
        assert s.dim == 4
        assert s.subspace == bimultipliers(m2)

    def test_commutative_pairs_are_symmetric(self):
        """Test that in CAssoc every element has L = R."""
        s = external_weak_actor(load_example("trunc3"), get_preset("cassoc"))
        assert s.dim == 3
        for e in s.basis:
            assert matrix_rows(e.left) == matrix_rows(e.right)

    def test_lie_actor_is_derivations(self):
        """Test that in Lie every element has R = -L with L a derivation."""
        lie2 = load_example("lie2")
        s = external_weak_actor(lie2, get_preset("lie"))
        der = derivations(lie2)
        assert s.dim == der.dim == 2
        for e in s.basis:
            assert matrix_rows(e.right) == [tuple(-c for c in row) for row in matrix_rows(e.left)]
            assert der.contains(e.flatten()[:4])

    @pytest.mark.parametrize("variety, name", SPLICE_CASES)
    def test_spliced_identities_vanish(self, variety, name):
        """Test that a pair in E(X) put into any slot of any identity evaluates to zero."""
        v, a = get_preset(variety), load_example(name)
        if not v.contains(a):
            pytest.skip(f"{name} is not in {variety}")
        s = external_weak_actor(a, v)
        rng = random.Random(f"{variety}/{name}")
        pairs = s.basis + [s.element([rng.randint(-3, 3) for _ in range(s.dim)])]
        basis = [a.basis_vector(i) for i in range(a.dim)]
        for phi in v.parsed_identities:
            for slot in range(1, phi.degree + 1):
                for f, rest in itertools.product(pairs, itertools.product(basis, repeat=phi.degree - 1)):
                    args = list(rest)
                    args.insert(slot - 1, None)
                    assert not any(_spliced_identity(phi, slot, f, a, args)), (str(phi), slot)

    def test_octonions_in_alt(self):
        """Test E(O) against the four alternative-actor equations."""
        o = load_example("octonions")
        s = external_weak_actor(o, get_preset("alt"))
        assert s.dim == 8
        assert s.subspace == alt_actor_equations_space(o)
        assert all(alt_actor_equations_check(e, o) for e in s.basis)

    def test_requires_membership(self):
        with pytest.raises(VarietyViolationError):
            external_weak_actor(load_example("M2"), get_preset("cassoc"))

    def test_rejects_two_product_variety(self):
        with pytest.raises(PreconditionError):
            external_weak_actor(load_example("M2-poisson"), get_preset("pois"))

    def test_zero_algebra(self):
        assert external_weak_actor(load_example("zero"), self.assoc).dim == 0

    def test_operator_constraints_slot(self):
        phi = parse_identity("(x1*x2)*x3 - x1*(x2*x3)")
        m2 = load_example("M2")
        assert operator_constraints(phi, m2, 2).shape[1] == 32
        with pytest.raises(PreconditionError):
            operator_constraints(phi, m2, 4)

    def test_export(self):
        report = external_weak_actor(load_example("F"), self.assoc).export()
        assert report == {
            "algebra": "F",
            "variety": "assoc",
            "dimension": 1,
            "basis": [{"left": [["1"]], "right": [["1"]]}],
        }


class TestPartialProduct:
    """Test cases for partial_product."""

    def test_inner_elements_compose(self):
        """Test Inn(x)Inn(y) = Inn(xy) in E(M2)."""
        m2 = load_example("M2")
        s = external_weak_actor(m2, get_preset("assoc"))
        e12, e21 = m2.basis_vector(1), m2.basis_vector(2)
        h = partial_product(s, s.inner(e12), s.inner(e21))
        assert h == s.inner(m2.basis_vector(0))

    def test_alternative_rule(self):
        o = load_example("octonions")
        s = external_weak_actor(o, get_preset("alt"))
        x, y = o.basis_vector(1), o.basis_vector(2)
        assert partial_product(s, s.inner(x), s.inner(y)) == s.inner(o.multiply(x, y))

    def test_abelian_products_are_defined(self):
        s = external_weak_actor(load_example("abelian2"), get_preset("assoc"))
        f, g = s.basis[1], s.basis[6]
        h = partial_product(s, f, g)
        assert h is not None
        assert s.contains(h)

    @pytest.mark.parametrize("variety, name", [("assoc", "M2"), ("cassoc", "dual"), ("alt", "octonions")])
    def test_total_on_unital_algebras(self, variety, name):
        """Test that every pair of basis elements of E(X) has a product in E(X)."""
        s = external_weak_actor(load_example(name), get_preset(variety))
        for f, g in itertools.product(s.basis, repeat=2):
            assert partial_product(s, f, g) is not None

    @pytest.mark.parametrize("variety, name", [("assoc", "M2"), ("alt", "octonions")])
    def test_bilinear(self, variety, name):
        """Test <af + g, h> = a<f, h> + <g, h> and <h, af + g> = a<h, f> + <h, g>."""
        s = external_weak_actor(load_example(name), get_preset(variety))
        alpha = Q.parse("2/3")
        f, g, h = s.basis[1], s.basis[2], s.basis[3]
        mixed = f.scale(alpha) + g
        lhs = partial_product(s, mixed, h)
        rhs = partial_product(s, f, h).scale(alpha) + partial_product(s, g, h)
        assert lhs.flatten() == rhs.flatten()
        lhs = partial_product(s, h, mixed)
        rhs = partial_product(s, h, f).scale(alpha) + partial_product(s, h, g)
        assert lhs.flatten() == rhs.flatten()

    def test_factor_outside_actor(self):
        m2 = load_example("M2")
        s = external_weak_actor(m2, get_preset("assoc"))
        outsider = ActorElement(identity(Q, 4), zeros(Q, 4, 4))
        with pytest.raises(NotInActorError):
            partial_product(s, outsider, s.basis[0])

    def test_variety_without_rules(self):
        """Test that Leib has no partial product."""
        lie2 = load_example("lie2")
        s = external_weak_actor(lie2, get_preset("leib"))
        with pytest.raises(PreconditionError):
            partial_product(s, s.basis[0], s.basis[0])

    def test_coordinates(self):
        m2 = load_example("M2")
        s = external_weak_actor(m2, get_preset("assoc"))
        e = s.element([1, 2, 0, "1/2"])
        assert s.coordinates(e) == (Q.one, Q(2), Q.zero, Q.parse("1/2"))


class TestClassicalActors:
    """Test cases for derivations and multipliers."""

    def test_multipliers_of_dual_numbers(self):
        assert multipliers(load_example("dual")).dim == 2

    def test_multipliers_of_unital_algebras(self):
        for name in ("F", "FxF", "dual", "trunc3"):
            a = load_example(name)
            assert multipliers(a).dim == a.dim

    def test_multipliers_of_x_ideal(self):
        """Test that a multiplier of span(x, x^2) is fixed by L(x) = ax + bx^2."""
        assert multipliers(load_example("x-ideal")).dim == 2

    @pytest.mark.parametrize("name", ["dual", "trunc3", "x-ideal", "abelian2"])
    def test_multipliers_are_the_left_blocks_of_cassoc_actor(self, name):
        a = load_example(name)
        n = a.dim
        s = external_weak_actor(a, get_preset("cassoc"))
        left_blocks = Subspace.span(Q, n * n, [e.flatten()[:n * n] for e in s.basis])
        assert left_blocks == multipliers(a)
        assert left_blocks.dim == s.dim

    def test_multipliers_need_commutative_associative(self):
        with pytest.raises(PreconditionError):
            multipliers(load_example("M2"))

    def test_derivations_of_matrices(self):
        """Test that Der(M2) is the 3-dimensional space of inner derivations."""
        assert derivations(load_example("M2")).dim == 3

    def test_field_has_no_derivations(self):
        assert derivations(load_example("F")).dim == 0

    def test_abelian_derivations_are_all_maps(self):
        assert derivations(load_example("abelian1")).dim == 1
        assert derivations(load_example("abelian2")).dim == 4
