"""
Tests for the Poisson actor [X] and the center comparison.
"""

import pytest

from actorkit.errors import CharacteristicError, NotInActorError, PreconditionError
from actorkit.examples import load_example
from actorkit.examples.catalog import with_zero_bracket, x_ideal
from actorkit.linalg import Field, identity, zeros
from actorkit.poisson import (
    PoissonActorElement,
    is_poisson,
    poisson_acting_check,
    usga,
    usga_bracket,
    usga_multiply,
    z_center_actor_check,
)

Q = Field.rationals()
GF2 = Field.prime(2)
GF3 = Field.prime(3)


class TestUsga:
    """Test cases for usga."""

    def setup_method(self):
        """Set up test fixtures."""
        self.m2 = load_example("M2-poisson")
        self.actor = usga(self.m2)

    def test_matrix_poisson_actor_is_the_scalars(self):
        assert self.actor.dim == 1
        unit = self.m2.find_unit()
        assert self.actor.basis[0] == PoissonActorElement.inner(self.m2, unit)

    def test_zero_bracket_actor_is_the_algebra(self):
        """Test dim [X] = dim X when the bracket vanishes."""
        for name in ("zero-bracket-FxF", "zero-bracket-dual"):
            a = load_example(name)
            assert usga(a).dim == a.dim

    def test_zero_bracket_operations_restrict_to_the_algebra(self):
        """Test Inn(x)·Inn(y) = Inn(xy) and [Inn(x), Inn(y)] = Inn([x, y]) when Z(X) = X."""
        for name in ("zero-bracket-FxF", "zero-bracket-dual"):
            a = load_example(name)
            s = usga(a)
            assert a.lie_center(1).dim == a.dim == 2
            basis = [a.basis_vector(i) for i in range(a.dim)] + [a.element([1, 2])]
            for x in basis:
                for y in basis:
                    assert usga_multiply(s, s.inner(x), s.inner(y)) == s.inner(a.multiply(x, y, 0))
                    assert usga_bracket(s, s.inner(x), s.inner(y)) == s.inner(a.multiply(x, y, 1))

    def test_operations(self):
        u = self.actor.basis[0]
        assert usga_multiply(self.actor, u, u) == u
        assert usga_bracket(self.actor, u, u).is_zero()
        assert self.actor.is_closed()

    def test_bracket_of_an_element_with_itself(self):
        """Test that [f, f] vanishes when the derivation block is zero."""
        s = usga(load_example("zero-bracket-dual"))
        for f in s.basis:
            assert not any(f.flatten()[2 * s.n * s.n:])
            assert usga_bracket(s, f, f).is_zero()

    def test_compose(self):
        u = self.actor.basis[0]
        assert self.actor.compose(u, u, 0) == u
        assert self.actor.compose(u, u, 1).is_zero()

    def test_factor_outside_actor(self):
        outsider = PoissonActorElement(identity(Q, 4), zeros(Q, 4, 4), zeros(Q, 4, 4))
        with pytest.raises(NotInActorError):
            usga_multiply(self.actor, outsider, self.actor.basis[0])

    def test_needs_two_products(self):
        with pytest.raises(PreconditionError):
            usga(load_example("M2"))

    def test_characteristic_two(self):
        with pytest.raises(CharacteristicError):
            usga(load_example("M2-poisson", GF2))

    def test_over_gf3(self):
        assert usga(load_example("M2-poisson", GF3)).dim == 1

    def test_is_poisson(self):
        assert is_poisson(self.m2)
        assert not is_poisson(load_example("M2"))
        assert not is_poisson(load_example("M2-poisson", GF2))

    def test_export(self):
        report = self.actor.export()
        assert report["dimension"] == 1
        assert set(report["basis"][0]) == {"left", "right", "der"}


class TestCenterActorCheck:
    """Test cases for z_center_actor_check."""

    def test_matrix_poisson(self):
        report = z_center_actor_check(load_example("M2-poisson"))
        assert report.passed
        assert report.center_dim == report.usga_dim == 1
        assert report.unit_in_center
        assert report.der_components_zero

    def test_zero_bracket(self):
        report = z_center_actor_check(load_example("zero-bracket-FxF"))
        assert report.passed
        assert report.center_dim == 2

    def test_needs_unit(self):
        with pytest.raises(PreconditionError):
            z_center_actor_check(with_zero_bracket(x_ideal(Q), "x-ideal-poisson"))

    def test_report_serializes(self):
        data = z_center_actor_check(load_example("M2-poisson")).to_dict()
        assert data["algebra"] == "M2-poisson"
        assert data["passed"] is True


class TestPoissonActingCheck:
    """Test cases for poisson_acting_check."""

    def test_commutative_images_permute(self):
        s = usga(load_example("zero-bracket-FxF"))
        assert poisson_acting_check(s, s.basis)

    def test_images_must_lie_in_actor(self):
        s = usga(load_example("M2-poisson"))
        outsider = PoissonActorElement(identity(Q, 4), zeros(Q, 4, 4), zeros(Q, 4, 4))
        with pytest.raises(NotInActorError):
            poisson_acting_check(s, [outsider])
