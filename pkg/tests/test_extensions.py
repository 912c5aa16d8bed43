"""
Tests for split extensions, acting morphisms, semidirect products and the
brute-force enumeration.
"""

from pathlib import Path

import pytest

from actorkit.actor import external_weak_actor
from actorkit.errors import BudgetExceededError, NotInActorError, PreconditionError, VarietyViolationError
from actorkit.examples import load_example
from actorkit.examples.catalog import field_algebra, idempotent_line, with_zero_bracket
from actorkit.extensions import (
    DEFAULT_BUDGET,
    ActingMorphism,
    AlgebraMorphism,
    acting_morphism_from_homomorphism,
    enumerate_split_extensions,
    extension_to_acting_morphism,
    first_non_permutable_pair,
    inn_map,
    permutability_check,
    resolve_budget,
    semidirect_extension,
    semidirect_product,
    variety_morphisms,
    verify_bijection,
)
from actorkit.formats import load_algebra
from actorkit.linalg import Field, identity, matrices_equal, matrix_from_columns, zeros
from actorkit.poisson import PoissonActorElement, usga
from actorkit.varieties import get_preset

Q = Field.rationals()
GF2 = Field.prime(2)
GF3 = Field.prime(3)
DATA = Path(__file__).parent / "data"


class TestBudget:
    """Test cases for resolve_budget."""

    def test_default(self, monkeypatch):
        monkeypatch.delenv("ACTORKIT_BUDGET", raising=False)
        assert resolve_budget() == DEFAULT_BUDGET == 65536

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("ACTORKIT_BUDGET", "100")
        assert resolve_budget() == 100
        assert resolve_budget(7) == 7

    def test_bad_environment_value(self, monkeypatch):
        monkeypatch.setenv("ACTORKIT_BUDGET", "lots")
        assert resolve_budget() == DEFAULT_BUDGET

    def test_enumeration_refuses_large_searches(self):
        m2 = load_example("M2", GF2)
        with pytest.raises(BudgetExceededError) as info:
            enumerate_split_extensions(m2, m2, get_preset("assoc"))
        assert info.value.candidates == 2 ** 128

    def test_enumeration_needs_prime_field(self):
        f = load_example("F")
        with pytest.raises(PreconditionError):
            enumerate_split_extensions(f, f, get_preset("assoc"))


class TestEnumeration:
    """Test cases for the split-extension census over GF(2)."""

    def setup_method(self):
        """Set up test fixtures."""
        self.cassoc = get_preset("cassoc")
        self.F = load_example("F", GF2)

    def test_idempotent_line_acting_on_field(self):
        result = enumerate_split_extensions(load_example("idempotent-line", GF2), self.F, self.cassoc)
        assert result.candidates == 4
        assert len(result) == 2
        assert result.num_classes == 2
        assert result.keys == [(0, 0), (1, 1)]

    def test_nilpotent_line_acting_on_field(self):
        result = enumerate_split_extensions(load_example("nilpotent-line", GF2), self.F, self.cassoc)
        assert len(result) == 1
        assert result.keys == [(0, 0)]

    def test_zero_kernel(self):
        result = enumerate_split_extensions(load_example("idempotent-line", GF2), load_example("zero", GF2), self.cassoc)
        assert result.candidates == 1
        assert len(result) == 1

    def test_extensions_are_split(self):
        for extension in enumerate_split_extensions(load_example("idempotent-line", GF2), self.F, self.cassoc):
            assert matrices_equal(extension.alpha.compose(extension.beta).matrix, identity(GF2, 1))
            assert self.cassoc.contains(extension.A)

    def test_variety_morphisms(self):
        found = variety_morphisms(load_example("idempotent-line", GF2), self.F)
        assert len(found) == 2


class TestBijection:
    """Test cases for verify_bijection."""

    def test_commutative_associative(self):
        report = verify_bijection(load_example("idempotent-line", GF2), load_example("F", GF2), get_preset("cassoc"))
        assert report.match
        assert report.split_extensions == report.acting_morphisms == 2
        assert report.witness is None
        assert report.keys == [[0, 0], [1, 1]]

    def test_poisson_goes_through_the_center(self):
        B = with_zero_bracket(idempotent_line(GF3), "e-poisson")
        X = with_zero_bracket(field_algebra(GF3), "F-poisson")
        report = verify_bijection(B, X, get_preset("pois"))
        assert report.match
        assert report.split_extensions == 2
        assert report.actor == "Z(F-poisson)"
        assert report.candidates == 27

    def test_needs_unital_kernel(self):
        with pytest.raises(PreconditionError):
            verify_bijection(load_example("F", GF2), load_example("nilpotent-line", GF2), get_preset("cassoc"))

    def test_needs_actor_kind(self):
        with pytest.raises(PreconditionError):
            verify_bijection(load_example("F", GF2), load_example("F", GF2), get_preset("abalg"))

    def test_report_serializes(self):
        report = verify_bijection(load_example("nilpotent-line", GF2), load_example("F", GF2), get_preset("cassoc"))
        data = report.to_dict()
        assert data["split_extensions"] == 1
        assert data["variety"] == "cassoc"


class TestActingMorphisms:
    """Test cases for acting morphisms, Inn and semidirect products."""

    def setup_method(self):
        """Set up test fixtures."""
        self.assoc = get_preset("assoc")
        self.m2 = load_example("M2")
        self.actor = external_weak_actor(self.m2, self.assoc)

    def test_semidirect_round_trip(self):
        """Test that the extension of B ⋉ X gives back the acting morphism."""
        B = load_example("F")
        phi = acting_morphism_from_homomorphism(B, self.actor, [self.m2.find_unit()])
        assert phi.is_multiplicative()
        extension = semidirect_extension(B, self.m2, phi, self.assoc)
        assert extension.A.dim == 5
        assert extension_to_acting_morphism(extension, self.actor).key() == phi.key()

    def test_poisson_round_trip_through_the_scalars(self):
        """Test B acting on M2-poisson through its augmentation 1 -> (I, I, 0), x -> 0."""
        B, X = load_example("zero-bracket-dual"), load_example("M2-poisson")
        s = usga(X)
        unit = PoissonActorElement(identity(Q, 4), identity(Q, 4), zeros(Q, 4, 4))
        assert s.contains(unit)
        phi = ActingMorphism(B, s, (unit, s.zero()))
        extension = semidirect_extension(B, X, phi, get_preset("pois"))
        assert extension.A.dim == 6
        assert extension_to_acting_morphism(extension, s).key() == phi.key()

    def test_poisson_round_trip_with_derivations(self):
        """Test lie2-poisson acting on itself by (0, 0, [b, -]), so the bracket block is nonzero."""
        X = load_algebra(DATA / "lie2_poisson.json")
        s = usga(X)
        assert s.dim == 4
        phi = ActingMorphism(X, s, (s.inner(X.basis_vector(0)), s.inner(X.basis_vector(1))))
        extension = semidirect_extension(X, X, phi, get_preset("pois"))
        A = extension.A
        assert A.basis_names == ("b_u", "b_v", "x_u", "x_v")
        # [b_u, x_v] = x_v and [x_u, b_v] = -[b_v, x_u] = -x_v
        assert A.multiply(A.basis_vector(0), A.basis_vector(3), 1) == A.basis_vector(3)
        assert A.multiply(A.basis_vector(2), A.basis_vector(1), 1) == A.scale(-1, A.basis_vector(3))
        recovered = extension_to_acting_morphism(extension, s)
        assert recovered.key() == phi.key()
        assert not recovered.assignment[0].is_zero()

    def test_semidirect_product_leaving_the_variety(self):
        """Test that a non-multiplicative assignment is caught by the variety check."""
        B = load_example("F")
        phi = ActingMorphism(B, self.actor, (self.actor.inner(self.m2.basis_vector(1)),))
        with pytest.raises(VarietyViolationError):
            semidirect_product(B, self.m2, phi, self.assoc)

    def test_assignment_outside_actor(self):
        B = load_example("F")
        outsider = self.actor.element_from_blocks([identity(Q, 4), zeros(Q, 4, 4)])
        with pytest.raises(NotInActorError):
            ActingMorphism(B, self.actor, (outsider,))

    def test_permutability(self):
        """Test the non-permutable pair (E12, 0), (0, E21) in E(abelian2)."""
        s = external_weak_actor(load_example("abelian2"), self.assoc)
        basis = s.basis
        assert not permutability_check(basis[1], basis[6])
        assert permutability_check(basis[0], basis[4])
        assert first_non_permutable_pair(basis) == (0, 5)
        with pytest.raises(PreconditionError):
            ActingMorphism(load_example("FxF"), s, (basis[1], basis[6]))

    def test_inn_is_bijective_for_unital_algebras(self):
        inner = inn_map(self.m2, self.actor)
        assert inner.is_bijective
        assert inner.summary()["actor_dim"] == 4

    def test_inn_is_zero_on_abelian_algebras(self):
        a = load_example("abelian2")
        inner = inn_map(a, external_weak_actor(a, self.assoc))
        assert inner.kernel.dim == 2
        assert inner.image.dim == 0
        assert not inner.is_surjective

    def test_algebra_morphism_validation(self):
        f = load_example("F")
        with pytest.raises(PreconditionError):
            AlgebraMorphism(f, f, matrix_from_columns(Q, [[Q(2)]], 1))
        assert AlgebraMorphism(f, f, identity(Q, 1)).kernel().dim == 0
