#!/usr/bin/env python3
"""
Example usage of actorkit.

This script walks through the main computations: actors of unital and
non-unital algebras, the partial product, the Poisson actor and the
split-extension census over GF(2).
"""

import json

from actorkit import (
    ActorKit,
    Field,
    external_weak_actor,
    get_preset,
    inn_map,
    load_example,
    partial_product,
    permutability_check,
    usga,
    verify_bijection,
)


def demonstrate_actors():
    """Actors of unital algebras against a non-unital one."""
    print("🧮 External weak actors")
    print("=" * 40)

    for name, preset in [("M2", "assoc"), ("dual", "cassoc"), ("octonions", "alt")]:
        a = load_example(name)
        s = external_weak_actor(a, get_preset(preset))
        inner = inn_map(a, s)
        print(f"dim E({name}) in {preset} = {s.dim} (dim X = {a.dim}), Inn bijective: {inner.is_bijective}")

    abelian = load_example("abelian2")
    s = external_weak_actor(abelian, get_preset("assoc"))
    f, g = s.basis[1], s.basis[6]
    print(f"\ndim E(abelian2) = {s.dim}, Inn image = {inn_map(abelian, s).image.dim}")
    print(f"(E12, 0) and (0, E21) permutable: {permutability_check(f, g)}")


def demonstrate_partial_product():
    """Inn(x)Inn(y) = Inn(xy) in the actor of the octonions."""
    print("\n✖️  Partial product")
    print("=" * 40)

    o = load_example("octonions")
    s = external_weak_actor(o, get_preset("alt"))
    x, y = o.basis_vector(1), o.basis_vector(2)
    h = partial_product(s, s.inner(x), s.inner(y))
    print(f"Inn(e1)Inn(e2) = Inn(e1*e2): {h == s.inner(o.multiply(x, y))}")


def demonstrate_poisson():
    """The Poisson actor of M2 with the commutator bracket."""
    print("\n🌀 Poisson actor")
    print("=" * 40)

    a = load_example("M2-poisson")
    s = usga(a)
    print(f"dim [M2-poisson] = {s.dim}, dim Z = {a.lie_center(1).dim}, closed: {s.is_closed()}")


def demonstrate_census():
    """Split extensions against morphisms over GF(2)."""
    print("\n🔢 Split extension census over GF(2)")
    print("=" * 40)

    gf2 = Field.prime(2)
    for b_name in ("idempotent-line", "nilpotent-line"):
        report = verify_bijection(load_example(b_name, gf2), load_example("F", gf2), get_preset("cassoc"))
        print(f"{b_name}: {report.split_extensions} extensions, {report.acting_morphisms} morphisms, match: {report.match}")


def demonstrate_theorems():
    """Theorem verification through the facade, with its trace."""
    print("\n✅ Theorem verification")
    print("=" * 40)

    kit = ActorKit()
    for theorem, name in [("thm-assoc1", "M2"), ("thm-alt", "octonions"), ("thm-pois", "M2-poisson")]:
        report = kit.verify(theorem, algebra=load_example(name))
        print(f"{theorem} on {name}: {'PASS' if report.passed else 'FAIL'}")

    stats = kit.logger.get_log_statistics()
    print(f"\nTrace statistics: {json.dumps(stats, indent=2)}")


def main():
    """Main demonstration function."""
    try:
        demonstrate_actors()
        demonstrate_partial_product()
        demonstrate_poisson()
        demonstrate_census()
        demonstrate_theorems()

        print("\n🎉 Demo completed successfully!")
        print("\nTo use the CLI, run:")
        print("  actorkit verify thm-assoc1 --algebra M2")
        print("\nTo install the package:")
        print("  pip install -e .")

    except Exception as e:
        print(f"❌ Error during demo: {e}")
        import traceback
        traceback.print_exc()


if __name__ == "__main__":
    main()
