"""Monoids of cones, their primes, and the point set of a fan's monoid scheme.

Run: python demos/05_monoid_spectra.py
"""

from torified import (
    Cone,
    dscheme_of_fan,
    monoid_of_cone,
    spec,
    standard_fan,
    unit_group,
)

# The singular quadric cone: its monoid needs three generators satisfying one
# binomial relation.
sigma = Cone(2, ((1, 0), (1, 2)))
monoid = monoid_of_cone(sigma)
print("monoid of the singular cone:", monoid)
print("generators:", monoid.generators)
print("unit group:", unit_group(monoid))

print("\nprimes (one per face of the cone):")
for prime in spec(monoid):
    print(
        f"  face {prime.face.rays}: localization has unit rank {prime.complement_rank}"
    )

# The monoid scheme of the projective line: three points, the generic one of
# rank 1 and two closed ones; specialization mirrors cone inclusion.
ds = dscheme_of_fan(standard_fan("projective_space", 1))
print("\nP^1 as a monoid scheme:", ds)
for p in ds.points:
    print(f"  point {p.index}: cone rays {p.cone.rays}, rank {p.rank}")
print("specializations (i, j) with cone_i inside cone_j:", ds.specialization)
print("generic points:", [p.index for p in ds.generic_points()])

# Ranks across the P^2 fan: 2 for the dense torus, then 1s and 0s.
ds2 = dscheme_of_fan(standard_fan("projective_space", 2))
print("\nP^2 point ranks:", [p.rank for p in ds2.points])
