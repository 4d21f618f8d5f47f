"""Toric varieties from fans: validation, torus decomposition, point counts.

Run: python demos/01_toric_varieties.py
"""

from torified import (
    Cone,
    Fan,
    counting_polynomial,
    delta_vector,
    eval_counting,
    faces,
    oracle_point_count,
    standard_fan,
    torify_toric,
    validate_fan,
    zeta,
)

# The projective plane: three maximal cones on e1, e2, -e1-e2, plus all faces.
p2 = standard_fan("projective_space", 2)
print("P^2 fan:", p2)
print("valid:", validate_fan(p2).ok)

t = torify_toric(p2)
print("delta vector:", delta_vector(t))  # one torus per cone, by codimension
print("charts:", t.charts)

N = counting_polynomial(t)
print("counting polynomial:", N.poly_string())
for q in (2, 3, 4, 5):
    print(f"  N({q}) = {eval_counting(N, q)}   oracle: {oracle_point_count('projective', 2, q)}")
print("zeta:", zeta(N).render())

# A singular affine surface: the cone over (1,0) and (1,2).  Its dual monoid
# needs three generators; the variety is a quadric cone.
sigma = Cone(2, ((1, 0), (1, 2)))
singular = Fan(2, faces(sigma))
ts = torify_toric(singular)
Ns = counting_polynomial(ts)
print("\nsingular surface delta:", delta_vector(ts))
print("counting polynomial:", Ns.poly_string())  # q^2: same count as the plane
print("N(7) =", eval_counting(Ns, 7), "== 7^2")
