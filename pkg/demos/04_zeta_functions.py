"""The zeta-factor zoo: from delta vectors to rational expressions in s.

Run: python demos/04_zeta_functions.py
"""

from torified import (
    chevalley_data_sl,
    counting_polynomial,
    standard_fan,
    torify_affine_space,
    torify_chevalley,
    torify_grassmannian,
    torify_point,
    torify_toric,
    torify_torus,
    zeta,
)

zoo = [
    ("point", torify_point()),
    ("Gm", torify_torus(1)),
    ("Gm^2", torify_torus(2)),
    ("A^1", torify_affine_space(1)),
    ("A^2", torify_affine_space(2)),
    ("P^1", torify_toric(standard_fan("projective_space", 1))),
    ("P^2", torify_toric(standard_fan("projective_space", 2))),
    ("Gr(2,4)", torify_grassmannian(2, 4)),
    ("SL(2)", torify_chevalley(chevalley_data_sl(2))),
]

for name, t in zoo:
    N = counting_polynomial(t)
    z = zeta(N)
    print(f"{name:>8}:  N(q) = {N.poly_string():<28} zeta = {z.render()}")

# The factor list is the exact data: (root, exponent) pairs, exponent = -a_root.
N = counting_polynomial(torify_grassmannian(2, 4))
print("\nGr(2,4) factors:", zeta(N).factors)
print("mono coefficients:", N.mono, " sum =", sum(N.mono), "= delta_0 =", N.delta[0])
