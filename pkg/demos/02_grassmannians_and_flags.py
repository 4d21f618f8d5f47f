"""Schubert cells of Grassmannians and flag varieties.

Run: python demos/02_grassmannians_and_flags.py
"""

from torified import (
    counting_polynomial,
    delta_vector,
    eval_counting,
    gaussian_binomial,
    schubert_cells_flag,
    schubert_cells_grassmannian,
    torify_flag,
    torify_grassmannian,
)

# Gr(2,4): six cells, one affine space per increasing multi-index.
print("Schubert cells of Gr(2,4):")
for idx, dim in schubert_cells_grassmannian(2, 4):
    print(f"  C_{idx}: affine space of dimension {dim}")

g = torify_grassmannian(2, 4)
print("delta vector:", delta_vector(g))  # (6, 12, 11, 5, 1)
print("affine atlas available:", g.is_affine)  # the cell atlas is not affine

N = counting_polynomial(g)
print("N(q) =", N.poly_string())
for q in (2, 3, 5):
    print(f"  N({q}) = {eval_counting(N, q)}  q-binomial: {gaussian_binomial(4, 2, q)}")

# The complete flag variety on 3 letters: cells indexed by S_3, dimension =
# number of inversions.
print("\ncells of the full flag variety (n = 3):")
for w, dim in schubert_cells_flag((1, 1, 1)):
    print(f"  w = {w}: dimension {dim}")
print("delta vector:", delta_vector(torify_flag((1, 1, 1))))

# The two-step flag (2,2) is the Grassmannian Gr(2,4) again:
print("\nflag(2,2) delta:", delta_vector(torify_flag((2, 2))))
print("Gr(2,4)  delta:", delta_vector(torify_grassmannian(2, 4)))
