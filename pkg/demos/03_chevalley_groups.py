"""Bruhat-cell torifications of SL(n) and their group-order counts.

Run: python demos/03_chevalley_groups.py
"""

from collections import Counter

from torified import (
    chevalley_data_sl,
    counting_polynomial,
    delta_vector,
    eval_counting,
    sl_group_order,
    torify_chevalley,
)

for n in (2, 3):
    data = chevalley_data_sl(n)
    print(f"SL({n}): torus rank {data.torus_rank}, unipotent dim {data.unipotent_dim}")
    print("  cell dims (one per Weyl element):", data.cell_dims)
    t = torify_chevalley(data)
    ranks = Counter(x.rank for x in t.tori)
    print("  torus ranks:", dict(sorted(ranks.items())))
    N = counting_polynomial(t)
    print("  N(q) =", N.poly_string())
    for q in (2, 3, 5):
        assert eval_counting(N, q) == sl_group_order(n, q)
        print(f"  |SL_{n}(F_{q})| = {eval_counting(N, q)}")
    print("  delta:", delta_vector(t))
    print()

# Any split type can be fed in through its three numbers; only the torus rank,
# the unipotent dimension, and the cell-dimension multiset matter.
from torified import ChevalleyData

sp4_like = ChevalleyData(
    torus_rank=2,
    unipotent_dim=4,
    cell_dims=(0, 1, 1, 2, 2, 3, 3, 4),  # inversion statistics of a rank-2 Weyl group
)
t = torify_chevalley(sp4_like)
print("custom cell data: dim =", t.dim, " delta =", delta_vector(t))
