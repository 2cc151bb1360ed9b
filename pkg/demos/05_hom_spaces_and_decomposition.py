"""Morphism spaces between the named three-strand factorizations, and the
direct-sum decomposition behind the third Reidemeister move.

Run:  python3 demos/05_hom_spaces_and_decomposition.py
"""

from collections import defaultdict

from trigrad.catalog import closed_matrix, hom_pair
from trigrad.homology import hom_space_dim, matrix_homology

# Bidegree-preserving morphisms up to homotopy, computed as the (0,0) slice
# of the homology of N tensored with the dual of M.
pairs = [
    ("gamma110", "gamma100"),
    ("gamma100", "gamma110"),
    ("gamma100", "gamma000"),
    ("gamma000", "gamma100"),
    ("upsilon", "gamma110"),
    ("s2", "s2"),
]
for src, tgt in pairs:
    m, n = hom_pair(src, tgt)
    print(f"dim Hom({src:9}, {tgt:9}) = {hom_space_dim(m, n)}")

# The triple wide edge splits off the Upsilon factorization: after closing
# everything by three arcs, the dimensions add up slice by slice.
qmax = 10
h1 = matrix_homology(closed_matrix("gamma1-closure"), qmax)
h4 = matrix_homology(closed_matrix("gamma4-closure"), qmax)
hu = matrix_homology(closed_matrix("upsilon-closure"), qmax)

combined = defaultdict(int)
for (j, k, l), d in h4.dims.items():
    if l + 2 <= qmax:
        combined[(j, k, l + 2)] += d
for key, d in hu.dims.items():
    combined[key] += d

print("\nclosure of gamma1 == closure of gamma4 {0,2} + closure of upsilon:",
      {k: v for k, v in combined.items() if v} == h1.dims)
print("slice dims of the upsilon closure:")
for (j, k, l), d in hu.items_sorted():
    print(f"  ({k:3d},{l:3d}) -> {d}")
