"""
Mass formulas and lower bounds
==============================

The number T_q(n,k) of distinct LCD codes has a closed form.  Dividing by
the size of the monomial group gives a lower bound on the number of
equivalence classes; it can only be sharp when almost every class has a
trivial automorphism group.
"""

# %%
import numpy as np

from lcdcodes import classify, gaussian_binomial, group_size, lower_bound_t, mass

print("subspaces of GF(2)^6 of dimension 3:", gaussian_binomial(6, 3, 2))
print("of which LCD:", mass(2, 6, 3))

# %%
# The fraction of k-dimensional subspaces that are LCD stays large.
for q in (2, 3):
    frac = [mass(q, 10, k) / gaussian_binomial(10, k, q) for k in range(1, 10)]
    print(q, np.round(frac, 3))

# %%
# Lower bounds next to exact counts.  At these lengths most classes have
# nontrivial symmetry, so the bound is far below the truth.
cache = {}
for n in range(6, 11):
    k = n // 2
    exact = classify(2, n, k, cache=cache).N
    print(n, k, "bound", lower_bound_t(2, n, k), "exact", exact)

# %%
# Bounds far beyond exhaustive reach.
t = [lower_bound_t(2, 14, k) for k in range(1, 14)]
print("length 14:", t, "sum", sum(t))
print("monomial group of GF(3)^11:", group_size(3, 11))
