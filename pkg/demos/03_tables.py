"""
Classification tables
=====================

Number of inequivalent LCD [n,k] codes, refined by minimum weight, for
small lengths.  Shorter classifications are reused: the codes whose dual
has a weight-one word are the length n-1 codes with a zero coordinate
appended, so only the rest has to be searched.
"""

# %%
import time

import numpy as np

from lcdcodes import classify, refine_by_distance
from lcdcodes.tables import format_main_row

cache = {}
t0 = time.perf_counter()
for n in range(4, 10):
    for k in range(2, n // 2 + 1):
        row = refine_by_distance(classify(2, n, k, cache=cache))
        print(f"({n},{k})  {format_main_row(row)}")
print(f"binary rows up to n=9 in {time.perf_counter() - t0:.1f}s")

# %%
# The full grid of counts over GF(3); it is symmetric in k <-> n-k since
# duality maps LCD codes to LCD codes.
N = np.zeros((8, 8), dtype=int)
for n in range(2, 8):
    for k in range(1, n):
        N[n, k] = classify(3, n, k, cache=cache).N
print(N[2:, 1:])

# %%
# Smallest automorphism groups among the ternary codes of length 7.
for k in range(1, 4):
    print(k, min(rec.aut_order for rec in classify(3, 7, k, cache=cache).classes))
