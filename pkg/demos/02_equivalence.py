"""
Deciding equivalence with canonical forms
=========================================

Two codes are equivalent when a monomial map (coordinate permutation plus,
over GF(3), sign changes) carries one onto the other.  Each code is turned
into a colored graph whose automorphisms are the code's automorphisms; a
canonical labeling of that graph gives a key shared by exactly the
equivalent codes.
"""

# %%
import random

from lcdcodes import FqMatrix, LinearCode, are_equivalent, automorphism_order, canonical_key
from lcdcodes.canon import build_graph, canonical_labeling

rng = random.Random(1)

# A ternary [8,4,3] LCD code whose only automorphisms are +I and -I.
c8 = LinearCode(FqMatrix.identity(3, 4).hstack(FqMatrix.from_strings(3, ["2001", "2212", "1100", "1012"])))
print(c8)
print("LCD:", c8.is_lcd(), " d =", c8.min_weight, " |Aut| =", automorphism_order(c8).order)

# %%
# The digraph: one vertex per codeword, two per coordinate.
g = build_graph(c8)
print(g.n_vertices, "vertices,", len(g.arcs), "arcs")
res = canonical_labeling(g)
print("search nodes:", res.nodes, " group order:", res.group_order)

# %%
# Shuffle and rescale the coordinates many times; the key never moves.
key = canonical_key(c8)
for _ in range(20):
    perm = rng.sample(range(8), 8)
    signs = [rng.choice((1, 2)) for _ in range(8)]
    image = c8.transform(perm, signs)
    assert canonical_key(image) == key
print("20 random images share the key", key.hex()[:24], "...")

# %%
# Codes with equal weight enumerators need not be equivalent; the keys
# (and here already the group orders) settle it.
a = LinearCode.from_rows(3, ["1000001", "0100011", "0011112"])
b = LinearCode.from_rows(3, ["1000001", "0100110", "0011010"])
print("same weights:", a.weight_enumerator == b.weight_enumerator, a.weight_enumerator)
print("groups:", automorphism_order(a).order, automorphism_order(b).order)
print("equivalent:", are_equivalent(a, b))
