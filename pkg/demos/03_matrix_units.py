"""
A matrix-unit check
===================

Reordering the chain ``e12, e23, ..., e(m, m+1)`` kills the plain product
unless nothing moved, while the left-normed commutator survives exactly on
T_m.
"""

import random

from leftnormed import (
    all_permutations, enumerate_tm, permuted_commutator,
    permuted_product_is_nonzero, random_unit_chain, unit_chain,
)

for m in range(2, 7):
    units = unit_chain(m)
    products = [p for p in all_permutations(m) if permuted_product_is_nonzero(units, p)]
    brackets = [p for p in all_permutations(m) if permuted_commutator(units, p)]
    print(m, "nonzero products", [str(p) for p in products],
          "nonzero brackets", len(brackets), brackets == enumerate_tm(m))

# Any chain of units with a nonzero product behaves the same way.
rng = random.Random(3)
units = random_unit_chain(5, 11, rng)
print([sorted(u.entries) for u in units])
print([p for p in all_permutations(5) if permuted_commutator(units, p)] == enumerate_tm(5))
