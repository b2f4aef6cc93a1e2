"""
The permutations of a long commutator
=====================================

Which permutations show up when ``[x1, x2, ..., xm]`` is expanded, and
several ways of recognising them.
"""

from leftnormed import (
    Permutation, compose, count_tm_t, enumerate_tm, format_two_row,
    is_member_block, is_member_descent, reverse_perm, tau_decomposition,
    witness,
)

# One-line form: images[i - 1] is where i goes.  Composition applies the
# right-hand factor first.
s1 = Permutation((2, 1, 3))
s2 = Permutation((3, 1, 2))
print("s2 o s1 =", compose(s2, s1))

# Both factors descend to 1 and then climb, their product does not: the
# set is not closed under composition.
for p in (s1, s2, compose(s2, s1)):
    print(p, "member:", is_member_descent(p), "block rule:", is_member_block(p))

# The whole set for m = 4, with the position of the value 1.
for p in enumerate_tm(4):
    print(p, " t =", p.images.index(1) + 1)

# Slices by the position t of the value 1 have binomial sizes.
m = 6
print([count_tm_t(m, t) for t in range(1, m + 1)], "sum", 2 ** (m - 1))

# Factorisations of one member, first into descending cycles, then into
# reverses of initial segments.
sigma = Permutation((4, 3, 1, 2, 5, 6))
print(format_two_row(sigma))
print(witness(sigma))
d = sorted(tau_decomposition(sigma))
print("tau indices", d)
print(compose(reverse_perm(6, 2), reverse_perm(6, 4)) == sigma)
