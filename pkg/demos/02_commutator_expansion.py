"""
Expanding the left-normed commutator
====================================

Two expansions of the same bracket, and the group-ring element that
encodes it.
"""

from leftnormed import (
    apply_ga_to_word, commutator_recursive, commutator_via_tm, vm_cycles,
    vm_definition, vm_tau,
)

# Nested brackets expanded literally.
for m in range(2, 5):
    print(m, commutator_recursive(m))

# The same polynomial read off T_m, with sign (-1)^(position of 1, minus 1).
for m in range(2, 10):
    p, q = commutator_recursive(m), commutator_via_tm(m)
    print(m, "terms", len(q), "equal", p == q)

# The signed sum of T_m in the integer group ring, built three ways.
for m in range(2, 8):
    d = vm_definition(m)
    print(m, "cycles", vm_cycles(m) == d, "reverses", vm_tau(m) == d)

print(vm_tau(3))
# Sending each permutation to its word recovers the bracket.
print(apply_ga_to_word(vm_definition(3)) == commutator_via_tm(3))
