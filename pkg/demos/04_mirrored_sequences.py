"""
Mirrored sequences
==================

T_m acting on sequences of symbols.  Two sequences are mirrored when their
T_m-images match up in both directions; this turns out to mean equal or
reversed.
"""

from itertools import product

from leftnormed import (
    act, classify_symbol, find_coincidence, is_special_pair, m_levels,
    mirrored_bruteforce, mirrored_fast, occurrence_index, restrict, rev,
    reverse_perm, spectrum,
)

s = tuple("AABCD")
print(act(reverse_perm(5, 5), s), rev(s))

# The brute-force search and the closed form agree everywhere we look.
bad = 0
for m in range(1, 6):
    for a, b in product(product("AB", repeat=m), repeat=2):
        bad += mirrored_bruteforce(a, b) != mirrored_fast(a, b)
print("disagreements", bad)

# Occurrence indices can tell sequences apart.
print(occurrence_index(tuple("AABCD"), ("A", "A")), occurrence_index(tuple("ABCDA"), ("A", "A")))

# Coincidences: matching runs of the first symbol at both ends.
a, b = tuple("AABCA"), tuple("AACBA")
c = find_coincidence(a, b)
print(c, restrict(a, c), restrict(b, c))

# Two-symbol sequences: run lengths and the level towers built from them.
x, y = tuple("AAABBBAAAB"), tuple("AAABAAABBB")
print(spectrum(x, "A", "B").runs, spectrum(y, "A", "B").runs)
for seq in (x, y):
    print([v for v, _ in m_levels(seq, "A", "B")], [v for v, _ in m_levels(seq, "B", "A")])

# A special pair that is still not mirrored.
a, b = tuple("ABCDC"), tuple("ADCBC")
print({sym: classify_symbol(a, b, sym) for sym in "ABCD"})
print("special", is_special_pair(a, b), "mirrored", mirrored_bruteforce(a, b))
