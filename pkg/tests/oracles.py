"""Independent brute-force references used by the tests."""

from itertools import permutations


def in_tm_by_definition(images):
    """Literal reading: strictly down to the value 1, strictly up afterwards."""
    t = images.index(1)
    down = images[:t + 1]
    up = images[t:]
    return (all(a > b for a, b in zip(down, down[1:]))
            and all(a < b for a, b in zip(up, up[1:])))


def tm_by_filter(m):
    return sorted(p for p in permutations(range(1, m + 1)) if in_tm_by_definition(p))


def compose_images(a, b):
    # a after b, written independently of the library
    return tuple(a[b[i] - 1] for i in range(len(a)))


def expand_bracket_by_hand(words_a, words_b):
    """[P, Q] on dict-of-words polynomials."""
    out = {}
    for wa, ca in words_a.items():
        for wb, cb in words_b.items():
            out[wa + wb] = out.get(wa + wb, 0) + ca * cb
            out[wb + wa] = out.get(wb + wa, 0) - ca * cb
    return {w: c for w, c in out.items() if c}


def orbit_images(s, members):
    """sigma s via s_{sigma^{-1}(i)}, members given as image tuples."""
    out = set()
    for p in members:
        inv = [0] * len(p)
        for i, v in enumerate(p):
            inv[v - 1] = i
        out.add(tuple(s[inv[i]] for i in range(len(p))))
    return out
