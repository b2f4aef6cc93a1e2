"""
T_m acting on finite sequences, and the mirrored-pair theory built on it.

A permutation moves the entry at position ``j`` to position ``sigma(j)``, so
``act(sigma, s)[i] == s[sigma^{-1}(i)]``.  Symbols are opaque and compared by
equality only; any hashable value works, text atoms being the usual choice.

Two sequences are *mirrored* when every T_m-image of one is a T_m-image of the
other and vice versa.  That happens exactly when the sequences are equal or
reverses of each other; :func:`mirrored_bruteforce` checks the definition by
exhaustive search and :func:`mirrored_fast` uses the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from operator import itemgetter
from typing import Callable, Hashable, Iterable, NamedTuple, Sequence

from .permutations import Permutation
from .tm_set import enumerate_tm

__all__ = [
    "INFINITY", "CoincidencePair", "SpectrumSequence", "act", "rev",
    "parse_sequence", "format_sequence", "tm_orbit", "mirrored_bruteforce",
    "mirrored_fast", "mirror_witnesses", "find_coincidence", "restrict",
    "occurrence_index", "occurrence_profile", "spectrum", "e_term",
    "m_levels", "level_values", "project", "classify_symbol",
    "is_special_pair", "DEFAULT_MAX_LENGTH",
]

INFINITY = math.inf
DEFAULT_MAX_LENGTH = 16

Symbol = Hashable


def act(sigma: Permutation, s: Sequence) -> tuple:
    """
    Move the entry at position ``j`` to position ``sigma(j)``.

    >>> act(Permutation((2, 1, 3)), ("A", "B", "C"))
    ('B', 'A', 'C')
    """
    if sigma.degree != len(s):
        raise ValueError(f"permutation of degree {sigma.degree} cannot act on length {len(s)}")
    out = [None] * len(s)
    for j, v in enumerate(sigma.images):
        out[v - 1] = s[j]
    return tuple(out)


def rev(s: Sequence) -> tuple:
    return tuple(reversed(s))


def parse_sequence(text: str) -> tuple[str, ...]:
    """Split ``"A,A,B"`` into atoms."""
    atoms = tuple(a.strip() for a in text.split(","))
    if any(not a for a in atoms):
        raise ValueError(f"empty symbol in sequence {text!r}")
    return atoms


def format_sequence(s: Iterable) -> str:
    return ",".join(map(str, s))


@lru_cache(maxsize=None)
def _tm_actions(m: int) -> tuple[tuple[Permutation, Callable[[Sequence], tuple]], ...]:
    # one precompiled getter per member of T_m, reading s at sigma^{-1}(1..m)
    out = []
    for sigma in enumerate_tm(m):
        inv = [0] * m
        for j, v in enumerate(sigma.images):
            inv[v - 1] = j
        if m == 1:
            getter = lambda s: (s[0],)  # noqa: E731
        else:
            getter = itemgetter(*inv)
        out.append((sigma, getter))
    return tuple(out)


def tm_orbit(s: Sequence) -> set[tuple]:
    """All sequences ``sigma s`` with ``sigma`` in T_m."""
    if not s:
        return {()}
    return {g(s) for _, g in _tm_actions(len(s))}


def _check_pair(s: Sequence, s2: Sequence):
    if len(s) != len(s2):
        raise ValueError(f"length mismatch: {len(s)} vs {len(s2)}")


def _covers(s: Sequence, s2: Sequence) -> bool:
    # every sigma s is some sigma' s2
    targets = tm_orbit(s2)
    return all(g(s) in targets for _, g in _tm_actions(len(s)))


def mirrored_bruteforce(s: Sequence, s2: Sequence, max_length: int = DEFAULT_MAX_LENGTH) -> bool:
    """
    Decide the mirrored relation straight from its definition.

    Both quantifier directions are checked over all of T_m; each stops at the
    first image with no partner.  Sequences longer than ``max_length`` are
    refused since the work grows like ``2**m``.  Two empty sequences count
    as mirrored.
    """
    _check_pair(s, s2)
    if len(s) > max_length:
        raise ValueError(f"length {len(s)} exceeds brute-force cap {max_length}")
    if not s:
        return True
    return _covers(s, s2) and _covers(s2, s)


def mirrored_fast(s: Sequence, s2: Sequence) -> bool:
    _check_pair(s, s2)
    s, s2 = tuple(s), tuple(s2)
    return s == s2 or s == rev(s2)


def mirror_witnesses(s: Sequence, s2: Sequence, max_length: int = DEFAULT_MAX_LENGTH):
    """
    Matching partners for a mirrored pair, or ``None`` if some image has none.

    Returns ``(forward, backward)``: ``forward`` pairs each ``sigma`` with the
    first ``sigma'`` (lexicographic) such that ``sigma s == sigma' s2``;
    ``backward`` pairs each ``tau'`` with the first ``tau`` such that
    ``tau' s2 == tau s``.
    """
    _check_pair(s, s2)
    if len(s) > max_length:
        raise ValueError(f"length {len(s)} exceeds brute-force cap {max_length}")
    if not s:
        return [], []

    def partners(a, b):
        first = {}
        for sigma, g in _tm_actions(len(b)):
            first.setdefault(g(b), sigma)
        pairs = []
        for sigma, g in _tm_actions(len(a)):
            match = first.get(g(a))
            if match is None:
                return None
            pairs.append((sigma, match))
        return pairs

    forward = partners(s, s2)
    if forward is None:
        return None
    backward = partners(s2, s)
    if backward is None:
        return None
    return forward, backward


class CoincidencePair(NamedTuple):
    m1: int
    m2: int


def _run_length(s: Sequence, symbol, start: int, step: int) -> int:
    n = 0
    i = start
    while 0 <= i < len(s) and s[i] == symbol:
        n += 1
        i += step
    return n


def find_coincidence(s: Sequence, s2: Sequence) -> CoincidencePair | None:
    """
    The coincidence of ``(s, s2)``, if any.

    With ``A = s[0]``, both sequences must open with the same number ``m1`` of
    A's and close with the same number ``m2`` of A's, and the stretch in
    between must start and end with a non-A in both.  Those conditions pin
    ``(m1, m2)`` down.  A constant sequence paired with itself gives
    ``(m, 0)``, leaving an empty middle.

    >>> find_coincidence(("A", "A", "B", "C", "A"), ("A", "A", "C", "B", "A"))
    CoincidencePair(m1=2, m2=1)
    """
    _check_pair(s, s2)
    if not s:
        return None
    a = s[0]
    m = len(s)
    m1 = _run_length(s, a, 0, 1)
    if _run_length(s2, a, 0, 1) != m1:
        return None
    if m1 == m:
        return CoincidencePair(m, 0)
    m2 = _run_length(s, a, m - 1, -1)
    if _run_length(s2, a, m - 1, -1) != m2:
        return None
    return CoincidencePair(m1, m2)


def restrict(s: Sequence, c: CoincidencePair) -> tuple:
    """The stretch strictly between the ``m1`` leading and ``m2`` trailing entries."""
    m1, m2 = c
    if m1 < 0 or m2 < 0 or m1 + m2 > len(s):
        raise ValueError(f"coincidence {tuple(c)} does not fit length {len(s)}")
    return tuple(s[m1:len(s) - m2])


def occurrence_index(s: Sequence, w: Sequence) -> int | float:
    """
    The first position at which ``w`` can be made to appear in some ``sigma s``.

    Returns ``INFINITY`` when no member of T_m makes ``w`` appear at all.

    >>> occurrence_index(("A", "B", "C", "D", "A"), ("A", "A"))
    4
    """
    d, m = len(w), len(s)
    if d > m:
        raise ValueError(f"pattern of length {d} longer than sequence of length {m}")
    if m == 0:
        return 1
    w = tuple(w)
    best = INFINITY
    limit = m - d + 1  # only positions before the current best are worth scanning
    for _, g in _tm_actions(m):
        image = g(s)
        for i in range(limit):
            if image[i:i + d] == w:
                best, limit = i + 1, i
                break
        if best == 1:
            break
    return best


def occurrence_profile(s: Sequence) -> dict[tuple, int]:
    """``occurrence_index(s, w)`` for every ``w`` with a finite value, all at once."""
    m = len(s)
    profile: dict[tuple, int] = {}
    for image in tm_orbit(s):
        for i in range(m):
            for j in range(i + 1, m + 1):
                w = image[i:j]
                if profile.get(w, INFINITY) > i + 1:
                    profile[w] = i + 1
    return profile


@dataclass(frozen=True)
class SpectrumSequence:
    """Alternating run lengths of a two-symbol sequence, A-run first."""
    runs: tuple[int, ...]
    a: Symbol
    b: Symbol

    def __getitem__(self, l: int) -> int:
        """1-based entry, zero outside ``1..len(runs)``."""
        if 1 <= l <= len(self.runs):
            return self.runs[l - 1]
        return 0

    def __len__(self):
        return len(self.runs)


def spectrum(s: Sequence, a: Symbol, b: Symbol) -> SpectrumSequence:
    """
    Run lengths ``(n_1, ..., n_2t)``; ``n_1`` counts leading ``a``'s and may be 0,
    the last entry counts trailing ``b``'s and may be 0.

    >>> spectrum("AAABBBAAAB", "A", "B").runs
    (3, 3, 3, 1)
    """
    if a == b:
        raise ValueError("reference symbols must differ")
    for x in s:
        if x != a and x != b:
            raise ValueError(f"symbol {x!r} is neither {a!r} nor {b!r}")
    runs = []
    i, cur = 0, a
    while i < len(s):
        n = _run_length(s, cur, i, 1)
        runs.append(n)
        i += n
        cur = b if cur == a else a
    if len(runs) % 2:
        runs.append(0)
    return SpectrumSequence(tuple(runs), a, b)


def e_term(sigma: SpectrumSequence, i: int, j: int) -> int:
    """``Sigma(i)`` for ``j == 0``, else ``Sigma(i + j) + Sigma(i - j)`` with zero padding."""
    if not 1 <= i <= len(sigma):
        raise ValueError(f"index {i} outside 1..{len(sigma)}")
    if j < 0:
        raise ValueError("offset must be nonnegative")
    if j == 0:
        return sigma[i]
    return sigma[i + j] + sigma[i - j]


def m_levels(s: Sequence, a: Symbol, b: Symbol) -> list[tuple[int, frozenset[int]]]:
    """
    The tower ``(m^(i), I^(i))`` for reference symbol ``a``.

    Level 1 is the longest ``a``-run and the odd positions attaining it.  Each
    next level widens the view by one run on both sides of the surviving
    positions and keeps the maximisers, as long as the maximum is positive.
    The list ends with the first level whose index set is empty, which
    always has value 0.  Call with ``(b, a)`` for the ``b`` tower.

    >>> [v for v, _ in m_levels("AAABBBAAAB", "A", "B")]
    [3, 4, 3, 0]
    """
    sig = spectrum(s, a, b)
    odd = range(1, len(sig) + 1, 2)
    top = max(sig[l] for l in odd)
    idx = frozenset(l for l in odd if sig[l] == top)
    levels = [(top, idx)]
    j = 1
    while idx:
        value = max(e_term(sig, l, j) for l in idx)
        idx = frozenset(l for l in idx if value > 0 and e_term(sig, l, j) == value)
        levels.append((value, idx))
        j += 1
    return levels


def level_values(s: Sequence, a: Symbol, b: Symbol) -> tuple[int, ...]:
    """Just the numbers of :func:`m_levels`, trailing zero dropped."""
    values = [v for v, _ in m_levels(s, a, b)]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


def project(s: Sequence, keep: Iterable, replacement) -> tuple:
    """Keep the symbols in ``keep`` and overwrite every other entry with ``replacement``."""
    keep = set(keep)
    return tuple(x if x in keep else replacement for x in s)


def classify_symbol(s: Sequence, s2: Sequence, a: Symbol) -> str:
    """``"direct"``, ``"reverse"``, ``"both"`` or ``"neither"`` for symbol ``a`` of ``s``."""
    _check_pair(s, s2)
    positions = [i for i, x in enumerate(s) if x == a]
    if not positions:
        raise ValueError(f"symbol {a!r} does not occur in the first sequence")
    n = len(s2)
    direct = all(s2[i] == a for i in positions)
    reverse = all(s2[n - 1 - i] == a for i in positions)
    if direct and reverse:
        return "both"
    if direct:
        return "direct"
    if reverse:
        return "reverse"
    return "neither"


def is_special_pair(s: Sequence, s2: Sequence) -> bool:
    _check_pair(s, s2)
    return all(classify_symbol(s, s2, a) != "neither" for a in dict.fromkeys(s))

