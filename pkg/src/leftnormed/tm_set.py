"""
The set T_m of "V-shaped" permutations appearing in the long commutator.

A permutation lies in T_m when its one-line form strictly decreases down to
the value 1 and strictly increases afterwards::

    sigma(1) > sigma(2) > ... > sigma(t) = 1 < sigma(t+1) < ... < sigma(m)

The slice ``T_m^(t)`` collects the members with ``sigma(t) == 1``.  Smaller sets
are embedded into larger degrees by fixing every new point.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple

from .permutations import (
    Permutation, _trusted, compose, descending_cycle, embed,
    format_one_line, identity, inverse, reverse_perm,
)

__all__ = [
    "TmMembershipWitness", "is_member_descent", "is_member_block",
    "is_member_cycles", "is_member_tau", "witness", "recompose_witness",
    "sign", "enumerate_tm", "enumerate_tm_t", "count_tm", "count_tm_t",
    "tau_decomposition", "recompose_tau", "fixed_block_subset",
    "fixed_block_product", "tm_record", "NotInTmError",
]


class NotInTmError(ValueError):
    """Raised when an operation defined only on T_m gets an outsider."""


class TmMembershipWitness(NamedTuple):
    t: int                           # sigma(t) == 1
    r: int                           # number of leading descents, t - 1
    cycle_indices: tuple[int, ...]   # j_1 > ... > j_r > 1, j_i == sigma(i)


def is_member_descent(sigma: Permutation) -> bool:
    """True iff the descents of ``sigma`` are exactly the positions ``1..r`` for some ``r``."""
    v = sigma.images
    m = len(v)
    j = 0
    while j + 1 < m and v[j] > v[j + 1]:
        j += 1
    return all(v[k] < v[k + 1] for k in range(j, m - 1))


def is_member_block(sigma: Permutation) -> bool:
    """
    Block-growth test.

    Start from the position ``t`` of the value 1.  Whenever a window of
    consecutive positions around ``t`` holds exactly ``{1, ..., k}`` with
    ``k < m``, the value ``k + 1`` must sit directly to its left or right.
    """
    v = sigma.images
    m = len(v)
    t = v.index(1)  # 0-based
    for lo in range(t, -1, -1):
        for hi in range(t, m):
            size = hi - lo + 1
            if size >= m:
                continue
            if max(v[lo:hi + 1]) != size:
                continue
            left = lo >= 1 and v[lo - 1] == size + 1
            right = hi + 1 < m and v[hi + 1] == size + 1
            if not (left or right):
                return False
    return True


def sign(sigma: Permutation) -> int:
    """``(-1) ** (sigma^{-1}(1) - 1)``: the coefficient of ``sigma`` in the long commutator."""
    return -1 if sigma.images.index(1) % 2 else 1


def witness(sigma: Permutation) -> TmMembershipWitness:
    """
    Read off the cycle factorization ``sigma = (j_r ... 1) o ... o (j_1 ... 1)``.

    >>> witness(Permutation((4, 3, 1, 2, 5, 6)))
    TmMembershipWitness(t=3, r=2, cycle_indices=(4, 3))
    """
    if not is_member_descent(sigma):
        raise NotInTmError(f"{sigma} is not in T_{sigma.degree}")
    t = sigma.images.index(1) + 1
    return TmMembershipWitness(t, t - 1, sigma.images[:t - 1])


def recompose_witness(m: int, cycle_indices: Iterable[int]) -> Permutation:
    """Compose descending cycles, the last index outermost."""
    result = identity(m)
    for j in cycle_indices:
        result = compose(descending_cycle(m, j), result)
    return result


def is_member_cycles(sigma: Permutation) -> bool:
    """Membership through the cycle factorization: take ``j_i = sigma(i)`` before the value 1 and recompose."""
    v = sigma.images
    t = v.index(1)
    js = v[:t]
    if any(a <= b for a, b in zip(js, js[1:])):
        return False
    return recompose_witness(len(v), js) == sigma


def is_member_tau(sigma: Permutation) -> bool:
    """
    Membership through the reverse-permutation factorization.

    Peels ``tau_{sigma(1)}`` off the right while the indices keep strictly
    decreasing, then recomposes the collected factors in ascending order.
    """
    m = sigma.degree
    ident = identity(m)
    rest, last = sigma, m + 1
    found = []
    while rest != ident:
        d = rest.images[0]
        if not 1 < d < last:
            return False
        found.append(d)
        rest, last = compose(rest, reverse_perm(m, d)), d
    return recompose_tau(m, found) == sigma


@lru_cache(maxsize=None)
def _tm_images(m: int) -> tuple[tuple[int, ...], ...]:
    out = []
    rest = range(2, m + 1)
    for k in range(m):
        for down in combinations(rest, k):
            up = [x for x in rest if x not in down]
            out.append(tuple(reversed(down)) + (1,) + tuple(up))
    out.sort()
    return tuple(out)


def enumerate_tm(m: int) -> list[Permutation]:
    """All of T_m, sorted lexicographically by one-line form."""
    if m < 1:
        raise ValueError(f"invalid degree {m}")
    return [_trusted(v) for v in _tm_images(m)]


def enumerate_tm_t(m: int, t: int) -> list[Permutation]:
    if not 1 <= t <= m:
        raise ValueError(f"slice index {t} outside 1..{m}")
    return [_trusted(v) for v in _tm_images(m) if v[t - 1] == 1]


def count_tm(m: int) -> int:
    if m < 1:
        raise ValueError(f"invalid degree {m}")
    return 2 ** (m - 1)


def count_tm_t(m: int, t: int) -> int:
    # choose which t - 1 of the values 2..m come before the 1
    if not 1 <= t <= m:
        raise ValueError(f"slice index {t} outside 1..{m}")
    return comb(m - 1, t - 1)


def tau_decomposition(sigma: Permutation) -> frozenset[int]:
    """
    The unique ``D`` with ``sigma = tau_{d_1} o tau_{d_2} o ...`` over ``d_1 < d_2 < ...`` in ``D``.

    >>> sorted(tau_decomposition(Permutation((4, 3, 1, 2, 5, 6))))
    [2, 4]
    """
    if not is_member_descent(sigma):
        raise NotInTmError(f"{sigma} is not in T_{sigma.degree}")
    m = sigma.degree
    ident = identity(m)
    found = set()
    while sigma != ident:
        d = sigma.images[0]
        found.add(d)
        sigma = compose(sigma, reverse_perm(m, d))
    return frozenset(found)


def recompose_tau(m: int, indices: Iterable[int]) -> Permutation:
    result = identity(m)
    for d in sorted(set(indices)):
        if not 2 <= d <= m:
            raise ValueError(f"reverse index {d} outside 2..{m}")
        result = compose(result, reverse_perm(m, d))
    return result


def _check_blocks(m: int, m1: int, m2: int):
    if m1 < 0 or m2 < 0 or m1 + m2 > m:
        raise ValueError(f"need m1, m2 >= 0 and m1 + m2 <= m, got {m1}, {m2}, {m}")


def fixed_block_subset(m: int, m1: int, m2: int) -> list[Permutation]:
    """Members of T_m fixing the last ``m2`` points and sending ``i -> m - m2 - i + 1`` for ``i <= m1``."""
    _check_blocks(m, m1, m2)
    return [
        s for s in enumerate_tm(m)
        if all(s.images[m - i] == m - i + 1 for i in range(1, m2 + 1))
        and all(s.images[i - 1] == m - m2 - i + 1 for i in range(1, m1 + 1))
    ]


def fixed_block_product(m: int, m1: int, m2: int) -> list[Permutation]:
    """``T_{m-m1-m2} o tau_{m-m2}`` inside S_m, with ``T_0`` and ``tau_0`` read as the identity."""
    _check_blocks(m, m1, m2)
    k = m - m1 - m2
    tau = reverse_perm(m, m - m2) if m - m2 >= 1 else identity(m)
    inner = enumerate_tm(k) if k >= 1 else [identity(1)]
    return sorted(compose(embed(s, m), tau) for s in inner)


def tm_record(sigma: Permutation) -> dict:
    """Structured summary of a member of T_m."""
    return {
        "perm": format_one_line(sigma),
        "t": inverse(sigma)(1),
        "sign": sign(sigma),
        "tau_set": sorted(tau_decomposition(sigma)),
    }
