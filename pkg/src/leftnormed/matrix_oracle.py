"""
An independent check of T_m through products of matrix units.

For a chain of strictly upper triangular units ``r_1, ..., r_m`` whose plain
product is nonzero, reordering the factors by ``sigma`` keeps the associative
product nonzero only for the identity, while the left-normed commutator of the
reordered factors survives exactly for the members of T_m.  Arithmetic is
exact and sparse.
"""

from __future__ import annotations

import random
from collections import defaultdict
from functools import reduce
from typing import Mapping, Sequence

from .commutator_algebra import NCPolynomial
from .permutations import Permutation
from .sequence_action import act

__all__ = [
    "SparseIntMatrix", "unit", "unit_chain", "random_unit_chain",
    "is_strictly_upper_unit", "permuted_product", "permuted_product_is_nonzero",
    "permuted_commutator", "evaluate_polynomial",
]


class SparseIntMatrix:
    """Square integer matrix of size ``n`` stored as ``{(row, col): value}``, 1-based."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Mapping[tuple[int, int], int] | None = None):
        self.n = n
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"entry ({i}, {j}) outside a {n}x{n} matrix")
            if v:
                clean[(i, j)] = int(v)
        self.entries = clean

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = defaultdict(int, self.entries)
        for k, v in other.entries.items():
            out[k] += v
        return SparseIntMatrix(self.n, out)

    def __sub__(self, other):
        self._check(other)
        out = defaultdict(int, self.entries)
        for k, v in other.entries.items():
            out[k] -= v
        return SparseIntMatrix(self.n, out)

    def __mul__(self, other):
        self._check(other)
        rows = defaultdict(list)
        for (k, j), v in other.entries.items():
            rows[k].append((j, v))
        out = defaultdict(int)
        for (i, k), u in self.entries.items():
            for j, v in rows.get(k, ()):
                out[(i, j)] += u * v
        return SparseIntMatrix(self.n, out)

    def scale(self, c: int) -> SparseIntMatrix:
        return SparseIntMatrix(self.n, {k: c * v for k, v in self.entries.items()})

    def __bool__(self):
        return bool(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self):
        return f"SparseIntMatrix({self.n}, {dict(sorted(self.entries.items()))!r})"


def unit(n: int, i: int, j: int) -> SparseIntMatrix:
    """The matrix unit ``e_ij`` of size ``n``."""
    return SparseIntMatrix(n, {(i, j): 1})


def unit_chain(m: int) -> list[SparseIntMatrix]:
    """``e_12, e_23, ..., e_m(m+1)`` in dimension ``m + 1``."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return [unit(m + 1, i, i + 1) for i in range(1, m + 1)]


def random_unit_chain(m: int, n: int, rng: random.Random) -> list[SparseIntMatrix]:
    """A chain ``e_{a1 a2}, e_{a2 a3}, ...`` on random increasing ``a_1 < ... < a_(m+1) <= n``."""
    if n < m + 1:
        raise ValueError(f"dimension {n} too small for a chain of {m} units")
    points = sorted(rng.sample(range(1, n + 1), m + 1))
    return [unit(n, a, b) for a, b in zip(points, points[1:])]


def is_strictly_upper_unit(x: SparseIntMatrix) -> bool:
    if len(x.entries) != 1:
        return False
    ((i, j), v), = x.entries.items()
    return v == 1 and i < j


def _reordered(units: Sequence[SparseIntMatrix], sigma: Permutation) -> tuple:
    if len(units) != sigma.degree:
        raise ValueError(f"{len(units)} units but permutation of degree {sigma.degree}")
    if len({u.n for u in units}) > 1:
        raise ValueError("units of different dimensions")
    return act(sigma, units)


def permuted_product(units: Sequence[SparseIntMatrix], sigma: Permutation) -> SparseIntMatrix:
    """``r_{sigma^-1(1)} ... r_{sigma^-1(m)}``."""
    return reduce(lambda x, y: x * y, _reordered(units, sigma))


def permuted_product_is_nonzero(units: Sequence[SparseIntMatrix], sigma: Permutation) -> bool:
    return bool(permuted_product(units, sigma))


def permuted_commutator(units: Sequence[SparseIntMatrix], sigma: Permutation) -> SparseIntMatrix:
    """Left-normed bracket ``[r_{sigma^-1(1)}, ..., r_{sigma^-1(m)}]``."""
    if sigma.degree < 2:
        raise ValueError("a commutator needs at least two entries")
    return reduce(lambda x, y: x * y - y * x, _reordered(units, sigma))


def evaluate_polynomial(p: NCPolynomial, values: Sequence[SparseIntMatrix]) -> SparseIntMatrix:
    """Substitute ``x_k := values[k - 1]`` into a free polynomial."""
    n = values[0].n
    total = SparseIntMatrix(n)
    for word, c in p.sorted_terms():
        term = reduce(lambda x, y: x * y, (values[k - 1] for k in word))
        total = total + term.scale(c)
    return total
