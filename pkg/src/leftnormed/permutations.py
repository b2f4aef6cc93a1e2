"""
Permutations of ``{1, ..., m}`` in one-line form, acting on the left.

``compose(a, b)`` applies ``b`` first, so ``compose(a, b)(i) == a(b(i))``.
Every other module composes through this function.

>>> compose(Permutation((3, 1, 2)), Permutation((2, 1, 3)))
Permutation((1, 3, 2))
>>> reverse_perm(6, 4)
Permutation((4, 3, 2, 1, 5, 6))
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator

__all__ = [
    "Permutation", "identity", "compose", "inverse", "reverse_perm",
    "descending_cycle", "embed", "all_permutations",
    "format_one_line", "parse_one_line", "format_two_row", "parse_two_row",
]


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{1, ..., m}``; ``images[i - 1]`` is the image of ``i``."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.images):
            raise IndexError(f"point {i} outside 1..{len(self.images)}")
        return self.images[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self):
        return f"Permutation({self.images!r})"

    def __str__(self):
        return format_one_line(self)


def _trusted(images) -> Permutation:
    # skips validation; only for images already known to be bijective
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", tuple(images))
    return p


def identity(m: int) -> Permutation:
    if m < 1:
        raise ValueError(f"invalid degree {m}")
    return _trusted(range(1, m + 1))


def compose(outer: Permutation, inner: Permutation) -> Permutation:
    """Return ``outer o inner``: ``inner`` is applied first."""
    if outer.degree != inner.degree:
        raise ValueError(f"degree mismatch: {outer.degree} vs {inner.degree}")
    a = outer.images
    return _trusted(a[j - 1] for j in inner.images)


def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * sigma.degree
    for i, v in enumerate(sigma.images, start=1):
        inv[v - 1] = i
    return _trusted(inv)


def reverse_perm(m: int, i: int) -> Permutation:
    """
    The ``i``-reverse permutation: reverses ``1..i`` and fixes everything above.

    >>> reverse_perm(5, 5)
    Permutation((5, 4, 3, 2, 1))
    """
    if not 1 <= i <= m:
        raise ValueError(f"reverse index {i} outside 1..{m}")
    return _trusted(list(range(i, 0, -1)) + list(range(i + 1, m + 1)))


def descending_cycle(m: int, j: int) -> Permutation:
    """
    The cycle ``(j j-1 ... 1)``, i.e. ``1 -> j`` and ``k -> k - 1`` for ``2 <= k <= j``.

    A cycle ``(a_1 a_2 ... a_k)`` sends ``a_1`` to ``a_2``.

    >>> descending_cycle(3, 3)
    Permutation((3, 1, 2))
    """
    if not 1 <= j <= m:
        raise ValueError(f"cycle length {j} outside 1..{m}")
    return _trusted([j] + list(range(1, j)) + list(range(j + 1, m + 1)))


def embed(sigma: Permutation, m: int) -> Permutation:
    """View ``sigma`` as an element of degree ``m >= degree`` fixing the new points."""
    if m < sigma.degree:
        raise ValueError(f"cannot embed degree {sigma.degree} into degree {m}")
    return _trusted(sigma.images + tuple(range(sigma.degree + 1, m + 1)))


def all_permutations(m: int) -> Iterator[Permutation]:
    """All of ``S_m`` in lexicographic one-line order."""
    if m < 1:
        raise ValueError(f"invalid degree {m}")
    for p in _itertools_permutations(range(1, m + 1)):
        yield _trusted(p)


def format_one_line(sigma: Permutation) -> str:
    return ",".join(map(str, sigma.images))


def parse_one_line(text: str) -> Permutation:
    """
    Parse ``"v1,v2,...,vm"``.

    >>> parse_one_line("4,3,1,2,5,6")
    Permutation((4, 3, 1, 2, 5, 6))
    """
    values = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"bad token {token!r} in permutation {text!r}") from None
    seen = set()
    for v in values:
        if v in seen:
            raise ValueError(f"value {v} repeated in permutation {text!r}")
        seen.add(v)
    return Permutation(tuple(values))


def format_two_row(sigma: Permutation) -> str:
    """Two aligned rows ``1 2 ... m`` over ``sigma(1) ... sigma(m)``."""
    width = len(str(sigma.degree))
    top = " ".join(str(i).rjust(width) for i in range(1, sigma.degree + 1))
    bottom = " ".join(str(v).rjust(width) for v in sigma.images)
    return f"{top}\n{bottom}"


def parse_two_row(text: str) -> Permutation:
    rows = [r.split() for r in text.strip().splitlines() if r.strip()]
    if len(rows) != 2 or len(rows[0]) != len(rows[1]):
        raise ValueError("two-row form needs two rows of equal length")
    try:
        top = [int(v) for v in rows[0]]
        bottom = [int(v) for v in rows[1]]
    except ValueError:
        raise ValueError(f"non-integer entry in two-row form {text!r}") from None
    if sorted(top) != list(range(1, len(top) + 1)):
        raise ValueError("top row must list 1..m")
    images = [0] * len(top)
    for i, v in zip(top, bottom):
        images[i - 1] = v
    return Permutation(tuple(images))
