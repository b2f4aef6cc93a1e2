"""
Integer free associative polynomials and the integer group ring of S_m.

Words are tuples of variable indices, so ``(3, 2, 1)`` stands for
``x3 x2 x1``.  Group-ring products extend ``compose`` bilinearly, keeping the
left-action convention of :mod:`leftnormed.permutations`.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping

from .permutations import (
    Permutation, compose, descending_cycle, identity, reverse_perm,
)
from .tm_set import enumerate_tm, sign

__all__ = [
    "NCPolynomial", "GroupAlgebraElement", "variable", "nc_add", "nc_sub",
    "nc_mul", "commutator", "commutator_recursive", "commutator_via_tm",
    "ga_one", "ga_add", "ga_sub", "ga_mul", "vm_definition", "vm_cycles",
    "vm_tau", "vm_cycles_descending", "apply_ga_to_word",
]


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class NCPolynomial:
    """A finite integer combination of words in the free associative algebra."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        self.terms = _clean({tuple(w): int(c) for w, c in (terms or {}).items()})

    def __add__(self, other):
        return nc_add(self, other)

    def __sub__(self, other):
        return nc_sub(self, other)

    def __mul__(self, other):
        return nc_mul(self, other)

    def __neg__(self):
        return NCPolynomial({w: -c for w, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def to_records(self) -> list[dict]:
        return [{"word": list(w), "coeff": c} for w, c in self.sorted_terms()]

    def __str__(self):
        """Signed monomials in lexicographic word order, e.g. ``+ x1 x2 - x2 x1``."""
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mag = abs(c)
            body = " ".join(f"x{i}" for i in w) or "1"
            parts.append(("+ " if c > 0 else "- ") + (f"{mag} " if mag != 1 else "") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"NCPolynomial({dict(self.sorted_terms())!r})"


def variable(i: int) -> NCPolynomial:
    return NCPolynomial({(i,): 1})


def nc_add(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    out = defaultdict(int, p.terms)
    for w, c in q.terms.items():
        out[w] += c
    return NCPolynomial(out)


def nc_sub(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    out = defaultdict(int, p.terms)
    for w, c in q.terms.items():
        out[w] -= c
    return NCPolynomial(out)


def nc_mul(p: NCPolynomial, q: NCPolynomial) -> NCPolynomial:
    out = defaultdict(int)
    for w1, c1 in p.terms.items():
        for w2, c2 in q.terms.items():
            out[w1 + w2] += c1 * c2
    return NCPolynomial(out)


def commutator(p, q):
    """``p q - q p`` for anything with ``*`` and ``-``."""
    return p * q - q * p


def commutator_recursive(m: int) -> NCPolynomial:
    """
    Expand the left-normed bracket ``[x1, ..., xm] = [[x1, ..., x(m-1)], xm]``.

    >>> print(commutator_recursive(2))
    + x1 x2 - x2 x1
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    result = variable(1)
    for i in range(2, m + 1):
        result = commutator(result, variable(i))
    return result


def commutator_via_tm(m: int) -> NCPolynomial:
    """The same bracket, summed directly over T_m with signs."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    return NCPolynomial({s.images: sign(s) for s in enumerate_tm(m)})


class GroupAlgebraElement:
    """An integer combination of permutations of one fixed degree."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, int] | None = None):
        self.degree = degree
        terms = _clean(dict(terms or {}))
        for p in terms:
            if p.degree != degree:
                raise ValueError(f"term {p} has degree {p.degree}, expected {degree}")
        self.terms = terms

    @classmethod
    def from_perm(cls, p: Permutation, coeff: int = 1) -> GroupAlgebraElement:
        return cls(p.degree, {p: coeff})

    def _same_degree(self, other):
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other):
        return ga_add(self, other)

    def __sub__(self, other):
        return ga_sub(self, other)

    def __mul__(self, other):
        return ga_mul(self, other)

    def __neg__(self):
        return GroupAlgebraElement(self.degree, {p: -c for p, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def sorted_terms(self) -> list[tuple[Permutation, int]]:
        return sorted(self.terms.items())

    def to_records(self) -> list[dict]:
        return [{"perm": str(p), "coeff": c} for p, c in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        return " ".join(
            ("+ " if c > 0 else "- ") + (f"{abs(c)}*" if abs(c) != 1 else "") + f"[{p}]"
            for p, c in self.sorted_terms()
        )

    def __repr__(self):
        return f"GroupAlgebraElement({self.degree}, {dict(self.sorted_terms())!r})"


def ga_one(m: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_perm(identity(m))


def ga_add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    a._same_degree(b)
    out = defaultdict(int, a.terms)
    for p, c in b.terms.items():
        out[p] += c
    return GroupAlgebraElement(a.degree, out)


def ga_sub(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return ga_add(a, -b)


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    a._same_degree(b)
    out = defaultdict(int)
    for p, c1 in a.terms.items():
        for q, c2 in b.terms.items():
            out[compose(p, q)] += c1 * c2
    return GroupAlgebraElement(a.degree, out)


def _product(m: int, factors: Iterable[GroupAlgebraElement]) -> GroupAlgebraElement:
    result = ga_one(m)
    for f in factors:
        result = ga_mul(result, f)
    return result


def vm_definition(m: int) -> GroupAlgebraElement:
    """``v_m``: every member of T_m with its commutator sign."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    return GroupAlgebraElement(m, {s: sign(s) for s in enumerate_tm(m)})


def vm_cycles(m: int) -> GroupAlgebraElement:
    """
    ``v_m`` as ``(1 - (2 1))(1 - (3 2 1)) ... (1 - (m ... 1))``.

    Under the inner-first composition the short cycles must stand on the
    left, as in the cycle factorization of a single member of T_m; the
    descending ordering of the factors does not reproduce ``v_m`` here.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    one = ga_one(m)
    return _product(m, (one - GroupAlgebraElement.from_perm(descending_cycle(m, i))
                        for i in range(2, m + 1)))


def vm_tau(m: int) -> GroupAlgebraElement:
    """``v_m`` as ``(1 - tau_2)(1 + tau_3) ... (1 - (-1)^m tau_m)``."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    one = ga_one(m)
    return _product(m, (one - GroupAlgebraElement.from_perm(reverse_perm(m, i), (-1) ** i)
                        for i in range(2, m + 1)))


def vm_cycles_descending(m: int) -> GroupAlgebraElement:
    """The cycle product with the long cycle leftmost; kept to document that it differs from ``v_m``."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    one = ga_one(m)
    return _product(m, (one - GroupAlgebraElement.from_perm(descending_cycle(m, i))
                        for i in range(m, 1, -1)))


def apply_ga_to_word(a: GroupAlgebraElement) -> NCPolynomial:
    """Send each ``sigma`` to the word ``x_sigma(1) ... x_sigma(m)`` and extend linearly."""
    return NCPolynomial({p.images: c for p, c in a.terms.items()})
