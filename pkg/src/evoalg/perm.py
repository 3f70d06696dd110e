"""Permutations of {1..n} with 1-based indexing.

A ``Permutation`` is an immutable image table: ``p(i) == p.image[i - 1]``.
Composition follows function order, ``compose(p, q)(i) == p(q(i))``.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .errors import DegreeMismatchError, NotConjugateError

Cycle = tuple[int, ...]


class Permutation:
    __slots__ = ("_image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(int(v) for v in image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"not a permutation of 1..{len(image)}: {list(image)}")
        self._image = image

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """Build from disjoint cycles; points not mentioned are fixed."""
        image = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"bad cycle {tuple(cyc)} for degree {n}")
                seen.add(a)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                image[a - 1] = b
        return cls(image)

    @property
    def n(self) -> int:
        return len(self._image)

    @property
    def image(self) -> tuple[int, ...]:
        return self._image

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self._image):
            raise IndexError(f"{i} outside 1..{len(self._image)}")
        return self._image[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._image == other._image

    def __hash__(self) -> int:
        return hash(self._image)

    def __repr__(self) -> str:
        return f"Permutation({list(self._image)})"

    def __str__(self) -> str:
        cycles = [c for c in cycle_decomposition(self) if len(c) > 1]
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self._image, 1))

    def fixed_points(self) -> list[int]:
        return [i for i, v in enumerate(self._image, 1) if v == i]


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.n != q.n:
        raise DegreeMismatchError(f"degrees differ: {p.n} != {q.n}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    _check_degree(p, q)
    pi = p.image
    return Permutation(pi[v - 1] for v in q.image)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, v in enumerate(p.image, 1):
        inv[v - 1] = i
    return Permutation(inv)


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        raise ValueError("power expects a nonnegative exponent")
    result = Permutation.identity(p.n)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycle_decomposition(p: Permutation) -> list[Cycle]:
    """Disjoint cycles, fixed points included as 1-cycles.

    Each cycle starts at its smallest element and the list is sorted by
    that element, so the output is canonical.
    """
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p(i)
        cycles.append(tuple(cyc))
    return cycles


def cycle_type(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycle_decomposition(p)), reverse=True))


def are_conjugate(p: Permutation, q: Permutation) -> bool:
    _check_degree(p, q)
    return Counter(map(len, cycle_decomposition(p))) == Counter(map(len, cycle_decomposition(q)))


def conjugator(p: Permutation, q: Permutation) -> Permutation:
    """Return gamma with gamma * p * gamma^-1 == q.

    Cycles of both permutations are ordered by (length, smallest element)
    and matched pairwise; gamma sends the k-th entry of a cycle of ``p`` to
    the k-th entry of its partner in ``q``.
    """
    if not are_conjugate(p, q):
        raise NotConjugateError(f"{p!r} and {q!r} have different cycle types")
    key = lambda c: (len(c), c[0])
    image = [0] * p.n
    for cp, cq in zip(sorted(cycle_decomposition(p), key=key),
                      sorted(cycle_decomposition(q), key=key)):
        for a, b in zip(cp, cq):
            image[a - 1] = b
    return Permutation(image)


def is_single_cycle(p: Permutation) -> bool:
    return len(cycle_decomposition(p)) == 1


def cycle_supports(p: Permutation) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(c) for c in cycle_decomposition(p))
