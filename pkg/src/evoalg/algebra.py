"""Evolution algebras defined by two permutations.

The natural basis e_1..e_n multiplies as

    e_i * e_j = 0                                   (i != j)
    e_i * e_i = a_pi[i] e_{pi(i)} + a_tau[i] e_{tau(i)}

All scalars are ``fractions.Fraction``; elements are plain tuples of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from .errors import EqualPermutationsError, InvalidAlgebraError
from .perm import Permutation, compose, inverse

RationalLike = Union[int, str, Fraction]
Element = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[tuple[Fraction, ...], ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact scalar {value!r}")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot read {value!r} as a rational")


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vector(values: Sequence[RationalLike]) -> Element:
    return tuple(as_rational(v) for v in values)


def basis_vector(n: int, i: int) -> Element:
    """e_i with 1-based i."""
    return tuple(ONE if k == i else ZERO for k in range(1, n + 1))


def zero_vector(n: int) -> Element:
    return (ZERO,) * n


@dataclass(frozen=True, eq=True)
class EvolutionAlgebra:
    n: int
    pi: Permutation
    tau: Permutation
    a_pi: tuple
    a_tau: tuple

    @cached_property
    def matrix(self) -> Matrix:
        return structural_matrix(self)

    @cached_property
    def j_map(self) -> Permutation:
        return j_map(self)

    def coefficient(self, i: int, j: int) -> Fraction:
        """Structural constant a_ij (entry of the assembled matrix)."""
        return self.matrix[i - 1][j - 1]

    def __repr__(self) -> str:
        return (f"EvolutionAlgebra(n={self.n}, pi={list(self.pi.image)}, "
                f"tau={list(self.tau.image)}, "
                f"a_pi={[fmt_rational(a) for a in self.a_pi]}, "
                f"a_tau={[fmt_rational(a) for a in self.a_tau]})")


def build_algebra(n: int, pi, tau, a_pi: Sequence[RationalLike],
                  a_tau: Sequence[RationalLike], *,
                  allow_equal: bool = False) -> EvolutionAlgebra:
    """Validate and assemble an algebra.

    ``pi`` and ``tau`` may be Permutations or 1-based image sequences.
    ``allow_equal`` admits pi == tau, which only arises for direct-sum
    components; everything user-facing keeps the default.
    """
    pi = pi if isinstance(pi, Permutation) else Permutation(pi)
    tau = tau if isinstance(tau, Permutation) else Permutation(tau)
    if n < 0:
        raise InvalidAlgebraError(f"dimension must be nonnegative, got {n}")
    for name, obj in (("pi", pi), ("tau", tau)):
        if obj.n != n:
            raise InvalidAlgebraError(f"{name} has degree {obj.n}, expected {n}")
    for name, seq in (("a_pi", a_pi), ("a_tau", a_tau)):
        if len(seq) != n:
            raise InvalidAlgebraError(f"{name} has length {len(seq)}, expected {n}")
    if n > 0 and pi == tau and not allow_equal:
        raise EqualPermutationsError(
            "pi and tau must differ as permutations (pi == tau is excluded)")
    return EvolutionAlgebra(n, pi, tau, vector(a_pi), vector(a_tau))


def empty_algebra() -> EvolutionAlgebra:
    return build_algebra(0, (), (), (), ())


def structural_matrix(E: EvolutionAlgebra) -> Matrix:
    rows = []
    for i in range(1, E.n + 1):
        row = [ZERO] * E.n
        row[E.pi(i) - 1] += E.a_pi[i - 1]
        row[E.tau(i) - 1] += E.a_tau[i - 1]
        rows.append(tuple(row))
    return tuple(rows)


def j_map(E: EvolutionAlgebra) -> Permutation:
    """k -> tau^-1(pi(k)); its cycles index the nilpotency chains."""
    return compose(inverse(E.tau), E.pi)


def _check_len(E: EvolutionAlgebra, *xs: Element) -> None:
    for x in xs:
        if len(x) != E.n:
            raise ValueError(f"element of length {len(x)} in a {E.n}-dimensional algebra")


def multiply(E: EvolutionAlgebra, x: Element, y: Element) -> Element:
    """(x y)_j = sum_i a_ij x_i y_i, computed from the two nonzero entries per row."""
    _check_len(E, x, y)
    out = [ZERO] * E.n
    for i in range(E.n):
        if not (x[i] and y[i]):
            continue
        xy = x[i] * y[i]
        if xy:
            out[E.pi.image[i] - 1] += E.a_pi[i] * xy
            out[E.tau.image[i] - 1] += E.a_tau[i] * xy
    return tuple(out)


def square(E: EvolutionAlgebra, x: Element) -> Element:
    """The evolution operator V(x) = x^2."""
    return multiply(E, x, x)


def matrix_multiply(M: Matrix, x: Element, y: Element) -> Element:
    """Product in the general evolution algebra with structural matrix M."""
    n = len(M)
    return tuple(sum((M[i][j] * x[i] * y[i] for i in range(n)), ZERO) for j in range(n))


def direct_sum(E1: EvolutionAlgebra, E2: EvolutionAlgebra) -> EvolutionAlgebra:
    """Block sum; E2's basis indices are shifted by E1.n."""
    s = E1.n
    pi = E1.pi.image + tuple(v + s for v in E2.pi.image)
    tau = E1.tau.image + tuple(v + s for v in E2.tau.image)
    return build_algebra(E1.n + E2.n, pi, tau, E1.a_pi + E2.a_pi, E1.a_tau + E2.a_tau,
                         allow_equal=True)
