"""Monomial isomorphisms and direct-sum decompositions.

A ``BasisMap`` f sends e_i to scale[i] * e'_{index_map(i)}. Every
constructor here returns such a map and checks it with
``verify_isomorphism`` before handing it out.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .algebra import (ONE, EvolutionAlgebra, basis_vector, build_algebra,
                      direct_sum, empty_algebra, multiply)
from .errors import PreconditionError
from .perm import (Permutation, compose, cycle_decomposition, cycle_supports,
                   inverse, is_single_cycle)


@dataclass(frozen=True)
class BasisMap:
    index_map: Permutation
    scale: tuple

    def __post_init__(self):
        if len(self.scale) != self.index_map.n:
            raise ValueError("scale length differs from the index map degree")
        if any(s == 0 for s in self.scale):
            raise ValueError("basis map scales must be nonzero")

    @classmethod
    def relabel(cls, index_map: Permutation) -> BasisMap:
        return cls(index_map, (ONE,) * index_map.n)

    @property
    def n(self) -> int:
        return self.index_map.n

    def apply(self, x) -> tuple:
        out = [Fraction(0)] * self.n
        for i, v in enumerate(x):
            out[self.index_map.image[i] - 1] += self.scale[i] * v
        return tuple(out)


class IsomorphismError(ArithmeticError):
    """A constructed map failed exact verification (a bug, not bad input)."""


def verify_isomorphism(f: BasisMap, E1: EvolutionAlgebra, E2: EvolutionAlgebra) -> bool:
    """f(e_i e_j) == f(e_i) f(e_j) for all basis pairs, exactly."""
    if not (f.n == E1.n == E2.n):
        raise ValueError("dimension mismatch")
    images = [f.apply(basis_vector(E1.n, i)) for i in range(1, E1.n + 1)]
    for i in range(1, E1.n + 1):
        ei = basis_vector(E1.n, i)
        for j in range(i, E1.n + 1):
            ej = ei if i == j else basis_vector(E1.n, j)
            if f.apply(multiply(E1, ei, ej)) != multiply(E2, images[i - 1], images[j - 1]):
                return False
    return True


def _checked(f: BasisMap, E1: EvolutionAlgebra, E2: EvolutionAlgebra) -> BasisMap:
    if not verify_isomorphism(f, E1, E2):
        raise IsomorphismError("constructed basis map is not multiplicative")
    return f


# -- direct sums ------------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    components: tuple
    embeddings: tuple  # per component, parent indices in local basis order

    def relabeling(self) -> BasisMap:
        """Map from the parent algebra onto ``self.direct_sum()``."""
        image = [0] * sum(len(e) for e in self.embeddings)
        pos = 1
        for emb in self.embeddings:
            for parent in emb:
                image[parent - 1] = pos
                pos += 1
        return BasisMap.relabel(Permutation(image))

    def direct_sum(self) -> EvolutionAlgebra:
        return reduce(direct_sum, self.components, empty_algebra())


def _restrict(E: EvolutionAlgebra, order: tuple) -> EvolutionAlgebra:
    local = {g: m for m, g in enumerate(order, 1)}
    return build_algebra(
        len(order),
        [local[E.pi(g)] for g in order],
        [local[E.tau(g)] for g in order],
        [E.a_pi[g - 1] for g in order],
        [E.a_tau[g - 1] for g in order],
        allow_equal=True,
    )


def decompose(E: EvolutionAlgebra) -> Decomposition:
    """Split along common cycle supports of pi and tau.

    Requires a_pi[i] * a_tau[i] != 0 for all i and that pi and tau have the
    same cycle supports. Each component's basis follows its pi-cycle from
    the smallest index. Components may have equal permutations.
    """
    bad = [i for i in range(1, E.n + 1) if not (E.a_pi[i - 1] and E.a_tau[i - 1])]
    if bad:
        raise PreconditionError(f"a_pi[i]*a_tau[i] vanishes at i={bad}")
    if cycle_supports(E.pi) != cycle_supports(E.tau):
        raise PreconditionError("cycle supports of pi and tau differ")
    embeddings = tuple(cycle_decomposition(E.pi))
    components = tuple(_restrict(E, order) for order in embeddings)
    dec = Decomposition(components, embeddings)
    _checked(dec.relabeling(), E, dec.direct_sum())
    return dec


# -- single-cycle normal forms ---------------------------------------------

def _cycle_order(pi: Permutation) -> list[int]:
    """1, pi(1), pi^2(1), ..., pi^{n-1}(1)."""
    order, i = [], 1
    for _ in range(pi.n):
        order.append(i)
        i = pi(i)
    return order


def _standard_cycle(n: int) -> Permutation:
    return Permutation(list(range(2, n + 1)) + [1])


def _relabeled(E: EvolutionAlgebra, tau_new: Permutation) -> tuple[EvolutionAlgebra, BasisMap]:
    order = _cycle_order(E.pi)
    target = build_algebra(E.n, _standard_cycle(E.n), tau_new,
                           [E.a_pi[g - 1] for g in order],
                           [E.a_tau[g - 1] for g in order])
    f = BasisMap.relabel(inverse(Permutation(order)))
    return target, _checked(f, E, target)


def _require_cycle_identity(E: EvolutionAlgebra) -> None:
    if not E.tau.is_identity():
        raise PreconditionError("tau must be the identity")
    if not is_single_cycle(E.pi):
        raise PreconditionError("pi must be a single n-cycle")
    bad = [i for i in range(1, E.n + 1) if not (E.a_pi[i - 1] and E.a_tau[i - 1])]
    if bad:
        raise PreconditionError(f"a_pi[i]*a_ii vanishes at i={bad}")


def canonical_cycle_form(E: EvolutionAlgebra) -> tuple[EvolutionAlgebra, BasisMap]:
    """Relabel e'_i = e_{pi^{i-1}(1)}; pi becomes (1 2 ... n), tau stays the identity."""
    _require_cycle_identity(E)
    return _relabeled(E, Permutation.identity(E.n))


def all_ones_algebra(n: int) -> EvolutionAlgebra:
    """eta_i eta_i = eta_{i+1} + eta_i, indices mod n."""
    return build_algebra(n, _standard_cycle(n), Permutation.identity(n), [1] * n, [1] * n)


def a_n_condition_failures(E: EvolutionAlgebra) -> list[int]:
    """Indices i (1-based, cyclic) where diag_i^2 != off_i * diag_{i+1}.

    In canonical order diag_i = a_{pi^{i-1}(1) pi^{i-1}(1)} and
    off_i = a_{pi^{i-1}(1) pi^i(1)}; i = n is the wrap-around equation.
    """
    _require_cycle_identity(E)
    order = _cycle_order(E.pi)
    diag = [E.a_tau[g - 1] for g in order]
    off = [E.a_pi[g - 1] for g in order]
    n = E.n
    return [i + 1 for i in range(n) if diag[i] ** 2 != off[i] * diag[(i + 1) % n]]


def to_A_n(E: EvolutionAlgebra) -> tuple[BasisMap, EvolutionAlgebra] | None:
    """Isomorphism onto the all-ones algebra, e_{pi^{i-1}(1)} -> diag_i * eta_i."""
    if a_n_condition_failures(E):
        return None
    order = _cycle_order(E.pi)
    target = all_ones_algebra(E.n)
    f = BasisMap(inverse(Permutation(order)), tuple(E.a_tau[g - 1] for g in range(1, E.n + 1)))
    return _checked(f, E, target), target


def conjugate_iso(E_alpha: EvolutionAlgebra, E_beta: EvolutionAlgebra,
                  gamma: Permutation) -> BasisMap | None:
    """e_i -> e_{gamma(i)} when gamma alpha gamma^-1 = beta and the constants match."""
    for name, E in (("E_alpha", E_alpha), ("E_beta", E_beta)):
        if not E.tau.is_identity():
            raise PreconditionError(f"{name}: tau must be the identity")
    if compose(compose(gamma, E_alpha.pi), inverse(gamma)) != E_beta.pi:
        raise PreconditionError("gamma does not conjugate alpha to beta")
    for i in range(1, E_alpha.n + 1):
        g = gamma(i)
        if E_alpha.a_pi[i - 1] != E_beta.a_pi[g - 1] or E_alpha.a_tau[i - 1] != E_beta.a_tau[g - 1]:
            return None
    return _checked(BasisMap.relabel(gamma), E_alpha, E_beta)


def reverse_cycle_form(E: EvolutionAlgebra) -> tuple[EvolutionAlgebra, BasisMap]:
    """Relabel along pi when tau undoes pi; target pair is (1 2 ... n), (1 n n-1 ... 2)."""
    if not is_single_cycle(E.pi):
        raise PreconditionError("pi must be a single n-cycle")
    if not compose(E.tau, E.pi).is_identity():
        raise PreconditionError("tau composed with pi is not the identity")
    bad = [i for i in range(1, E.n + 1) if not (E.a_pi[i - 1] and E.a_tau[i - 1])]
    if bad:
        raise PreconditionError(f"coefficients vanish at i={bad}")
    return _relabeled(E, inverse(_standard_cycle(E.n)))


def pullback_coefficients(E_alpha: EvolutionAlgebra, beta: Permutation, gamma: Permutation):
    """The algebra over (beta, identity) whose constants make e_i -> e_{gamma(i)} an isomorphism."""
    n = E_alpha.n
    a_pi = [None] * n
    a_tau = [None] * n
    for i in range(1, n + 1):
        a_pi[gamma(i) - 1] = E_alpha.a_pi[i - 1]
        a_tau[gamma(i) - 1] = E_alpha.a_tau[i - 1]
    return build_algebra(n, beta, Permutation.identity(n), a_pi, a_tau)

