"""Weight functions (characters) of the form sigma(x) = w * x_k."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import EvolutionAlgebra, basis_vector, multiply
from .perm import inverse

PI_FIXED = "pi-fixed"
TAU_FIXED = "tau-fixed"
BOTH_FIXED = "both-fixed"


@dataclass(frozen=True)
class WeightFunction:
    k0: int
    weight: Fraction
    case_tag: str

    def __call__(self, x) -> Fraction:
        return self.weight * x[self.k0 - 1]


def weight_functions(E: EvolutionAlgebra) -> list[WeightFunction]:
    """All coordinate weight functions, one per qualifying fixed point.

    A fixed point k of exactly one of the permutations qualifies when its own
    coefficient is nonzero and the coefficient feeding e_k through the other
    permutation vanishes. A common fixed point qualifies when the summed
    diagonal entry a_pi[k] + a_tau[k] is nonzero; its column of the
    structural matrix has no other entry, so nothing else is needed.
    """
    pi_inv, tau_inv = inverse(E.pi), inverse(E.tau)
    found = []
    for k in range(1, E.n + 1):
        p_fix, t_fix = E.pi(k) == k, E.tau(k) == k
        if p_fix and t_fix:
            w = E.a_pi[k - 1] + E.a_tau[k - 1]
            if w:
                found.append(WeightFunction(k, w, BOTH_FIXED))
        elif p_fix:
            w = E.a_pi[k - 1]
            if w and not E.a_tau[tau_inv(k) - 1]:
                found.append(WeightFunction(k, w, PI_FIXED))
        elif t_fix:
            w = E.a_tau[k - 1]
            if w and not E.a_pi[pi_inv(k) - 1]:
                found.append(WeightFunction(k, w, TAU_FIXED))
    return found


def is_baric(E: EvolutionAlgebra) -> bool:
    return bool(weight_functions(E))


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def verify_character(E: EvolutionAlgebra, sigma: WeightFunction, samples: int = 0,
                     seed: int | None = 0) -> bool:
    """Exact check that sigma is a nonzero multiplicative linear form.

    Every basis pair is tested (which already suffices by bilinearity), then
    ``samples`` random rational pairs drawn with ``seed``.
    """
    if not sigma.weight or not 1 <= sigma.k0 <= E.n:
        return False
    basis = [basis_vector(E.n, i) for i in range(1, E.n + 1)]
    on_basis = [sigma(b) for b in basis]
    for i in range(E.n):
        for j in range(i, E.n):
            if sigma(multiply(E, basis[i], basis[j])) != on_basis[i] * on_basis[j]:
                return False
    if samples <= 0:
        return True
    rng = random.Random(seed)
    for _ in range(samples):
        x = tuple(_random_rational(rng) for _ in range(E.n))
        y = tuple(_random_rational(rng) for _ in range(E.n))
        if sigma(multiply(E, x, y)) != sigma(x) * sigma(y):
            return False
    return True
