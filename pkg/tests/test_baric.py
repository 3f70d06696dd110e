import itertools
import random
from fractions import Fraction as Fr

from hypothesis import given

from evoalg import (Permutation, WeightFunction, build_algebra, compose, inverse,
                    verify_character, weight_functions)
from evoalg.baric import is_baric

from oracles import algebras, random_algebra, table_matrix


def brute_characters(E, values=range(-2, 3)):
    """All nonzero multiplicative forms with integer values in ``values`` on the basis."""
    n = E.n
    M = table_matrix(n, E.pi.image, E.tau.image, E.a_pi, E.a_tau)
    found = []
    for sigma in itertools.product(values, repeat=n):
        if not any(sigma):
            continue
        ok = all(sigma[i] * sigma[j] == 0 for i in range(n) for j in range(i + 1, n))
        ok = ok and all(sum(M[i][k] * sigma[k] for k in range(n)) == sigma[i] ** 2
                        for i in range(n))
        if ok:
            found.append(sigma)
    return found


def as_forms(weights, n):
    return sorted(tuple(w.weight if k == w.k0 else 0 for k in range(1, n + 1)) for w in weights)


def test_single_pi_fixed_point():
    # pi = (1)(2 3), tau = (1 2 3), a_tau at tau^-1(1) = 3 vanishes
    E = build_algebra(3, [1, 3, 2], [2, 3, 1], [1, 1, 1], [1, 1, 0])
    ws = weight_functions(E)
    assert [(w.k0, w.weight, w.case_tag) for w in ws] == [(1, 1, "pi-fixed")]
    x = (Fr(2), Fr(-1), Fr(5))
    assert ws[0](x) == 2
    assert verify_character(E, ws[0], samples=20)


def test_no_fixed_points_not_baric():
    E = build_algebra(3, [2, 3, 1], [3, 1, 2], [1, 1, 1], [1, 1, 1])
    assert weight_functions(E) == []
    assert not is_baric(E)


def test_tau_fixed_blocked_by_nonzero_feed():
    E = build_algebra(2, [2, 1], [1, 2], [1, 1], [1, 1])
    assert weight_functions(E) == []
    E0 = build_algebra(2, [2, 1], [1, 2], [1, 0], [1, 3])
    assert [(w.k0, w.weight, w.case_tag) for w in weight_functions(E0)] == [(1, 1, "tau-fixed")]


def test_common_fixed_point_uses_summed_diagonal():
    E = build_algebra(3, [1, 3, 2], [1, 2, 3], [2, 1, 1], [5, 1, 1])
    ws = [w for w in weight_functions(E) if w.k0 == 1]
    assert [(w.weight, w.case_tag) for w in ws] == [(7, "both-fixed")]
    E2 = build_algebra(3, [1, 3, 2], [1, 2, 3], [2, 1, 1], [-2, 1, 1])
    assert all(w.k0 != 1 for w in weight_functions(E2))


def test_zero_and_corrupted_weights_rejected():
    E = build_algebra(3, [1, 3, 2], [2, 3, 1], [1, 1, 1], [1, 1, 0])
    assert not verify_character(E, WeightFunction(1, Fr(0), "pi-fixed"))
    assert not verify_character(E, WeightFunction(1, Fr(2), "pi-fixed"))
    assert not verify_character(E, WeightFunction(9, Fr(1), "pi-fixed"))


def test_matches_brute_force_exhaustive_n2_n3():
    vals = (-1, 0, 1)
    for n in (2, 3):
        group = list(itertools.permutations(range(1, n + 1)))
        for pi, tau in itertools.product(group, group):
            if pi == tau:
                continue
            for co in itertools.product(vals, repeat=2 * n):
                E = build_algebra(n, pi, tau, co[:n], co[n:])
                assert as_forms(weight_functions(E), n) == brute_characters(E)


def test_matches_brute_force_random_n4():
    rng = random.Random(11)
    for _ in range(300):
        E = random_algebra(rng, 4, (-1, 0, 1))
        assert as_forms(weight_functions(E), 4) == brute_characters(E)


@given(algebras(max_n=6))
def test_every_weight_function_is_a_character(E):
    for w in weight_functions(E):
        assert verify_character(E, w, samples=5, seed=1)


@given(algebras(max_n=6))
def test_relabeling_equivariance(E):
    g = Permutation(list(range(2, E.n + 1)) + [1])
    gi = inverse(g)
    F = build_algebra(
        E.n, compose(compose(g, E.pi), gi), compose(compose(g, E.tau), gi),
        [E.a_pi[gi(k) - 1] for k in range(1, E.n + 1)],
        [E.a_tau[gi(k) - 1] for k in range(1, E.n + 1)])
    moved = sorted((g(w.k0), w.weight) for w in weight_functions(E))
    assert moved == sorted((w.k0, w.weight) for w in weight_functions(F))
