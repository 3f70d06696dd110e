import itertools
import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings

from evoalg import (BasisMap, Permutation, PreconditionError, build_algebra,
                    canonical_cycle_form, compose, conjugate_iso, conjugator, decompose,
                    direct_sum, inverse, reverse_cycle_form, to_A_n, verify_isomorphism)
from evoalg.iso import a_n_condition_failures, all_ones_algebra, pullback_coefficients
from evoalg.perm import cycle_type

from oracles import algebras, matrix_product, table_matrix


def brute_iso(f, E1, E2):
    """Check f(xy) = f(x) f(y) on basis pairs through the raw structure tables."""
    n = E1.n
    M1 = table_matrix(n, E1.pi.image, E1.tau.image, E1.a_pi, E1.a_tau)
    M2 = table_matrix(n, E2.pi.image, E2.tau.image, E2.a_pi, E2.a_tau)

    def image(x):
        out = [Fr(0)] * n
        for i, v in enumerate(x):
            out[f.index_map.image[i] - 1] += f.scale[i] * v
        return out

    basis = [[Fr(int(k == i)) for k in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = image(matrix_product(M1, basis[i], basis[j]))
            rhs = list(matrix_product(M2, image(basis[i]), image(basis[j])))
            if lhs != rhs:
                return False
    return True


def test_identity_map():
    E = build_algebra(3, [2, 3, 1], [1, 2, 3], [1, 2, 3], [4, 5, 6])
    assert verify_isomorphism(BasisMap.relabel(Permutation.identity(3)), E, E)


def test_canonical_form_three_cycle():
    # pi = (1 3 2): basis order 1, 3, 2
    E = build_algebra(3, [3, 1, 2], [1, 2, 3], [2, 3, 5], [7, 11, 13])
    target, f = canonical_cycle_form(E)
    assert target.pi.image == (2, 3, 1) and target.tau.is_identity()
    assert target.a_pi == (2, 5, 3) and target.a_tau == (7, 13, 11)
    assert f.index_map.image == (1, 3, 2)
    assert brute_iso(f, E, target)


def test_canonical_form_already_standard():
    E = build_algebra(4, [2, 3, 4, 1], [1, 2, 3, 4], [1, 2, 3, 4], [1, 1, 1, 1])
    target, f = canonical_cycle_form(E)
    assert f.index_map.is_identity() and target == E


def test_canonical_form_preconditions():
    with pytest.raises(PreconditionError):
        canonical_cycle_form(build_algebra(3, [1, 3, 2], [1, 2, 3], [1] * 3, [1] * 3))
    with pytest.raises(PreconditionError):
        canonical_cycle_form(build_algebra(3, [2, 3, 1], [1, 2, 3], [1, 0, 1], [1] * 3))


def test_all_ones_target():
    A = all_ones_algebra(3)
    assert A.matrix == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
    f, target = to_A_n(A)
    assert f.index_map.is_identity() and f.scale == (1, 1, 1)


def test_to_all_ones_two_dimensional():
    # a11 = 2, a12 = 4, a22 = 1, a21 = 1/2
    E = build_algebra(2, [2, 1], [1, 2], [4, Fr(1, 2)], [2, 1])
    f, target = to_A_n(E)
    assert f.scale == (2, 1)
    assert brute_iso(f, E, target)
    bad = build_algebra(2, [2, 1], [1, 2], [3, Fr(1, 2)], [2, 1])
    assert to_A_n(bad) is None
    assert a_n_condition_failures(bad) == [1]


def test_wrap_equation_checked():
    # only the closing equation fails
    E = build_algebra(2, [2, 1], [1, 2], [4, 1], [2, 1])
    assert a_n_condition_failures(E) == [2]
    assert to_A_n(E) is None


def test_conjugate_iso_examples():
    alpha = Permutation.from_cycles(4, [(1, 2, 3)])
    beta = Permutation.from_cycles(4, [(2, 3, 4)])
    gamma = conjugator(alpha, beta)
    assert gamma.image == (2, 3, 4, 1)
    Ea = build_algebra(4, alpha, Permutation.identity(4), [2, 3, 5, 7], [11, 13, 17, 19])
    Eb = pullback_coefficients(Ea, beta, gamma)
    f = conjugate_iso(Ea, Eb, gamma)
    assert f is not None and brute_iso(f, Ea, Eb)
    Ebad = build_algebra(4, beta, Permutation.identity(4),
                         list(Eb.a_pi[:3]) + [Eb.a_pi[3] + 1], Eb.a_tau)
    assert conjugate_iso(Ea, Ebad, gamma) is None
    assert conjugate_iso(Ea, Ea, Permutation.identity(4)).index_map.is_identity()
    with pytest.raises(PreconditionError):
        conjugate_iso(Ea, Eb, Permutation.identity(4))


def test_reverse_form():
    pi = Permutation.from_cycles(4, [(1, 3, 2, 4)])
    E = build_algebra(4, pi, inverse(pi), [1] * 4, [1] * 4)
    target, f = reverse_cycle_form(E)
    assert f.index_map.image == (1, 3, 2, 4)
    assert target.pi.image == (2, 3, 4, 1)
    assert target.tau.image == (4, 1, 2, 3)
    assert brute_iso(f, E, target)
    std = Permutation([2, 3, 4, 1])
    E2 = build_algebra(4, std, inverse(std), [1, 2, 3, 4], [5, 6, 7, 8])
    assert reverse_cycle_form(E2)[1].index_map.is_identity()
    with pytest.raises(PreconditionError):
        reverse_cycle_form(build_algebra(4, std, Permutation.identity(4), [1] * 4, [1] * 4))


def test_perturbed_scale_fails():
    E = build_algebra(2, [2, 1], [1, 2], [4, Fr(1, 2)], [2, 1])
    f, target = to_A_n(E)
    assert not verify_isomorphism(BasisMap(f.index_map, (f.scale[0] * 2, f.scale[1])), E, target)


def test_decompose_two_components():
    E = build_algebra(5, Permutation.from_cycles(5, [(1, 2, 3), (4, 5)]),
                      Permutation.from_cycles(5, [(1, 3, 2), (4, 5)]), [1] * 5, [2] * 5)
    dec = decompose(E)
    assert [c.n for c in dec.components] == [3, 2]
    assert dec.embeddings == ((1, 2, 3), (4, 5))
    assert brute_iso(dec.relabeling(), E, dec.direct_sum())


def test_decompose_single_component():
    pi = Permutation([2, 3, 4, 1])
    E = build_algebra(4, pi, inverse(pi), [1, 2, 3, 4], [1, 1, 1, 1])
    dec = decompose(E)
    assert len(dec.components) == 1 and dec.components[0] == E


def test_decompose_rejects_different_supports():
    E = build_algebra(4, [3, 1, 4, 2], [2, 4, 3, 1], [-1, 1, 1, 1], [1, -1, 1, 1])
    with pytest.raises(PreconditionError):
        decompose(E)
    E0 = build_algebra(2, [2, 1], [1, 2], [1, 0], [1, 1])
    with pytest.raises(PreconditionError):
        decompose(E0)


@settings(max_examples=60, deadline=None)
@given(algebras(min_n=2, max_n=4, values=(1, 2, -1)), algebras(min_n=2, max_n=4, values=(1, 3)))
def test_decompose_round_trip(A, B):
    # components of a direct sum are recovered up to relabeling when supports align
    S = direct_sum(A, B)
    try:
        dec = decompose(S)
    except PreconditionError:
        return
    assert verify_isomorphism(dec.relabeling(), S, dec.direct_sum())
    assert brute_iso(dec.relabeling(), S, dec.direct_sum())
    assert sum(c.n for c in dec.components) == S.n


def test_exhaustive_small_cycles():
    for n in (2, 3, 4):
        cycles = [Permutation(p) for p in itertools.permutations(range(1, n + 1))
                  if cycle_type(Permutation(p)) == (n,)]
        ident = Permutation.identity(n)
        for pi in cycles:
            for co in itertools.product((1, 2), repeat=2 * n):
                E = build_algebra(n, pi, ident, co[:n], co[n:])
                target, f = canonical_cycle_form(E)
                assert verify_isomorphism(f, E, target)
                res = to_A_n(E)
                assert (res is None) == bool(a_n_condition_failures(E))
                if res is not None:
                    assert brute_iso(res[0], E, res[1])


def test_conjugation_round_trip_random():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(2, 6)
        a = list(range(1, n + 1))
        rng.shuffle(a)
        alpha = Permutation(a)
        if alpha.is_identity():
            continue
        g = list(range(1, n + 1))
        rng.shuffle(g)
        g = Permutation(g)
        beta = compose(compose(g, alpha), inverse(g))
        gamma = conjugator(alpha, beta)
        Ea = build_algebra(n, alpha, Permutation.identity(n),
                           [rng.randint(1, 5) for _ in range(n)], [rng.randint(1, 5) for _ in range(n)])
        Eb = pullback_coefficients(Ea, beta, gamma)
        f = conjugate_iso(Ea, Eb, gamma)
        assert f is not None and brute_iso(f, Ea, Eb)
