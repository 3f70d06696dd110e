import itertools
import random
from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from evoalg import (PreconditionError, build_algebra, idempotent_system, idempotents_2d,
                    square, uniform_idempotent, verify_idempotent)
from evoalg.idempotent import Quartic2D, cardano_data, quartic_for

from oracles import algebras, cubic_real_roots, horner


def two_dim(a, b, c, d, swap=False):
    """pi = (1 2), tau = identity with a = a12, b = a22, c = a21, d = a11."""
    if swap:
        return build_algebra(2, [1, 2], [2, 1], [d, b], [a, c])
    return build_algebra(2, [2, 1], [1, 2], [a, c], [d, b])


def all_ones():
    return two_dim(1, 1, 1, 1)


def test_two_dimensional_system_display():
    E = two_dim(2, 3, 5, 7)
    eqs = idempotent_system(E)
    assert [eq.render() for eq in eqs] == ["a_1,2*x1^2 + a_2,2*x2^2 = x2",
                                           "a_2,1*x2^2 + a_1,1*x1^2 = x1"]
    assert [eq.render(symbolic=False) for eq in eqs] == ["2*x1^2 + 3*x2^2 = x2",
                                                         "5*x2^2 + 7*x1^2 = x1"]


def test_system_right_sides_follow_pi():
    E = build_algebra(4, [1, 3, 4, 2], [4, 2, 1, 3], [1] * 4, [1] * 4)
    eqs = idempotent_system(E)
    assert [eq.rhs_index for eq in eqs] == [1, 3, 4, 2]


@given(st.data())
def test_system_residuals_equal_square_minus_x(data):
    E = data.draw(algebras(max_n=5))
    x = data.draw(st.lists(st.fractions(-5, 5, max_denominator=6), min_size=E.n, max_size=E.n))
    sq = square(E, tuple(x))
    for eq in idempotent_system(E):
        assert eq.residual(x) == sq[eq.rhs_index - 1] - x[eq.rhs_index - 1]


def test_uniform_point():
    assert uniform_idempotent(all_ones()) == (Fr(1, 2), Fr(1, 2))
    assert uniform_idempotent(two_dim(1, 2, 1, 1)) is None
    assert uniform_idempotent(two_dim(1, -1, -1, 1)) is None


@given(algebras(max_n=6))
def test_uniform_point_is_fixed(E):
    u = uniform_idempotent(E)
    if u is not None:
        assert square(E, u) == u


def test_verify_residuals():
    E = all_ones()
    assert verify_idempotent(E, (0, 0)) == 0
    assert verify_idempotent(E, (Fr(1, 2), Fr(1, 2))) == 0
    assert verify_idempotent(E, (1, 1)) == 1


def test_all_ones_points():
    data, points = idempotents_2d(all_ones())
    assert data.case_tag == "bd=ac"
    assert [(p.x, p.y, p.exact) for p in points] == [(0, 0, True), (Fr(1, 2), Fr(1, 2), True)]
    # the x = 0 branch admits only the origin: (0, 1) squares to (1, 1)
    assert verify_idempotent(all_ones(), (0, 1)) == 1


def test_orientations_agree():
    for a, b, c, d in [(1, 2, 3, 4), (-1, 2, -3, 1), (1, 1, 1, 1)]:
        _, p1 = idempotents_2d(two_dim(a, b, c, d))
        _, p2 = idempotents_2d(two_dim(a, b, c, d, swap=True))
        assert [(p.x, p.y) for p in p1] == [(p.x, p.y) for p in p2]


def test_preconditions():
    with pytest.raises(PreconditionError):
        idempotents_2d(build_algebra(3, [2, 3, 1], [1, 2, 3], [1] * 3, [1] * 3))
    with pytest.raises(PreconditionError):
        idempotents_2d(two_dim(0, 1, 1, 1))


def test_repeated_root_cases_are_exact():
    data, points = idempotents_2d(two_dim(1, -5, -3, -1))
    assert data.case_tag == "two-real"
    assert len(points) == 3 and all(p.exact for p in points)
    data, points = idempotents_2d(two_dim(-1, -3, -1, -3))
    assert data.case_tag == "triple-root"
    assert len(points) == 2 and all(p.exact for p in points)
    for p in points:
        assert verify_idempotent(two_dim(-1, -3, -1, -3), (p.x, p.y)) == 0


def check_against_oracle(a, b, c, d):
    E = two_dim(a, b, c, d)
    data, points = idempotents_2d(E)
    q = quartic_for(E)
    if q.k == 0:
        s = q.b ** 2 + q.c * q.d
        oracle = [q.c / s] if s else []
    else:
        oracle = cubic_real_roots(q.cubic)
        assert len(oracle) == data.expected_real_roots
    nonzero = points[1:]
    assert len(nonzero) == len(oracle)
    for p, r in zip(nonzero, oracle):
        assert abs(p.x - r) < Fr(1, 10**9)
        assert p.error_bound < Fr(1, 10**30)
        res = max(abs(v) for v in q.residuals(p.x, p.y))
        assert res < Fr(1, 10**12)
        if p.exact:
            assert res == 0 and horner(q.cubic, p.x) == 0 if q.k else res == 0
        # float evaluation of the original equations
        x, y = float(p.x), float(p.y)
        assert abs(a * x * x + b * y * y - y) < 1e-12 * max(1, abs(y))
        assert abs(d * x * x + c * y * y - x) < 1e-12 * max(1, abs(x))
    return data


def test_integer_grid_against_root_oracle():
    vals = [v for v in range(-3, 4) if v]
    tags = set()
    for a, b, c, d in itertools.product(vals, repeat=4):
        tags.add(check_against_oracle(a, b, c, d).case_tag)
    assert tags == {"bd=ac", "one-real", "three-real", "triple-root"}


@settings(max_examples=150, deadline=None)
@given(st.tuples(*[st.fractions(-4, 4, max_denominator=5).filter(bool)] * 4))
def test_rational_coefficients_against_root_oracle(abcd):
    check_against_oracle(*abcd)


def test_cardano_quantities():
    q = Quartic2D(Fr(1), Fr(2), Fr(3), Fr(4))
    data = cardano_data(q)
    k = q.k
    assert k == 5
    assert data.p == (3 * 3 * 4 - 4) / Fr(3 * 25)
    # depressed cubic t^3 + p t + q matches the shifted monic cubic
    shift = 2 * q.b / (3 * k)
    rng = random.Random(0)
    for _ in range(5):
        t = Fr(rng.randint(-9, 9), rng.randint(1, 5))
        monic = horner([c / (k * k) for c in q.cubic], t + shift)
        assert monic == t ** 3 + data.p * t + data.q
