"""Idempotents, x^2 = x.

For general n only the equations themselves and two particular solutions
(zero and the uniform point) are produced. For n = 2 the system

    a x^2 + b y^2 = y,    d x^2 + c y^2 = x

(a = a_12, b = a_22, c = a_21, d = a_11) is solved completely: y is a
polynomial in x, and x runs over the real roots of

    (bd - ac)^2 x^4 - 2b(bd - ac) x^3 + (b^2 + cd) x^2 - c x = 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .algebra import EvolutionAlgebra, ZERO, fmt_rational, square
from .errors import PreconditionError

DEFAULT_TOL = 1e-12
# bracket width reached by the rational bisection
_REFINE_WIDTH = Fraction(1, 10**40)


@dataclass(frozen=True)
class IdempotentEquation:
    """a_pi[k] x_k^2 + a_tau[j_k] x_{j_k}^2 = x_{pi(k)}."""
    k: int
    terms: tuple  # ((coefficient, index, label), (coefficient, index, label))
    rhs_index: int

    def residual(self, x: Sequence) -> Fraction:
        lhs = sum((c * Fraction(x[i - 1]) ** 2 for c, i, _ in self.terms), ZERO)
        return lhs - Fraction(x[self.rhs_index - 1])

    def render(self, symbolic: bool = True) -> str:
        if symbolic:
            parts = [f"{label}*x{i}^2" for _, i, label in self.terms]
        else:
            parts = [f"{fmt_rational(c)}*x{i}^2" for c, i, _ in self.terms]
        return " + ".join(parts) + f" = x{self.rhs_index}"


def idempotent_system(E: EvolutionAlgebra) -> list[IdempotentEquation]:
    j = E.j_map
    eqs = []
    for k in range(1, E.n + 1):
        jk, pk = j(k), E.pi(k)
        eqs.append(IdempotentEquation(k, (
            (E.a_pi[k - 1], k, f"a_{k},{pk}"),
            (E.a_tau[jk - 1], jk, f"a_{jk},{pk}"),
        ), pk))
    return eqs


def uniform_idempotent(E: EvolutionAlgebra) -> tuple | None:
    """(1/d, ..., 1/d) when every a_pi[k] + a_tau[j_k] equals the same d != 0."""
    if E.n == 0:
        return None
    j = E.j_map
    sums = {E.a_pi[k - 1] + E.a_tau[j(k) - 1] for k in range(1, E.n + 1)}
    if len(sums) != 1:
        return None
    d = sums.pop()
    if d == 0:
        return None
    x = (1 / d,) * E.n
    if square(E, x) != x:
        raise ArithmeticError("uniform point failed exact verification")
    return x


def verify_idempotent(E: EvolutionAlgebra, x: Sequence) -> Fraction:
    """Max-norm of x^2 - x; exact for rational coordinates."""
    x = tuple(Fraction(v) for v in x)
    return max((abs(a - b) for a, b in zip(square(E, x), x)), default=ZERO)


# -- two-dimensional case --------------------------------------------------

@dataclass(frozen=True)
class Quartic2D:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @property
    def k(self) -> Fraction:
        return self.b * self.d - self.a * self.c

    @property
    def coefficients(self) -> tuple:
        """Quartic coefficients from x^4 down to x^0."""
        b, c, d, k = self.b, self.c, self.d, self.k
        return (k * k, -2 * b * k, b * b + c * d, -c, ZERO)

    @property
    def cubic(self) -> tuple:
        """The quartic divided by x."""
        return self.coefficients[:4]

    def y_of(self, x: Fraction) -> Fraction:
        return (self.b * x - self.k * x * x) / self.c

    def residuals(self, x: Fraction, y: Fraction) -> tuple:
        return (self.a * x * x + self.b * y * y - y, self.d * x * x + self.c * y * y - x)


@dataclass(frozen=True)
class CardanoData:
    p: Fraction | None
    q: Fraction | None
    delta: Fraction | None
    case_tag: str

    @property
    def expected_real_roots(self) -> int:
        """Distinct real nonzero roots of the quartic implied by the tag."""
        return {"three-real": 3, "one-real": 1, "two-real": 2, "triple-root": 1}.get(
            self.case_tag, -1)


@dataclass(frozen=True)
class IdempotentPoint:
    x: Fraction
    y: Fraction
    exact: bool
    error_bound: Fraction
    residual: Fraction
    branch: str

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


def _horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = ZERO
    for c in coeffs:
        acc = acc * x + c
    return acc


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def quartic_for(E: EvolutionAlgebra) -> Quartic2D:
    """Read (a, b, c, d) off a 2-dimensional algebra, either orientation."""
    if E.n != 2:
        raise PreconditionError(f"two-dimensional algebra required, got n={E.n}")
    swap = (2, 1)
    if E.pi.image == swap and E.tau.is_identity():
        ap, at = E.a_pi, E.a_tau
    elif E.tau.image == swap and E.pi.is_identity():
        # same multiplication with the roles of the two permutations exchanged
        ap, at = E.a_tau, E.a_pi
    else:
        raise PreconditionError("expected one transposition and one identity")
    q = Quartic2D(a=ap[0], b=at[1], c=ap[1], d=at[0])
    if not (q.a and q.b and q.c and q.d):
        raise PreconditionError("all four structural constants must be nonzero")
    return q


def cardano_data(quartic: Quartic2D) -> CardanoData:
    b, c, d, k = quartic.b, quartic.c, quartic.d, quartic.k
    if k == 0:
        return CardanoData(None, None, None, "bd=ac")
    p = (3 * c * d - b * b) / (3 * k * k)
    q = 2 * (9 * b * c * d + b ** 3) / (27 * k ** 3) - c / (k * k)
    delta = (q / 2) ** 2 + (p / 3) ** 3
    if delta < 0:
        tag = "three-real"
    elif delta > 0:
        tag = "one-real"
    elif p == 0 and q == 0:
        tag = "triple-root"
    else:
        tag = "two-real"
    return CardanoData(p, q, delta, tag)


def _closed_form_roots(quartic: Quartic2D, data: CardanoData) -> tuple[list[Fraction], list[float]]:
    """Roots of the cubic factor: (exact rational roots, float approximations)."""
    shift = 2 * quartic.b / (3 * quartic.k)
    p, q = data.p, data.q
    if data.case_tag == "triple-root":
        return [shift], []
    if data.case_tag == "two-real":
        # simple root 3q/p, double root -3q/(2p) in the depressed variable
        return [3 * q / p + shift, -3 * q / (2 * p) + shift], []
    pf, qf, sf = float(p), float(q), float(shift)
    if data.case_tag == "three-real":
        m = 2 * math.sqrt(-pf / 3)
        arg = 3 * qf / (2 * pf) * math.sqrt(-3 / pf)
        phi = math.acos(max(-1.0, min(1.0, arg)))
        return [], [m * math.cos(phi / 3 - 2 * math.pi * i / 3) + sf for i in range(3)]
    root_delta = math.sqrt(float(data.delta))
    cbrt = lambda v: math.copysign(abs(v) ** (1 / 3), v)
    return [], [cbrt(-qf / 2 + root_delta) + cbrt(-qf / 2 - root_delta) + sf]


def _refine(coeffs: Sequence[Fraction], x0: float) -> tuple[Fraction, Fraction, bool]:
    """Certified root near x0 of a polynomial with a simple root there.

    Grows a rational bracket around x0 until the exact sign changes, then
    bisects. Returns (midpoint, half-width, hit_exactly).
    """
    centre = Fraction(x0)
    h = Fraction(max(1.0, abs(x0))) / 10**9
    for _ in range(80):
        lo, hi = centre - h, centre + h
        flo, fhi = _horner(coeffs, lo), _horner(coeffs, hi)
        if flo == 0:
            return lo, ZERO, True
        if fhi == 0:
            return hi, ZERO, True
        if _sign(flo) != _sign(fhi):
            break
        h *= 4
    else:
        raise ArithmeticError(f"could not bracket a root near {x0}")
    slo = _sign(flo)
    while hi - lo > _REFINE_WIDTH:
        mid = (lo + hi) / 2
        fm = _horner(coeffs, mid)
        if fm == 0:
            return mid, ZERO, True
        if _sign(fm) == slo:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2, (hi - lo) / 2, False


def _rational_root_near(coeffs: Sequence[Fraction], x: Fraction,
                        radius: Fraction) -> Fraction | None:
    """The rational root inside [x - radius, x + radius], if there is one.

    A rational root's denominator divides the integer leading coefficient.
    """
    den = lcm(*(c.denominator for c in coeffs))
    lead = abs(coeffs[0] * den)
    cand = x.limit_denominator(max(1, int(lead)))
    if abs(cand - x) > radius:
        return None
    return cand if _horner(coeffs, cand) == 0 else None


def idempotents_2d(E: EvolutionAlgebra, tol: float = DEFAULT_TOL):
    """All real idempotents of a 2-dimensional algebra.

    Returns (CardanoData, points). With x = 0 the second equation forces
    y = 0, so the origin is the only point on that branch. Every other point
    comes from a real root x of the cubic factor with y = (b x - (bd-ac) x^2)/c.
    """
    quartic = quartic_for(E)
    data = cardano_data(quartic)
    points = [IdempotentPoint(ZERO, ZERO, True, ZERO, ZERO, "x=0")]

    roots: list[tuple[Fraction, Fraction, bool]] = []
    if data.case_tag == "bd=ac":
        s = quartic.b ** 2 + quartic.c * quartic.d
        if s != 0:
            roots.append((quartic.c / s, ZERO, True))
    else:
        exact, approx = _closed_form_roots(quartic, data)
        roots.extend((r, ZERO, True) for r in exact)
        cubic = quartic.cubic
        for x0 in approx:
            mid, err, hit = _refine(cubic, x0)
            if hit:
                roots.append((mid, ZERO, True))
                continue
            rat = _rational_root_near(cubic, mid, err)
            roots.append((rat, ZERO, True) if rat is not None else (mid, err, False))
        roots.sort(key=lambda r: r[0])
        for (x1, e1, _), (x2, e2, _) in zip(roots, roots[1:]):
            if x2 - x1 <= e1 + e2:
                raise ArithmeticError("root brackets overlap")

    for x, err, exact in roots:
        y = quartic.y_of(x)
        res = max(abs(r) for r in quartic.residuals(x, y))
        if exact:
            if res != 0:
                raise ArithmeticError(f"exact root {x} failed substitution")
            y_err = ZERO
        else:
            if float(res) >= tol:
                raise ArithmeticError(f"residual {float(res)} above tolerance at x~{float(x)}")
            slope = (abs(quartic.b) + 2 * abs(quartic.k) * (abs(x) + err)) / abs(quartic.c)
            y_err = slope * err
        points.append(IdempotentPoint(x, y, exact, max(err, y_err), res,
                                      data.case_tag))
    return data, points

