"""Absolute nilpotent elements, x^2 = 0.

Everything is solved in the squared coordinates y_i = x_i^2 >= 0, where
x^2 = 0 becomes the linear system M^T y = 0. A solution x is recovered by
taking square roots with arbitrary signs, so families are reported as cones
of y together with "signs free on the support".

For an algebra of two permutations the system splits along the cycles
(l_1 ... l_p) of k -> tau^-1(pi(k)) into cyclic chains

    alpha_k y_{l_k} + beta_{k+1} y_{l_{k+1}} = 0,    l_{p+1} = l_1,

with alpha_k = a_pi[l_k] and beta_k = a_tau[l_k].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import EvolutionAlgebra, ZERO
from .errors import PreconditionError
from .perm import Cycle, cycle_decomposition

ONE = Fraction(1)


@dataclass(frozen=True)
class CycleChainSystem:
    cycle: Cycle
    alpha: tuple
    beta: tuple

    @property
    def p(self) -> int:
        return len(self.cycle)

    def equations(self) -> list[tuple[int, Fraction, int, Fraction]]:
        """(l_k, alpha_k, l_{k+1}, beta_{k+1}) for k = 1..p."""
        p = self.p
        return [(self.cycle[k], self.alpha[k], self.cycle[(k + 1) % p], self.beta[(k + 1) % p])
                for k in range(p)]


@dataclass(frozen=True)
class ParametricCone:
    """{sum_j t_j g_j : t_j >= 0} in y-space; generators have disjoint supports."""
    n: int
    generators: tuple = ()
    zero_indices: tuple = ()

    @property
    def free_params(self) -> int:
        return len(self.generators)

    def point(self, params: Sequence) -> tuple:
        if len(params) != len(self.generators):
            raise ValueError(f"expected {len(self.generators)} parameters")
        y = [ZERO] * self.n
        for t, g in zip(params, self.generators):
            t = Fraction(t)
            if t < 0:
                raise ValueError("cone parameters must be nonnegative")
            for i, c in enumerate(g):
                y[i] += t * c
        return tuple(y)

    def contains(self, y: Sequence) -> bool:
        y = [Fraction(v) for v in y]
        covered = set()
        for g in self.generators:
            support = [i for i, c in enumerate(g) if c]
            covered.update(support)
            t = y[support[0]] / g[support[0]]
            if t < 0 or any(y[i] != t * g[i] for i in support):
                return False
        return all(not y[i] for i in range(self.n) if i not in covered)


@dataclass(frozen=True)
class CycleSolution:
    system: CycleChainSystem
    tag: str
    cone: ParametricCone
    # whether the case-by-case statement for ``tag`` matches the computed
    # cone; None where the statement is only descriptive (cases 4.x)
    claim_holds: bool | None


@dataclass(frozen=True)
class NilpotentFamily:
    n: int
    per_cycle: tuple
    total_free_params: int = field(default=0)

    @property
    def trivial_only(self) -> bool:
        return self.total_free_params == 0

    @property
    def generators(self) -> list[tuple]:
        return [g for sol in self.per_cycle for g in sol.cone.generators]

    @property
    def zero_indices(self) -> list[int]:
        return sorted(i for sol in self.per_cycle for i in sol.cone.zero_indices)

    def cone(self) -> ParametricCone:
        return ParametricCone(self.n, tuple(self.generators), tuple(self.zero_indices))


def nilpotent_system(E: EvolutionAlgebra) -> list[CycleChainSystem]:
    systems = []
    for cyc in cycle_decomposition(E.j_map):
        systems.append(CycleChainSystem(
            cyc,
            tuple(E.a_pi[l - 1] for l in cyc),
            tuple(E.a_tau[l - 1] for l in cyc),
        ))
    return systems


def classify_cycle(sys: CycleChainSystem) -> str:
    """Case label of a chain according to its zero/sign pattern.

    Labels: 1a (all coefficients nonzero, some adjacent product positive),
    1b / 1c (all adjacent products negative; 1c when the closing product
    identity holds), 2 (zeros only among the alphas, or only among the
    betas), 3 (exactly one position with both coefficients zero), 4.1
    (several such positions), 4.2 (zeros among both alphas and betas, never
    at the same position).
    """
    p, al, be = sys.p, sys.alpha, sys.beta
    if all(al) and all(be):
        prods = [al[k] * be[(k + 1) % p] for k in range(p)]
        if any(v > 0 for v in prods):
            return "1a"
        lhs = (-1) ** p
        for a in al:
            lhs *= a
        rhs = ONE
        for b in be:
            rhs *= b
        return "1c" if lhs == rhs else "1b"
    double = [k for k in range(p) if not al[k] and not be[k]]
    if not double:
        if all(be) or all(al):
            return "2"
        return "4.2"
    if len(double) == 1:
        return "3"
    return "4.1"


def _solve_chain(sys: CycleChainSystem, n: int) -> ParametricCone:
    """All y >= 0 solving the cyclic chain, by zero propagation.

    Each equation either does nothing (both coefficients zero), pins one or
    both endpoints to zero, or links y_{k+1} = r y_k with r > 0. Zeros spread
    along links; what survives is a set of linked arcs, each carrying one
    free parameter, or the whole cycle when every equation is a link, in
    which case the ratios must multiply to one around it.
    """
    p, cyc = sys.p, sys.cycle
    zero = [False] * p
    link: list[Fraction | None] = [None] * p  # ratio y_{k+1}/y_k on edge k
    if p == 1:
        s = sys.alpha[0] + sys.beta[0]
        zero[0] = bool(s)
    else:
        for k, (_, a, _, b) in enumerate(sys.equations()):
            nxt = (k + 1) % p
            if a and b:
                r = -a / b
                if r > 0:
                    link[k] = r
                else:
                    zero[k] = zero[nxt] = True
            elif a:
                zero[k] = True
            elif b:
                zero[nxt] = True
        # spread zeros across links in both directions
        changed = True
        while changed:
            changed = False
            for k in range(p):
                nxt = (k + 1) % p
                if link[k] is not None and zero[k] != zero[nxt]:
                    zero[k] = zero[nxt] = True
                    changed = True

    generators = []
    zero_idx = [cyc[k] for k in range(p) if zero[k]]
    live = [k for k in range(p) if not zero[k]]
    if live:
        if p > 1 and all(r is not None for r in link):
            prod = ONE
            for r in link:
                prod *= r
            if prod == 1:
                g = [ZERO] * n
                c = ONE
                for k in range(p):
                    g[cyc[k] - 1] = c
                    c *= link[k]
                generators.append(tuple(g))
            else:
                zero_idx = list(cyc)
        else:
            # start arcs right after a non-link edge
            starts = [k for k in live if p == 1 or link[(k - 1) % p] is None]
            for s in starts:
                g = [ZERO] * n
                k, c = s, ONE
                while True:
                    g[cyc[k] - 1] = c
                    if p == 1 or link[k] is None:
                        break
                    c *= link[k]
                    k = (k + 1) % p
                generators.append(tuple(g))
    return ParametricCone(n, tuple(generators), tuple(sorted(zero_idx)))


def _claim_holds(sys: CycleChainSystem, tag: str, cone: ParametricCone) -> bool | None:
    if tag in ("1a", "1b", "2"):
        return cone.free_params == 0
    if tag == "1c":
        return cone.free_params == 1 and all(cone.generators[0][l - 1] for l in sys.cycle)
    if tag == "3":
        k0 = next(k for k in range(sys.p) if not sys.alpha[k] and not sys.beta[k])
        l0 = sys.cycle[k0]
        return (cone.free_params == 1
                and [i + 1 for i, c in enumerate(cone.generators[0]) if c] == [l0])
    return None


def solve_cycle(sys: CycleChainSystem, n: int | None = None) -> tuple[str, ParametricCone]:
    """Case tag and exact solution cone of one chain (in y-space of dimension n)."""
    n = max(sys.cycle) if n is None else n
    return classify_cycle(sys), _solve_chain(sys, n)


def absolute_nilpotents(E: EvolutionAlgebra) -> NilpotentFamily:
    sols = []
    for sys in nilpotent_system(E):
        tag, cone = solve_cycle(sys, E.n)
        sols.append(CycleSolution(sys, tag, cone, _claim_holds(sys, tag, cone)))
    return NilpotentFamily(E.n, tuple(sols), sum(s.cone.free_params for s in sols))


# -- general structural matrices -------------------------------------------

@dataclass(frozen=True)
class ReducedSystem:
    """y_i = -sum_j d[i][j] y_j, i over basic indices, j over free ones (1-based)."""
    n: int
    rank: int
    basic_indices: tuple
    free_indices: tuple
    equation_indices: tuple
    d: tuple
    det_Mr: Fraction

    @property
    def matches_leading_order(self) -> bool:
        lead = tuple(range(1, self.rank + 1))
        return self.basic_indices == lead and self.equation_indices == lead

    def d_entry(self, i: int, j: int) -> Fraction:
        return self.d[self.basic_indices.index(i)][self.free_indices.index(j)]

    def solution(self, free_values: Sequence) -> tuple:
        y = [ZERO] * self.n
        for j, v in zip(self.free_indices, free_values):
            y[j - 1] = Fraction(v)
        for a, i in enumerate(self.basic_indices):
            y[i - 1] = -sum((self.d[a][b] * Fraction(v) for b, v in enumerate(free_values)), ZERO)
        return tuple(y)


def _rows(M) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in M]


def minor_with_row(M, basic: Sequence[int], eqs: Sequence[int], i: int | None = None,
                   j: int | None = None) -> Fraction:
    """det of M restricted to rows ``basic`` and columns ``eqs`` (1-based).

    With i and j given, row i is replaced by row j first; this is the
    transpose of the Cramer matrix for the coefficient d_ij.
    """
    rows = [j if r == i else r for r in basic]
    return linalg.det([[Fraction(M[r - 1][c - 1]) for c in eqs] for r in rows])


def rank_reduction(M) -> ReducedSystem:
    """Solve M^T y = 0 for a maximal set of basic variables.

    Basic variables are the first linearly independent rows of M (smallest
    indices first); when rows 1..r are independent this gives free indices
    r+1..n. The r equations used are the first independent columns of M
    restricted to the basic rows, which makes det_Mr nonzero.
    """
    M = _rows(M)
    n = len(M)
    pivots, free, D = linalg.solve_free(linalg.transpose(M) if n else [])
    basic = tuple(c + 1 for c in pivots)
    free_idx = tuple(c + 1 for c in free)
    if basic:
        _, eq_piv = linalg.echelon([M[i - 1] for i in basic])
        eqs = tuple(c + 1 for c in eq_piv)
    else:
        eqs = ()
    det_Mr = minor_with_row(M, basic, eqs)
    return ReducedSystem(n, len(basic), basic, free_idx, eqs,
                         tuple(tuple(r) for r in D), det_Mr)


def cramer_d(M, red: ReducedSystem) -> list[list[Fraction]]:
    """d_ij = det(M_ij^T) / det(M_r), computed from determinants."""
    return [[minor_with_row(M, red.basic_indices, red.equation_indices, i, j) / red.det_Mr
             for j in red.free_indices] for i in red.basic_indices]


@dataclass(frozen=True)
class CorankTwoVerdict:
    unique: bool
    case: str  # "i" | "ii" | "iii" when unique, "a".."e" or "unclassified" otherwise
    reduced: ReducedSystem


def corank_two_columns(red: ReducedSystem) -> list[tuple[Fraction, Fraction]]:
    return [(row[0], row[1]) for row in red.d]


def unique_trivial_rank_nm2(M) -> CorankTwoVerdict:
    """Sign criterion for a unique trivial nilpotent when rank M = n - 2.

    Writing (u, v) for the d-columns of the two free indices, the solution is
    unique iff (i) some row is (+,+); or (ii) a row (+,0) plus a row with
    v > 0, or a row (0,+) plus a row with u > 0; or (iii) rows (+,-) and
    (-,+) both exist and max over (-,+) rows of -v/u exceeds the min over
    (+,-) rows. Otherwise the failure is labelled with the first matching
    pattern a..e, or "unclassified".
    """
    red = rank_reduction(M)
    if red.rank != red.n - 2:
        raise PreconditionError(f"rank is {red.rank}, not n-2 = {red.n - 2}")
    rows = corank_two_columns(red)
    if any(u > 0 and v > 0 for u, v in rows):
        return CorankTwoVerdict(True, "i", red)
    if (any(u > 0 and v == 0 for u, v in rows) and any(v > 0 for _, v in rows)) or \
       (any(u == 0 and v > 0 for u, v in rows) and any(u > 0 for u, _ in rows)):
        return CorankTwoVerdict(True, "ii", red)
    s_ratios = [-v / u for u, v in rows if u > 0 and v < 0]
    t_ratios = [-v / u for u, v in rows if u < 0 and v > 0]
    if s_ratios and t_ratios and max(t_ratios) > min(s_ratios):
        return CorankTwoVerdict(True, "iii", red)
    return CorankTwoVerdict(False, _failure_case(rows, s_ratios, t_ratios), red)


def _failure_case(rows, s_ratios, t_ratios) -> str:
    if all(u <= 0 and v <= 0 for u, v in rows):
        return "a"
    for k, (u, v) in enumerate(rows):
        if u > 0 and v == 0 and all(rows[i][1] <= 0 for i in range(len(rows)) if i != k):
            return "b"
    for k, (u, v) in enumerate(rows):
        if u == 0 and v > 0 and all(rows[i][0] <= 0 for i in range(len(rows)) if i != k):
            return "c"
    if rows and (all(u > 0 and v < 0 for u, v in rows) or all(u < 0 and v > 0 for u, v in rows)):
        return "d"
    if s_ratios and t_ratios:
        return "e"
    return "unclassified"


def cone_oracle(red: ReducedSystem) -> bool:
    """True iff some nonzero (s, t) >= 0 gives y >= 0 on every basic index.

    Independent of the sign criterion: it tests the two axis rays, then
    intersects the admissible slope intervals for s = rho * t, rho > 0.
    """
    if len(red.free_indices) != 2:
        raise PreconditionError(f"expected 2 free indices, got {len(red.free_indices)}")
    rows = corank_two_columns(red)
    if all(u <= 0 for u, _ in rows) or all(v <= 0 for _, v in rows):
        return True
    lo, lo_strict = Fraction(0), True
    hi = None  # +infinity
    for u, v in rows:
        # need u*rho + v <= 0
        if u == 0:
            if v > 0:
                return False
        elif u > 0:
            bound = -v / u
            if hi is None or bound < hi:
                hi = bound
        else:
            bound = -v / u
            if bound > lo or (bound == lo and lo_strict):
                lo, lo_strict = bound, bound == 0
    if hi is None:
        return True
    return lo < hi or (lo == hi and not lo_strict)


@dataclass(frozen=True)
class QuickVerdict:
    condition: str  # "i" | "ii" | "iii"
    detail: dict


def quick_uniqueness(obj) -> QuickVerdict | None:
    """Sufficient tests for the trivial nilpotent being the only one.

    (i) det M != 0; (ii) rank M = n-1 and det(M_{i0,f}^T) det(M_{n-1}) > 0
    for some basic i0, f being the free index; (iii) (algebras only)
    a_pi[k] * a_tau[j_k] > 0 for every k. Returns None when none applies.
    """
    E = obj if isinstance(obj, EvolutionAlgebra) else None
    M = E.matrix if E is not None else _rows(obj)
    n = len(M)
    d = linalg.det(M)
    if d != 0:
        return QuickVerdict("i", {"det": d})
    red = rank_reduction(M)
    if red.rank == n - 1:
        f = red.free_indices[0]
        for i0 in red.basic_indices:
            dm = minor_with_row(M, red.basic_indices, red.equation_indices, i0, f)
            if dm * red.det_Mr > 0:
                return QuickVerdict("ii", {
                    "i0": i0, "free_index": f, "det_Mr": red.det_Mr, "det_Mi0f": dm,
                    "product": dm * red.det_Mr,
                    "leading_order": red.matches_leading_order,
                    "basic_indices": red.basic_indices,
                    "equation_indices": red.equation_indices,
                })
    if E is not None:
        j = E.j_map
        if all(E.a_pi[k - 1] * E.a_tau[j(k) - 1] > 0 for k in range(1, n + 1)):
            return QuickVerdict("iii", {})
    return None


def unique_trivial_quick(obj) -> bool | None:
    return True if quick_uniqueness(obj) is not None else None
