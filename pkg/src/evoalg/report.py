"""Plain-dict reports for every analysis, ready for JSON.

Rationals are written as "p/q" strings. Approximate reals carry a decimal
string together with an explicit error bound.
"""
from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction

from . import baric, idempotent, iso, nilpotent
from .algebra import EvolutionAlgebra, fmt_rational
from .errors import PreconditionError
from .linalg import det
from .perm import Permutation, are_conjugate, conjugator

QUICK_NAMES = {
    "i": "nonzero determinant",
    "ii": "corank-one minor sign",
    "iii": "positive chain products",
}
CORANK_TWO_NAMES = {
    "i": "row with both d-entries positive",
    "ii": "positive/zero row blocked by a second row",
    "iii": "slope window empty",
    "a": "all d-entries nonpositive",
    "b": "single positive row in the first free column",
    "c": "single positive row in the second free column",
    "d": "all rows of one mixed sign pattern",
    "e": "slope window nonempty",
    "unclassified": "no listed sign pattern",
}


def q(x: Fraction) -> str:
    return fmt_rational(Fraction(x))


def qs(xs) -> list[str]:
    return [q(x) for x in xs]


def decimal_str(x: Fraction, digits: int = 25) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def algebra_section(E: EvolutionAlgebra) -> dict:
    return {
        "n": E.n,
        "pi": list(E.pi.image),
        "tau": list(E.tau.image),
        "a_pi": qs(E.a_pi),
        "a_tau": qs(E.a_tau),
        "matrix": [qs(row) for row in E.matrix],
        "j_map": list(E.j_map.image),
    }


def matrix_section(M) -> dict:
    return {"n": len(M), "matrix": [qs(row) for row in M]}


def baric_section(E: EvolutionAlgebra, samples: int = 16, seed: int = 0) -> dict:
    found = baric.weight_functions(E)
    return {
        "baric": bool(found),
        "count": len(found),
        "weight_functions": [{
            "k0": w.k0,
            "weight": q(w.weight),
            "case_tag": w.case_tag,
            "verified": baric.verify_character(E, w, samples=samples, seed=seed),
        } for w in found],
    }


def _cone_dict(cone: nilpotent.ParametricCone) -> dict:
    return {
        "zero_indices": list(cone.zero_indices),
        "generators": [qs(g) for g in cone.generators],
    }


def _reduced_dict(red: nilpotent.ReducedSystem) -> dict:
    return {
        "rank": red.rank,
        "basic_indices": list(red.basic_indices),
        "free_indices": list(red.free_indices),
        "equation_indices": list(red.equation_indices),
        "leading_order": red.matches_leading_order,
        "det_Mr": q(red.det_Mr),
        "d": [qs(row) for row in red.d],
    }


def _quick_dict(verdict) -> dict | None:
    if verdict is None:
        return None
    detail = {}
    for key, val in verdict.detail.items():
        if isinstance(val, Fraction):
            detail[key] = q(val)
        elif isinstance(val, tuple):
            detail[key] = list(val)
        else:
            detail[key] = val
    return {"condition": verdict.condition, "criterion": QUICK_NAMES[verdict.condition],
            "detail": detail}


def matrix_nilpotent_section(M) -> dict:
    """Rank-based analysis that only needs the structural matrix."""
    n = len(M)
    red = nilpotent.rank_reduction(M)
    out = {
        "det": q(det(M)),
        "reduced": _reduced_dict(red),
        "quick": _quick_dict(nilpotent.quick_uniqueness(M)),
    }
    if red.rank == n - 2:
        v = nilpotent.unique_trivial_rank_nm2(M)
        oracle_nontrivial = nilpotent.cone_oracle(red)
        out["rank_n_minus_2"] = {
            "unique": v.unique,
            "case": v.case,
            "criterion": CORANK_TWO_NAMES[v.case],
            "oracle_nontrivial": oracle_nontrivial,
            "agrees_with_oracle": v.unique != oracle_nontrivial,
        }
    else:
        out["rank_n_minus_2"] = {"skipped": f"rank is {red.rank}, not n-2 = {n - 2}"}
    return out


def nilpotent_section(E: EvolutionAlgebra) -> dict:
    fam = nilpotent.absolute_nilpotents(E)
    out = matrix_nilpotent_section(E.matrix)
    out["quick"] = _quick_dict(nilpotent.quick_uniqueness(E))
    out["per_cycle"] = [{
        "cycle": list(sol.system.cycle),
        "alpha": qs(sol.system.alpha),
        "beta": qs(sol.system.beta),
        "tag": sol.tag,
        "claim_holds": sol.claim_holds,
        "cone": _cone_dict(sol.cone),
    } for sol in fam.per_cycle]
    out["total_free_params"] = fam.total_free_params
    out["trivial_only"] = fam.trivial_only
    out["signs"] = "free on every nonzero coordinate; cones are in squared coordinates"
    if fam.trivial_only:
        quick = out["quick"]
        how = f" ({quick['criterion']})" if quick else ""
        out["verdict"] = "unique trivial" + how
    else:
        out["verdict"] = f"nontrivial family with {fam.total_free_params} free parameter(s)"
    return out


def _point_dict(pt: idempotent.IdempotentPoint) -> dict:
    d = {"branch": pt.branch, "exact": pt.exact}
    if pt.exact:
        d.update(x=q(pt.x), y=q(pt.y), residual="0", error_bound="0")
    else:
        d.update(x=decimal_str(pt.x), y=decimal_str(pt.y),
                 residual=f"{float(pt.residual):.3e}",
                 error_bound=f"{float(pt.error_bound):.3e}")
    return d


def idempotent_section(E: EvolutionAlgebra, tol: float = idempotent.DEFAULT_TOL) -> dict:
    out = {
        "system": [eq.render() for eq in idempotent.idempotent_system(E)],
        "system_numeric": [eq.render(symbolic=False) for eq in idempotent.idempotent_system(E)],
    }
    u = idempotent.uniform_idempotent(E)
    out["uniform"] = qs(u) if u is not None else None
    if E.n == 2:
        try:
            data, points = idempotent.idempotents_2d(E, tol=tol)
        except PreconditionError as exc:
            out["two_dimensional"] = {"skipped": str(exc)}
        else:
            out["two_dimensional"] = {
                "case_tag": data.case_tag,
                "p": None if data.p is None else q(data.p),
                "q": None if data.q is None else q(data.q),
                "delta": None if data.delta is None else q(data.delta),
                "points": [_point_dict(pt) for pt in points],
            }
    else:
        out["two_dimensional"] = {"skipped": f"n = {E.n}; only zero and uniform points are produced"}
    return out


def basis_map_dict(f: iso.BasisMap) -> dict:
    return {"index_map": list(f.index_map.image), "scale": qs(f.scale)}


def decomposition_section(E: EvolutionAlgebra) -> dict:
    dec = iso.decompose(E)
    return {
        "components": [algebra_section(c) for c in dec.components],
        "embeddings": [list(e) for e in dec.embeddings],
        "relabeling": basis_map_dict(dec.relabeling()),
        "verified": iso.verify_isomorphism(dec.relabeling(), E, dec.direct_sum()),
    }


def canonical_section(E: EvolutionAlgebra) -> dict:
    """Whichever single-cycle normal forms apply, with skip reasons for the rest."""
    out = {}
    try:
        target, f = iso.canonical_cycle_form(E)
        out["cycle_form"] = {"algebra": algebra_section(target), "map": basis_map_dict(f),
                             "verified": True}
    except PreconditionError as exc:
        out["cycle_form"] = {"skipped": str(exc)}
    if "skipped" not in out["cycle_form"]:
        failures = iso.a_n_condition_failures(E)
        res = iso.to_A_n(E)
        if res is None:
            out["all_ones"] = {"isomorphic": False, "failing_indices": failures,
                               "wrap_fails": E.n in failures}
        else:
            f, A = res
            out["all_ones"] = {"isomorphic": True, "map": basis_map_dict(f),
                               "target": algebra_section(A), "verified": True}
    try:
        target, f = iso.reverse_cycle_form(E)
        out["reverse_form"] = {"algebra": algebra_section(target), "map": basis_map_dict(f),
                               "verified": True}
    except PreconditionError as exc:
        out["reverse_form"] = {"skipped": str(exc)}
    return out


def iso_section(E1: EvolutionAlgebra, E2: EvolutionAlgebra,
                gamma: Permutation | None = None) -> dict:
    if E1.n != E2.n:
        raise PreconditionError("algebras have different dimensions")
    if gamma is None:
        if not are_conjugate(E1.pi, E2.pi):
            raise PreconditionError("pi permutations are not conjugate (cycle types differ)")
        gamma = conjugator(E1.pi, E2.pi)
    f = iso.conjugate_iso(E1, E2, gamma)
    out = {"gamma": list(gamma.image), "isomorphic_via_gamma": f is not None}
    if f is not None:
        out["map"] = basis_map_dict(f)
        out["verified"] = True
    return out


def analyze(E: EvolutionAlgebra, tol: float, seed: int, samples: int) -> dict:
    report = {"algebra": algebra_section(E),
              "baric": baric_section(E, samples=samples, seed=seed),
              "nilpotent": nilpotent_section(E),
              "idempotent": idempotent_section(E, tol=tol)}
    try:
        report["decomposition"] = decomposition_section(E)
    except PreconditionError as exc:
        report["decomposition"] = {"skipped": str(exc)}
    report["canonical"] = canonical_section(E)
    return report


def render_pretty(obj, indent: int = 0) -> str:
    """Indented plain-text rendering of a report."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{key}:")
                lines.append(render_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(val)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and not _flat(item):
                lines.append(f"{pad}-")
                lines.append(render_pretty(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(pad + _inline(obj))
    return "\n".join(lines)


def _flat(val) -> bool:
    return isinstance(val, list) and all(not isinstance(v, (dict, list)) for v in val)


def _inline(val) -> str:
    if isinstance(val, list):
        return "[" + ", ".join(_inline(v) for v in val) + "]"
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, dict):
        return "{}"
    return str(val)
