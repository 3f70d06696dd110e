"""Command line front end.

    evoalg <command> DOC [DOC2] [--pretty] [--tol T] [--seed S]

Documents are JSON objects with fields n, pi, tau, a_pi, a_tau (rationals
as "p/q" strings or integers), or n and matrix for a raw structural
matrix. Exit status: 0 success, 1 an analysis precondition failed, 2 the
input could not be read.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import report
from .algebra import EvolutionAlgebra, as_rational, build_algebra
from .errors import InvalidAlgebraError, PreconditionError
from .idempotent import DEFAULT_TOL
from .perm import Permutation

COMMANDS = ("baric", "nilpotent", "idempotent", "decompose", "canonical", "iso", "analyze")
ALGEBRA_FIELDS = {"n", "pi", "tau", "a_pi", "a_tau"}
OPTIONAL_FIELDS = {"name", "description", "matrix"}


class DocumentError(ValueError):
    pass


def _int_list(doc: dict, key: str, n: int) -> list[int]:
    val = doc[key]
    if not isinstance(val, list) or len(val) != n:
        raise DocumentError(f"field '{key}': expected a list of {n} integers")
    for i, v in enumerate(val):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DocumentError(f"field '{key}[{i}]': expected an integer, got {v!r}")
    return val


def _rational_list(val, where: str, n: int) -> list[Fraction]:
    if not isinstance(val, list) or len(val) != n:
        raise DocumentError(f"field '{where}': expected a list of {n} rationals")
    out = []
    for i, v in enumerate(val):
        try:
            out.append(as_rational(v))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"field '{where}[{i}]': {exc}") from None
    return out


def parse_document(text: str, source: str = "<input>"):
    """Return an EvolutionAlgebra, or a matrix (tuple of rows) for matrix-only documents."""
    if not text.strip():
        raise DocumentError(f"{source}: empty document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError(f"{source}: top level must be an object")
    unknown = set(doc) - ALGEBRA_FIELDS - OPTIONAL_FIELDS
    if unknown:
        raise DocumentError(f"{source}: unknown field(s) {sorted(unknown)}")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError(f"{source}: field 'n': expected a positive integer")
    try:
        if "pi" not in doc and "tau" not in doc and "matrix" in doc:
            rows = doc["matrix"]
            if not isinstance(rows, list) or len(rows) != n:
                raise DocumentError(f"field 'matrix': expected {n} rows")
            return tuple(tuple(_rational_list(r, f"matrix[{i}]", n)) for i, r in enumerate(rows))
        missing = ALGEBRA_FIELDS - set(doc)
        if missing:
            raise DocumentError(f"missing field(s) {sorted(missing)}")
        pi, tau = _int_list(doc, "pi", n), _int_list(doc, "tau", n)
        a_pi = _rational_list(doc["a_pi"], "a_pi", n)
        a_tau = _rational_list(doc["a_tau"], "a_tau", n)
        try:
            E = build_algebra(n, Permutation(pi), Permutation(tau), a_pi, a_tau)
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        if "matrix" in doc:
            given = tuple(tuple(_rational_list(r, f"matrix[{i}]", n))
                          for i, r in enumerate(doc["matrix"]))
            if given != E.matrix:
                raise DocumentError("field 'matrix' disagrees with the assembled structural matrix")
        return E
    except DocumentError as exc:
        if str(exc).startswith(source):
            raise
        raise DocumentError(f"{source}: {exc}") from None


def load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    return parse_document(text, path)


def _need_algebra(obj, command: str) -> EvolutionAlgebra:
    if not isinstance(obj, EvolutionAlgebra):
        raise PreconditionError(f"'{command}' needs pi/tau/a_pi/a_tau; a bare matrix only supports nilpotent")
    return obj


def run(command: str, docs: list, *, tol: float = DEFAULT_TOL, seed: int = 0,
        samples: int = 16, gamma: list | None = None) -> dict:
    first = docs[0]
    if command == "nilpotent":
        if isinstance(first, EvolutionAlgebra):
            return {"algebra": report.algebra_section(first),
                    "nilpotent": report.nilpotent_section(first)}
        return {"algebra": report.matrix_section(first),
                "nilpotent": report.matrix_nilpotent_section(first)}
    E = _need_algebra(first, command)
    if command == "baric":
        return {"algebra": report.algebra_section(E),
                "baric": report.baric_section(E, samples=samples, seed=seed)}
    if command == "idempotent":
        return {"algebra": report.algebra_section(E),
                "idempotent": report.idempotent_section(E, tol=tol)}
    if command == "decompose":
        return {"algebra": report.algebra_section(E),
                "decomposition": report.decomposition_section(E)}
    if command == "canonical":
        section = report.canonical_section(E)
        if "skipped" in section["cycle_form"] and "skipped" in section["reverse_form"]:
            raise PreconditionError("no normal form applies: "
                                    + section["cycle_form"]["skipped"] + "; "
                                    + section["reverse_form"]["skipped"])
        return {"algebra": report.algebra_section(E), "canonical": section}
    if command == "iso":
        if len(docs) != 2:
            raise PreconditionError("'iso' needs two documents")
        E2 = _need_algebra(docs[1], command)
        g = None
        if gamma is not None:
            try:
                g = Permutation(gamma)
            except ValueError as exc:
                raise DocumentError(f"--gamma: {exc}") from None
            if g.n != E.n:
                raise DocumentError(f"--gamma: degree {g.n}, expected {E.n}")
        return {"algebra": report.algebra_section(E), "other": report.algebra_section(E2),
                "iso": report.iso_section(E, E2, g)}
    if command == "analyze":
        return report.analyze(E, tol=tol, seed=seed, samples=samples)
    raise ValueError(f"unknown command {command}")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="evoalg", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("documents", nargs="+", help="algebra document(s), JSON")
    ap.add_argument("--pretty", action="store_true", help="human-readable rendering")
    ap.add_argument("--tol", type=float, default=DEFAULT_TOL,
                    help="residual tolerance for approximate idempotents")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized character checks")
    ap.add_argument("--samples", type=int, default=16,
                    help="random pairs per character check (basis pairs are always checked)")
    ap.add_argument("--gamma", help="conjugating permutation for 'iso', e.g. [2,3,4,1]")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        docs = [load(p) for p in args.documents]
        gamma = None
        if args.gamma is not None:
            try:
                gamma = json.loads(args.gamma)
            except json.JSONDecodeError:
                raise DocumentError("--gamma: expected a JSON array") from None
            if not isinstance(gamma, list):
                raise DocumentError("--gamma: expected a JSON array")
        if args.command != "iso" and len(docs) != 1:
            raise DocumentError(f"'{args.command}' takes exactly one document")
        result = run(args.command, docs, tol=args.tol, seed=args.seed,
                     samples=args.samples, gamma=gamma)
    except (DocumentError, InvalidAlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        out = {"command": args.command, "status": "precondition-failed", "error": str(exc)}
        print(report.render_pretty(out) if args.pretty else report.dumps(out))
        return 1
    result = {"command": args.command, "status": "ok", **result}
    print(report.render_pretty(result) if args.pretty else report.dumps(result))
    return 0


if __name__ == "__main__":
    sys.exit(main())
