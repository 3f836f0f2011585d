"""Command-line interface.

Commands operate on JSON files: either a combined instance file
{"algebra": ..., "module": ...} or, where only the algebra is needed, a
bare algebra object.  Output is a human-readable table by default and
canonical JSON with --json.  `verify` exits 0 on success, 1 when a check
fails, 2 on malformed input or a non-rational spectrum.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .algebra import check_algebra, derived_series, is_solvable
from .errors import LieLikeError, NonSplitSpectrum
from .generate import CONSTRUCTIONS, GeneratorSpec, generate
from .modules import adjoint, check_module, plus_annihilator
from .solver import oracle_solve, solve
from .verify import EXIT_INVALID, EXIT_VIOLATION, run_verify


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _load_algebra(path: str):
    obj = _load_json(path)
    try:
        if isinstance(obj, dict) and "algebra" in obj:
            return serialize.algebra_from_json(obj["algebra"])
        return serialize.algebra_from_json(obj)
    except (LieLikeError, KeyError, ValueError, TypeError) as exc:
        print(f"error: malformed algebra in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _load_instance(path: str):
    obj = _load_json(path)
    try:
        return serialize.instance_from_json(obj)
    except (LieLikeError, KeyError, ValueError, TypeError) as exc:
        print(f"error: malformed instance in {path}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        sys.stdout.write(serialize.dumps(payload))
    else:
        for line in lines:
            print(line)


def cmd_check_algebra(args) -> int:
    L = _load_algebra(args.file)
    violations = check_algebra(L)
    payload = {
        "ok": not violations,
        "violations": [
            {
                "identity": v.identity,
                "witness": list(v.witness),
                "residual": serialize.vector_to_json(v.residual),
            }
            for v in violations
        ],
    }
    lines = [f"algebra axioms: {'ok' if not violations else 'FAILED'}"]
    lines += [
        f"  {v.identity} at (i,j,l,k,h)={v.witness}" for v in violations[:20]
    ]
    _emit(payload, args.json, lines)
    return 0 if not violations else EXIT_VIOLATION


def cmd_check_module(args) -> int:
    L, M, _ = _load_instance(args.file)
    violations = check_module(M)
    payload = {
        "ok": not violations,
        "violations": [
            {
                "axiom": v.axiom,
                "witness": list(v.witness),
                "residual": serialize.matrix_to_json(v.residual),
            }
            for v in violations
        ],
    }
    lines = [f"module axioms: {'ok' if not violations else 'FAILED'}"]
    lines += [f"  {v.axiom} at (k,h,i,j)={v.witness}" for v in violations[:20]]
    _emit(payload, args.json, lines)
    return 0 if not violations else EXIT_VIOLATION


def cmd_derived(args) -> int:
    L = _load_algebra(args.file)
    series = derived_series(L)
    solvable, depth = is_solvable(L)
    payload = {
        "dims": [sp.dim for sp in series],
        "solvable": solvable,
        "depth": depth,
        "series": [
            [serialize.vector_to_json(b) for b in sp.basis] for sp in series
        ],
    }
    lines = [f"derived series dims: {[sp.dim for sp in series]}"]
    lines.append(
        f"solvable: {'yes' if solvable else 'no'} (depth {depth})"
        if solvable
        else f"solvable: no (stabilizes after {depth} terms)"
    )
    _emit(payload, args.json, lines)
    return 0


def cmd_annihilator(args) -> int:
    L, M, _ = _load_instance(args.file)
    ann = plus_annihilator(M)
    payload = {
        "dim": ann.dim,
        "basis": [serialize.vector_to_json(b) for b in ann.basis],
    }
    lines = [f"plus annihilator: dim {ann.dim}"]
    lines += ["  " + " ".join(serialize.vector_to_json(b)) for b in ann.basis]
    _emit(payload, args.json, lines)
    return 0


def cmd_adjoint(args) -> int:
    L = _load_algebra(args.file)
    M = adjoint(L)
    text = serialize.dumps(serialize.instance_to_json(L, M))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_solve(args) -> int:
    L, M, _ = _load_instance(args.file)
    try:
        result = solve(L, M)
    except NonSplitSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    payload = serialize.result_to_json(result)
    lines = [
        "v = " + " ".join(payload["v"]),
        "phi = " + json.dumps(payload["phi"]),
        "psi = " + json.dumps(payload["psi"]),
        f"dichotomy: {result.dichotomy}",
        f"branch trace: {', '.join(result.branch_trace) or '(base case)'}",
    ]
    _emit(payload, args.json, lines)
    return 0


def cmd_oracle(args) -> int:
    L, M, _ = _load_instance(args.file)
    try:
        entries = oracle_solve(L, M)
    except NonSplitSpectrum as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    payload = {
        "entries": [
            {
                "dim": space.dim,
                "basis": [serialize.vector_to_json(b) for b in space.basis],
                **serialize.weight_to_json(w),
            }
            for space, w in entries
        ]
    }
    lines = [f"{len(entries)} maximal joint weight space(s)"]
    for space, w in entries:
        lines.append(
            f"  dim {space.dim}, phi={json.dumps([serialize.vector_to_json(r) for r in w.phi])},"
            f" psi={json.dumps([serialize.vector_to_json(r) for r in w.psi])}"
        )
    _emit(payload, args.json, lines)
    return 0


def cmd_verify(args) -> int:
    L, M, _ = _load_instance(args.file)
    report, code = run_verify(L, M)
    lines = []
    for name, info in report["checks"].items():
        lines.append(f"{name}: {'ok' if info.get('ok') else 'FAILED'}")
        if name == "solve" and info.get("ok"):
            lines.append(f"  dichotomy: {info['dichotomy']}")
    lines.append(f"verdict: {'ok' if report['ok'] else 'FAILED'}")
    _emit(report, args.json, lines)
    return code


def cmd_generate(args) -> int:
    try:
        spec = GeneratorSpec(
            args.construction, args.dim, args.s, args.seed, args.bound
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    inst = generate(spec)
    text = serialize.dumps(
        serialize.instance_to_json(inst.algebra, inst.module, inst.metadata)
    )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lielike",
        description="Exact computations with Lie-like algebras and their modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    for name, fn, helptext in [
        ("check-algebra", cmd_check_algebra, "check the defining identities"),
        ("check-module", cmd_check_module, "check the module axioms"),
        ("derived", cmd_derived, "derived series and solvability"),
        ("annihilator", cmd_annihilator, "plus annihilator of the module"),
        ("solve", cmd_solve, "find a common weight vector"),
        ("oracle", cmd_oracle, "brute-force joint weight spaces"),
        ("verify", cmd_verify, "run every check on an instance"),
    ]:
        p = add(name, fn, help=helptext)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")

    p = add("adjoint", cmd_adjoint, help="emit the adjoint module instance")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("generate", cmd_generate, help="emit a seeded instance file")
    p.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("-o", "--output")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
