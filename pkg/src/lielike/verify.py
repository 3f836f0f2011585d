"""Batch verification: every check composed over one instance.

The report is a plain dict so the CLI can print it as JSON or as text.
Exit code semantics: 0 all checks pass, 1 a violation was found, 2 the
input was malformed or an eigen-step left the rationals.
"""

from __future__ import annotations

from .algebra import LieLikeAlgebra, check_algebra, is_solvable
from .errors import NonSplitSpectrum
from .modules import (
    OrdinaryModule,
    check_derived_identities,
    check_module,
    is_submodule,
    plus_annihilator,
)
from .serialize import result_to_json, vector_to_json
from .solver import (
    DICHOTOMY_VIOLATION,
    oracle_solve,
    solve,
    verify_weight,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2


def run_verify(L: LieLikeAlgebra, M: OrdinaryModule) -> tuple[dict, int]:
    """Run the full check pipeline; returns (report, exit_code)."""
    report: dict = {"checks": {}, "ok": False}
    checks = report["checks"]

    violations = check_algebra(L)
    checks["algebra-axioms"] = {
        "ok": not violations,
        "violations": [
            {"identity": v.identity, "witness": list(v.witness)}
            for v in violations[:10]
        ],
    }
    if violations:
        return report, EXIT_VIOLATION

    solvable, depth = is_solvable(L)
    checks["solvable"] = {"ok": solvable, "depth": depth}
    if not solvable:
        return report, EXIT_VIOLATION

    mod_violations = check_module(M)
    checks["module-axioms"] = {
        "ok": not mod_violations,
        "violations": [
            {"axiom": v.axiom, "witness": list(v.witness)}
            for v in mod_violations[:10]
        ],
    }
    if mod_violations:
        return report, EXIT_VIOLATION

    derived = check_derived_identities(M)
    checks["derived-identities"] = {
        "ok": derived.ok,
        "failures": list(derived.failures),
    }
    if not derived.ok:
        return report, EXIT_VIOLATION

    ann = plus_annihilator(M)
    ann_ok = is_submodule(M, ann)
    checks["annihilator-submodule"] = {"ok": ann_ok, "dim": ann.dim}
    if not ann_ok:
        return report, EXIT_VIOLATION

    try:
        result = solve(L, M)
    except NonSplitSpectrum as exc:
        checks["solve"] = {"ok": False, "error": str(exc)}
        return report, EXIT_INVALID
    weight_ok = verify_weight(M, result.v, result.weight)
    dichotomy_ok = result.dichotomy != DICHOTOMY_VIOLATION
    checks["solve"] = {
        "ok": weight_ok and dichotomy_ok,
        "result": result_to_json(result),
        "dichotomy": result.dichotomy,
    }
    if not (weight_ok and dichotomy_ok):
        return report, EXIT_VIOLATION

    try:
        entries = oracle_solve(L, M)
    except NonSplitSpectrum as exc:
        checks["oracle"] = {"ok": False, "error": str(exc)}
        return report, EXIT_INVALID
    match = next(
        (
            (space, w)
            for space, w in entries
            if space.contains(result.v) and w == result.weight
        ),
        None,
    )
    checks["oracle"] = {
        "ok": match is not None,
        "entries": len(entries),
        "matched_dim": match[0].dim if match else None,
        "v": vector_to_json(result.v),
    }
    if match is None:
        return report, EXIT_VIOLATION

    report["ok"] = True
    return report, EXIT_OK
