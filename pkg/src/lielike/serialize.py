"""JSON wire formats.

Scalars serialize as "p/q" (or "p" when q = 1); matrices as row-major
nested arrays of such strings.  Algebra and module objects accept sparse
authoring: omitted structure-constant vectors and omitted operator
matrices default to zero.  Serialization is canonical (sorted keys, fixed
separators) so equal values produce byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping

from .algebra import LieLikeAlgebra
from .linalg import Matrix, Vector, vec, zero_vec
from .modules import OrdinaryModule
from .solver import SolveResult, Weight


def scalar_to_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_str(s) -> Fraction:
    return Fraction(s)


def vector_to_json(v: Vector) -> list[str]:
    return [scalar_to_str(x) for x in v]


def vector_from_json(obj, length: int | None = None) -> Vector:
    v = vec(Fraction(x) for x in obj)
    if length is not None and len(v) != length:
        raise ValueError(f"expected a vector of length {length}")
    return v


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[scalar_to_str(x) for x in row] for row in m.rows]


def matrix_from_json(obj, nrows: int | None = None, ncols: int | None = None) -> Matrix:
    m = Matrix(obj)
    if nrows is not None and (m.nrows, m.ncols) != (nrows, ncols):
        raise ValueError(f"expected a {nrows}x{ncols} matrix")
    return m


def _sparse_get(node, key: int):
    """Index into either a list or a string-keyed dict; None when omitted."""
    if node is None:
        return None
    if isinstance(node, Mapping):
        return node.get(str(key), node.get(key))
    return node[key] if key < len(node) else None


def algebra_to_json(L: LieLikeAlgebra) -> dict:
    return {
        "dim": L.dim,
        "s": L.s,
        "c": [
            [[vector_to_json(v) for v in row] for row in tk] for tk in L.c
        ],
    }


def algebra_from_json(obj: Mapping) -> LieLikeAlgebra:
    n = int(obj["dim"])
    s = int(obj["s"])
    craw = obj.get("c")
    c = []
    for k in range(s):
        tk = []
        knode = _sparse_get(craw, k)
        for i in range(n):
            inode = _sparse_get(knode, i)
            row = []
            for j in range(n):
                entry = _sparse_get(inode, j)
                row.append(zero_vec(n) if entry is None else vector_from_json(entry, n))
            tk.append(tuple(row))
        c.append(tuple(tk))
    return LieLikeAlgebra(n, s, tuple(c))


def module_to_json(M: OrdinaryModule) -> dict:
    return {
        "vdim": M.vdim,
        "F": [[matrix_to_json(op) for op in fk] for fk in M.F],
        "G": [[matrix_to_json(op) for op in gk] for gk in M.G],
    }


def module_from_json(obj: Mapping, algebra: LieLikeAlgebra) -> OrdinaryModule:
    m = int(obj["vdim"])

    def family(raw):
        fam = []
        for k in range(algebra.s):
            knode = _sparse_get(raw, k)
            ops = []
            for i in range(algebra.dim):
                entry = _sparse_get(knode, i)
                ops.append(
                    Matrix.zeros(m, m) if entry is None
                    else matrix_from_json(entry, m, m)
                )
            fam.append(tuple(ops))
        return tuple(fam)

    return OrdinaryModule(algebra, m, family(obj.get("F")), family(obj.get("G")))


def instance_to_json(
    L: LieLikeAlgebra, M: OrdinaryModule, metadata: Mapping | None = None
) -> dict:
    out: dict[str, Any] = {
        "algebra": algebra_to_json(L),
        "module": module_to_json(M),
    }
    if metadata:
        out["metadata"] = dict(metadata)
    return out


def instance_from_json(obj: Mapping) -> tuple[LieLikeAlgebra, OrdinaryModule, dict]:
    L = algebra_from_json(obj["algebra"])
    M = module_from_json(obj["module"], L)
    return L, M, dict(obj.get("metadata", {}))


def weight_to_json(w: Weight) -> dict:
    return {
        "phi": [vector_to_json(row) for row in w.phi],
        "psi": [vector_to_json(row) for row in w.psi],
    }


def result_to_json(r: SolveResult) -> dict:
    return {
        "v": vector_to_json(r.v),
        "phi": [vector_to_json(row) for row in r.weight.phi],
        "psi": [vector_to_json(row) for row in r.weight.psi],
        "dichotomy": r.dichotomy,
        "branch_trace": list(r.branch_trace),
    }


def result_from_json(obj: Mapping) -> SolveResult:
    w = Weight(
        tuple(vector_from_json(row) for row in obj["phi"]),
        tuple(vector_from_json(row) for row in obj["psi"]),
    )
    return SolveResult(
        vector_from_json(obj["v"]),
        w,
        obj["dichotomy"],
        tuple(obj["branch_trace"]),
    )


def dumps(obj) -> str:
    """Canonical JSON text: stable byte-for-byte for equal values."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
