"""Seeded instance generator.

Every construction emits a solvable algebra passing the axiom check and a
module built from adjoints, so generated instances are always valid:

- abelian: zero structure constants.
- graded-nilpotent: a two-step grading V1 + V2 with <V2, V2>_k random in
  V1 and every bracket involving V1 zero.  Both defining identities hold
  because each nested bracket has an argument in V1 and vanishes termwise.
- scaled-leibniz-bundle: one graded-nilpotent Leibniz tensor replicated
  with per-index scalars, so the bundle is trivial by construction.
- direct-sum: graded-nilpotent algebra with the module adjoint + adjoint.
- basis-changed: graded-nilpotent instance conjugated (algebra and module
  alike) by a random unimodular integer matrix, which hides the grading
  without leaving the rationals or disturbing spectra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import LieLikeAlgebra
from .linalg import Matrix, inverse, vec
from .modules import OrdinaryModule, adjoint, direct_sum

CONSTRUCTIONS = (
    "abelian",
    "scaled-leibniz-bundle",
    "graded-nilpotent",
    "direct-sum",
    "basis-changed",
)


@dataclass(frozen=True)
class GeneratorSpec:
    construction: str
    dim: int
    s: int
    seed: int
    coefficient_bound: int = 3

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")
        if self.dim < 0 or self.s < 1 or self.coefficient_bound < 1:
            raise ValueError("need dim >= 0, s >= 1, coefficient_bound >= 1")


@dataclass(frozen=True)
class Instance:
    algebra: LieLikeAlgebra
    module: OrdinaryModule
    metadata: dict = field(default_factory=dict)


def generate(spec: GeneratorSpec) -> Instance:
    """Deterministic in the spec: equal specs yield identical instances."""
    rng = random.Random(
        f"{spec.construction}|{spec.dim}|{spec.s}|{spec.seed}|{spec.coefficient_bound}"
    )
    if spec.construction == "abelian":
        L = LieLikeAlgebra.from_constants(spec.dim, spec.s, {})
        M = adjoint(L)
    elif spec.construction == "graded-nilpotent":
        L = _graded_nilpotent(rng, spec.dim, spec.s, spec.coefficient_bound)
        M = adjoint(L)
    elif spec.construction == "scaled-leibniz-bundle":
        L = _scaled_bundle(rng, spec.dim, spec.s, spec.coefficient_bound)
        M = adjoint(L)
    elif spec.construction == "direct-sum":
        L = _graded_nilpotent(rng, spec.dim, spec.s, spec.coefficient_bound)
        base = adjoint(L)
        M = direct_sum(base, base)
    else:  # basis-changed composite
        L0 = _graded_nilpotent(rng, spec.dim, spec.s, spec.coefficient_bound)
        P = random_unimodular(rng, spec.dim, spec.coefficient_bound)
        L, M = transform_instance(L0, adjoint(L0), P)
    metadata = {
        "construction": spec.construction,
        "dim": spec.dim,
        "s": spec.s,
        "seed": spec.seed,
        "coefficient_bound": spec.coefficient_bound,
    }
    return Instance(L, M, metadata)


def _graded_nilpotent(rng, n: int, s: int, bound: int) -> LieLikeAlgebra:
    n1 = (n + 1) // 2  # V1 = first n1 coordinates, V2 = the rest
    entries = {}
    for k in range(s):
        for i in range(n1, n):
            for j in range(n1, n):
                v = [rng.randint(-bound, bound) for _ in range(n1)]
                v += [0] * (n - n1)
                entries[(k, i, j)] = v
    return LieLikeAlgebra.from_constants(n, s, entries)


def _scaled_bundle(rng, n: int, s: int, bound: int) -> LieLikeAlgebra:
    base = _graded_nilpotent(rng, n, 1, bound)
    scalars = [1] + [rng.randint(1, bound) for _ in range(s - 1)]
    c = tuple(
        tuple(
            tuple(vec(t * x for x in v) for v in row) for row in base.c[0]
        )
        for t in scalars
    )
    return LieLikeAlgebra(n, s, c)


def random_unimodular(rng, n: int, bound: int) -> Matrix:
    """Product of integer shear, swap, and sign moves: determinant is +-1."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        if n < 2:
            break
        move = rng.randrange(3)
        i, j = rng.sample(range(n), 2)
        if move == 0:
            m = rng.randint(-bound, bound)
            rows[i] = [a + m * b for a, b in zip(rows[i], rows[j])]
        elif move == 1:
            rows[i], rows[j] = rows[j], rows[i]
        else:
            rows[i] = [-a for a in rows[i]]
    return Matrix(rows)


def transform_instance(
    L: LieLikeAlgebra, M: OrdinaryModule, P: Matrix
) -> tuple[LieLikeAlgebra, OrdinaryModule]:
    """Rewrite algebra and module in the basis with new coordinates v' = Pv.

    The module space is transformed by P when vdim equals the algebra
    dimension (the adjoint situation), otherwise left untouched.
    """
    from .algebra import bracket  # deferred to avoid an import cycle at load

    n = L.dim
    Pinv = inverse(P)
    old_basis = [Pinv.column(i) for i in range(n)]  # new basis in old coords
    c = []
    for k in range(L.s):
        tk = []
        for bi in old_basis:
            row = []
            for bj in old_basis:
                row.append(P.apply(bracket(L, bi, bj, k)))
            tk.append(tuple(row))
        c.append(tuple(tk))
    L2 = LieLikeAlgebra(n, L.s, tuple(c))

    if M.vdim == n:
        Q, Qinv = P, Pinv
    else:
        Q = Qinv = Matrix.identity(M.vdim)

    def recurried(fam):
        out = []
        for k in range(L.s):
            ops = []
            for i in range(n):
                combo = Matrix.zeros(M.vdim, M.vdim)
                for l in range(n):
                    w = old_basis[i][l]
                    if w != 0:
                        combo = combo + fam[k][l].scale(w)
                ops.append(Q @ combo @ Qinv)
            out.append(tuple(ops))
        return tuple(out)

    M2 = OrdinaryModule(L2, M.vdim, recurried(M.F), recurried(M.G))
    return L2, M2
