"""Ordinary modules over Lie-like algebras.

A module stores the operator families in curried form: F[k][i] is the
matrix of f_k(e_i) and G[k][i] the matrix of g_k(e_i); linearity in the
algebra argument holds by construction.  The defining axioms are

    f_h(<x,y>_k) = [f_h(x), f_k(y)]                       (right maps)
    g_h(<x,y>_k) = [g_h(x), f_k(y)]                       (left maps)
    g_k(x)g_h(y) = g_h(x)f_k(y) = g_k(x)f_h(y)
    f_k(x)f_h(y) = f_h(x)f_k(y),  f_k(x)g_h(y) = f_h(x)g_k(y)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import LieLikeAlgebra
from .errors import DimensionMismatch
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    inverse,
    vscale,
)

OperatorFamily = tuple[tuple[Matrix, ...], ...]  # [k][i]


@dataclass(frozen=True)
class OrdinaryModule:
    """Operator-family presentation of an ordinary module."""

    algebra: LieLikeAlgebra
    vdim: int
    F: OperatorFamily
    G: OperatorFamily

    def __post_init__(self):
        n, s, m = self.algebra.dim, self.algebra.s, self.vdim
        for fam in (self.F, self.G):
            if len(fam) != s or any(len(fk) != n for fk in fam):
                raise DimensionMismatch("operator family shape must be s*n")
            for fk in fam:
                for op in fk:
                    if op.nrows != m or op.ncols != m:
                        raise DimensionMismatch("operator must be vdim*vdim")

    def f(self, k: int, z: Vector) -> Matrix:
        """Matrix of f_k(z) for an arbitrary algebra element z."""
        return _linear_combination(self.F[k], z, self.vdim)

    def g(self, k: int, z: Vector) -> Matrix:
        return _linear_combination(self.G[k], z, self.vdim)


def _linear_combination(ops: Sequence[Matrix], z: Vector, m: int) -> Matrix:
    out = Matrix.zeros(m, m)
    for zi, op in zip(z, ops, strict=True):
        if zi != 0:
            out = out + op.scale(zi)
    return out


@dataclass(frozen=True)
class ModuleViolation:
    """A failed module axiom at a basis pair and index pair."""

    axiom: str  # "eq-1.3" | "eq-1.4" | "eq-1.5" | "eq-1.6a" | "eq-1.6b"
    witness: tuple[int, int, int, int]  # (k, h, i, j)
    residual: Matrix


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking identities that must hold automatically."""

    ok: bool
    failures: tuple[str, ...] = ()


def check_module(M: OrdinaryModule) -> list[ModuleViolation]:
    """All axiom violations on basis pairs; empty iff M is a module."""
    L = M.algebra
    n, s = L.dim, L.s
    F, G = M.F, M.G
    out = []

    def record(tag, k, h, i, j, residual):
        if not residual.is_zero():
            out.append(ModuleViolation(tag, (k, h, i, j), residual))

    for k in range(s):
        for h in range(s):
            for i in range(n):
                for j in range(n):
                    w = L.c[k][i][j]
                    record("eq-1.3", k, h, i, j,
                           M.f(h, w) - (F[h][i] @ F[k][j] - F[k][j] @ F[h][i]))
                    record("eq-1.4", k, h, i, j,
                           M.g(h, w) - (G[h][i] @ F[k][j] - F[k][j] @ G[h][i]))
                    mid = G[h][i] @ F[k][j]
                    record("eq-1.5", k, h, i, j, G[k][i] @ G[h][j] - mid)
                    record("eq-1.5", k, h, i, j, mid - G[k][i] @ F[h][j])
                    record("eq-1.6a", k, h, i, j,
                           F[k][i] @ F[h][j] - F[h][i] @ F[k][j])
                    record("eq-1.6b", k, h, i, j,
                           F[k][i] @ G[h][j] - F[h][i] @ G[k][j])
    return out


def check_derived_identities(M: OrdinaryModule) -> IdentityReport:
    """Confirm f_h(<x,y>_k) = f_k(<x,y>_h) and the g analogue.

    These follow from the axioms over a valid algebra; a failure signals an
    internal inconsistency, never a user error, so the outcome is reported
    rather than raised.
    """
    L = M.algebra
    failures = []
    for k in range(L.s):
        for h in range(k + 1, L.s):
            for i in range(L.dim):
                for j in range(L.dim):
                    wk, wh = L.c[k][i][j], L.c[h][i][j]
                    if not (M.f(h, wk) - M.f(k, wh)).is_zero():
                        failures.append(f"f-swap at (k={k}, h={h}, i={i}, j={j})")
                    if not (M.g(h, wk) - M.g(k, wh)).is_zero():
                        failures.append(f"g-swap at (k={k}, h={h}, i={i}, j={j})")
    return IdentityReport(not failures, tuple(failures))


def adjoint(L: LieLikeAlgebra) -> OrdinaryModule:
    """The adjoint module (L, -r_k, l_k) on the algebra itself."""
    n = L.dim
    F, G = [], []
    for k in range(L.s):
        fk, gk = [], []
        for i in range(n):
            # a -> -<a, e_i>_k has columns -c[k][j][i]
            fk.append(Matrix.from_columns(
                [vscale(-1, L.c[k][j][i]) for j in range(n)], n))
            # a -> <e_i, a>_k has columns c[k][i][j]
            gk.append(Matrix.from_columns(list(L.c[k][i]), n))
        F.append(tuple(fk))
        G.append(tuple(gk))
    return OrdinaryModule(L, n, tuple(F), tuple(G))


def plus_annihilator(M: OrdinaryModule) -> Subspace:
    """Span of (g_h(e_i) - f_k(e_i))(b) over all basis elements and indices."""
    L = M.algebra
    gens = []
    for h in range(L.s):
        for k in range(L.s):
            for i in range(L.dim):
                diff = M.G[h][i] - M.F[k][i]
                gens.extend(diff.columns())
    return Subspace.span(M.vdim, gens)


def is_submodule(M: OrdinaryModule, U: Subspace) -> bool:
    """True iff every operator of the module maps U into U."""
    if U.ambient != M.vdim:
        raise DimensionMismatch("subspace ambient mismatch")
    for fam in (M.F, M.G):
        for fk in fam:
            for op in fk:
                for b in U.basis:
                    if not U.contains(op.apply(b)):
                        return False
    return True


def restrict_module(
    M: OrdinaryModule, A: Subspace, LA: LieLikeAlgebra
) -> OrdinaryModule:
    """Reindex the operator families to the canonical basis of a subalgebra."""
    if A.ambient != M.algebra.dim or LA.dim != A.dim or LA.s != M.algebra.s:
        raise DimensionMismatch("subalgebra does not match the subspace")
    F = tuple(
        tuple(M.f(k, b) for b in A.basis) for k in range(M.algebra.s)
    )
    G = tuple(
        tuple(M.g(k, b) for b in A.basis) for k in range(M.algebra.s)
    )
    return OrdinaryModule(LA, M.vdim, F, G)


def change_basis(M: OrdinaryModule, P: Matrix) -> OrdinaryModule:
    """Conjugate every operator by P (raises Singular when P is not)."""
    if P.nrows != M.vdim or P.ncols != M.vdim:
        raise DimensionMismatch("change of basis must be vdim*vdim")
    Pinv = inverse(P)
    conj = lambda X: P @ X @ Pinv
    F = tuple(tuple(conj(op) for op in fk) for fk in M.F)
    G = tuple(tuple(conj(op) for op in gk) for gk in M.G)
    return OrdinaryModule(M.algebra, M.vdim, F, G)


def direct_sum(M1: OrdinaryModule, M2: OrdinaryModule) -> OrdinaryModule:
    """Block-diagonal sum of two modules over the same algebra."""
    if M1.algebra != M2.algebra:
        raise DimensionMismatch("direct sum needs the same underlying algebra")
    m1, m2 = M1.vdim, M2.vdim

    def block(a: Matrix, b: Matrix) -> Matrix:
        rows = [list(r) + [0] * m2 for r in a.rows]
        rows += [[0] * m1 + list(r) for r in b.rows]
        return Matrix(rows)

    F = tuple(
        tuple(block(x, y) for x, y in zip(f1, f2))
        for f1, f2 in zip(M1.F, M2.F)
    )
    G = tuple(
        tuple(block(x, y) for x, y in zip(g1, g2))
        for g1, g2 in zip(M1.G, M2.G)
    )
    return OrdinaryModule(M1.algebra, m1 + m2, F, G)
