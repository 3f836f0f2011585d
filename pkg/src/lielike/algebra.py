"""Lie-like algebras given by structure constants.

An algebra of dimension n carries a family of brackets <.,.>_k for
k = 0..s-1, stored as tensors c[k][i][j] = <e_i, e_j>_k.  The defining
identities are the Jacobi-like identity

    <<x,y>_k, z>_h = <x, <y,z>_h>_k + <<x,z>_h, y>_k

and the index-swap identity <<x,y>_k, z>_h = <<x,y>_h, z>_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DimensionMismatch, NotClosed, NotSolvable
from .linalg import (
    Subspace,
    Vector,
    is_zero_vec,
    unit_vec,
    vadd,
    vec,
    vscale,
    zero_vec,
)

Tensor = tuple[tuple[Vector, ...], ...]  # [i][j] -> coordinate vector


@dataclass(frozen=True)
class LieLikeAlgebra:
    """Structure-constant presentation of a Lie-like algebra."""

    dim: int
    s: int
    c: tuple[Tensor, ...]  # [k][i][j]

    def __post_init__(self):
        if self.dim < 0 or self.s < 0 or (self.s < 1 and self.dim > 0):
            raise DimensionMismatch("need s >= 1 unless dim = 0")
        if len(self.c) != self.s:
            raise DimensionMismatch("tensor family size must equal s")
        for tk in self.c:
            if len(tk) != self.dim or any(
                len(ti) != self.dim or any(len(v) != self.dim for v in ti)
                for ti in tk
            ):
                raise DimensionMismatch("structure tensor shape must be s*n*n*n")

    @classmethod
    def from_constants(
        cls, dim: int, s: int, entries: Mapping[tuple[int, int, int], Iterable]
    ) -> "LieLikeAlgebra":
        """Sparse builder: unspecified (k, i, j) brackets are zero."""
        c = [
            [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
            for _ in range(s)
        ]
        for (k, i, j), v in entries.items():
            c[k][i][j] = vec(v)
        return cls(dim, s, tuple(tuple(tuple(r) for r in tk) for tk in c))

    def basis(self) -> list[Vector]:
        return [unit_vec(self.dim, i) for i in range(self.dim)]


@dataclass(frozen=True)
class AlgebraViolation:
    """A failed defining identity at a basis triple and index pair."""

    identity: str  # "jacobi-like" | "index-swap"
    witness: tuple[int, int, int, int, int]  # (i, j, l, k, h)
    residual: Vector


def bracket(L: LieLikeAlgebra, x: Vector, y: Vector, k: int) -> Vector:
    """Bilinear extension of the structure constants."""
    if k < 0 or k >= L.s:
        raise DimensionMismatch("bracket index out of range")
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatch("bracket operands have wrong length")
    out = zero_vec(L.dim)
    ck = L.c[k]
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            out = vadd(out, vscale(xi * yj, ck[i][j]))
    return out


def check_algebra(L: LieLikeAlgebra) -> list[AlgebraViolation]:
    """All violations of the defining identities on basis triples.

    By multilinearity an empty result implies the identities for all
    x, y, z.
    """
    violations = []
    n, s, c = L.dim, L.s, L.c
    basis = L.basis()
    for k in range(s):
        for h in range(s):
            for i in range(n):
                for j in range(n):
                    inner = c[k][i][j]
                    for l in range(n):
                        lhs = bracket(L, inner, basis[l], h)
                        rhs = vadd(
                            bracket(L, basis[i], c[h][j][l], k),
                            bracket(L, c[h][i][l], basis[j], k),
                        )
                        res = tuple(a - b for a, b in zip(lhs, rhs))
                        if not is_zero_vec(res):
                            violations.append(
                                AlgebraViolation("jacobi-like", (i, j, l, k, h), res)
                            )
                        if h < k:  # swap identity is symmetric in (k, h)
                            other = bracket(L, c[h][i][j], basis[l], k)
                            res2 = tuple(a - b for a, b in zip(lhs, other))
                            if not is_zero_vec(res2):
                                violations.append(
                                    AlgebraViolation("index-swap", (i, j, l, k, h), res2)
                                )
    return violations


def is_trivial(L: LieLikeAlgebra) -> tuple[bool, tuple[int, tuple] | None]:
    """Whether all brackets are scalar multiples of a single bracket.

    Returns (True, (base_index, scalars)) with c[k] = scalars[k] * c[base]
    when trivial, (False, None) otherwise.  An algebra with s = 1 or with
    all tensors zero is always trivial.
    """
    flats = [
        [x for ti in tk for v in ti for x in v] for tk in L.c
    ]
    base = next((k for k, f in enumerate(flats) if any(x != 0 for x in f)), None)
    if base is None:
        return True, (0, tuple(vec([0] * L.s))) if L.s else (0, ())
    ref = flats[base]
    anchor = next(i for i, x in enumerate(ref) if x != 0)
    scalars = []
    for f in flats:
        t = f[anchor] / ref[anchor]
        if any(x != t * y for x, y in zip(f, ref)):
            return False, None
        scalars.append(t)
    return True, (base, tuple(scalars))


def is_ideal(L: LieLikeAlgebra, I: Subspace) -> bool:
    """True iff <I, L>_k and <L, I>_k land in I for every k."""
    if I.ambient != L.dim:
        raise DimensionMismatch("subspace ambient mismatch")
    for b in I.basis:
        for j in range(L.dim):
            ej = unit_vec(L.dim, j)
            for k in range(L.s):
                if not I.contains(bracket(L, b, ej, k)):
                    return False
                if not I.contains(bracket(L, ej, b, k)):
                    return False
    return True


def derived_series(L: LieLikeAlgebra) -> list[Subspace]:
    """D^1 L = L, D^{n+1} L = sum_k <D^n L, D^n L>_k, up to stabilization."""
    series = [Subspace.full(L.dim)]
    while True:
        cur = series[-1]
        gens = []
        for u in cur.basis:
            for v in cur.basis:
                for k in range(L.s):
                    gens.append(bracket(L, u, v, k))
        nxt = Subspace.span(L.dim, gens)
        if nxt == cur:
            return series
        series.append(nxt)


def is_solvable(L: LieLikeAlgebra) -> tuple[bool, int]:
    """Solvability with the first n such that D^n L = 0 (or the depth at
    which the series stabilizes at a nonzero subspace)."""
    series = derived_series(L)
    return series[-1].dim == 0, len(series)


def split_codim1(L: LieLikeAlgebra) -> tuple[Subspace, Vector]:
    """An ideal A of codimension 1 containing D^2 L, plus x with L = A + kx.

    Deterministic: the canonical basis of D^2 L is extended by standard
    basis vectors in index order; x is the last vector appended.
    """
    if L.dim < 1:
        raise DimensionMismatch("split needs dim >= 1")
    series = derived_series(L)
    d2 = series[1] if len(series) > 1 else series[0]
    if d2.dim == L.dim:
        raise NotSolvable("D^2 L = L blocks the codimension-1 split")
    current = d2
    appended: list[Vector] = []
    for i in range(L.dim):
        ei = unit_vec(L.dim, i)
        if not current.contains(ei):
            appended.append(ei)
            current = current.add(Subspace.span(L.dim, [ei]))
    x = appended[-1]
    A = Subspace.span(L.dim, list(d2.basis) + appended[:-1])
    return A, x


def restrict_algebra(L: LieLikeAlgebra, A: Subspace) -> LieLikeAlgebra:
    """Structure constants of a bracket-closed subspace in its own basis."""
    if A.ambient != L.dim:
        raise DimensionMismatch("subspace ambient mismatch")
    m = A.dim
    c = []
    for k in range(L.s):
        tk = []
        for bi in A.basis:
            row = []
            for bj in A.basis:
                w = bracket(L, bi, bj, k)
                coords = A.coords(w)
                if coords is None:
                    raise NotClosed("subspace is not closed under the brackets")
                row.append(coords)
            tk.append(tuple(row))
        c.append(tuple(tk))
    return LieLikeAlgebra(m, L.s, tuple(c))
