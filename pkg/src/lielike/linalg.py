"""Exact rational linear algebra: vectors, matrices, canonical subspaces,
rational eigen-computations, and joint-eigenvector search.

Everything is built on ``fractions.Fraction``; no floating point appears
anywhere.  All values are immutable after construction and every operation
is a pure function of its inputs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    EmptySubspace,
    NonSplitSpectrum,
    NotInvariant,
    Singular,
)

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def vec(entries: Iterable) -> Vector:
    return tuple(Fraction(e) for e in entries)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vscale(c, a: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * x for x in a)


def vdot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b, strict=True)), ZERO)


def is_zero_vec(a: Vector) -> bool:
    return all(x == 0 for x in a)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Dense immutable matrix over the rationals."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: tuple[Vector, ...] = tuple(vec(r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([zero_vec(ncols) for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vec(n, i) for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Vector], nrows: int) -> "Matrix":
        return cls([[col[i] for col in cols] for i in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product (vectors are coordinate columns)."""
        if len(v) != self.ncols:
            raise DimensionMismatch("matrix/vector shape mismatch")
        return tuple(
            sum((rij * vj for rij, vj in zip(row, v) if vj != 0), ZERO)
            for row in self.rows
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("matrix product shape mismatch")
        bt = other.transpose().rows
        out = []
        for row in self.rows:
            # skip zero entries: operator matrices here are typically sparse
            nz = [(j, x) for j, x in enumerate(row) if x != 0]
            out.append(
                tuple(
                    sum((x * bt[j2][j] for j, x in nz), ZERO)
                    for j2 in range(other.ncols)
                )
            )
        return Matrix(out)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix sum shape mismatch")
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix difference shape mismatch")
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        return Matrix([vscale(c, r) for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)])

    def trace(self) -> Fraction:
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def is_zero(self) -> bool:
        return all(is_zero_vec(r) for r in self.rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Matrix({[list(map(str, r)) for r in self.rows]})"


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# row reduction and subspaces
# ---------------------------------------------------------------------------

def rref(rows: Sequence[Vector]) -> tuple[list[Vector], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]], pivots


class Subspace:
    """Subspace of Q^n held as a reduced row-echelon basis.

    The representation is canonical: two subspaces are equal as sets iff
    their basis matrices are identical.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: tuple[Vector, ...], pivots: tuple[int, ...]):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Vector]) -> "Subspace":
        vs = [vec(v) for v in vectors]
        for v in vs:
            if len(v) != ambient:
                raise DimensionMismatch("spanning vector has wrong length")
        rows, pivots = rref(vs)
        return cls(ambient, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, (), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(ambient, [unit_vec(ambient, i) for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def contains(self, v: Vector) -> bool:
        return self.coords(v) is not None

    def coords(self, v: Vector) -> Vector | None:
        """Coordinates of v in the canonical basis, or None if v is outside.

        Basis rows have 1 at their pivot column and 0 at the other pivots,
        so the candidate coefficients can be read off directly.
        """
        if len(v) != self.ambient:
            raise DimensionMismatch("vector/ambient mismatch")
        coeffs = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, row in zip(coeffs, self.basis):
            if c != 0:
                residual = [x - c * y for x, y in zip(residual, row)]
        if any(x != 0 for x in residual):
            return None
        return coeffs

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimension mismatch")
        return Subspace.span(self.ambient, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coefficient system."""
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimension mismatch")
        if self.is_full():
            return other
        if other.is_full():
            return self
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        # columns: basis of self, then basis of other, as column vectors;
        # kernel elements (a | b) satisfy sum a_i u_i = sum b_j w_j
        cols = [v for v in self.basis] + [vscale(-1, w) for w in other.basis]
        m = Matrix.from_columns(cols, self.ambient)
        ker = kernel(m)
        vectors = []
        for coeffs in ker.basis:
            v = zero_vec(self.ambient)
            for a, u in zip(coeffs[: self.dim], self.basis):
                if a != 0:
                    v = vadd(v, vscale(a, u))
            vectors.append(v)
        return Subspace.span(self.ambient, vectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of {self.ambient})"


def kernel(m: Matrix) -> Subspace:
    """Null space {v : Mv = 0} in canonical form."""
    rows, pivots = rref(m.rows)
    ncols = m.ncols
    pivset = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivset:
            continue
        v = [ZERO] * ncols
        v[j] = ONE
        for r, p in enumerate(pivots):
            v[p] = -rows[r][j]
        basis.append(tuple(v))
    return Subspace.span(ncols, basis)


def rank(m: Matrix) -> int:
    return len(rref(m.rows)[0])


def solve_linear(m: Matrix, rhs: Vector) -> Vector:
    """Unique solution of Mv = rhs; raises Singular when M is not invertible."""
    if m.nrows != m.ncols or m.nrows != len(rhs):
        raise DimensionMismatch("solve_linear expects a square system")
    aug = [list(row) + [b] for row, b in zip(m.rows, rhs)]
    rows, pivots = rref([tuple(r) for r in aug])
    if pivots != list(range(m.ncols)):
        raise Singular("matrix is singular")
    return tuple(row[-1] for row in rows)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = m.nrows
    aug = [tuple(list(row) + list(unit_vec(n, i))) for i, row in enumerate(m.rows)]
    rows, pivots = rref(aug)
    if pivots != list(range(n)):
        raise Singular("matrix is singular")
    return Matrix([row[n:] for row in rows])


# ---------------------------------------------------------------------------
# characteristic polynomial and rational eigenvalues
# ---------------------------------------------------------------------------

def det(m: Matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return ONE
    a = [list(r) for r in m.rows]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pr is None:
                return ZERO
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = ZERO
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def charpoly(m: Matrix) -> tuple[Fraction, ...]:
    """Coefficients of det(tI - M), low degree first; always monic.

    Computed by evaluating fraction-free determinants at t = 0..n and
    interpolating, so no floating point and no division by polynomials.
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch("charpoly of a non-square matrix")
    n = m.nrows
    if n == 0:
        return (ONE,)
    points = [Fraction(t) for t in range(n + 1)]
    values = [det(Matrix.identity(n).scale(t) - m) for t in points]
    return _interpolate(points, values)


def _interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Newton-form interpolation, returned as monomial coefficients."""
    k = len(xs)
    divided = list(ys)
    for level in range(1, k):
        for i in range(k - 1, level - 1, -1):
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [ZERO] * k
    # Horner expansion of sum divided[i] * prod_{j<i}(t - xs[j])
    acc = [ZERO] * k
    acc[0] = ONE  # running product polynomial, starts at 1
    deg = 0
    for i in range(k):
        for d in range(deg + 1):
            coeffs[d] += divided[i] * acc[d]
        if i < k - 1:
            # multiply acc by (t - xs[i])
            new = [ZERO] * k
            for d in range(deg + 1):
                new[d + 1] += acc[d]
                new[d] -= xs[i] * acc[d]
            acc = new
            deg += 1
    return tuple(coeffs)


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    out = ZERO
    for c in reversed(coeffs):
        out = out * x + c
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _primitive_int_poly(coeffs: Sequence[Fraction]) -> list[int]:
    mult = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * mult) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def rational_roots(coeffs: Sequence[Fraction]) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities via the rational-root theorem."""
    p = _primitive_int_poly(coeffs)
    while p and p[-1] == 0:
        p.pop()
    if not p:
        raise ValueError("zero polynomial has every root")
    roots: dict[Fraction, int] = {}
    # factor out t^m
    m0 = next((i for i, c in enumerate(p) if c != 0), len(p))
    if m0:
        roots[ZERO] = m0
        p = p[m0:]
    if len(p) > 1:
        cands = set()
        for num in _divisors(p[0]):
            for den in _divisors(p[-1]):
                cands.add(Fraction(num, den))
                cands.add(Fraction(-num, den))
        frac_p = [Fraction(c) for c in p]
        for cand in sorted(cands):
            mult = 0
            work = frac_p
            while len(work) > 1 and poly_eval(work, cand) == 0:
                work = _synthetic_div(work, cand)
                mult += 1
            if mult:
                roots[cand] = mult
    return sorted(roots.items())


def _synthetic_div(coeffs: list[Fraction], r: Fraction) -> list[Fraction]:
    """Divide by (t - r); assumes r is a root (remainder discarded)."""
    out = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + r * carry
        out[i - 1] = carry
    return out


def rational_eigenvalues(m: Matrix) -> tuple[list[tuple[Fraction, int]], bool]:
    """All rational eigenvalues with algebraic multiplicities.

    The flag is True iff the multiplicities sum to the dimension, i.e. the
    whole spectrum is rational.
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch("eigenvalues of a non-square matrix")
    if m.nrows == 0:
        return [], True
    roots = rational_roots(charpoly(m))
    total = sum(mult for _, mult in roots)
    return roots, total == m.nrows


def eigenspace(m: Matrix, lam) -> Subspace:
    lam = Fraction(lam)
    return kernel(m - Matrix.identity(m.nrows).scale(lam))


# ---------------------------------------------------------------------------
# restrictions and joint eigenvectors
# ---------------------------------------------------------------------------

def restrict_operator(m: Matrix, s: Subspace) -> Matrix:
    """Matrix of M in the canonical basis of an M-invariant subspace."""
    if m.ncols != s.ambient:
        raise DimensionMismatch("operator/subspace ambient mismatch")
    cols = []
    for b in s.basis:
        image = m.apply(b)
        c = s.coords(image)
        if c is None:
            raise NotInvariant("operator does not preserve the subspace")
        cols.append(c)
    return Matrix.from_columns(cols, s.dim)


def lift_subspace(inner: Subspace, outer: Subspace) -> Subspace:
    """Embed a subspace given in the coordinates of `outer` back into Q^n."""
    vectors = []
    for coeffs in inner.basis:
        v = zero_vec(outer.ambient)
        for a, b in zip(coeffs, outer.basis):
            if a != 0:
                v = vadd(v, vscale(a, b))
        vectors.append(v)
    return Subspace.span(outer.ambient, vectors)


def joint_eigenspace(
    family: Sequence[Matrix], within: Subspace
) -> tuple[Subspace, list[Fraction]]:
    """Iterative eigenspace refinement over the family, in the given order.

    At each step the smallest rational eigenvalue of the restricted operator
    is taken (its eigenspace is automatically nonzero), keeping the choice
    deterministic.  Raises NotInvariant when an operator fails to preserve
    the current subspace and NonSplitSpectrum when a restriction has no
    rational eigenvalue.
    """
    if within.dim == 0:
        raise EmptySubspace("joint eigenvector search needs a nonzero subspace")
    current = within
    eigs: list[Fraction] = []
    for op in family:
        restricted = restrict_operator(op, current)
        roots, _ = rational_eigenvalues(restricted)
        if not roots:
            raise NonSplitSpectrum("restricted operator has no rational eigenvalue")
        lam = roots[0][0]
        inner = eigenspace(restricted, lam)
        current = lift_subspace(inner, current)
        eigs.append(lam)
    return current, eigs


def joint_eigenvector(
    family: Sequence[Matrix], within: Subspace
) -> tuple[Vector, list[Fraction]]:
    """A common eigenvector of the family inside `within`.

    Deterministic: the first canonical basis vector of the surviving joint
    eigenspace.  An empty family returns the first basis vector of `within`.
    """
    space, eigs = joint_eigenspace(family, within)
    return space.basis[0], eigs
