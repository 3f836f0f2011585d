"""Structural invariants: ideals, derived series, and codimension-1 splits.

The derived series D^1 L = L, D^{n+1} L = sum_k <D^n L, D^n L>_k measures
how quickly the algebra collapses under bracketing; the algebra is
solvable when the series reaches zero.  Every solvable algebra of
dimension >= 1 splits as an ideal of codimension 1 plus a complementary
line - the inductive step behind the weight-vector theorem.
"""

from lielike import (
    LieLikeAlgebra,
    derived_series,
    is_ideal,
    is_solvable,
    restrict_algebra,
    split_codim1,
)

nt3 = LieLikeAlgebra.from_constants(
    3, 2, {(0, 2, 2): [1, 0, 0], (1, 2, 2): [0, 1, 0]}
)

print("derived series dimensions:", [sp.dim for sp in derived_series(nt3)])
print("solvable:", is_solvable(nt3))

A, x = split_codim1(nt3)
print("\ncodimension-1 ideal basis:", A.basis)
print("complementary vector x:", x)
print("A is an ideal:", is_ideal(nt3, A))

sub = restrict_algebra(nt3, A)
print("restricted algebra: dim", sub.dim, "- solvable:", is_solvable(sub))

# a non-solvable example: the classical three-dimensional simple algebra
sl2 = LieLikeAlgebra.from_constants(
    3,
    1,
    {
        (0, 0, 1): [0, 0, 1],
        (0, 1, 0): [0, 0, -1],
        (0, 2, 0): [2, 0, 0],
        (0, 0, 2): [-2, 0, 0],
        (0, 2, 1): [0, -2, 0],
        (0, 1, 2): [0, 2, 0],
    },
)
print("\nsimple 3-dim algebra solvable:", is_solvable(sl2))
print("its derived series stalls at dims:", [sp.dim for sp in derived_series(sl2)])
