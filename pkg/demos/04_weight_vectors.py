"""The constructive weight-vector theorem and its brute-force oracle.

For a solvable algebra acting on a module, there is a nonzero vector v
and functionals phi_k, psi_k with f_k(z)v = phi_k(z)v and
g_k(z)v = psi_k(z)v, and the functionals obey a dichotomy: either every
psi_k vanishes or phi_k = psi_k throughout.  `solve` builds v by
induction on dimension and records which branch of the argument fired at
each level; `oracle_solve` finds every maximal joint weight space by
exhaustive eigenspace intersection, with no shared logic.
"""

from lielike import (
    LieLikeAlgebra,
    adjoint,
    oracle_solve,
    solve,
    verify_weight,
)

examples = {
    "Leib2 (nilpotent, one bracket)": LieLikeAlgebra.from_constants(
        2, 1, {(0, 1, 1): [1, 0]}
    ),
    "NT3 (nilpotent, two brackets)": LieLikeAlgebra.from_constants(
        3, 2, {(0, 2, 2): [1, 0, 0], (1, 2, 2): [0, 1, 0]}
    ),
    "Aff2 (solvable, not nilpotent)": LieLikeAlgebra.from_constants(
        2, 1, {(0, 1, 0): [1, 0], (0, 0, 1): [-1, 0]}
    ),
}

for name, L in examples.items():
    M = adjoint(L)
    res = solve(L, M)
    print(f"{name}:")
    print("  v =", res.v)
    print("  phi =", res.weight.phi)
    print("  psi =", res.weight.psi)
    print("  dichotomy:", res.dichotomy)
    print("  branch trace:", res.branch_trace)
    print("  verifies exactly:", verify_weight(M, res.v, res.weight))

    entries = oracle_solve(L, M)
    match = [sp for sp, w in entries if sp.contains(res.v) and w == res.weight]
    print("  oracle: %d maximal joint weight space(s); solver's answer lies"
          " in one of dimension %d" % (len(entries), match[0].dim))
    print()
