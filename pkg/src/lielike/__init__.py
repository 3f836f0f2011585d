"""Exact-arithmetic toolkit for Lie-like algebras, ordinary modules, and
the constructive generalized Lie's theorem."""

from .algebra import (
    AlgebraViolation,
    LieLikeAlgebra,
    bracket,
    check_algebra,
    derived_series,
    is_ideal,
    is_solvable,
    is_trivial,
    restrict_algebra,
    split_codim1,
)
from .errors import (
    DimensionMismatch,
    EmptySubspace,
    LieLikeError,
    NonSplitSpectrum,
    NormalizerPreconditionFailed,
    NotClosed,
    NotInvariant,
    NotSolvable,
    SetupInvalid,
    Singular,
    TheoremViolation,
)
from .generate import CONSTRUCTIONS, GeneratorSpec, Instance, generate
from .linalg import (
    Matrix,
    Subspace,
    eigenspace,
    joint_eigenspace,
    joint_eigenvector,
    kernel,
    rational_eigenvalues,
    restrict_operator,
    vec,
)
from .modules import (
    ModuleViolation,
    OrdinaryModule,
    adjoint,
    change_basis,
    check_derived_identities,
    check_module,
    direct_sum,
    is_submodule,
    plus_annihilator,
    restrict_module,
)
from .solver import (
    SolveResult,
    Weight,
    check_dichotomy,
    congruence_check,
    normalizer_invariance_check,
    oracle_solve,
    solve,
    split_setup,
    trace_vanishing_check,
    verify_weight,
    weight_space,
)
from .verify import run_verify

__all__ = [name for name in dir() if not name.startswith("_")]
