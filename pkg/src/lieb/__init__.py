"""Exact structure-constant verification for brackets, cobrackets, Yang-Baxter
tensors and torsion-free operators, over rationals and named parameters."""

from .scalars import (
    Assumption,
    DivisionByZero,
    EvalSingular,
    ExpressionError,
    Polynomial,
    Scalar,
    parse_scalar,
)
from .multilinear import (
    BasisSpace,
    BilinearForm,
    LinearOperator,
    PivotAmbiguous,
    ShapeError,
    ThreeTensor,
    TwoTensor,
    contract,
    determinant,
    nullspace,
    rank,
    space,
)
from .structures import (
    CheckReport,
    Corepresentation,
    LieAlgebra,
    LieCoalgebra,
    Representation,
    Residual,
    Verdict,
    check_admissible,
    check_cocycle,
    check_co_cybe,
    check_compatible_pair,
    check_corepresentation,
    check_cpnybe,
    check_cybe,
    check_deformed_homomorphism,
    check_dual_qt,
    check_frobenius,
    check_lie_algebra,
    check_lie_coalgebra,
    check_matched_pair,
    check_nij_lie_bialgebra,
    check_nij_representation,
    check_nijenhuis,
    check_nijenhuis_coalgebra,
    check_pq_equivalents,
    check_representation,
    check_rrbo,
    check_weak_cosymplectic,
    check_weak_symplectic,
    map_scalars,
    structure_parameters,
)
from .construct import (
    DegenerateForm,
    adjoint_operator,
    adjoint_representation,
    bracket_from_omega,
    coadjoint_representation,
    corep_from_rep,
    delta_from_r,
    double_matched_pair,
    dual_algebra,
    dual_coalgebra,
    dual_pair_actions,
    dual_representation,
    dualize,
    manin_double,
    nijenhuis_from_omega_r,
    p_from_r_omega,
    phi_r,
    r_from_T,
    rep_from_corep,
    semidirect_coproduct,
    semidirect_product,
)
from .solver import (
    ConfirmedZero,
    ExhaustedSamples,
    LinearProblem,
    LinearSolution,
    RefutedAt,
    SampleConfig,
    bind_parameters,
    refute_by_sampling,
    solve_linear,
)
from .document import ParseError, parse_document, render_document
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
