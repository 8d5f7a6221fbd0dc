"""Exact-arithmetic computer algebra for graded Lie algebras of order 3.

The library represents algebras by sparse structure constants over exact
rationals, verifies the defining identities, computes infinitesimal
deformation spaces of model filiform algebras by two independent methods
(linear-system kernels and weight counting) and constructs the explicit
deformation bases and filiform families.
"""

from .exactlin import (
    Rational,
    RationalMatrix,
    kernel_basis,
    rank,
    rational_from_string,
    rational_to_string,
)
from .graded_core import (
    GradeIndex,
    InvalidAlgebraError,
    MatrixRepresentation,
    OrderFAlgebra,
    UnsupportedBracketError,
    VerificationReport,
    Violation,
    algebra_from_json,
    algebra_from_json_text,
    algebra_to_json,
    algebra_to_json_text,
    bracket,
    tribracket,
    verify_jacobi,
    verify_representation,
)
from .filiform import (
    FiliformReport,
    NotNilpotentError,
    OrderNilindex,
    abelian,
    descending_sequence,
    family_mu1,
    family_mu2,
    is_adapted_form,
    is_filiform,
    model,
    order_nilindex,
)
from .deformation import (
    Deformation,
    DeformationError,
    KernelBasis,
    ZDecomposition,
    added,
    combination,
    decompose_Z,
    deform,
    deformation_from_json,
    deformation_from_json_text,
    deformation_from_vector,
    deformation_to_json,
    deformation_to_json_text,
    full_system_kernel_dimension,
    is_infinitesimal,
    is_integrable,
    scaled,
    solve_subspace_A,
    solve_subspace_B,
    solve_subspace_C,
    zero_deformation,
)
from .sl2 import (
    WeightedMap,
    dim_C_by_weights,
    is_maximal_vector,
    maximal_vector_residual,
    weight_basis_maps,
    weight_lambda,
    weight_p,
    weighted_map,
)
from .families import (
    NamedDeformation,
    example_poincare,
    example_so23_adjoint,
    phi1,
    phi13,
    phi3,
    phi_combination,
    psi_k,
    psi_t,
    theorem4_basis,
)

__version__ = "0.1.0"
