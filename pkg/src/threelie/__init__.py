"""Exact computational toolkit for 3-Lie algebras and the modified
Rota-Baxter operators living on them: verification, search, induced
structures, operator cohomology, formal deformations, and the graded
derived-bracket machinery with Maurer-Cartan checks.
"""

from .scalars import (
    Quad,
    as_fraction,
    format_scalar,
    parse_scalar,
    quadratic_session,
    scalar_sqrt,
    squarefree_part,
)
from .linalg import Matrix, Vec, rank_kernel, solve
from .polynomials import Poly, matrix_variables
from .trilie import (
    ActionPair,
    Counterexample,
    Representation,
    ThreeLieAlgebra,
    adjoint,
    check_action,
    check_fundamental_identity,
    check_nijenhuis_operator,
    check_product_structure,
    check_representation,
    derived_and_center,
    derived_in_center,
)
from .operators import (
    RelativeMRBDatum,
    WeightedOperator,
    check_mrb_absolute,
    check_mrb_relative,
    check_rb,
    induced_bracket,
    is_automorphism,
    mrb_conjugation,
    mrb_negation_closure,
    mrb_polynomial_conditions,
    rb_to_mrb,
    rho_R,
    search_mrb,
)
from .constructions import (
    CommAssocWithDerivation,
    LieAlgebra,
    PreLieAlgebra,
    TraceFunctional,
    check_commassoc_data,
    check_jacobi,
    check_left_symmetry,
    check_mrb_on_commassoc,
    check_mrb_on_lie,
    check_mrb_on_prelie,
    check_right_symmetry,
    commassoc_deriv_to_3lie,
    commassoc_deriv_to_prelie,
    derivation_transfer_residual,
    lie_to_3lie,
    lie_transfer_residual,
    pre_lie_chirality,
    prelie_to_lie,
    prelie_transfer_residual,
)
from .cohomology import (
    Cochain,
    D_R,
    ad_wedge,
    coboundary,
    cochain_from_matrix,
    cohomology_dims,
    d_R,
    matrix_from_cochain,
    operator_cochain_dim,
    partial_R,
)
from .deformations import (
    LinearDeformation,
    NijenhuisElement,
    check_adX_nijenhuis_on_induced,
    check_equivalence,
    check_linear_deformation,
    check_nijenhuis_element,
    coefficient_vec,
    deformation_is_cocycle,
    omega_from_direction,
    trivial_deformation_from_nijenhuis,
)

__all__ = [
    "ActionPair",
    "Cochain",
    "CommAssocWithDerivation",
    "Counterexample",
    "D_R",
    "LieAlgebra",
    "LinearDeformation",
    "NijenhuisElement",
    "Matrix",
    "Poly",
    "PreLieAlgebra",
    "Quad",
    "RelativeMRBDatum",
    "Representation",
    "ThreeLieAlgebra",
    "TraceFunctional",
    "Vec",
    "WeightedOperator",
    "ad_wedge",
    "adjoint",
    "as_fraction",
    "check_action",
    "check_adX_nijenhuis_on_induced",
    "check_commassoc_data",
    "check_equivalence",
    "check_fundamental_identity",
    "check_jacobi",
    "check_left_symmetry",
    "check_linear_deformation",
    "check_mrb_absolute",
    "check_mrb_on_commassoc",
    "check_mrb_on_lie",
    "check_mrb_on_prelie",
    "check_mrb_relative",
    "check_nijenhuis_element",
    "check_nijenhuis_operator",
    "check_product_structure",
    "check_rb",
    "check_representation",
    "check_right_symmetry",
    "coboundary",
    "cochain_from_matrix",
    "coefficient_vec",
    "cohomology_dims",
    "commassoc_deriv_to_3lie",
    "commassoc_deriv_to_prelie",
    "d_R",
    "deformation_is_cocycle",
    "derivation_transfer_residual",
    "derived_and_center",
    "derived_in_center",
    "format_scalar",
    "induced_bracket",
    "is_automorphism",
    "lie_to_3lie",
    "lie_transfer_residual",
    "matrix_from_cochain",
    "matrix_variables",
    "mrb_conjugation",
    "mrb_negation_closure",
    "mrb_polynomial_conditions",
    "omega_from_direction",
    "operator_cochain_dim",
    "parse_scalar",
    "partial_R",
    "pre_lie_chirality",
    "prelie_to_lie",
    "prelie_transfer_residual",
    "quadratic_session",
    "rank_kernel",
    "rb_to_mrb",
    "rho_R",
    "scalar_sqrt",
    "search_mrb",
    "solve",
    "squarefree_part",
    "trivial_deformation_from_nijenhuis",
]
