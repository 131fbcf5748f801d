"""Exact analysis of finite integer sets under divisibility.

The package treats a finite set of positive integers as a poset ordered by
divisibility, with gcd as the meet operation.  It decides whether each
element's lower region splits into two chains, evaluates the Mobius function
of the poset three independent ways, computes the rational weights that
diagonalize the LCM matrix, and derives determinant, invertibility, and
inertia of GCD/LCM matrices in exact arithmetic, cross-checked by
matrix-level oracles.
"""

from .doublechain import (
    BadFoldCountError,
    ChainDecomposition,
    NotDoubleChainGeneratorError,
    core_set,
    decompose_chains,
    generates_double_chain,
    is_a_set,
    is_meet_tree,
    is_r_fold_gcd_closed,
)
from .families import (
    DEFAULT_SEARCH_UNIVERSES,
    BadParamsError,
    SearchResult,
    classical_set,
    cube_instances,
    divisors,
    enumerate_gcd_closed,
    grid_family,
    incomparable_tops_instance,
    is_cube_isomorphic,
    search_max_iplus,
    squarefree_pairs_family,
    triple_prime_family,
)
from .lattice import (
    DivisorPoset,
    EmptyInputError,
    MeetOutsideSetError,
    NonPositiveElementError,
    SubPoset,
    build_poset,
    gcd_closure,
    has_antichain_3,
    is_gcd_closed,
    meet,
    meet_closure,
    to_dot,
    width,
)
from .matrices import (
    ExactMatrix,
    InertiaTriple,
    NonIntegerExponentError,
    NonSquareError,
    NonSymmetricError,
    NotGcdClosedError,
    PsiVector,
    Sign,
    classify_psi_sign,
    determinant_exact,
    determinant_via_psi,
    factorization,
    gcd_matrix,
    inertia_charpoly_oracle,
    inertia_from_psi,
    is_invertible,
    lcm_matrix,
    power_lcm_matrix,
    psi,
    reciprocal_gcd_matrix,
    structural_inertia,
)
from .moebius import (
    MoebiusTable,
    mobius_closed_form,
    mobius_recursive,
    mobius_via_zeta_inverse,
)

__all__ = [
    "BadFoldCountError",
    "BadParamsError",
    "ChainDecomposition",
    "DEFAULT_SEARCH_UNIVERSES",
    "DivisorPoset",
    "EmptyInputError",
    "ExactMatrix",
    "InertiaTriple",
    "MeetOutsideSetError",
    "MoebiusTable",
    "NonIntegerExponentError",
    "NonPositiveElementError",
    "NonSquareError",
    "NonSymmetricError",
    "NotDoubleChainGeneratorError",
    "NotGcdClosedError",
    "PsiVector",
    "SearchResult",
    "Sign",
    "SubPoset",
    "build_poset",
    "classical_set",
    "classify_psi_sign",
    "core_set",
    "cube_instances",
    "decompose_chains",
    "determinant_exact",
    "determinant_via_psi",
    "divisors",
    "enumerate_gcd_closed",
    "factorization",
    "gcd_closure",
    "gcd_matrix",
    "generates_double_chain",
    "grid_family",
    "has_antichain_3",
    "incomparable_tops_instance",
    "inertia_charpoly_oracle",
    "inertia_from_psi",
    "is_a_set",
    "is_cube_isomorphic",
    "is_gcd_closed",
    "is_invertible",
    "is_meet_tree",
    "is_r_fold_gcd_closed",
    "lcm_matrix",
    "meet",
    "meet_closure",
    "mobius_closed_form",
    "mobius_recursive",
    "mobius_via_zeta_inverse",
    "power_lcm_matrix",
    "psi",
    "reciprocal_gcd_matrix",
    "search_max_iplus",
    "squarefree_pairs_family",
    "structural_inertia",
    "to_dot",
    "triple_prime_family",
    "width",
]

__version__ = "0.1.0"
