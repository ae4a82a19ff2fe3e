"""Exact verification of monomial Liouville structures on symplectic vector spaces.

The package constructs the potentials theta + sign * d(monomial), their
automorphism and isomorphism groups as explicit polynomial maps, and
certifies the defining identities by exact rational polynomial algebra,
with closed-form flows cross-checked against a fixed-step RK4 oracle.
"""

from ._version import __version__
from .ratpoly import Polynomial, PolyMap, Rational, rational_to_text
from .symplectic import (
    LinearMap,
    SymplecticSpace,
    derive_rng,
    is_symplectic,
    map_vector_to_vector,
    omega,
    omega_linear_form,
    random_rational,
    random_symplectic,
    random_vector,
    stabilizer_sample,
    transvection,
)
from .structures import (
    LiouvilleStructure,
    OneForm,
    TwoForm,
    VectorField,
    exterior_derivative,
    flow_closed_form,
    flow_closed_form_batch,
    flow_numeric,
    flow_numeric_batch,
    liouville_field,
    monomial,
    omega_two_form,
    potential_form,
    pullback_one_form,
)
from .autgroup import (
    DecompositionResult,
    InternalConsistencyError,
    NotAnAutomorphismError,
    SignObstructionError,
    UnsupportedPairError,
    conjugating_map,
    conjugating_map_inverse,
    decompose,
    decomposition_to_json,
    is_exact_pullback_equal,
    make_automorphism,
    make_isomorphism,
    structure_case,
    translation_map,
)
from .checks import (
    CHECKS,
    CheckResult,
    VerifyConfig,
    report_is_clean,
    report_to_json,
    run_check,
    run_verification_suite,
)

__all__ = [
    "__version__",
    "Polynomial",
    "PolyMap",
    "Rational",
    "rational_to_text",
    "LinearMap",
    "SymplecticSpace",
    "derive_rng",
    "is_symplectic",
    "map_vector_to_vector",
    "omega",
    "omega_linear_form",
    "random_rational",
    "random_symplectic",
    "random_vector",
    "stabilizer_sample",
    "transvection",
    "LiouvilleStructure",
    "OneForm",
    "TwoForm",
    "VectorField",
    "exterior_derivative",
    "flow_closed_form",
    "flow_closed_form_batch",
    "flow_numeric",
    "flow_numeric_batch",
    "liouville_field",
    "monomial",
    "omega_two_form",
    "potential_form",
    "pullback_one_form",
    "DecompositionResult",
    "InternalConsistencyError",
    "NotAnAutomorphismError",
    "SignObstructionError",
    "UnsupportedPairError",
    "conjugating_map",
    "conjugating_map_inverse",
    "decompose",
    "decomposition_to_json",
    "is_exact_pullback_equal",
    "make_automorphism",
    "make_isomorphism",
    "structure_case",
    "translation_map",
    "CHECKS",
    "CheckResult",
    "VerifyConfig",
    "report_is_clean",
    "report_to_json",
    "run_check",
    "run_verification_suite",
]
