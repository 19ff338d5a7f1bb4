"""Exact order-domain machinery over small finite fields: weight-matrix
monomial orders, Groebner bases, toric deformations, and evaluation codes on
Hermitian hypersurfaces, Grassmannians and two-step flag varieties."""

from .gf import (
    Field,
    FieldElement,
    FieldError,
    build_field,
    field_from_json,
    hermitian_constants,
    primitive_element,
)
from .mpoly import (
    BlockOrder,
    Grevlex,
    Lex,
    MonomialOrder,
    Polynomial,
    ResourceLimit,
    Ring,
    RingError,
    WeightOrder,
    buchberger_reduced,
    eliminate,
    normal_form,
    s_polynomial,
)
from .orderdomain import (
    MINUS_INFINITY,
    DeformationResult,
    GPReport,
    OrderValue,
    Presentation,
    axiom_probe,
    deform_to_toric,
    m_weight,
    rho,
    standard_monomials,
    toric_ideal,
    verify_gp,
)
from .varieties import (
    LatticeH,
    PointSet,
    VarietyInstance,
    affine_points,
    flag_presentation,
    gaussian_binomial,
    grassmann_points,
    grassmann_presentation,
    grassmannian_data,
    hermitian_counts,
    hermitian_presentation,
    hermitian_tangent_presentation,
    hermitian_tangent_variety,
    hermitian_variety,
    rational_points,
)
from .codes import (
    EvaluationCode,
    OrbitDecomposition,
    c_a_code,
    distance_interval,
    dual_code,
    evaluation_code,
    first_ell_code,
    griesmer_bound,
    hermitian_predicted_params,
    min_distance,
    nullspace,
    orbit_decomposition,
    rref,
)

__version__ = "0.1.0"
