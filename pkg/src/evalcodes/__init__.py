"""Evaluation codes over finite fields: Groebner bases, footprints and
generalized Hamming weights."""

from .gf import FieldElement, FieldError, FiniteField, field_for_q, parse_element
from .mpoly import (
    GREVLEX,
    GRLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    divide,
    format_polynomial,
    monomial_order,
    parse_polynomial,
    parse_polynomials,
)
from .groebner import (
    Footprint,
    GroebnerBasis,
    affine_hilbert_function,
    box_degree,
    buchberger,
    monomial_ideal_degree,
    normal_form,
    quotient_degree,
    regularity_index,
    standard_monomials,
)
from .variety import (
    EmptyVarietyError,
    PointSet,
    affine_space,
    affine_variety_points,
    count_zeros_degree_method,
    projective_variety_points,
    read_point_file,
    torus,
    vanishing_ideal,
    variety_ideal_nullstellensatz,
    write_point_file,
    zero_set,
)
from .codes import (
    EvaluationCode,
    evaluation_code,
    generalized_toric_code,
    projective_rm_code,
    rm_code,
    squarefree_code,
    standardize,
    toric_hypersimplex_code,
)
from .weights import (
    BudgetError,
    WeightReport,
    footprint_bound,
    gaussian_binomial,
    ghw,
    ghw_bruteforce,
    max_zeros_bounds,
    min_distance_recursive,
    rm_footprint,
    rref_matrices,
    squarefree_dimension,
    squarefree_footprint,
    squarefree_min_distance,
    squarefree_second_weight,
    toric_dimension,
    toric_min_distance,
    two_product_common_zeros,
)

__version__ = "0.1.0"
