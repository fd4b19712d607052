"""Homological invariants of quiver algebras with quadratic monomial relations."""

__version__ = "0.1.0"

from .algebra import (
    INFINITE,
    Arrow,
    CartanMatrix,
    Path,
    PathBasis,
    QuiverPresentation,
    cartan_matrix,
    dual_degree_component,
    enumerate_paths,
    is_finite_dimensional,
    quadratic_dual,
    top_dual_degree,
    validate,
)
from .classify import Certificate, Verdict, b_derived_equivalent, certify, hh_invariance_check
from .families import FibonacciSeq, build_An, build_B, build_Lambda, cartan_formula, fibonacci, lambda_for_B
from .homology import (
    CochainComplex,
    HHProfile,
    euler_characteristic,
    hh_b_formula,
    hh_bar_oracle,
    hh_graded_kronecker,
    hh_koszul,
    hh_kronecker_formula,
    hh_top_formula,
    top_image_rank,
    koszul_cochain_complex,
)
from .linalg import RationalMatrix
from .modules import (
    ModuleMap,
    Representation,
    Resolution,
    ext_dims,
    hom_space,
    ideal_rep,
    is_heredity_ideal,
    is_quasi_hereditary_two_vertex,
    min_resolution,
    projective_cover,
    projective_rep,
    simple_rep,
    socle,
    tilting_check,
)
