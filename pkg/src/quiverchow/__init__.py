"""Chow-theoretic block series and algebra arithmetic for quiver flag
varieties: orbit enumeration, affine pavings with point-count oracles,
graded dimensions of extension-algebra blocks, the polynomial realization
of quiver Hecke algebras, smash products, and a desk-scale homotopy
category of graded free complexes."""

from .extalg import (
    BlockKey,
    GdimReport,
    compare_block,
    gdim_alg_klr,
    gdim_geo,
    gdim_schur_table,
    springer_smash_gdim,
)
from .homotopy import (
    AlgebraHandle,
    ChainMap,
    FreeObject,
    GradedComplex,
    Generator,
    KLRHandle,
    SmashHandle,
    complex_from_json,
    complex_to_json,
    complexes_equal,
    cone,
    euler_symbol,
    identity_map,
    minimize,
    parse_element,
    parse_handle,
    random_complex,
    shift,
    twist,
    validate,
    validate_chain_map,
    weight_truncate,
)
from .klrpoly import (
    KLROperator,
    LabeledPoly,
    Poly,
    SmashElement,
    act,
    content_words,
    relation_suite,
    smash_center_dims,
    smash_mul,
)
from .nilrep import (
    Multisegment,
    Segment,
    aut_series_exponents,
    enumerate_nilreps,
    hom_dim,
    intertwiner_dim,
    orbit_dim,
    parse_multisegment,
    quotient_by_socles,
    semisimple_class,
    socle_basis,
)
from .paving import CellSet, PoincarePolynomial, count_points, paving_cells, poincare
from .quiver import (
    Composition,
    DimVector,
    Quiver,
    cartan,
    dim_flag,
    dim_qvariety,
    enumerate_complete_comps,
    enumerate_compositions,
    parse_composition,
    parse_dimvector,
    parse_quiver,
    parse_word,
    unit_vector,
)
from .series import DEFAULT_TRUNC, HalfLaurentSeries, bgl, first_discrepancy

__version__ = "0.1.0"

__all__ = [
    "AlgebraHandle",
    "BlockKey",
    "CellSet",
    "ChainMap",
    "Composition",
    "DEFAULT_TRUNC",
    "DimVector",
    "FreeObject",
    "GdimReport",
    "GradedComplex",
    "Generator",
    "HalfLaurentSeries",
    "KLRHandle",
    "KLROperator",
    "LabeledPoly",
    "Multisegment",
    "PoincarePolynomial",
    "Poly",
    "Quiver",
    "Segment",
    "SmashElement",
    "SmashHandle",
    "act",
    "aut_series_exponents",
    "bgl",
    "cartan",
    "compare_block",
    "complex_from_json",
    "complex_to_json",
    "complexes_equal",
    "cone",
    "content_words",
    "count_points",
    "dim_flag",
    "dim_qvariety",
    "enumerate_complete_comps",
    "enumerate_compositions",
    "enumerate_nilreps",
    "euler_symbol",
    "first_discrepancy",
    "gdim_alg_klr",
    "gdim_geo",
    "gdim_schur_table",
    "hom_dim",
    "identity_map",
    "intertwiner_dim",
    "minimize",
    "orbit_dim",
    "parse_composition",
    "parse_dimvector",
    "parse_element",
    "parse_handle",
    "parse_multisegment",
    "parse_quiver",
    "parse_word",
    "paving_cells",
    "poincare",
    "quotient_by_socles",
    "random_complex",
    "relation_suite",
    "semisimple_class",
    "shift",
    "smash_center_dims",
    "smash_mul",
    "socle_basis",
    "springer_smash_gdim",
    "twist",
    "unit_vector",
    "validate",
    "validate_chain_map",
    "weight_truncate",
]
