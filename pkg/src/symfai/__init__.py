"""symfai: exact analysis of symmetric Boolean functions against algebraic attacks."""

from .attacks import (
    AttackCertificate,
    BoundReport,
    GapStatistic,
    affine_multiplier,
    all_certificates,
    bound_suite,
    near_power_certificate,
    product_degree_gap_statistic,
    residue_multipliers,
)
from .dense import (
    DenseAnf,
    DenseBooleanFunction,
    ai,
    anf_to_table,
    dense_degree,
    dense_from_sanfv,
    dense_from_values,
    dense_mul,
    min_annihilator_degree,
    min_multiplier_degree,
    moebius,
)
from .errors import CapabilityError, InvariantViolation
from .immunity import ImmunityProfile, ai_symmetric, fai, is_aar, min_product_degree, profile
from .sanfv import (
    DecomposedForm,
    Sanfv,
    SplitForm,
    WeightValueVector,
    add,
    binom_parity,
    compose,
    decompose,
    degree,
    evaluate,
    majority,
    mul,
    parse_function,
    sigma,
    sigma_product_binomial,
    split,
    threshold,
    to_sanfv,
    to_values,
)
from .search import SearchReport, emit_tables, find_symmetric_mai, profile_all, tables_csv

__version__ = "0.1.0"

__all__ = [
    "AttackCertificate",
    "BoundReport",
    "CapabilityError",
    "DecomposedForm",
    "DenseAnf",
    "DenseBooleanFunction",
    "GapStatistic",
    "ImmunityProfile",
    "InvariantViolation",
    "Sanfv",
    "SearchReport",
    "SplitForm",
    "WeightValueVector",
    "add",
    "affine_multiplier",
    "ai",
    "ai_symmetric",
    "all_certificates",
    "anf_to_table",
    "binom_parity",
    "bound_suite",
    "compose",
    "decompose",
    "degree",
    "dense_degree",
    "dense_from_sanfv",
    "dense_from_values",
    "dense_mul",
    "emit_tables",
    "evaluate",
    "fai",
    "find_symmetric_mai",
    "is_aar",
    "majority",
    "min_annihilator_degree",
    "min_multiplier_degree",
    "min_product_degree",
    "moebius",
    "mul",
    "near_power_certificate",
    "parse_function",
    "product_degree_gap_statistic",
    "profile",
    "profile_all",
    "residue_multipliers",
    "sigma",
    "sigma_product_binomial",
    "split",
    "tables_csv",
    "threshold",
    "to_sanfv",
    "to_values",
]
