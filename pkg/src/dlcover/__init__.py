"""Exact invariants of torus covers attached to words in a Weyl group."""

from .frobenius import (
    DQCertificate,
    FrobeniusTwist,
    NoCertificate,
    NoSuchAutomorphism,
    NotPrimePower,
    discover_dq,
    is_prime_power,
    make_raw,
    make_split,
    make_twisted,
    norm_matrix,
    twist_from_json,
    twist_to_json,
    wf_matrix,
)
from .invariants import (
    LambdaM,
    NoIntegralSolution,
    QuotientIsoResult,
    RamificationEntry,
    StratumInfo,
    TooManyStrata,
    f_gamma_check,
    full_report,
    gamma_matrices,
    h_group,
    lambda_m,
    lambda_m_all,
    norm_identity_check,
    quotient_iso_check,
    ramification_report,
    stabilizer,
    strata_report,
    torus_group,
)
from .lattice import (
    FiniteAbelianGroup,
    IntMatrix,
    SingularMatrix,
    SNFResult,
    ZeroVector,
    cokernel,
    inverse_unimodular,
    kernel_mod,
    primitive_part,
    snf,
    solve_rational,
    subgroup_image,
)
from .rootdata import (
    BadCartan,
    ImprimitiveCoroot,
    RootDatum,
    UnknownPreset,
    beta_coroot,
    check_mask,
    check_word,
    datum_from_json,
    datum_to_json,
    preset,
    reflection_on_Y,
    subword,
    subword_lattice_generators,
    validate,
    word_matrix,
)
from .sl2 import (
    GF,
    DrinfeldReport,
    FieldUnsupported,
    PhiReport,
    check_phi,
    drinfeld_points,
    phi,
    sl2_elements,
)

__version__ = "0.1.0"

__all__ = [
    "BadCartan",
    "DQCertificate",
    "DrinfeldReport",
    "FieldUnsupported",
    "FiniteAbelianGroup",
    "FrobeniusTwist",
    "GF",
    "ImprimitiveCoroot",
    "IntMatrix",
    "LambdaM",
    "NoCertificate",
    "NoIntegralSolution",
    "NoSuchAutomorphism",
    "NotPrimePower",
    "PhiReport",
    "QuotientIsoResult",
    "RamificationEntry",
    "RootDatum",
    "SNFResult",
    "SingularMatrix",
    "StratumInfo",
    "TooManyStrata",
    "UnknownPreset",
    "ZeroVector",
    "beta_coroot",
    "check_mask",
    "check_phi",
    "check_word",
    "cokernel",
    "datum_from_json",
    "datum_to_json",
    "discover_dq",
    "drinfeld_points",
    "f_gamma_check",
    "full_report",
    "gamma_matrices",
    "h_group",
    "inverse_unimodular",
    "is_prime_power",
    "kernel_mod",
    "lambda_m",
    "lambda_m_all",
    "make_raw",
    "make_split",
    "make_twisted",
    "norm_identity_check",
    "norm_matrix",
    "phi",
    "preset",
    "primitive_part",
    "quotient_iso_check",
    "ramification_report",
    "reflection_on_Y",
    "snf",
    "solve_rational",
    "stabilizer",
    "strata_report",
    "subgroup_image",
    "subword",
    "subword_lattice_generators",
    "torus_group",
    "twist_from_json",
    "twist_to_json",
    "validate",
    "wf_matrix",
    "word_matrix",
]
