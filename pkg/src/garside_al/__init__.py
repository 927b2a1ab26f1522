"""Garside group arithmetic and the coset complex built on absorbable elements."""

from .structure import GarsideStructure, UnsupportedStructureOperation
from .braid import braid_structure
from .abelian import abelian_structure
from .absorb import (
    AbsorbabilityCertificate,
    CacheError,
    SearchBudgetExceeded,
    absorbs,
    enumerate_absorbable,
    is_absorbable,
    is_absorbable_prime,
)
from .alcomplex import (
    ALVertex,
    EdgeWitness,
    PreferredPath,
    SegmentWitness,
    ThinnessEntry,
    ThinnessReport,
    WitnessError,
    act,
    adjacent_path_diameter_check,
    are_adjacent,
    distance_upper_bound,
    gcd_vertex,
    identity_vertex,
    initial_segment_witnesses,
    overlap_length,
    preferred_path,
    triangle_thinness_report,
    vertex_of,
)
from .element import (
    GarsideElement,
    Stats,
    SizeLimitExceeded,
    complement,
    delta_power,
    fraction_form,
    identity_element,
    invert,
    is_rigid,
    left_divides,
    left_gcd,
    make_element,
    multiply,
    normalize,
    power,
    right_divides,
    right_gcd,
    right_normal_form,
    simple_element,
    stats,
    tau_element,
)
from .special import (
    DecompositionError,
    DecompositionPiece,
    ProbeEntry,
    PropertyCheck,
    PropertyReport,
    RoundCurve,
    TubeDecomposition,
    check_between_powers,
    check_final_segment,
    check_initial_segment,
    check_path_through_powers,
    check_witness_properties,
    delta_three_absorbables,
    distance_witness,
    distance_witness_factor,
    max_power_dividing,
    nine_absorbable_decomposition,
    orbit_diameter_probe,
    push_round_curve,
    tube_decomposition,
)
from .suites import SUITE_NAMES, SuiteCheck, SuiteResult, run_suite
from .words import WordSyntaxError, format_element, format_factors, parse_word

__all__ = [
    "GarsideStructure",
    "UnsupportedStructureOperation",
    "braid_structure",
    "abelian_structure",
    "AbsorbabilityCertificate",
    "CacheError",
    "SearchBudgetExceeded",
    "absorbs",
    "enumerate_absorbable",
    "is_absorbable",
    "is_absorbable_prime",
    "ALVertex",
    "EdgeWitness",
    "PreferredPath",
    "SegmentWitness",
    "ThinnessEntry",
    "ThinnessReport",
    "WitnessError",
    "act",
    "adjacent_path_diameter_check",
    "are_adjacent",
    "distance_upper_bound",
    "gcd_vertex",
    "identity_vertex",
    "initial_segment_witnesses",
    "overlap_length",
    "preferred_path",
    "triangle_thinness_report",
    "vertex_of",
    "GarsideElement",
    "Stats",
    "SizeLimitExceeded",
    "complement",
    "delta_power",
    "fraction_form",
    "identity_element",
    "invert",
    "is_rigid",
    "left_divides",
    "left_gcd",
    "make_element",
    "multiply",
    "normalize",
    "power",
    "right_divides",
    "right_gcd",
    "right_normal_form",
    "simple_element",
    "stats",
    "tau_element",
    "DecompositionError",
    "DecompositionPiece",
    "ProbeEntry",
    "PropertyCheck",
    "PropertyReport",
    "RoundCurve",
    "TubeDecomposition",
    "check_between_powers",
    "check_final_segment",
    "check_initial_segment",
    "check_path_through_powers",
    "check_witness_properties",
    "delta_three_absorbables",
    "distance_witness",
    "distance_witness_factor",
    "max_power_dividing",
    "nine_absorbable_decomposition",
    "orbit_diameter_probe",
    "push_round_curve",
    "tube_decomposition",
    "SUITE_NAMES",
    "SuiteCheck",
    "SuiteResult",
    "run_suite",
    "WordSyntaxError",
    "format_element",
    "format_factors",
    "parse_word",
]

__version__ = "0.1.0"
