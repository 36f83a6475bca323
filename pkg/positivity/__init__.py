"""
Lusztig positivity against Plücker positivity on flag varieties
"""
from positivity.sampling import ParameterError, longest_word, make_rng
from positivity.flags import (
    flag_from_group_element,
    is_plucker_positive_flag,
    positivity_problems,
    standard_flag,
)
from positivity.deodhar import MRPoint, fold_cell_containment_check, marsh_rietsch_point
from positivity.reports import Check, Report
from positivity.harness import (
    PositiveSample,
    distinguished_report,
    boundary_curve_sample,
    duality_report,
    fold_report,
    longest_word_folding_report,
    lusztig_positive_sample,
    mr_consistency_report,
    pinning_report,
    theorem_forward_report,
    word_independence_report,
)

__all__ = [
    "Check",
    "MRPoint",
    "ParameterError",
    "PositiveSample",
    "Report",
    "distinguished_report",
    "boundary_curve_sample",
    "duality_report",
    "fold_report",
    "flag_from_group_element",
    "fold_cell_containment_check",
    "is_plucker_positive_flag",
    "longest_word",
    "longest_word_folding_report",
    "lusztig_positive_sample",
    "make_rng",
    "marsh_rietsch_point",
    "mr_consistency_report",
    "pinning_report",
    "positivity_problems",
    "standard_flag",
    "theorem_forward_report",
    "word_independence_report",
]
