"""
Nonnegative flags that do not extend, their certificates, and the D(4) Pfaffian example
"""
from counterexamples.constructions import (
    Construction,
    ConstructionError,
    b2_equality_report,
    build_counterexample,
    extend_B2,
    verify_construction,
)
from counterexamples.certifier import (
    PROVEN,
    UNKNOWN,
    Certificate,
    ExtensionProblem,
    certify_construction,
    certify_flag,
    falsify,
    no_extension_certificate,
    reduce_by_interval_then_certify,
)
from counterexamples.hints import HintError, HintParser, ProofHint, load_hints
from counterexamples.catalog import Catalog, catalog_entries, catalog_ranks
from counterexamples.type_d import PfaffianPoint, pfaffian_demo_report, type_d_report, typeD_pfaffian_point

__all__ = [
    "PROVEN",
    "UNKNOWN",
    "Catalog",
    "Certificate",
    "Construction",
    "ConstructionError",
    "ExtensionProblem",
    "HintError",
    "HintParser",
    "PfaffianPoint",
    "ProofHint",
    "b2_equality_report",
    "build_counterexample",
    "catalog_entries",
    "catalog_ranks",
    "certify_construction",
    "certify_flag",
    "extend_B2",
    "falsify",
    "load_hints",
    "no_extension_certificate",
    "pfaffian_demo_report",
    "reduce_by_interval_then_certify",
    "type_d_report",
    "typeD_pfaffian_point",
    "verify_construction",
]
