"""Workbench for finite IL-algebras.

Build algebras from table descriptions, verify every structural law with
concrete witnesses, enumerate and classify filters, and construct quotient
algebras with exhaustively checked well-definedness.
"""

from .core import (
    MAX_CARRIER,
    FiniteILAlgebra,
    VerificationReport,
    Violation,
    assemble_algebra,
    build_algebra,
    check_identities,
    check_integrality_equivalence,
    check_lattice,
    check_monoid,
    check_residuation,
    derive_arrow,
    is_idempotent,
    transitive_closure,
)
from .errors import (
    AlgebraError,
    BuildError,
    CongruenceError,
    LawViolationError,
    NotAFilterError,
    NotResiduatedError,
    ParseError,
    WellDefinednessError,
)
from .filters import (
    FilterCheck,
    FilterFlags,
    FilterSubset,
    IdempotenceImplicativeResult,
    check_idempotent_implies_implicative,
    classify_all,
    classify_filter,
    enumerate_filters,
    filter_closure,
    is_affine_filter,
    is_distributive_filter,
    is_filter,
    is_implicative_filter,
    is_maximal_filter,
    is_prime_filter,
    subset_mask,
)
from .quotient import (
    QuotientResult,
    QuotientVerdicts,
    TheoremCheck,
    check_affine_quotient,
    check_distributive_quotient,
    check_linear_quotient,
    check_quotient_order,
    congruence_classes,
    quotient_algebra,
)
from .report import ReportDocument, ReportLine, parse_machine
from .specfile import AlgebraSpecDocument, document_of, parse_spec, render_spec

__version__ = "0.1.0"

__all__ = [
    "MAX_CARRIER",
    "FiniteILAlgebra",
    "VerificationReport",
    "Violation",
    "assemble_algebra",
    "build_algebra",
    "check_identities",
    "check_integrality_equivalence",
    "check_lattice",
    "check_monoid",
    "check_residuation",
    "derive_arrow",
    "is_idempotent",
    "transitive_closure",
    "AlgebraError",
    "BuildError",
    "CongruenceError",
    "LawViolationError",
    "NotAFilterError",
    "NotResiduatedError",
    "ParseError",
    "WellDefinednessError",
    "FilterCheck",
    "FilterFlags",
    "FilterSubset",
    "IdempotenceImplicativeResult",
    "check_idempotent_implies_implicative",
    "classify_all",
    "classify_filter",
    "enumerate_filters",
    "filter_closure",
    "is_affine_filter",
    "is_distributive_filter",
    "is_filter",
    "is_implicative_filter",
    "is_maximal_filter",
    "is_prime_filter",
    "subset_mask",
    "QuotientResult",
    "QuotientVerdicts",
    "TheoremCheck",
    "check_affine_quotient",
    "check_distributive_quotient",
    "check_linear_quotient",
    "check_quotient_order",
    "congruence_classes",
    "quotient_algebra",
    "ReportDocument",
    "ReportLine",
    "parse_machine",
    "AlgebraSpecDocument",
    "document_of",
    "parse_spec",
    "render_spec",
]
