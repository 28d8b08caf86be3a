"""choicekit: exact inference from recorded choices.

Record which options a decision maker kept from offered menus, derive the
induced assessment, check that it admits a coherent extension, shrink it to
an equivalent smaller form, and answer new choice queries conservatively.
All arithmetic is exact rational; every feasibility answer carries a
checkable certificate.
"""

from .assessment import (
    Assessment,
    ChoiceStatement,
    InvalidStatementError,
    derive_assessment,
    validate_statement,
)
from .extension import (
    ChoiceResult,
    ConsistencyResult,
    InconsistentAssessmentError,
    MembershipResult,
    choose,
    is_consistent,
    is_in_extension,
)
from .lp import (
    FeasibilityCertificate,
    FeasibilityProblem,
    canonical_certificate,
    fm_oracle,
    is_feasible,
    verify_certificate,
)
from .numeric import Rational, RationalParseError, format_rational, parse_rational
from .simplify import (
    SimplificationReport,
    dominance_mu,
    remove_redundant_sets,
    simplify,
    simplify_option_sets,
)
from .space import OptionSet, OptionVec, OutcomeSpace, SpaceMismatchError

__all__ = [
    "Assessment",
    "ChoiceResult",
    "ChoiceStatement",
    "ConsistencyResult",
    "FeasibilityCertificate",
    "FeasibilityProblem",
    "InconsistentAssessmentError",
    "InvalidStatementError",
    "MembershipResult",
    "OptionSet",
    "OptionVec",
    "OutcomeSpace",
    "Rational",
    "RationalParseError",
    "SimplificationReport",
    "SpaceMismatchError",
    "canonical_certificate",
    "choose",
    "derive_assessment",
    "dominance_mu",
    "fm_oracle",
    "format_rational",
    "is_consistent",
    "is_feasible",
    "is_in_extension",
    "parse_rational",
    "remove_redundant_sets",
    "simplify",
    "simplify_option_sets",
    "validate_statement",
    "verify_certificate",
]

__version__ = "0.1.0"
