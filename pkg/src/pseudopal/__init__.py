"""Binary generalized pseudostandard sequences and their string attractors.

Construct prefix chains by iterated palindromic/antipalindromic closure,
build the closed-form attractors of the Sturmian, pseudostandard and Rote
families, verify attractors, search exact minimal ones, and scan directive
space against the size-at-most-four conjecture.
"""

from ._backend import backend_name
from .attractor import (
    Attractor,
    MinimalityVerdict,
    SizeClass,
    VerificationReport,
    attractor_of,
    minimal_attractor,
    minimal_size,
    mirror,
    pseudostandard_attractor,
    rote_attractor,
    sturmian_attractor,
    verify,
)
from .directive import (
    DEFAULT_MAX_LEN,
    ChainStep,
    DirectiveBiSequence,
    PrefixChain,
    SequenceClass,
    SequenceFamily,
    classify,
    generate,
    is_aperiodic,
    parse,
    pseudopalindromic_prefixes,
)
from .errors import BudgetExceededError, ClassMismatchError, ParseError, StepRangeError
from .explorer import ScanRecord, ScanResult, family_report, scan
from .words import (
    ClosureKind,
    antipalindromic_closure,
    closure,
    complement,
    exchange,
    is_antipalindrome,
    is_palindrome,
    is_pseudopalindrome,
    longest_pp_prefix_followed_by,
    palindromic_closure,
    pseudopalindromic_prefix_lengths,
    reverse,
    s_derivative,
)

__version__ = "0.1.0"

__all__ = [
    "Attractor",
    "BudgetExceededError",
    "ChainStep",
    "ClassMismatchError",
    "ClosureKind",
    "DEFAULT_MAX_LEN",
    "DirectiveBiSequence",
    "MinimalityVerdict",
    "ParseError",
    "PrefixChain",
    "ScanRecord",
    "ScanResult",
    "SequenceClass",
    "SequenceFamily",
    "SizeClass",
    "StepRangeError",
    "VerificationReport",
    "antipalindromic_closure",
    "attractor_of",
    "backend_name",
    "classify",
    "closure",
    "complement",
    "exchange",
    "family_report",
    "generate",
    "is_antipalindrome",
    "is_aperiodic",
    "is_palindrome",
    "is_pseudopalindrome",
    "longest_pp_prefix_followed_by",
    "minimal_attractor",
    "minimal_size",
    "mirror",
    "palindromic_closure",
    "parse",
    "pseudopalindromic_prefix_lengths",
    "pseudopalindromic_prefixes",
    "pseudostandard_attractor",
    "reverse",
    "rote_attractor",
    "s_derivative",
    "scan",
    "sturmian_attractor",
    "verify",
]
