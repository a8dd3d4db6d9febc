"""Rule-based Nepali stemmer with intrinsic and extrinsic evaluation harnesses."""

from .normalize import letter_length, normalize_text, normalize_word
from .rules import RuleSet, default_rules, load_rule_set, validate_rule_set
from .stemmer import StemResult, StemStep, stem

__version__ = "0.1.0"

__all__ = [
    "RuleSet",
    "StemResult",
    "StemStep",
    "default_rules",
    "letter_length",
    "load_rule_set",
    "normalize_text",
    "normalize_word",
    "stem",
    "validate_rule_set",
]
