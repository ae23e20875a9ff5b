"""Zero-pronoun antecedent constraints for romanized Japanese complex sentences."""

import json

from ._jzero import (
    BuildError,
    Error,
    Inconsistent,
    MorphError,
    ParseError,
    analyze_text,
    describe_predicate,
    oracle_agrees,
    rule_table,
    segment,
)
from ._jzero import analyze_json as _analyze_json

__all__ = [
    "BuildError",
    "Error",
    "Inconsistent",
    "MorphError",
    "ParseError",
    "analyze",
    "analyze_text",
    "describe_predicate",
    "oracle_agrees",
    "rule_table",
    "segment",
]


def analyze(sentence, context=None, lexicon=None, rules=None):
    """Analyze one sentence and return the report as a dict.

    ``context`` is the text of a context file (``speaker:``, ``entities:`` ...);
    ``lexicon`` and ``rules`` are paths replacing the bundled data.
    """
    return json.loads(_analyze_json(sentence, context, lexicon, rules))
