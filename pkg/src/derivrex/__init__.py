"""Derivative-based regular-expression engine.

Matching, DFA construction, and equivalence checking all reduce to one
operation: the derivative of an expression by a symbol.  A separate
brute-force enumerator provides an independent semantics for cross-checks.
"""

from .automaton import (
    Dfa,
    EquivVerdict,
    build_dfa,
    dfa_accepts,
    equivalent,
    from_json,
    to_dot,
    to_json,
)
from .derivative import (
    concat_expansion,
    delta,
    deriv_sym,
    deriv_word,
    matches,
    nullable,
    star_expansion,
)
from .errors import (
    AlphabetError,
    DerivrexError,
    EmptyWordError,
    EnumerationBudgetError,
    PairBudgetError,
    ParseError,
    QuotientBoundError,
    StateBudgetError,
)
from .oracle import LangSample, dump_words, enumerate_lang, lang_equal_upto, quotient
from .syntax import (
    EMPTY,
    EPSILON,
    Concat,
    Diff,
    Empty,
    Epsilon,
    Intersect,
    Regex,
    Star,
    Sym,
    Union,
    Word,
    canonicalize,
    concat,
    diff,
    intersect,
    letters,
    parse,
    render,
    star,
    term_order,
    union,
    word_regex,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "Concat",
    "DerivrexError",
    "Dfa",
    "Diff",
    "EMPTY",
    "EPSILON",
    "Empty",
    "EmptyWordError",
    "EnumerationBudgetError",
    "Epsilon",
    "EquivVerdict",
    "Intersect",
    "LangSample",
    "PairBudgetError",
    "ParseError",
    "QuotientBoundError",
    "Regex",
    "Star",
    "StateBudgetError",
    "Sym",
    "Union",
    "Word",
    "build_dfa",
    "canonicalize",
    "concat",
    "concat_expansion",
    "delta",
    "deriv_sym",
    "deriv_word",
    "dfa_accepts",
    "diff",
    "dump_words",
    "enumerate_lang",
    "equivalent",
    "from_json",
    "intersect",
    "lang_equal_upto",
    "letters",
    "matches",
    "nullable",
    "parse",
    "quotient",
    "render",
    "star",
    "star_expansion",
    "term_order",
    "to_dot",
    "to_json",
    "union",
    "word_regex",
]
