"""Nullability and word derivatives.

The derivative of a language L by a symbol a is {w : aw in L}.  Everything
else in the engine reduces to computing derivatives of terms and asking
whether the result accepts the empty word.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import EmptyWordError
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
    require_symbol,
    star,
    union,
)


@lru_cache(maxsize=None)
def nullable(e: Regex) -> bool:
    """Does the language of *e* contain the empty word?"""
    match e:
        case Empty() | Sym(_):
            return False
        case Epsilon() | Star(_):
            return True
        case Union(l, r):
            return nullable(l) or nullable(r)
        case Concat(l, r) | Intersect(l, r):
            return nullable(l) and nullable(r)
        case Diff(l, r):
            return nullable(l) and not nullable(r)
        case _:
            raise TypeError(f"not a regex term: {e!r}")


def delta(e: Regex) -> Regex:
    """1 if *e* is nullable, 0 otherwise."""
    return EPSILON if nullable(e) else EMPTY


def deriv_sym(a: str, e: Regex) -> Regex:
    """The derivative of *e* by the symbol *a*, in canonical form."""
    require_symbol(a)
    return _deriv(a, canonicalize(e))


@lru_cache(maxsize=None)
def _deriv(a: str, e: Regex) -> Regex:
    # e is canonical, so every subterm is canonical and the builders keep
    # the result canonical.
    match e:
        case Empty() | Epsilon():
            return EMPTY
        case Sym(ch):
            return EPSILON if ch == a else EMPTY
        case Union(l, r):
            return union(_deriv(a, l), _deriv(a, r))
        case Concat(l, r):
            return union(concat(_deriv(a, l), r), concat(delta(l), _deriv(a, r)))
        case Star(x):
            return concat(_deriv(a, x), e)
        case Intersect(l, r):
            return intersect(_deriv(a, l), _deriv(a, r))
        case Diff(l, r):
            return diff(_deriv(a, l), _deriv(a, r))
        case _:
            raise TypeError(f"not a regex term: {e!r}")


def deriv_word(w: Word, e: Regex) -> Regex:
    """Fold deriv_sym over *w*, first symbol first; D_"" is canonicalization."""
    node = canonicalize(e)
    for ch in w:
        require_symbol(ch)
        node = _deriv(ch, node)
    return node


def matches(e: Regex, w: Word) -> bool:
    """Word membership: derive by the whole word, then test nullability."""
    return nullable(deriv_word(w, e))


def concat_expansion(w: Word, e: Regex, f: Regex) -> Regex:
    """Closed form of the word derivative of a concatenation.

    D_w(ef) equals (D_w(e))f plus, for every split w = p.s with s nonempty,
    the term delta(D_p(e)) D_s(f).  Built directly from that sum rather than
    by folding single-symbol steps, it cross-checks deriv_word.
    """
    if not w:
        raise EmptyWordError("concat expansion is defined for nonempty words")
    e, f = canonicalize(e), canonicalize(f)
    node = concat(deriv_word(w, e), f)
    for cut in range(len(w)):
        head, tail = w[:cut], w[cut:]
        node = union(node, concat(delta(deriv_word(head, e)), deriv_word(tail, f)))
    return node


def star_expansion(w: Word, e: Regex) -> Regex:
    """Closed form of the word derivative of e*.

    D_w(e*) equals (D_w(e))e* plus, for every split w = p.s with both parts
    nonempty, the term delta(D_p(e)) D_s(e*), the tail expanded recursively.
    """
    if not w:
        raise EmptyWordError("star expansion is defined for nonempty words")
    e = canonicalize(e)
    node = concat(deriv_word(w, e), star(e))
    for cut in range(1, len(w)):
        head, tail = w[:cut], w[cut:]
        node = union(node, concat(delta(deriv_word(head, e)), star_expansion(tail, e)))
    return node
