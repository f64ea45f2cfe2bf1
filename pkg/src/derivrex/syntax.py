"""Regular-expression terms, their concrete syntax, and canonical forms.

The term language is the classic one extended with intersection and
difference: the empty language, the empty word, single symbols, union,
concatenation, and Kleene star, plus ``&`` and ``-``.  Symbols are single
lowercase ASCII letters, so the atoms ``0`` (empty language) and ``1``
(empty word) can never collide with them.

Concrete syntax::

    union   :=  diff ('+' diff)*
    diff    :=  inter ('-' inter)*
    inter   :=  concat ('&' concat)*
    concat  :=  starred starred*           juxtaposition
    starred :=  atom '*'*
    atom    :=  '0' | '1' | letter | '(' union ')'

``*`` binds tightest, then juxtaposition, then ``&``, ``-`` and ``+`` in
decreasing precedence.  The infix operators associate to the left;
juxtaposition nests to the right.  Whitespace between tokens is skipped.

Canonical form identifies terms up to associativity, commutativity and
idempotence of ``+`` and ``&``, drops ``0``/``1`` units, and collapses
nested stars, which keeps the set of derivatives of any term finite.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import AlphabetError, ParseError

# A word is a plain string of alphabet symbols; "" is the empty word.
Word = str

LETTERS = frozenset(string.ascii_lowercase)


class Regex:
    """Base class for terms.  Instances are immutable and hashable."""

    __slots__ = ()

    def __repr__(self) -> str:
        return f"<regex {render(self)}>"


@dataclass(frozen=True, repr=False)
class Empty(Regex):
    """The empty language, written ``0``."""


@dataclass(frozen=True, repr=False)
class Epsilon(Regex):
    """The language containing only the empty word, written ``1``."""


@dataclass(frozen=True, repr=False)
class Sym(Regex):
    ch: str


@dataclass(frozen=True, repr=False)
class Union(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, repr=False)
class Concat(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, repr=False)
class Star(Regex):
    inner: Regex


@dataclass(frozen=True, repr=False)
class Intersect(Regex):
    left: Regex
    right: Regex


@dataclass(frozen=True, repr=False)
class Diff(Regex):
    left: Regex
    right: Regex


EMPTY = Empty()
EPSILON = Epsilon()


def require_symbol(ch: str) -> None:
    """Reject anything that is not a single lowercase ASCII letter."""
    if len(ch) != 1 or ch not in LETTERS:
        raise AlphabetError(f"{ch!r} is not a single lowercase letter")


def letters(e: Regex) -> frozenset[str]:
    """The set of symbols occurring in a term."""
    match e:
        case Sym(ch):
            return frozenset(ch)
        case Union(l, r) | Concat(l, r) | Intersect(l, r) | Diff(l, r):
            return letters(l) | letters(r)
        case Star(x):
            return letters(x)
        case _:
            return frozenset()


def word_regex(w: Word) -> Regex:
    """The literal term whose language is exactly {w}, in canonical form."""
    for ch in w:
        require_symbol(ch)
    if not w:
        return EPSILON
    node: Regex = Sym(w[-1])
    for ch in reversed(w[:-1]):
        node = Concat(Sym(ch), node)
    return node


# ---------------------------------------------------------------------------
# Parsing


def parse(text: str, alphabet: Iterable[str] | None = None) -> Regex:
    """Parse *text* into a term that mirrors its structure exactly.

    No canonicalization happens here.  When *alphabet* is given, letters
    outside it raise AlphabetError; otherwise any lowercase letter is
    accepted.
    """
    allowed = None if alphabet is None else frozenset(alphabet)
    parser = _Parser(text, allowed)
    node = parser.union()
    if parser.peek():
        raise ParseError(f"unexpected {parser.peek()!r}", parser.pos)
    return node


class _Parser:
    def __init__(self, text: str, allowed: frozenset[str] | None):
        self.text = text
        self.allowed = allowed
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def union(self) -> Regex:
        node = self.diff()
        while self.peek() == "+":
            self.pos += 1
            node = Union(node, self.diff())
        return node

    def diff(self) -> Regex:
        node = self.inter()
        while self.peek() == "-":
            self.pos += 1
            node = Diff(node, self.inter())
        return node

    def inter(self) -> Regex:
        node = self.concat()
        while self.peek() == "&":
            self.pos += 1
            node = Intersect(node, self.concat())
        return node

    def concat(self) -> Regex:
        parts = [self.starred()]
        while self._at_atom():
            parts.append(self.starred())
        node = parts[-1]
        for part in reversed(parts[:-1]):  # juxtaposition nests to the right
            node = Concat(part, node)
        return node

    def starred(self) -> Regex:
        node = self.atom()
        while self.peek() == "*":
            self.pos += 1
            node = Star(node)
        return node

    def atom(self) -> Regex:
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return EMPTY
        if ch == "1":
            self.pos += 1
            return EPSILON
        if ch == "(":
            self.pos += 1
            node = self.union()
            if self.peek() != ")":
                raise ParseError("expected ')'", self.pos)
            self.pos += 1
            return node
        if ch in LETTERS:
            if self.allowed is not None and ch not in self.allowed:
                raise AlphabetError(
                    f"symbol {ch!r} at position {self.pos} is not in the alphabet"
                )
            self.pos += 1
            return Sym(ch)
        if not ch:
            raise ParseError("unexpected end of input", self.pos)
        raise ParseError(f"unexpected {ch!r}", self.pos)

    def _at_atom(self) -> bool:
        ch = self.peek()
        return bool(ch) and (ch in "01(" or ch in LETTERS)


# ---------------------------------------------------------------------------
# Printing

_UNION_PREC, _DIFF_PREC, _INTER_PREC, _CONCAT_PREC, _STAR_PREC, _ATOM_PREC = range(6)


def render(e: Regex) -> str:
    """Concrete syntax for a term.  parse(render(e)) gives back e itself."""
    return _render(e, _UNION_PREC)


def _render(e: Regex, context: int) -> str:
    match e:
        case Empty():
            return "0"
        case Epsilon():
            return "1"
        case Sym(ch):
            return ch
        case Star(x):
            return _wrap(_render(x, _STAR_PREC) + "*", _STAR_PREC, context)
        case Concat(l, r):
            body = _render(l, _STAR_PREC) + _render(r, _CONCAT_PREC)
            return _wrap(body, _CONCAT_PREC, context)
        case Intersect(l, r):
            body = _render(l, _INTER_PREC) + "&" + _render(r, _CONCAT_PREC)
            return _wrap(body, _INTER_PREC, context)
        case Diff(l, r):
            body = _render(l, _DIFF_PREC) + "-" + _render(r, _INTER_PREC)
            return _wrap(body, _DIFF_PREC, context)
        case Union(l, r):
            body = _render(l, _UNION_PREC) + "+" + _render(r, _DIFF_PREC)
            return _wrap(body, _UNION_PREC, context)
        case _:
            raise TypeError(f"not a regex term: {e!r}")


def _wrap(body: str, prec: int, context: int) -> str:
    return f"({body})" if prec < context else body


# ---------------------------------------------------------------------------
# Term ordering


@lru_cache(maxsize=None)
def _term_key(e: Regex) -> tuple:
    match e:
        case Empty():
            return (0,)
        case Epsilon():
            return (1,)
        case Sym(ch):
            return (2, ch)
        case Star(x):
            return (3, _term_key(x))
        case Concat(l, r):
            return (4, _term_key(l), _term_key(r))
        case Intersect(l, r):
            return (5, _term_key(l), _term_key(r))
        case Diff(l, r):
            return (6, _term_key(l), _term_key(r))
        case Union(l, r):
            return (7, _term_key(l), _term_key(r))
        case _:
            raise TypeError(f"not a regex term: {e!r}")


def term_order(a: Regex, b: Regex) -> int:
    """Three-way comparison defining a strict total order on terms.

    Constructors rank 0 < 1 < symbol < star < concatenation < intersection
    < difference < union; ties are broken by comparing fields left to right.
    """
    ka, kb = _term_key(a), _term_key(b)
    return (ka > kb) - (ka < kb)


def _sum_key(e: Regex) -> tuple:
    # 1 and 0 sort last inside canonical sums so results read the way sums
    # are conventionally written: "(a+b)*a+1" rather than "1+(a+b)*a".
    return (isinstance(e, (Empty, Epsilon)), _term_key(e))


# ---------------------------------------------------------------------------
# Canonical forms
#
# The builders below assume canonical arguments and produce canonical
# results; `canonicalize` applies them bottom-up to arbitrary terms.  Only
# unit laws, ACI laws, and star collapses are rewritten here.  Identities
# that need semantic reasoning, such as (1+a)* = a*, are deliberately left
# to the equivalence checker.


def union(left: Regex, right: Regex) -> Regex:
    """Canonical union: flatten, drop 0, sort, deduplicate."""
    args = sorted(
        {a for side in (left, right) for a in _union_args(side) if a != EMPTY},
        key=_sum_key,
    )
    if not args:
        return EMPTY
    node = args[0]
    for arg in args[1:]:
        node = Union(node, arg)
    return node


def concat(left: Regex, right: Regex) -> Regex:
    """Canonical concatenation: flatten right-nested, drop 1, absorb 0."""
    parts = list(_concat_args(left)) + list(_concat_args(right))
    if any(p == EMPTY for p in parts):
        return EMPTY
    parts = [p for p in parts if p != EPSILON]
    if not parts:
        return EPSILON
    node = parts[-1]
    for part in reversed(parts[:-1]):
        node = Concat(part, node)
    return node


def star(inner: Regex) -> Regex:
    """Canonical star: 0* = 1* = 1, and a star of a star collapses."""
    if inner == EMPTY or inner == EPSILON:
        return EPSILON
    if isinstance(inner, Star):
        return inner
    return Star(inner)


def intersect(left: Regex, right: Regex) -> Regex:
    """Canonical intersection: flatten, sort, deduplicate, absorb 0."""
    args = {a for side in (left, right) for a in _intersect_args(side)}
    if EMPTY in args:
        return EMPTY
    ordered = sorted(args, key=_sum_key)
    node = ordered[0]
    for arg in ordered[1:]:
        node = Intersect(node, arg)
    return node


def diff(left: Regex, right: Regex) -> Regex:
    """Canonical difference: subtracting 0 or the term itself simplifies."""
    if right == EMPTY:
        return left
    if left == right:
        return EMPTY
    return Diff(left, right)


def _union_args(e: Regex) -> Iterator[Regex]:
    if isinstance(e, Union):
        yield from _union_args(e.left)
        yield from _union_args(e.right)
    else:
        yield e


def _concat_args(e: Regex) -> Iterator[Regex]:
    if isinstance(e, Concat):
        yield from _concat_args(e.left)
        yield from _concat_args(e.right)
    else:
        yield e


def _intersect_args(e: Regex) -> Iterator[Regex]:
    if isinstance(e, Intersect):
        yield from _intersect_args(e.left)
        yield from _intersect_args(e.right)
    else:
        yield e


@lru_cache(maxsize=None)
def canonicalize(e: Regex) -> Regex:
    """Rewrite a term to canonical form.

    The result denotes the same language, and canonicalizing twice gives
    the same term as canonicalizing once.
    """
    match e:
        case Union(l, r):
            return union(canonicalize(l), canonicalize(r))
        case Concat(l, r):
            return concat(canonicalize(l), canonicalize(r))
        case Star(x):
            return star(canonicalize(x))
        case Intersect(l, r):
            return intersect(canonicalize(l), canonicalize(r))
        case Diff(l, r):
            return diff(canonicalize(l), canonicalize(r))
        case _:
            return e
