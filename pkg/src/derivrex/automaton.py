"""DFA construction by derivative closure, equivalence, and exports.

States of the automaton are canonical terms; the transition on a symbol is
the derivative.  Equivalence of two terms is a breadth-first bisimulation
over pairs of derivatives, which also yields a shortest counterexample
when the languages differ.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .derivative import _deriv, nullable
from .errors import AlphabetError, PairBudgetError, StateBudgetError
from .syntax import Regex, Word, canonicalize, parse, render, require_symbol

DEFAULT_MAX_STATES = 10_000
DEFAULT_MAX_PAIRS = 100_000


@dataclass(frozen=True)
class Dfa:
    """A total deterministic automaton over an ordered alphabet.

    ``transitions[i][j]`` is the state reached from state ``i`` on the
    ``j``-th alphabet symbol.  State 0 is always the start state.
    """

    states: tuple[Regex, ...]
    alphabet: tuple[str, ...]
    start: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of an equivalence check.

    When *equal* is False, *counterexample* is a shortest word on which the
    two languages disagree.
    """

    equal: bool
    counterexample: str | None = None


def _normalize_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    symbols = tuple(dict.fromkeys(alphabet))
    for ch in symbols:
        require_symbol(ch)
    return symbols


def build_dfa(
    e: Regex,
    alphabet: Iterable[str],
    max_states: int = DEFAULT_MAX_STATES,
) -> Dfa:
    """Close the canonical form of *e* under derivatives.

    States are discovered breadth-first, symbols in alphabet order, so the
    construction is deterministic.  Raises StateBudgetError if more than
    *max_states* states turn up.
    """
    if max_states < 1:
        raise ValueError("max_states must be positive")
    alpha = _normalize_alphabet(alphabet)
    start = canonicalize(e)
    index = {start: 0}
    states = [start]
    rows = []
    pos = 0
    while pos < len(states):
        row = []
        for a in alpha:
            target = _deriv(a, states[pos])
            where = index.get(target)
            if where is None:
                if len(states) >= max_states:
                    raise StateBudgetError(len(states) + 1, max_states)
                where = len(states)
                index[target] = where
                states.append(target)
            row.append(where)
        rows.append(tuple(row))
        pos += 1
    accepting = frozenset(i for i, t in enumerate(states) if nullable(t))
    return Dfa(tuple(states), alpha, 0, accepting, tuple(rows))


def dfa_accepts(d: Dfa, w: Word) -> bool:
    """Run the automaton over *w* and report acceptance."""
    columns = {a: i for i, a in enumerate(d.alphabet)}
    state = d.start
    for ch in w:
        if ch not in columns:
            raise AlphabetError(f"symbol {ch!r} is not in the automaton's alphabet")
        state = d.transitions[state][columns[ch]]
    return state in d.accepting


def equivalent(
    e: Regex,
    f: Regex,
    alphabet: Iterable[str],
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> EquivVerdict:
    """Decide whether *e* and *f* denote the same language.

    Breadth-first search over pairs of derivatives: a pair with differing
    nullability refutes equality, and the word that reached it is as short
    as possible (ties broken in alphabet order).  Raises PairBudgetError if
    more than *max_pairs* pairs are explored.
    """
    if max_pairs < 1:
        raise ValueError("max_pairs must be positive")
    alpha = _normalize_alphabet(alphabet)
    first = (canonicalize(e), canonicalize(f))
    seen = {first}
    queue: deque[tuple[tuple[Regex, Regex], str]] = deque([(first, "")])
    while queue:
        (p, q), word = queue.popleft()
        if nullable(p) != nullable(q):
            return EquivVerdict(False, word)
        for a in alpha:
            pair = (_deriv(a, p), _deriv(a, q))
            if pair not in seen:
                if len(seen) >= max_pairs:
                    raise PairBudgetError(len(seen) + 1, max_pairs)
                seen.add(pair)
                queue.append((pair, word + a))
    return EquivVerdict(True, None)


def to_dot(d: Dfa) -> str:
    """Graphviz source: doubled borders mark accepting states, an unlabeled
    arrow marks the start, and nodes appear in state order."""
    lines = [
        "digraph dfa {",
        "  rankdir=LR;",
        '  __start [shape=none,label=""];',
        f"  __start -> s{d.start};",
    ]
    for i, state in enumerate(d.states):
        shape = "doublecircle" if i in d.accepting else "circle"
        lines.append(f'  s{i} [shape={shape},label="{render(state)}"];')
    for i, row in enumerate(d.transitions):
        for a, j in zip(d.alphabet, row):
            lines.append(f'  s{i} -> s{j} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines)


def to_json(d: Dfa) -> str:
    """Compact JSON document; byte-identical output for equal automata."""
    doc = {
        "alphabet": list(d.alphabet),
        "states": [render(state) for state in d.states],
        "start": d.start,
        "accepting": sorted(d.accepting),
        "transitions": [
            {"from": i, "symbol": a, "to": j}
            for i, row in enumerate(d.transitions)
            for a, j in zip(d.alphabet, row)
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> Dfa:
    """Rebuild an automaton from its to_json document."""
    doc = json.loads(text)
    alphabet = tuple(doc["alphabet"])
    states = tuple(parse(s) for s in doc["states"])
    moves = {(t["from"], t["symbol"]): t["to"] for t in doc["transitions"]}
    rows = tuple(
        tuple(moves[(i, a)] for a in alphabet) for i in range(len(states))
    )
    return Dfa(states, alphabet, doc["start"], frozenset(doc["accepting"]), rows)
