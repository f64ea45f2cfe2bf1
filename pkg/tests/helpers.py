"""Corpus and strategies shared by the test modules."""

import itertools
import random

from hypothesis import strategies as st

from derivrex import EMPTY, EPSILON, Concat, Diff, Intersect, Star, Sym, Union, parse

# Expressions drawn from the identity suite, its non-identity counterparts,
# and the worked derivative examples.  Together with the random terms below
# they form the corpus the agreement tests sweep over.
SUITE_TEXTS = [
    "(1+a)*", "a*", "a*(1+a)", "(1+a)+a*", "b+a*b", "a*b", "b+ba*", "ba*",
    "1+aa*", "(a+b)*", "(a*b*)*", "0a", "a0", "0", "0+a", "a+0", "a",
    "1+a*", "a(b+c)", "ab+ac", "(a+b)c", "ac+bc", "(a*+b*)*", "1a", "a1",
    "1*", "1", "a*+b*", "(ab)*", "a*b*", "ab", "ba",
    "a(a+b)*", "ab(a+b)*", "(a+b)*a", "(a+b)ab",
]

RANDOM_SEED = 1105


def random_terms(count=20, depth=4, seed=RANDOM_SEED):
    """Deterministic sample of terms over {a, b} up to the given depth."""
    rng = random.Random(seed)
    leaves = [EMPTY, EPSILON, Sym("a"), Sym("b")]

    def gen(d):
        if d == 0 or rng.random() < 0.2:
            return rng.choice(leaves)
        kind = rng.randrange(6)
        if kind == 0:
            return Union(gen(d - 1), gen(d - 1))
        if kind == 1:
            return Concat(gen(d - 1), gen(d - 1))
        if kind == 2:
            return Star(gen(d - 1))
        if kind == 3:
            return Intersect(gen(d - 1), gen(d - 1))
        if kind == 4:
            return Diff(gen(d - 1), gen(d - 1))
        return rng.choice(leaves)

    return [gen(depth) for _ in range(count)]


def full_corpus():
    return [parse(t) for t in SUITE_TEXTS] + random_terms()


def words_upto(k, alphabet="ab"):
    """Every word over *alphabet* of length at most *k*, shortest first."""
    words = [""]
    for n in range(1, k + 1):
        words.extend("".join(p) for p in itertools.product(alphabet, repeat=n))
    return words


def regexes(alphabet="ab", max_leaves=8):
    """Hypothesis strategy producing arbitrary (uncanonical) terms."""
    leaves = st.sampled_from([EMPTY, EPSILON] + [Sym(c) for c in alphabet])

    def compound(children):
        return st.one_of(
            st.builds(Union, children, children),
            st.builds(Concat, children, children),
            st.builds(Star, children),
            st.builds(Intersect, children, children),
            st.builds(Diff, children, children),
        )

    return st.recursive(leaves, compound, max_leaves=max_leaves)
