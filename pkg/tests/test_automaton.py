"""DFA construction, equivalence verdicts, and the two export formats."""

import pytest

import helpers
from derivrex import (
    AlphabetError,
    StateBudgetError,
    PairBudgetError,
    build_dfa,
    canonicalize,
    dfa_accepts,
    enumerate_lang,
    equivalent,
    from_json,
    letters,
    parse,
    render,
    to_dot,
    to_json,
)

GOLDEN_EMPTY_JSON = (
    '{"alphabet":["a","b"],"states":["0"],"start":0,"accepting":[],'
    '"transitions":[{"from":0,"symbol":"a","to":0},{"from":0,"symbol":"b","to":0}]}'
)


class TestBuildDfa:
    def test_three_state_closure(self):
        d = build_dfa(parse("a(a+b)*"), "ab")
        assert [render(s) for s in d.states] == ["a(a+b)*", "(a+b)*", "0"]
        assert d.accepting == {1}
        # the 0 state is a sink
        assert d.transitions[2] == (2, 2)

    def test_empty_language_is_one_sink(self):
        d = build_dfa(parse("0"), "ab")
        assert len(d.states) == 1
        assert d.accepting == frozenset()

    def test_suffix_star_reaches_the_nullable_variant(self):
        d = build_dfa(parse("(a+b)*a"), "ab")
        assert {render(s) for s in d.states} == {"(a+b)*a", "(a+b)*a+1"}
        a_col = d.alphabet.index("a")
        assert render(d.states[d.transitions[0][a_col]]) == "(a+b)*a+1"

    def test_epsilon_over_two_letters(self):
        d = build_dfa(parse("1"), "ab")
        assert len(d.states) == 2
        assert d.accepting == {0}

    def test_state_budget(self):
        with pytest.raises(StateBudgetError) as err:
            build_dfa(parse("a(a+b)*"), "ab", max_states=2)
        assert err.value.discovered == 3

    def test_identity_corpus_closes_within_64_states(self):
        for text in helpers.SUITE_TEXTS:
            e = parse(text)
            alpha = sorted({"a", "b"} | set(letters(e)))
            d = build_dfa(e, alpha, max_states=64)
            assert len(d.states) <= 64


class TestDfaAccepts:
    def test_word_runs(self):
        d = build_dfa(parse("a(a+b)*"), "ab")
        assert dfa_accepts(d, "abb")
        assert not dfa_accepts(d, "")
        assert not dfa_accepts(d, "ba")

    def test_symbol_outside_alphabet(self):
        d = build_dfa(parse("a*"), "a")
        with pytest.raises(AlphabetError):
            dfa_accepts(d, "ab")


class TestEquivalent:
    def test_equal_pair(self):
        assert equivalent(parse("(a+b)*"), parse("(a*b*)*"), "ab").equal

    def test_unequal_pair_gets_shortest_counterexample(self):
        v = equivalent(parse("(a+b)*"), parse("a*+b*"), "ab")
        assert not v.equal
        assert v.counterexample == "ab"

    def test_nullability_mismatch_is_the_empty_word(self):
        v = equivalent(parse("1"), parse("a"), "a")
        assert not v.equal
        assert v.counterexample == ""

    def test_pair_budget(self):
        with pytest.raises(PairBudgetError):
            equivalent(parse("(a+b)*a(a+b)"), parse("(a+b)a(a+b)*"), "ab", max_pairs=2)

    def test_counterexample_length_is_minimal(self, corpus):
        # the verdict's word is never longer than the first disagreement
        # the enumerator can find
        pairs = list(zip(corpus, corpus[5:]))[:20]
        for e, f in pairs:
            alpha = sorted({"a", "b"} | set(letters(e)) | set(letters(f)))
            v = equivalent(e, f, alpha)
            if v.equal:
                assert enumerate_lang(e, 8).words == enumerate_lang(f, 8).words
            else:
                diff = enumerate_lang(e, 8).words ^ enumerate_lang(f, 8).words
                if diff:
                    assert len(v.counterexample) == min(len(w) for w in diff)

    def test_verdict_matches_enumeration_at_bound_eight(self, corpus):
        for e, f in list(zip(corpus, corpus[3:]))[:20]:
            alpha = sorted({"a", "b"} | set(letters(e)) | set(letters(f)))
            v = equivalent(e, f, alpha)
            same_slice = enumerate_lang(e, 8).words == enumerate_lang(f, 8).words
            if v.equal:
                assert same_slice
            elif len(v.counterexample) <= 8:
                assert not same_slice

    def test_agrees_with_the_state_product_bound(self):
        # Languages equal up to |states| x |states| letters are equal outright.
        pairs = [("a(a+b)*", "ab(a+b)*"), ("(ab)*", "1+a(ba)*b"), ("a*", "(aa)*+a(aa)*")]
        for lhs, rhs in pairs:
            e, f = parse(lhs), parse(rhs)
            k = len(build_dfa(e, "ab").states) * len(build_dfa(f, "ab").states)
            v = equivalent(e, f, "ab")
            assert v.equal == (enumerate_lang(e, k).words == enumerate_lang(f, k).words)


class TestExports:
    def test_dot_shapes_and_labels(self):
        d = build_dfa(parse("0"), "ab")
        dot = to_dot(d)
        assert 'label="0"' in dot
        assert "doublecircle" not in dot
        assert dot.count("shape=circle") == 1

    def test_dot_counts_for_the_three_state_machine(self):
        dot = to_dot(build_dfa(parse("a(a+b)*"), "ab"))
        assert dot.count("shape=") == 4  # 3 states plus the entry point
        assert dot.count("[label=") == 6  # one edge per state and symbol

    def test_dot_epsilon_machine(self):
        dot = to_dot(build_dfa(parse("1"), "ab"))
        assert dot.count("doublecircle") == 1
        assert dot.count("shape=circle") == 1

    def test_json_golden_bytes(self):
        assert to_json(build_dfa(parse("0"), "ab")) == GOLDEN_EMPTY_JSON

    def test_json_fields(self):
        import json

        doc = json.loads(to_json(build_dfa(parse("(a+b)*a"), "ab")))
        assert doc["start"] == 0
        assert doc["accepting"] == sorted(doc["accepting"])
        assert {t["symbol"] for t in doc["transitions"]} == {"a", "b"}

    def test_json_round_trip(self, corpus):
        for e in corpus[:25]:
            alpha = sorted({"a", "b"} | set(letters(e)))
            d = build_dfa(e, alpha)
            assert from_json(to_json(d)) == d

    def test_exports_are_deterministic(self):
        one = build_dfa(parse("a(a+b)*"), "ab")
        two = build_dfa(parse("a(a+b)*"), "ab")
        assert to_dot(one) == to_dot(two)
        assert to_json(one) == to_json(two)
