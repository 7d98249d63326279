import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from gcsl import nca
from gcsl.core import Alphabet, Anchor, word
from gcsl.nca import Budget, Move, NcaSystem, Rule, Status

from conftest import load


def make(rules, terminals="a b", working=None):
    return NcaSystem(
        Alphabet(frozenset(terminals.split()), frozenset((working or terminals).split())),
        tuple(rules),
    )


class TestValidate:
    def test_ok(self):
        sys = make([Rule(word("a b"), word("T"))], working="a b T")
        assert nca.validate(sys) == []

    def test_not_length_reducing(self):
        sys = make([Rule(word("a"), word("a b"))])
        assert any("not length-reducing" in v for v in nca.validate(sys))

    def test_symbol_outside_alphabet(self):
        sys = make([Rule(word("a b"), word("c"))])
        assert any("outside working alphabet" in v for v in nca.validate(sys))

    def test_duplicates_collapse_but_same_lhs_allowed(self):
        r = Rule(word("a b"), ())
        sys = make([r, r, Rule(word("a b"), word("T"))], working="a b T")
        assert len(sys.rules) == 2


class TestMoves:
    def test_legal_moves_order(self):
        sys = make([Rule(word("a b"), ())])
        assert nca.legal_moves(sys, word("a b a b")) == [Move(0, 0), Move(0, 2)]

    def test_anchored_rule_blocked_inside(self, xanchor):
        assert nca.legal_moves(xanchor, word("x x")) == []

    def test_mixed_system(self):
        sys = make(
            [Rule(word("a b"), word("T")), Rule(word("a T b"), (), Anchor.BOTH)],
            working="a b T",
        )
        assert nca.legal_moves(sys, word("a a b b")) == [Move(0, 1)]

    def test_apply(self):
        sys = make([Rule(word("a b"), word("T"))], working="a b T")
        assert nca.apply_move(sys, word("a a b b"), Move(0, 1)) == word("a T b")

    def test_apply_illegal_rejected(self):
        sys = make([Rule(word("a b"), ())])
        with pytest.raises(ValueError):
            nca.apply_move(sys, word("a b"), Move(0, 1))


class TestDecide:
    def test_free_group_cancellation(self, fg2):
        assert nca.decide(fg2, word("a b B A")).accepted

    def test_anchored_counterexample(self, xanchor):
        assert nca.decide(xanchor, word("x")).accepted
        assert not nca.decide(xanchor, word("x x")).accepted

    def test_anbn(self, anbn_nca):
        assert nca.decide(anbn_nca, word("a a b b")).accepted
        assert not nca.decide(anbn_nca, word("a a b")).accepted

    def test_epsilon_always_accepted(self, fg2):
        d = nca.decide(fg2, ())
        assert d.accepted and d.witness == ()

    def test_nonterminal_input_rejected(self, anbn_nca):
        with pytest.raises(ValueError):
            nca.decide(anbn_nca, word("a T b"))
        assert nca.decide_over_working(anbn_nca, word("a T b")).accepted

    def test_budget_exceeded_is_distinct(self, fg2):
        d = nca.decide(fg2, word("a A a A a A"), Budget(max_nodes=2))
        assert d.status is Status.BUDGET_EXCEEDED

    def test_witness_replays_to_empty(self, fg2):
        w = word("a b B A")
        d = nca.decide(fg2, w)
        assert len(d.witness) <= len(w)
        for m in d.witness:
            w2 = nca.apply_move(fg2, w, m)
            assert len(w2) < len(w)
            w = w2
        assert w == ()


class TestEnumerate:
    def test_x_anchor_language(self, xanchor):
        assert nca.enumerate_language(xanchor, 3) == {(), ("x",)}

    def test_ab_cancel(self):
        sys = make([Rule(word("a b"), ())])
        assert nca.enumerate_language(sys, 2) == {(), word("a b")}

    def test_max_len_zero(self, fg2):
        assert nca.enumerate_language(fg2, 0) == {()}

    def test_guard(self, fg2):
        with pytest.raises(ValueError):
            nca.enumerate_language(fg2, 13)

    @pytest.mark.parametrize("n", [0, 2, 4])
    def test_epsilon_always_in_language(self, anbn_nca, n):
        assert () in nca.enumerate_language(anbn_nca, n)

    def test_no_concatenation_closure(self, xanchor):
        lang = nca.enumerate_language(xanchor, 2)
        assert ("x",) in lang and ("x", "x") not in lang


def brute_accept(sys, w):
    """Memo-free exhaustive recursion: the decision oracle."""
    if w == ():
        return True
    return any(
        brute_accept(sys, nca.apply_move(sys, w, m)) for m in nca.legal_moves(sys, w)
    )


@pytest.mark.parametrize("fixture", ["fg2.nca", "anbn.nca"])
def test_memoized_decide_agrees_with_brute_force(fixture):
    sys = load(fixture)
    letters = sorted(sys.alphabet.terminals)[:2]
    memo = set()
    for n in range(9):
        for w in itertools.product(letters, repeat=n):
            assert nca.decide(sys, w, memo=memo).accepted == brute_accept(sys, w), w


@settings(max_examples=30)
@given(st.lists(st.sampled_from("ab"), max_size=8).map(tuple), st.integers(0, 2**32))
def test_acceptance_independent_of_move_order(w, seed):
    sys = load("anbn.nca")
    rng = random.Random(seed)
    plain = nca.decide(sys, w)
    shuffled = nca.decide(sys, w, shuffle=rng.shuffle)
    assert plain.accepted == shuffled.accepted
