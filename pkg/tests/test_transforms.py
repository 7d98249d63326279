import pytest

from gcsl import grammar, nca, transforms
from gcsl.core import Alphabet, Anchor, word
from gcsl.grammar import Flavor, Grammar, Production
from gcsl.nca import NcaSystem, Rule

from conftest import load


def grammar_of(productions, terminals="a b", nonterminals="S T", start="S",
               flavor=Flavor.STANDARD):
    return Grammar(
        nonterminals=frozenset(nonterminals.split()),
        terminals=frozenset(terminals.split()),
        start=start,
        productions=tuple(productions),
        flavor=flavor,
    )


class TestEliminateTerminals:
    def test_tilde_variants(self, anbn_grammar):
        g2 = transforms.eliminate_terminals(anbn_grammar)
        rhss = {p.rhs for p in g2.productions if p.lhs == ("T",) and len(p.rhs) == 2}
        assert rhss == {
            ("a", "b"), ("~a", "b"), ("a", "~b"), ("~a", "~b"),
        }

    def test_terminal_lhs_gets_tilded(self):
        g = grammar_of(
            [Production(word("S"), word("a b")), Production(word("a b"), word("a b c"))],
            terminals="a b c",
        )
        g2 = transforms.eliminate_terminals(g)
        lhss = {p.lhs for p in g2.productions}
        assert ("~a", "~b") in lhss and ("a", "b") not in lhss
        variants = [p for p in g2.productions if p.lhs == ("~a", "~b")]
        assert len(variants) == 8  # 2^3 tilde choices in the rhs

    def test_no_terminal_lhs_anywhere(self, anbn_grammar):
        g2 = transforms.eliminate_terminals(anbn_grammar)
        assert all(s in g2.nonterminals for p in g2.productions for s in p.lhs)

    def test_output_validates(self, anbn_grammar):
        assert grammar.validate(transforms.eliminate_terminals(anbn_grammar)) == []

    def test_untouched_when_no_terminals_in_rules(self):
        g = grammar_of([Production(word("S"), word("T T")), Production(word("T"), word("T T T"))])
        g2 = transforms.eliminate_terminals(g)
        assert set(g2.productions) == set(g.productions)
        assert g2.nonterminals == g.nonterminals | {"~a", "~b"}

    def test_language_preserved(self, anbn_grammar):
        g2 = transforms.eliminate_terminals(anbn_grammar)
        assert grammar.generate_language(g2, 6) == grammar.generate_language(anbn_grammar, 6)


class TestDeanchor:
    @pytest.mark.parametrize(
        "fixture", ["left_anchor.egcsg", "right_anchor.egcsg", "both_anchor.egcsg"]
    )
    def test_anchored_fixture(self, fixture):
        eg = load(fixture)
        sg = transforms.deanchor(eg)
        assert sg.flavor is Flavor.STANDARD
        assert grammar.validate(sg) == []
        assert all(p.anchor is Anchor.NONE for p in sg.productions)
        assert grammar.generate_language(sg, 6) == grammar.generate_language(eg, 6)

    def test_left_anchored_decoration(self):
        g = grammar_of(
            [Production(word("S"), word("A b")), Production(word("A"), word("a b"), Anchor.LEFT)],
            nonterminals="S A",
            flavor=Flavor.EXTENDED,
        )
        sg = transforms.deanchor(g)
        pairs = {(p.lhs, p.rhs) for p in sg.productions}
        # first rhs symbol is a terminal, so the caret marks vanish on the right
        assert (("^A",), ("a", "b")) in pairs
        assert (("^A^",), ("a", "b")) in pairs

    def test_unanchored_grammar_language_unchanged(self, anbn_grammar):
        sg = transforms.deanchor(anbn_grammar)
        assert grammar.validate(sg) == []
        assert grammar.generate_language(sg, 6) == grammar.generate_language(anbn_grammar, 6)

    def test_nca_derived_grammar(self, xanchor):
        eg = transforms.nca_to_extended_gcsg(xanchor)
        sg = transforms.deanchor(eg)
        assert grammar.generate_language(sg, 4) == {(), ("x",)}

    def test_symbol_accounting(self):
        eg = load("left_anchor.egcsg")
        sg = transforms.deanchor(eg)
        n_in, x_in = len(eg.nonterminals), len(eg.terminals)
        # tilde twins for the terminals, then three caret families
        assert len(sg.nonterminals) <= 4 * (n_in + x_in)


class TestGcsgToNca:
    def test_anbn_rules(self, anbn_grammar):
        sys = transforms.gcsg_to_nca(anbn_grammar)
        assert set(sys.rules) == {
            Rule(word("a b"), word("T")),
            Rule(word("a T b"), word("T")),
            Rule(word("a b"), (), Anchor.BOTH),
            Rule(word("a T b"), (), Anchor.BOTH),
        }
        assert nca.validate(sys) == []

    def test_language_preserved(self, anbn_grammar):
        sys = transforms.gcsg_to_nca(anbn_grammar)
        assert nca.enumerate_language(sys, 6) == grammar.generate_language(anbn_grammar, 6)

    def test_recovers_x_system(self):
        g = grammar_of(
            [Production(word("S"), ()), Production(word("S"), word("x"))],
            terminals="x",
            nonterminals="S",
        )
        sys = transforms.gcsg_to_nca(g)
        assert sys.rules == (Rule(word("x"), (), Anchor.BOTH),)

    def test_requires_epsilon_production(self):
        g = grammar_of([Production(word("S"), word("a b"))])
        with pytest.raises(ValueError):
            transforms.gcsg_to_nca(g)

    def test_rejects_extended(self):
        g = grammar_of(
            [Production(word("S"), ()), Production(word("T"), word("a b"), Anchor.LEFT)],
            flavor=Flavor.EXTENDED,
        )
        with pytest.raises(ValueError):
            transforms.gcsg_to_nca(g)

    def test_all_rules_length_reducing(self, anbn_grammar):
        sys = transforms.gcsg_to_nca(anbn_grammar)
        assert all(len(r.lhs) > len(r.rhs) for r in sys.rules)


class TestNcaToGcsg:
    def test_x_system_extended_intermediate(self, xanchor):
        eg = transforms.nca_to_extended_gcsg(xanchor)
        assert set((p.lhs, p.rhs) for p in eg.productions) == {(("S",), ()), (("S",), ("x",))}

    def test_unanchored_erasing_rule_context_productions(self):
        sys = NcaSystem(
            Alphabet(frozenset("ab"), frozenset("ab")),
            (Rule(word("a b"), ()),),
        )
        eg = transforms.nca_to_extended_gcsg(sys)
        pairs = {(p.lhs, p.rhs) for p in eg.productions}
        assert pairs == {
            (("S",), ()), (("S",), ("a", "b")),
            (("a",), ("a", "a", "b")), (("a",), ("a", "b", "a")),
            (("b",), ("b", "a", "b")), (("b",), ("a", "b", "b")),
        }
        sg = transforms.nca_to_gcsg(sys)
        assert grammar.generate_language(sg, 4) == {
            (), word("a b"), word("a b a b"), word("a a b b"),
        }

    def test_anchored_erasing_rules(self):
        sys = NcaSystem(
            Alphabet(frozenset("ab"), frozenset("ab")),
            (Rule(word("a b"), (), Anchor.LEFT), Rule(word("b a"), (), Anchor.RIGHT)),
        )
        eg = transforms.nca_to_extended_gcsg(sys)
        lefts = {(p.lhs, p.rhs) for p in eg.productions if p.anchor is Anchor.LEFT}
        rights = {(p.lhs, p.rhs) for p in eg.productions if p.anchor is Anchor.RIGHT}
        assert lefts == {(("a",), ("a", "b", "a")), (("b",), ("a", "b", "b"))}
        assert rights == {(("a",), ("a", "b", "a")), (("b",), ("b", "b", "a"))}
        assert nca.enumerate_language(sys, 4) == grammar.generate_language(
            transforms.nca_to_gcsg(sys), 4
        )

    def test_non_erasing_rules_reverse_with_anchor(self, anbn_nca):
        eg = transforms.nca_to_extended_gcsg(anbn_nca)
        assert Production(word("T"), word("a T b")) in eg.productions
        assert grammar.validate(eg) == []

    def test_round_trip_free_group_one_generator(self):
        sys = load("fg1.nca")
        back = transforms.gcsg_to_nca(transforms.nca_to_gcsg(sys))
        assert nca.enumerate_language(back, 6) == nca.enumerate_language(sys, 6)

    def test_fresh_start_symbol(self):
        sys = NcaSystem(
            Alphabet(frozenset(["S"]), frozenset(["S"])),
            (Rule(("S",), (), Anchor.BOTH),),
        )
        eg = transforms.nca_to_extended_gcsg(sys)
        assert eg.start not in sys.alphabet.working


def test_decorated_symbols_report_unreachable(xanchor):
    sg = transforms.nca_to_gcsg(xanchor)
    reachable = transforms.reachable_symbols(sg)
    assert "x" in reachable
    # the caret families exist but this tiny grammar never rewrites them
    assert any(n.startswith("^") and n not in reachable for n in sg.nonterminals)
