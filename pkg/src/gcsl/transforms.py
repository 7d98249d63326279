"""Constructive conversions between grammars and rewriting systems.

Four language-preserving constructions:

* :func:`eliminate_terminals` — rewrite a grammar so that no terminal
  occurs in any production lhs, by doubling terminals with tilde twins.
* :func:`deanchor` — compile anchored productions away using three caret
  families of end-marker nonterminals.
* :func:`gcsg_to_nca` — reverse a standard growing grammar into a
  length-reducing system with both-anchored erasing rules.
* :func:`nca_to_gcsg` — reverse a rewriting system into an (extended,
  then standard) growing grammar.
"""

from __future__ import annotations

import itertools

from .core import Alphabet, Anchor, Symbol, Word
from .grammar import Flavor, Grammar, Production, validate as validate_grammar
from .nca import NcaSystem, Rule

TILDE = "~"
CARET = "^"


def tilde(name: Symbol) -> Symbol:
    return TILDE + name


def caret_left(name: Symbol) -> Symbol:
    return CARET + name


def caret_right(name: Symbol) -> Symbol:
    return name + CARET


def caret_both(name: Symbol) -> Symbol:
    return CARET + name + CARET


def _fresh_or_die(new_names, existing):
    clash = sorted(set(new_names) & set(existing))
    if clash:
        raise ValueError(f"decorated symbol names collide with existing symbols: {clash}")


def eliminate_terminals(g: Grammar) -> Grammar:
    """Language-equal grammar whose production left hand sides contain no
    terminals.  Each terminal gains a tilde-decorated nonterminal twin;
    every rhs terminal occurrence is optionally replaced, so a production
    with k terminal occurrences on the right becomes 2^k productions."""
    violations = validate_grammar(g)
    if violations:
        raise ValueError("invalid grammar: " + "; ".join(violations))
    terminals = g.terminals
    twins = {x: tilde(x) for x in terminals}
    _fresh_or_die(twins.values(), g.alphabet)

    productions = []
    for p in g.productions:
        lhs = tuple(twins.get(s, s) for s in p.lhs)
        choices = [(s, twins[s]) if s in terminals else (s,) for s in p.rhs]
        for rhs in itertools.product(*choices):
            productions.append(Production(lhs, rhs, p.anchor))
    return Grammar(
        nonterminals=g.nonterminals | frozenset(twins.values()),
        terminals=terminals,
        start=g.start,
        productions=tuple(productions),
        flavor=g.flavor,
    )


def deanchor(g: Grammar) -> Grammar:
    """Compile an extended grammar into a language-equal standard one.

    After terminal elimination, end-of-word positions are made visible by
    decorating the outermost nonterminal of every start production's rhs
    with caret markers; anchored productions are then re-issued only in
    their correspondingly decorated forms, so they can fire only at the
    word ends.
    """
    g = eliminate_terminals(g)
    sigma = g.start
    plain = g.nonterminals - {sigma}
    left = {n: caret_left(n) for n in plain}
    right = {n: caret_right(n) for n in plain}
    both = {n: caret_both(n) for n in plain}
    new_names = list(left.values()) + list(right.values()) + list(both.values())
    _fresh_or_die(new_names, g.alphabet)

    def mark_l(w: Word) -> Word:
        if w and w[0] in plain:
            return (left[w[0]],) + w[1:]
        return w

    def mark_r(w: Word) -> Word:
        if w and w[-1] in plain:
            return w[:-1] + (right[w[-1]],)
        return w

    def mark_lr(w: Word) -> Word:
        if len(w) == 1 and w[0] in plain:
            return (both[w[0]],)
        return mark_l(mark_r(w))

    sigma_lhs = (sigma,)
    productions = []
    for p in g.productions:
        u, v = p.lhs, p.rhs
        if u == sigma_lhs:
            productions.append(Production(u, mark_lr(v)))
        elif p.anchor is Anchor.NONE:
            productions.append(Production(u, v))
            productions.append(Production(mark_l(u), mark_l(v)))
            productions.append(Production(mark_r(u), mark_r(v)))
            productions.append(Production(mark_lr(u), mark_lr(v)))
        elif p.anchor is Anchor.LEFT:
            productions.append(Production(mark_l(u), mark_l(v)))
            productions.append(Production(mark_lr(u), mark_lr(v)))
        elif p.anchor is Anchor.RIGHT:
            productions.append(Production(mark_r(u), mark_r(v)))
            productions.append(Production(mark_lr(u), mark_lr(v)))
        else:  # both
            productions.append(Production(mark_lr(u), mark_lr(v)))
    return Grammar(
        nonterminals=g.nonterminals | frozenset(new_names),
        terminals=g.terminals,
        start=sigma,
        productions=tuple(productions),
        flavor=Flavor.STANDARD,
    )


def gcsg_to_nca(g: Grammar) -> NcaSystem:
    """Reverse a standard growing grammar (with the empty word in its
    language) into an equivalent length-reducing system: start productions
    become both-anchored erasing rules, everything else runs backwards."""
    violations = validate_grammar(g)
    if violations:
        raise ValueError("invalid grammar: " + "; ".join(violations))
    if g.flavor is not Flavor.STANDARD:
        raise ValueError("gcsg_to_nca requires a standard (anchor-free) grammar")
    sigma_lhs = (g.start,)
    if Production(sigma_lhs, ()) not in g.productions:
        raise ValueError("grammar must contain the start -> empty word production")
    rules = []
    for p in g.productions:
        if p.lhs == sigma_lhs:
            if p.rhs != ():
                rules.append(Rule(lhs=p.rhs, rhs=(), anchor=Anchor.BOTH))
        else:
            rules.append(Rule(lhs=p.rhs, rhs=p.lhs))
    working = g.terminals | (g.nonterminals - {g.start})
    return NcaSystem(Alphabet(g.terminals, frozenset(working)), tuple(rules))


def _fresh_start(taken) -> Symbol:
    if "S" not in taken:
        return "S"
    i = 0
    while f"S{i}" in taken:
        i += 1
    return f"S{i}"


def nca_to_extended_gcsg(sys: NcaSystem, start: Symbol | None = None) -> Grammar:
    """The extended-grammar intermediate of the system-to-grammar
    conversion.  Erasing rules are compensated by context productions
    x -> xv / x -> vx over the whole working alphabet."""
    from . import nca as _nca

    violations = _nca.validate(sys)
    if violations:
        raise ValueError("invalid system: " + "; ".join(violations))
    working = sys.alphabet.working
    terminals = sys.alphabet.terminals
    if start is None:
        start = _fresh_start(working)
    elif start in working:
        raise ValueError(f"start symbol {start} already in the working alphabet")
    sigma = start
    order = sorted(working)

    productions = [Production((sigma,), ())]
    for r in sys.rules:
        v, u = r.lhs, r.rhs
        if u != ():
            productions.append(Production(u, v, r.anchor))
        elif r.anchor is Anchor.NONE:
            for x in order:
                productions.append(Production((x,), (x,) + v))
                productions.append(Production((x,), v + (x,)))
            productions.append(Production((sigma,), v))
        elif r.anchor is Anchor.LEFT:
            for x in order:
                productions.append(Production((x,), v + (x,), Anchor.LEFT))
            productions.append(Production((sigma,), v))
        elif r.anchor is Anchor.RIGHT:
            for x in order:
                productions.append(Production((x,), (x,) + v, Anchor.RIGHT))
            productions.append(Production((sigma,), v))
        else:  # both
            productions.append(Production((sigma,), v))
    return Grammar(
        nonterminals=(working - terminals) | {sigma},
        terminals=terminals,
        start=sigma,
        productions=tuple(productions),
        flavor=Flavor.EXTENDED,
    )


def nca_to_gcsg(sys: NcaSystem, start: Symbol | None = None) -> Grammar:
    """Full system-to-grammar conversion: the extended intermediate,
    de-anchored into a standard growing grammar."""
    return deanchor(nca_to_extended_gcsg(sys, start))


def reachable_symbols(g: Grammar) -> frozenset[Symbol]:
    """Symbols occurring in some sentential form derivable from the start
    symbol (a cheap over-approximation by production chaining; useful for
    reporting which decorated symbols a construction never uses)."""
    reached = {g.start}
    changed = True
    while changed:
        changed = False
        for p in g.productions:
            if all(s in reached for s in p.lhs):
                new = set(p.rhs) - reached
                if new:
                    reached |= new
                    changed = True
    return frozenset(reached)
