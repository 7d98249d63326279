"""Growing context-sensitive grammars, plain and extended (anchored).

A grammar is growing when the start symbol never reappears on a right
hand side and every production either rewrites the start symbol or
strictly increases length.  Membership is decided by running the
reversed productions as a length-reducing rewriting system; language
enumeration is a forward breadth-first closure and serves as the
independent oracle.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional

from .core import Anchor, Symbol, Word, anchor_ok, occurrences, splice
from . import nca
from .nca import Budget, Decision, Rule, Status

ENUMERATION_GUARD = 12


class Flavor(enum.Enum):
    STANDARD = "standard"
    EXTENDED = "extended"


@dataclass(frozen=True)
class Production:
    lhs: Word
    rhs: Word
    anchor: Anchor = Anchor.NONE

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))


@dataclass(frozen=True)
class Grammar:
    nonterminals: frozenset[Symbol]
    terminals: frozenset[Symbol]
    start: Symbol
    productions: tuple[Production, ...]
    flavor: Flavor = Flavor.STANDARD

    def __post_init__(self):
        seen, unique = set(), []
        for p in self.productions:
            if p not in seen:
                seen.add(p)
                unique.append(p)
        object.__setattr__(self, "productions", tuple(unique))

    @property
    def alphabet(self) -> frozenset[Symbol]:
        return self.nonterminals | self.terminals


def validate(g: Grammar, *, growing: bool = True) -> list[str]:
    """All invariant violations; pass ``growing=False`` to check only the
    plain context-sensitive conditions."""
    v = []
    overlap = g.nonterminals & g.terminals
    if overlap:
        v.append(f"nonterminals and terminals overlap: {sorted(overlap)}")
    if g.start not in g.nonterminals:
        v.append(f"start symbol {g.start} not a nonterminal")
    alphabet = g.alphabet
    sigma = g.start
    sigma_lhs = (sigma,)
    sigma_in_rhs = any(sigma in p.rhs for p in g.productions)
    for i, p in enumerate(g.productions):
        if not p.lhs:
            v.append(f"production {i}: empty left hand side")
            continue
        for s in itertools.chain(p.lhs, p.rhs):
            if s not in alphabet:
                v.append(f"production {i}: symbol outside alphabet: {s}")
        if p.lhs == sigma_lhs and p.rhs == ():
            # the epsilon production, legal only if sigma is in no rhs
            if sigma_in_rhs:
                v.append(f"production {i}: start -> empty word while start occurs in a rhs")
        elif len(p.lhs) > len(p.rhs):
            v.append(f"production {i}: not context-sensitive ({len(p.lhs)} > {len(p.rhs)})")
        if g.flavor is Flavor.STANDARD and p.anchor is not Anchor.NONE:
            v.append(f"production {i}: anchored production in a standard grammar")
        if p.anchor is not Anchor.NONE and p.lhs == sigma_lhs:
            v.append(f"production {i}: start-symbol production must not be anchored")
        if sigma in p.lhs and p.lhs != sigma_lhs:
            v.append(f"production {i}: start symbol inside a longer lhs")
        if growing:
            if sigma in p.rhs:
                v.append(f"production {i}: start symbol in rhs")
            if p.lhs != sigma_lhs and len(p.lhs) >= len(p.rhs):
                v.append(f"production {i}: not growing ({len(p.lhs)} >= {len(p.rhs)})")
    return v


def _require_growing(g: Grammar):
    violations = validate(g)
    if violations:
        raise ValueError("not a valid growing grammar: " + "; ".join(violations))


def derive_successors(g: Grammar, sentential: Word) -> list[Word]:
    """All words reachable from ``sentential`` by one production, deduplicated."""
    out = set()
    for p in g.productions:
        for pos in occurrences(sentential, p.lhs, p.anchor):
            out.add(splice(sentential, pos, len(p.lhs), p.rhs))
    return sorted(out)


def generate_language(g: Grammar, max_len: int, *, guard: int = ENUMERATION_GUARD) -> set[Word]:
    """All terminal words of length <= max_len derivable from the start symbol.

    Breadth-first closure; pruning sentential forms longer than max_len is
    sound because non-start productions strictly grow.
    """
    if max_len > guard:
        raise ValueError(f"max_len {max_len} exceeds enumeration guard {guard}")
    _require_growing(g)
    sigma = g.start
    terminals = g.terminals

    # index productions by lhs to keep the closure affordable
    by_lhs: dict[Word, list[Production]] = {}
    for p in g.productions:
        by_lhs.setdefault(p.lhs, []).append(p)

    start_word: Word = (sigma,)
    seen = {start_word}
    frontier = [start_word]
    out: set[Word] = set()
    while frontier:
        nxt = []
        for w in frontier:
            if w != start_word:
                assert sigma not in w, "start symbol reappeared in a derivation"
            if w and all(s in terminals for s in w):
                out.add(w)
            if len(w) >= max_len and w != start_word:
                continue  # every successor would exceed max_len
            for lhs, prods in by_lhs.items():
                for pos in occurrences(w, lhs):
                    for p in prods:
                        if not anchor_ok(p.anchor, pos, len(lhs), len(w)):
                            continue
                        w2 = splice(w, pos, len(lhs), p.rhs)
                        if len(w2) > max_len:
                            continue
                        if w2 == ():
                            out.add(w2)
                        elif w2 not in seen:
                            seen.add(w2)
                            nxt.append(w2)
        frontier = nxt
    return out


def _reversed_rules(g: Grammar) -> tuple[tuple[Rule, ...], set[Word], bool]:
    """Non-start productions reversed into length-reducing rules, the rhs
    words of start productions (the backward-search goals), and whether
    the empty word is in the language."""
    sigma_lhs = (g.start,)
    rules = []
    goals: set[Word] = set()
    eps = False
    for p in g.productions:
        if p.lhs == sigma_lhs:
            if p.rhs == ():
                eps = True
            else:
                goals.add(p.rhs)
        else:
            rules.append(Rule(lhs=p.rhs, rhs=p.lhs, anchor=p.anchor))
    return tuple(rules), goals, eps


def member(g: Grammar, w: Word, budget: Budget = nca.DEFAULT_BUDGET,
           *, memo: Optional[set] = None) -> Decision:
    """Is ``w`` in the language of ``g``?  Backward search: each non-start
    production is run right-to-left as a length-reducing rule, accepting on
    reaching the rhs of any start production."""
    _require_growing(g)
    bad = [s for s in w if s not in g.terminals]
    if bad:
        raise ValueError(f"input symbols outside terminal alphabet: {sorted(set(bad))}")
    rules, goals, eps = _reversed_rules(g)
    if w == ():
        return Decision(Status.ACCEPTED, ()) if eps else Decision(Status.REJECTED)
    if memo is None:
        memo = set()
    return nca._search(rules, w, lambda word: word in goals, budget, memo, None)


def language_by_member(g: Grammar, max_len: int, *,
                       budget: Budget = nca.DEFAULT_BUDGET,
                       guard: int = ENUMERATION_GUARD) -> set[Word]:
    """Language up to ``max_len`` via the backward-search membership test,
    sharing one memo set across all queried words."""
    if max_len > guard:
        raise ValueError(f"max_len {max_len} exceeds enumeration guard {guard}")
    _require_growing(g)
    letters = sorted(g.terminals)
    memo: set = set()
    out: set[Word] = set()
    for n in range(max_len + 1):
        for combo in itertools.product(letters, repeat=n):
            d = member(g, combo, budget, memo=memo)
            if d.status is Status.BUDGET_EXCEEDED:
                raise nca.BudgetExceededError(f"budget exceeded while deciding {combo}")
            if d.accepted:
                out.add(combo)
    return out
