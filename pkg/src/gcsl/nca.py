"""Non-deterministic Cannon's algorithms: strictly length-reducing,
optionally anchored rewriting systems, and the exhaustive decision engine.

A system accepts a terminal word iff some sequence of rule applications
reduces it to the empty word.  Every rule strictly shortens the word, so
depth-first search with a memo set of dead words is exhaustive and
terminates.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .core import Alphabet, Anchor, Word, occurrences, splice

ENUMERATION_GUARD = 12


class BudgetExceededError(Exception):
    """Raised when a search exceeds its node or memo budget."""


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**6
    max_memo: int = 10**6


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    anchor: Anchor = Anchor.NONE

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))


class Move(NamedTuple):
    rule_index: int
    position: int


@dataclass(frozen=True)
class NcaSystem:
    alphabet: Alphabet
    rules: tuple[Rule, ...]

    def __post_init__(self):
        # duplicate rules are permitted on input but collapse to one
        seen, unique = set(), []
        for r in self.rules:
            if r not in seen:
                seen.add(r)
                unique.append(r)
        object.__setattr__(self, "rules", tuple(unique))


class Status(enum.Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class Decision:
    status: Status
    # sequence of moves reducing the input to the goal, on acceptance
    witness: Optional[tuple[Move, ...]] = None

    @property
    def accepted(self) -> bool:
        return self.status is Status.ACCEPTED


def validate(sys: NcaSystem) -> list[str]:
    """All invariant violations of the system; empty means valid."""
    violations = []
    working = sys.alphabet.working
    for i, r in enumerate(sys.rules):
        if len(r.lhs) <= len(r.rhs):
            violations.append(f"rule {i}: not length-reducing ({len(r.lhs)} <= {len(r.rhs)})")
        for s in itertools.chain(r.lhs, r.rhs):
            if s not in working:
                violations.append(f"rule {i}: symbol outside working alphabet: {s}")
        if not r.lhs:
            violations.append(f"rule {i}: empty left hand side")
    return violations


def legal_moves(sys: NcaSystem, w: Word) -> list[Move]:
    """All applicable (rule, position) pairs, in lexicographic order."""
    moves = []
    for i, r in enumerate(sys.rules):
        for pos in occurrences(w, r.lhs, r.anchor):
            moves.append(Move(i, pos))
    return moves


def apply_move(sys: NcaSystem, w: Word, m: Move) -> Word:
    rule = sys.rules[m.rule_index]
    if m.position not in occurrences(w, rule.lhs, rule.anchor):
        raise ValueError(f"illegal move {m} on {w}")
    return splice(w, m.position, len(rule.lhs), rule.rhs)


def _search(
    rules: tuple[Rule, ...],
    w: Word,
    is_goal: Callable[[Word], bool],
    budget: Budget,
    memo: set,
    shuffle=None,
) -> Decision:
    """Exhaustive DFS over rule applications, shared by NCA decide and
    grammar membership.  ``memo`` collects words from which no goal is
    reachable and may be shared across calls on the same rule set."""
    nodes = [0]

    def dfs(word: Word):
        if is_goal(word):
            return ()
        if word in memo:
            return None
        nodes[0] += 1
        if nodes[0] > budget.max_nodes:
            raise BudgetExceededError("node budget exceeded")
        moves = []
        for i, r in enumerate(rules):
            for pos in occurrences(word, r.lhs, r.anchor):
                moves.append(Move(i, pos))
        if shuffle is not None:
            shuffle(moves)
        for m in moves:
            r = rules[m.rule_index]
            tail = dfs(splice(word, m.position, len(r.lhs), r.rhs))
            if tail is not None:
                return (m,) + tail
        if len(memo) >= budget.max_memo:
            raise BudgetExceededError("memo budget exceeded")
        memo.add(word)
        return None

    try:
        witness = dfs(w)
    except BudgetExceededError:
        return Decision(Status.BUDGET_EXCEEDED)
    if witness is None:
        return Decision(Status.REJECTED)
    return Decision(Status.ACCEPTED, witness)


def decide(
    sys: NcaSystem,
    w: Word,
    budget: Budget = DEFAULT_BUDGET,
    *,
    memo: Optional[set] = None,
    shuffle=None,
) -> Decision:
    """Does ``w`` reduce to the empty word?  ``w`` must be a terminal word;
    use :func:`decide_over_working` for intermediate words over the full
    working alphabet."""
    bad = [s for s in w if s not in sys.alphabet.terminals]
    if bad:
        raise ValueError(f"input symbols outside terminal alphabet: {sorted(set(bad))}")
    return decide_over_working(sys, w, budget, memo=memo, shuffle=shuffle)


def decide_over_working(
    sys: NcaSystem,
    w: Word,
    budget: Budget = DEFAULT_BUDGET,
    *,
    memo: Optional[set] = None,
    shuffle=None,
) -> Decision:
    bad = [s for s in w if s not in sys.alphabet.working]
    if bad:
        raise ValueError(f"input symbols outside working alphabet: {sorted(set(bad))}")
    if memo is None:
        memo = set()
    return _search(sys.rules, w, lambda word: not word, budget, memo, shuffle)


def enumerate_language(
    sys: NcaSystem,
    max_len: int,
    *,
    budget: Budget = DEFAULT_BUDGET,
    guard: int = ENUMERATION_GUARD,
) -> set[Word]:
    """All accepted terminal words of length at most ``max_len``."""
    if max_len > guard:
        raise ValueError(f"max_len {max_len} exceeds enumeration guard {guard}")
    letters = sorted(sys.alphabet.terminals)
    memo: set = set()
    out: set[Word] = set()
    for n in range(max_len + 1):
        for combo in itertools.product(letters, repeat=n):
            d = decide(sys, combo, budget, memo=memo)
            if d.status is Status.BUDGET_EXCEEDED:
                raise BudgetExceededError(f"budget exceeded while deciding {combo}")
            if d.accepted:
                out.add(combo)
    return out
