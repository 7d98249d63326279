"""Reduction histories as diagrams.

A history records one reduction as a list of substitution events with
letter-level provenance: each event consumes a block of letters and
produces fresh ones.  From the provenance we compute the diagram
geometry (exact rational widths and horizontal intervals, generations),
the precedence order between substitutions, swap moves between
equivalent reductions, and the canonical left-first reordering.

Two orders on events matter:

* the *precedence* order, generated by "consumes a letter produced by";
* the *dependency* order, generated by horizontal overlap of
  substitution-line interiors.

For systems whose rules all have non-empty right hand sides the two
coincide.  Rules producing the empty word can delete the letters that
separated two blocks, making a later substitution's block contiguous
only after the deletion; such pairs are precedence-incomparable but the
deletion must still come first.  The dependency order captures this, so
swaps, reorderings, and canonical forms are computed against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Word, occurrences
from .nca import Move, NcaSystem


@dataclass(frozen=True)
class Event:
    """One substitution: which rule fired where, and letter provenance.

    Letter ids index into ``History.symbols``; ``consumed`` is the
    contiguous block of letters the rule's lhs matched, ``produced`` the
    letters its rhs introduced (empty for erasing rules).
    """

    rule_index: int
    position: int
    consumed: tuple[int, ...]
    produced: tuple[int, ...]


@dataclass(frozen=True)
class History:
    system: NcaSystem
    start: Word
    events: tuple[Event, ...]
    symbols: tuple[str, ...]  # symbol of each letter id, in id order

    def __len__(self):
        return len(self.events)


def from_moves(system: NcaSystem, start: Word, moves) -> History:
    """Build a history by replaying moves, checking legality at each step."""
    row = list(range(len(start)))
    symbols = list(start)
    events = []
    for m in moves:
        m = Move(*m)
        rule = system.rules[m.rule_index]
        current = tuple(symbols[i] for i in row)
        if m.position not in occurrences(current, rule.lhs, rule.anchor):
            raise ValueError(f"illegal move {m} on {current}")
        k = len(rule.lhs)
        consumed = tuple(row[m.position:m.position + k])
        produced = tuple(range(len(symbols), len(symbols) + len(rule.rhs)))
        symbols.extend(rule.rhs)
        row[m.position:m.position + k] = produced
        events.append(Event(m.rule_index, m.position, consumed, produced))
    return History(system, tuple(start), tuple(events), tuple(symbols))


def moves_of(h: History) -> list[Move]:
    return [Move(e.rule_index, e.position) for e in h.events]


def rows(h: History) -> list[list[int]]:
    """Letter ids present at each time, from the start row to the last."""
    row = list(range(len(h.start)))
    out = [list(row)]
    for e in h.events:
        row[e.position:e.position + len(e.consumed)] = e.produced
        out.append(list(row))
    return out


def words_of(h: History) -> list[Word]:
    return [tuple(h.symbols[i] for i in row) for row in rows(h)]


Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Geometry:
    widths: tuple[Fraction, ...]        # per letter id
    generations: tuple[int, ...]        # per letter id
    intervals: tuple[Interval, ...]     # per letter id, half-open
    lines: tuple[Interval, ...]         # per event: span of the consumed block


def geometry(h: History) -> Geometry:
    """Exact diagram geometry.  Initial letters get unit width and
    consecutive unit intervals; the letters an event produces split the
    consumed block's span into equal parts, one generation deeper."""
    n0 = len(h.start)
    total = len(h.symbols)
    widths: list = [None] * total
    gens: list = [None] * total
    intervals: list = [None] * total
    for i in range(n0):
        widths[i] = Fraction(1)
        gens[i] = 0
        intervals[i] = (Fraction(i), Fraction(i + 1))
    lines: list[Interval] = []
    for e in h.events:
        lo = intervals[e.consumed[0]][0]
        hi = intervals[e.consumed[-1]][1]
        lines.append((lo, hi))
        gen = 1 + max(gens[c] for c in e.consumed)
        k = len(e.produced)
        if k:
            share = (hi - lo) / k
            for j, lid in enumerate(e.produced):
                widths[lid] = share
                gens[lid] = gen
                intervals[lid] = (lo + j * share, lo + (j + 1) * share)
    return Geometry(tuple(widths), tuple(gens), tuple(intervals), tuple(lines))


def _closure(n: int, direct: set[tuple[int, int]]) -> list[list[bool]]:
    reach = [[False] * n for _ in range(n)]
    for i, j in direct:
        reach[i][j] = True
    # events are in temporal order, so edges only go forward
    for k in range(n):
        rk = reach[k]
        for i in range(k):
            if reach[i][k]:
                ri = reach[i]
                for j in range(k + 1, n):
                    if rk[j]:
                        ri[j] = True
    return reach


@dataclass(frozen=True)
class Precedence:
    """The substitution order generated by letter consumption.

    ``before[i][j]`` is the transitive closure; for incomparable pairs
    ``left_of`` says which line lies further left (by interval start,
    with rule index as the documented tie-break).
    """

    direct: frozenset[tuple[int, int]]
    before: tuple[tuple[bool, ...], ...]
    lines: tuple[Interval, ...]
    rule_indices: tuple[int, ...]

    def comparable(self, i: int, j: int) -> bool:
        return self.before[i][j] or self.before[j][i]

    def left_of(self, i: int, j: int) -> int:
        """Which of two incomparable events lies to the left; returns its index."""
        if self.comparable(i, j):
            raise ValueError(f"events {i} and {j} are comparable")
        ki = (self.lines[i][0], self.rule_indices[i])
        kj = (self.lines[j][0], self.rule_indices[j])
        return i if ki < kj else j


def precedence(h: History) -> Precedence:
    """Partial order generated by "consumes a letter produced by"."""
    n = len(h.events)
    direct = set()
    for i, e1 in enumerate(h.events):
        produced = set(e1.produced)
        if not produced:
            continue
        for j in range(i + 1, n):
            if produced & set(h.events[j].consumed):
                direct.add((i, j))
    reach = _closure(n, direct)
    geo = geometry(h)
    return Precedence(
        direct=frozenset(direct),
        before=tuple(tuple(r) for r in reach),
        lines=geo.lines,
        rule_indices=tuple(e.rule_index for e in h.events),
    )


def _dependency_closure(h: History) -> list[list[bool]]:
    """Closure of the overlap order: an earlier event blocks a later one
    when their line interiors overlap horizontally."""
    lines = geometry(h).lines
    n = len(h.events)
    direct = set()
    for i in range(n):
        lo1, hi1 = lines[i]
        for j in range(i + 1, n):
            lo2, hi2 = lines[j]
            if lo1 < hi2 and lo2 < hi1:
                direct.add((i, j))
    return _closure(n, direct)


def _rebuild(h: History, order) -> History:
    """Reissue the events of ``h`` in the given order (a permutation of
    original indices), recomputing positions by simulation."""
    row = list(range(len(h.start)))
    events = []
    for idx in order:
        e = h.events[idx]
        try:
            pos = row.index(e.consumed[0])
        except ValueError:
            raise ValueError(f"event {idx} reordered before a producer of its letters")
        if tuple(row[pos:pos + len(e.consumed)]) != e.consumed:
            raise ValueError(f"event {idx}: consumed block not contiguous in this order")
        events.append(Event(e.rule_index, pos, e.consumed, e.produced))
        row[pos:pos + len(e.consumed)] = e.produced
    return History(h.system, h.start, tuple(events), h.symbols)


def swap_adjacent(h: History, i: int) -> History:
    """Exchange events i and i+1; they must be independent (neither feeds
    the other, and the earlier one must not delete letters separating the
    later one's block)."""
    if not 0 <= i < len(h.events) - 1:
        raise IndexError(f"no adjacent pair at {i}")
    e1, e2 = h.events[i], h.events[i + 1]
    if set(e1.produced) & set(e2.consumed):
        raise ValueError(f"events {i} and {i + 1} are order-dependent")
    d1 = len(e1.produced) - len(e1.consumed)
    d2 = len(e2.produced) - len(e2.consumed)
    if e2.position >= e1.position + len(e1.produced):
        p2, p1 = e2.position - d1, e1.position
    elif e2.position + len(e2.consumed) <= e1.position:
        p2, p1 = e2.position, e1.position + d2
    else:
        # e2's block straddles the letters e1 erased
        raise ValueError(f"events {i} and {i + 1} are order-dependent")
    events = list(h.events)
    events[i] = Event(e2.rule_index, p2, e2.consumed, e2.produced)
    events[i + 1] = Event(e1.rule_index, p1, e1.consumed, e1.produced)
    return History(h.system, h.start, tuple(events), h.symbols)


def swappable(h: History, i: int) -> bool:
    try:
        swap_adjacent(h, i)
    except ValueError:
        return False
    return True


def _renumber(h: History) -> History:
    """Relabel letter ids in event order, so that histories reaching the
    same canonical event order compare equal."""
    mapping = {i: i for i in range(len(h.start))}
    nxt = len(h.start)
    for e in h.events:
        for lid in e.produced:
            mapping[lid] = nxt
            nxt += 1
    events = tuple(
        Event(e.rule_index, e.position,
              tuple(mapping[c] for c in e.consumed),
              tuple(mapping[p] for p in e.produced))
        for e in h.events
    )
    symbols = [""] * len(h.symbols)
    for old, new in mapping.items():
        symbols[new] = h.symbols[old]
    return History(h.system, h.start, events, tuple(symbols))


def canonicalize(h: History) -> History:
    """The unique equivalent history ordering independent substitutions
    left-before-right.  Idempotent, and constant on swap-equivalence
    classes."""
    n = len(h.events)
    dep = _dependency_closure(h)
    lines = geometry(h).lines
    preds = [sum(dep[i][j] for i in range(n)) for j in range(n)]
    emitted = [False] * n
    order = []
    for _ in range(n):
        avail = [j for j in range(n) if not emitted[j] and preds[j] == 0]
        # available events have pairwise disjoint line interiors, so the
        # left endpoint alone is decisive; rule index is a formal tie-break
        j = min(avail, key=lambda j: (lines[j][0], h.events[j].rule_index))
        emitted[j] = True
        order.append(j)
        for k in range(n):
            if dep[j][k]:
                preds[k] -= 1
    return _renumber(_rebuild(h, order))


def equivalent(h1: History, h2: History) -> bool:
    """Same system, same start word, and mutually reachable by swaps of
    adjacent independent substitutions (decided via canonical forms)."""
    if h1.system != h2.system or h1.start != h2.start:
        return False
    return canonicalize(h1) == canonicalize(h2)


def reorder_with_swaps(h: History, first, second) -> tuple[History, list[int]]:
    """Like :func:`reorder_before`, also returning the indices of the
    adjacent swaps performed (for replay checks)."""
    first, second = set(first), set(second)
    n = len(h.events)
    for s in first | second:
        if not 0 <= s < n:
            raise IndexError(f"no event {s}")
    if first & second:
        raise ValueError("event sets overlap")
    dep = _dependency_closure(h)
    for a in first:
        for b in second:
            if dep[a][b] or dep[b][a]:
                raise ValueError(f"events {a} and {b} are order-dependent")

    # target order: emit available first-set events eagerly, hold the
    # second set back until the first set is exhausted
    preds = [sum(dep[i][j] for i in range(n)) for j in range(n)]
    emitted = [False] * n
    remaining_first = set(first)
    target = []
    for _ in range(n):
        avail = [j for j in range(n) if not emitted[j] and preds[j] == 0]
        def rank(j):
            if j in first:
                group = 0
            elif j in second:
                group = 2 if remaining_first else 1
            else:
                group = 1
            return (group, j)
        j = min(avail, key=rank)
        emitted[j] = True
        remaining_first.discard(j)
        target.append(j)
        for k in range(n):
            if dep[j][k]:
                preds[k] -= 1

    # realise the target order by bubbling each event left in turn
    perm = list(range(n))
    swaps = []
    for k, want in enumerate(target):
        j = perm.index(want)
        while j > k:
            h = swap_adjacent(h, j - 1)
            perm[j - 1], perm[j] = perm[j], perm[j - 1]
            swaps.append(j - 1)
            j -= 1
    return h, swaps


def reorder_before(h: History, first, second) -> History:
    """An equivalent history in which every event of ``first`` precedes
    every event of ``second``.  The two sets must be disjoint and pairwise
    independent across each other."""
    return reorder_with_swaps(h, first, second)[0]
