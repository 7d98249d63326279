"""Symbols, words, alphabets, and the anchor-aware substring matcher.

Symbols are plain strings (multi-character names are fine, so decorated
symbols like ``~x`` or ``^x^`` are first class).  Words are tuples of
symbols; the empty tuple is the empty word.  In all textual I/O the
reserved token ``_`` stands for the empty word.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

Symbol = str
Word = tuple[Symbol, ...]

EPSILON: Word = ()
EMPTY_WORD_TOKEN = "_"


class Anchor(enum.Enum):
    """Where a rule or production may be applied."""

    NONE = "none"    # anywhere
    LEFT = "left"    # only at the start of the word
    RIGHT = "right"  # only at the end of the word
    BOTH = "both"    # only as the entire word


def check_symbol(name: str) -> Symbol:
    """Validate a symbol name, returning it unchanged."""
    if not isinstance(name, str) or not name:
        raise ValueError(f"symbol name must be a non-empty string: {name!r}")
    if any(c.isspace() for c in name):
        raise ValueError(f"symbol name contains whitespace: {name!r}")
    if name == EMPTY_WORD_TOKEN:
        raise ValueError(f"{EMPTY_WORD_TOKEN!r} is reserved for the empty word")
    return name


def word(text: str) -> Word:
    """Parse a whitespace-separated word; a single ``_`` is the empty word."""
    tokens = text.split()
    if tokens == [EMPTY_WORD_TOKEN]:
        return EPSILON
    return tuple(check_symbol(t) for t in tokens)


def word_str(w: Word) -> str:
    """Render a word as whitespace-separated symbols, ``_`` for the empty word."""
    return " ".join(w) if w else EMPTY_WORD_TOKEN


@dataclass(frozen=True)
class Alphabet:
    """A working alphabet together with its distinguished terminal subset."""

    terminals: frozenset[Symbol]
    working: frozenset[Symbol]

    def __post_init__(self):
        for name in self.working:
            check_symbol(name)
        if not self.terminals <= self.working:
            extra = sorted(self.terminals - self.working)
            raise ValueError(f"terminals not in working alphabet: {extra}")

    @staticmethod
    def of(terminals, working=None) -> "Alphabet":
        terminals = frozenset(terminals)
        working = frozenset(working) if working is not None else terminals
        return Alphabet(terminals, working | terminals)


def anchor_ok(anchor: Anchor, start: int, needle_len: int, haystack_len: int) -> bool:
    """Does an occurrence at ``start`` satisfy the anchor constraint?"""
    if anchor is Anchor.NONE:
        return True
    if anchor is Anchor.LEFT:
        return start == 0
    if anchor is Anchor.RIGHT:
        return start + needle_len == haystack_len
    return start == 0 and needle_len == haystack_len


def occurrences(haystack: Word, needle: Word, anchor: Anchor = Anchor.NONE) -> list[int]:
    """All start indices of ``needle`` in ``haystack`` honouring ``anchor``.

    Overlapping occurrences are all reported, in ascending order.  The
    needle must be non-empty.
    """
    if not needle:
        raise ValueError("needle must be non-empty")
    n, k = len(haystack), len(needle)
    if anchor is Anchor.LEFT or anchor is Anchor.BOTH:
        candidates = range(0, 1)
    elif anchor is Anchor.RIGHT:
        candidates = range(n - k, n - k + 1) if n >= k else range(0)
    else:
        candidates = range(n - k + 1)
    out = []
    for i in candidates:
        if haystack[i:i + k] == needle and anchor_ok(anchor, i, k, n):
            out.append(i)
    return out


def splice(w: Word, at: int, remove_len: int, insert: Word) -> Word:
    """Replace ``w[at:at+remove_len]`` by ``insert``."""
    if at < 0 or remove_len < 0 or at + remove_len > len(w):
        raise IndexError(f"splice out of range: at={at} remove_len={remove_len} |w|={len(w)}")
    return w[:at] + tuple(insert) + w[at + remove_len:]
