"""Line-oriented text format for systems and grammars, plus trace and
diagram rendering and the language-comparison oracle used by ``equiv``.

Format (``#`` starts a comment, symbols are whitespace-separated,
``_`` is the empty word)::

    kind: nca                     kind: gcsg          # or egcsg
    terminals: a b                terminals: a b
    alphabet: a b T               nonterminals: S T
    rules:                        start: S
    a b -> T                      productions:
    a T b -> _ @both              S -> _
                                  S -> a T b
"""

from __future__ import annotations

from fractions import Fraction

from .core import Anchor, Word, check_symbol, word_str
from .core import Alphabet
from . import grammar as grammar_mod
from . import history as history_mod
from . import nca as nca_mod
from .grammar import Flavor, Grammar, Production
from .nca import NcaSystem, Rule


class ParseError(Exception):
    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class ValidationError(Exception):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


_ANCHORS = {"@left": Anchor.LEFT, "@right": Anchor.RIGHT, "@both": Anchor.BOTH}
_ANCHOR_SUFFIX = {Anchor.LEFT: " @left", Anchor.RIGHT: " @right", Anchor.BOTH: " @both", Anchor.NONE: ""}


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_word(tokens, lineno) -> Word:
    if tokens == ["_"]:
        return ()
    try:
        return tuple(check_symbol(t) for t in tokens)
    except ValueError as e:
        raise ParseError(str(e), lineno)


def _parse_rule_line(text: str, lineno: int):
    if "->" not in text:
        raise ParseError("expected 'LHS -> RHS'", lineno, 1)
    left, right = text.split("->", 1)
    rtokens = right.split()
    anchor = Anchor.NONE
    if rtokens and rtokens[-1].startswith("@"):
        tok = rtokens.pop()
        if tok not in _ANCHORS:
            raise ParseError(f"unknown anchor {tok}", lineno, text.index(tok) + 1)
        anchor = _ANCHORS[tok]
    lhs = _parse_word(left.split(), lineno)
    rhs = _parse_word(rtokens, lineno)
    if not lhs:
        raise ParseError("empty left hand side", lineno)
    return lhs, rhs, anchor


def parse_system(text: str, *, check: bool = True):
    """Parse a system file into an :class:`NcaSystem` or :class:`Grammar`.

    With ``check`` (the default) the matching validator runs and any
    violations raise :class:`ValidationError`.
    """
    headers: dict[str, tuple[str, int]] = {}
    body: list[tuple[str, int]] = []
    in_body = False
    body_key = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if not in_body and ":" in line:
            key, _, value = line.partition(":")
            key = key.strip()
            if key in ("rules", "productions"):
                if value.strip():
                    raise ParseError(f"'{key}:' takes no value on its line", lineno)
                in_body = True
                body_key = key
                continue
            if key in headers:
                raise ParseError(f"duplicate header {key!r}", lineno)
            headers[key] = (value.strip(), lineno)
        elif in_body:
            body.append((line, lineno))
        else:
            raise ParseError(f"expected 'key: value' header, got {line!r}", lineno, 1)

    def take(key, required=True):
        if key not in headers:
            if required:
                raise ParseError(f"missing header {key!r}")
            return None
        return headers.pop(key)[0]

    kind = take("kind")
    if kind not in ("nca", "gcsg", "egcsg"):
        raise ParseError(f"unknown kind {kind!r}")

    if kind == "nca":
        if body_key not in (None, "rules"):
            raise ParseError(f"kind nca expects a 'rules:' section, got '{body_key}:'")
        terminals = _parse_word(take("terminals").split(), None)
        working = _parse_word(take("alphabet").split(), None)
        _reject_unknown(headers)
        rules = tuple(Rule(*_parse_rule_line(line, no)) for line, no in body)
        system = NcaSystem(Alphabet(frozenset(terminals), frozenset(working)), rules)
        if check:
            violations = nca_mod.validate(system)
            if violations:
                raise ValidationError(violations)
        return system

    if body_key not in (None, "productions"):
        raise ParseError(f"kind {kind} expects a 'productions:' section, got '{body_key}:'")
    terminals = _parse_word(take("terminals").split(), None)
    nonterminals = _parse_word(take("nonterminals").split(), None)
    start = take("start")
    check_symbol(start)
    _reject_unknown(headers)
    productions = tuple(Production(*_parse_rule_line(line, no)) for line, no in body)
    g = Grammar(
        nonterminals=frozenset(nonterminals),
        terminals=frozenset(terminals),
        start=start,
        productions=productions,
        flavor=Flavor.EXTENDED if kind == "egcsg" else Flavor.STANDARD,
    )
    if check:
        violations = grammar_mod.validate(g)
        if violations:
            raise ValidationError(violations)
    return g


def _reject_unknown(headers):
    for key, (_, lineno) in headers.items():
        raise ParseError(f"unknown header {key!r}", lineno)


def _rule_line(lhs, rhs, anchor) -> str:
    return f"{word_str(lhs)} -> {word_str(rhs)}{_ANCHOR_SUFFIX[anchor]}"


def serialize_system(sys) -> str:
    """Canonical text: sorted symbol sections, sorted rule lines.
    Reparsing yields an equal system up to rule order."""
    lines = []
    if isinstance(sys, NcaSystem):
        lines.append("kind: nca")
        lines.append("terminals: " + word_str(tuple(sorted(sys.alphabet.terminals))))
        lines.append("alphabet: " + word_str(tuple(sorted(sys.alphabet.working))))
        lines.append("rules:")
        lines.extend(sorted(_rule_line(r.lhs, r.rhs, r.anchor) for r in sys.rules))
    elif isinstance(sys, Grammar):
        lines.append("kind: " + ("egcsg" if sys.flavor is Flavor.EXTENDED else "gcsg"))
        lines.append("terminals: " + word_str(tuple(sorted(sys.terminals))))
        lines.append("nonterminals: " + word_str(tuple(sorted(sys.nonterminals))))
        lines.append("start: " + sys.start)
        lines.append("productions:")
        lines.extend(sorted(_rule_line(p.lhs, p.rhs, p.anchor) for p in sys.productions))
    else:
        raise TypeError(f"cannot serialize {type(sys).__name__}")
    return "\n".join(lines) + "\n"


def language(system, max_len: int, *, guard: int = 12) -> set[Word]:
    """Enumerated language of either kind of system up to ``max_len``."""
    if isinstance(system, NcaSystem):
        return nca_mod.enumerate_language(system, max_len, guard=guard)
    if isinstance(system, Grammar):
        return grammar_mod.generate_language(system, max_len, guard=guard)
    raise TypeError(f"not a system: {type(system).__name__}")


def shortlex_key(w: Word):
    return (len(w), w)


def first_difference(a, b, max_len: int, *, guard: int = 12):
    """First word (shortlex, so the empty word first) on which the two
    systems' languages up to ``max_len`` disagree, or None if equal."""
    la = language(a, max_len, guard=guard)
    lb = language(b, max_len, guard=guard)
    diff = la ^ lb
    if not diff:
        return None
    return min(diff, key=shortlex_key)


def format_trace(h) -> str:
    """One line per step: ``t | word | rule#k @pos``."""
    words = history_mod.words_of(h)
    lines = []
    for t, e in enumerate(h.events):
        lines.append(f"{t} | {word_str(words[t])} | rule#{e.rule_index} @{e.position}")
    lines.append(f"{len(h.events)} | {word_str(words[-1])} |")
    return "\n".join(lines) + "\n"


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_diagram(h) -> str:
    """Rows of letters with their horizontal intervals, interleaved with
    the substitution line spans."""
    geo = history_mod.geometry(h)
    out = []
    for t, row in enumerate(history_mod.rows(h)):
        cells = " ".join(
            f"{h.symbols[i]}[{_frac(geo.intervals[i][0])},{_frac(geo.intervals[i][1])})"
            for i in row
        ) or "_"
        out.append(f"row {t}: {cells}")
        if t < len(h.events):
            lo, hi = geo.lines[t]
            out.append(f"  line: [{_frac(lo)},{_frac(hi)}) rule#{h.events[t].rule_index}")
    return "\n".join(out) + "\n"
