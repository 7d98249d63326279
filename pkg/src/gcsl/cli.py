"""Command line interface.

Exit codes: 0 success / accepted / languages equal, 1 rejected / unequal,
2 usage or parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .core import word, word_str
from . import grammar as grammar_mod
from . import history as history_mod
from . import nca as nca_mod
from . import transforms
from .grammar import Grammar
from .nca import NcaSystem, Status
from .textio import (
    ParseError,
    ValidationError,
    first_difference,
    format_diagram,
    format_trace,
    parse_system,
    serialize_system,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _load(path: str, *, check: bool = True):
    with open(path, encoding="utf-8") as f:
        text = f.read()
    try:
        return parse_system(text, check=check)
    except (ParseError, ValidationError) as e:
        raise _CliError(f"{path}: {e}")


class _CliError(Exception):
    pass


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    try:
        _load(args.file)
    except _CliError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    print("ok")
    return EXIT_OK


_CONVERSIONS = {
    "nca": (Grammar, transforms.gcsg_to_nca),
    "gcsg": (NcaSystem, transforms.nca_to_gcsg),
    "standard": (Grammar, transforms.deanchor),
    "noterm": (Grammar, transforms.eliminate_terminals),
}


def cmd_convert(args) -> int:
    expected, fn = _CONVERSIONS[args.to]
    system = _load(args.file)
    if not isinstance(system, expected):
        raise _CliError(
            f"convert --to {args.to} expects a {expected.__name__.lower()} input"
        )
    try:
        result = fn(system)
    except ValueError as e:
        raise _CliError(str(e))
    _emit(serialize_system(result), args.output)
    return EXIT_OK


def _decide(system, w):
    if isinstance(system, NcaSystem):
        return nca_mod.decide(system, w)
    return grammar_mod.member(system, w)


def cmd_decide(args) -> int:
    system = _load(args.file)
    try:
        w = word(args.word)
        decision = _decide(system, w)
    except ValueError as e:
        raise _CliError(str(e))
    if decision.status is Status.BUDGET_EXCEEDED:
        print("budget exceeded", file=sys.stderr)
        return EXIT_BUDGET
    if not decision.accepted:
        print("rejected")
        return EXIT_NEGATIVE
    print("accepted")
    if args.trace:
        if not isinstance(system, NcaSystem):
            raise _CliError("--trace requires an nca input")
        h = history_mod.from_moves(system, w, decision.witness)
        _emit(format_trace(h), args.trace)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .textio import language, shortlex_key

    system = _load(args.file)
    try:
        lang = language(system, args.max_len)
    except ValueError as e:
        raise _CliError(str(e))
    for w in sorted(lang, key=shortlex_key):
        print(word_str(w))
    return EXIT_OK


def cmd_equiv(args) -> int:
    a = _load(args.file_a)
    b = _load(args.file_b)
    try:
        diff = first_difference(a, b, args.max_len)
    except ValueError as e:
        raise _CliError(str(e))
    if diff is None:
        print(f"equal up to length {args.max_len}")
        return EXIT_OK
    print(f"languages differ on: {word_str(diff)}")
    return EXIT_NEGATIVE


def cmd_trace(args) -> int:
    system = _load(args.file)
    if not isinstance(system, NcaSystem):
        raise _CliError("trace requires an nca input")
    try:
        w = word(args.word)
        decision = nca_mod.decide(system, w)
    except ValueError as e:
        raise _CliError(str(e))
    if decision.status is Status.BUDGET_EXCEEDED:
        print("budget exceeded", file=sys.stderr)
        return EXIT_BUDGET
    if not decision.accepted:
        print("rejected")
        return EXIT_NEGATIVE
    h = history_mod.from_moves(system, w, decision.witness)
    if args.canonical:
        h = history_mod.canonicalize(h)
    sys.stdout.write(format_trace(h))
    if args.diagram or sys.stdout.isatty():
        sys.stdout.write(format_diagram(h))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcsl",
        description="Length-reducing rewriting systems, growing context-sensitive "
                    "grammars, conversions between them, and reduction traces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("convert", help="convert between system kinds")
    p.add_argument("--to", required=True, choices=sorted(_CONVERSIONS))
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_convert)

    p = sub.add_parser("decide", help="decide membership of a word")
    p.add_argument("file")
    p.add_argument("word", help="whitespace-separated symbols, or _ for the empty word")
    p.add_argument("--trace", metavar="OUT", help="write a witness trace (nca only)")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("enumerate", help="list the language up to a length bound")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("equiv", help="compare two systems' languages")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(fn=cmd_equiv)

    p = sub.add_parser("trace", help="print a witness reduction history")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--canonical", action="store_true",
                   help="reorder independent substitutions left-first")
    p.add_argument("--diagram", action="store_true",
                   help="append the interval diagram even when piped")
    p.set_defaults(fn=cmd_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args)
    except _CliError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except nca_mod.BudgetExceededError:
        print("budget exceeded", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
