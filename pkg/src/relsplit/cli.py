"""Command-line front end.

Thin wrappers around the library: every subcommand parses files with the
shared text format, calls the corresponding library function, and prints
a line-oriented `key: value` report.  Exit codes are stable:

    0  success
    2  unreadable or malformed input
    3  the requested operation does not apply to this input
    4  a verification found violations
    5  no discrepancy bound exists for the machine
    6  the relation is not irreflexive
    7  the requested bound is below the machine's minimum
"""

from __future__ import annotations

import argparse
import sys

from .corpus import ENTRIES, REGISTRY
from .discrepancy import Witness, is_zero_avoiding, minimum_bound
from .errors import (
    BoundTooSmall,
    EmptyInitialSet,
    InvalidSymbol,
    NotInputAltering,
    NotZeroAvoiding,
    ParseError,
    RelsplitError,
)
from .machine import is_letter_to_letter, remove_epsilon_pairs
from .oracle import BoundedRelation, check_partition, enumerate_pairs, format_pairs, parse_pairs
from .partition import is_input_altering, partition
from .textio import parse_path, serialize, to_dot

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NOT_APPLICABLE = 3
EXIT_VERIFY_FAILED = 4
EXIT_NOT_ZERO_AVOIDING = 5
EXIT_NOT_INPUT_ALTERING = 6
EXIT_BOUND_TOO_SMALL = 7


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cycle_display(edges) -> str:
    return "-".join(Witness.cycle_states(edges))


def cmd_analyze(args) -> int:
    t = parse_path(args.infile)
    report = is_zero_avoiding(t)
    lines = [f"letter_to_letter: {_bool(is_letter_to_letter(t))}"]
    lines.append(f"zero_avoiding: {_bool(report.zero_avoiding)}")
    if report.zero_avoiding:
        bound = minimum_bound(t)
        altering, _ = is_input_altering(remove_epsilon_pairs(t), bound)
        lines.append(f"min_bound: {bound}")
        lines.append(f"input_altering: {_bool(altering)}")
    else:
        lines.append("min_bound: -")
        lines.append("input_altering: unknown")
    lines.append(f"states: {len(t.states)}")
    lines.append(f"edges: {len(t.edges)}")
    if not report.zero_avoiding:
        w = report.witness
        lines.append(f"witness_cycle_1: {_cycle_display(w.c1)}")
        lines.append(f"witness_cycle_2: {_cycle_display(w.c2)}")
    print("\n".join(lines))
    return EXIT_OK


def cmd_partition(args) -> int:
    t = parse_path(args.infile)
    result = partition(t, bound=args.bound)
    with open(args.out1, "w", encoding="utf-8") as handle:
        handle.write(serialize(result.greater))
    with open(args.out2, "w", encoding="utf-8") as handle:
        handle.write(serialize(result.lesser))
    print(f"bound: {result.bound}")
    print(f"letter_to_letter: {_bool(result.letter_to_letter)}")
    print(f"greater_states: {len(result.greater.states)}")
    print(f"lesser_states: {len(result.lesser.states)}")
    if args.verify_len is not None:
        cap = args.verify_len
        report = check_partition(
            enumerate_pairs(t, cap),
            enumerate_pairs(result.greater, cap),
            enumerate_pairs(result.lesser, cap),
        )
        if not report.ok:
            for violation in report.violations:
                print(f"violation: {violation}")
            return EXIT_VERIFY_FAILED
        print(f"verified: {cap}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    t = parse_path(args.infile)
    text = format_pairs(enumerate_pairs(t, args.length))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load_pairs(path):
    with open(path, encoding="utf-8") as handle:
        return parse_pairs(handle.read())


def cmd_verify(args) -> int:
    rel = _load_pairs(args.rel)
    a = _load_pairs(args.a)
    b = _load_pairs(args.b)
    cap = max(rel.cap, a.cap, b.cap)
    report = check_partition(
        BoundedRelation(cap, rel.pairs),
        BoundedRelation(cap, a.pairs),
        BoundedRelation(cap, b.pairs),
    )
    if not report.ok:
        for violation in report.violations:
            print(f"violation: {violation}")
        return EXIT_VERIFY_FAILED
    print("ok")
    return EXIT_OK


def cmd_dot(args) -> int:
    t = parse_path(args.infile)
    text = to_dot(t)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.action == "list":
        for entry in ENTRIES:
            print(f"{entry.name}: {entry.description}")
        return EXIT_OK
    entry = REGISTRY.get(args.name)
    if entry is None:
        print(f"unknown example: {args.name}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(serialize(entry.builder()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relsplit",
        description="Analyze transducers and split relations along the radix order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report structural facts about a machine")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("partition", help="split a relation into radix halves")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out1", required=True)
    p.add_argument("--out2", required=True)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--verify-len", dest="verify_len", type=int, default=None)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("enumerate", help="list realized pairs up to a length")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--len", dest="length", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check pair files form a partition")
    p.add_argument("--rel", required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dot", help="emit a GraphViz rendering")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("examples", help="list or emit bundled machines")
    p.add_argument("action", choices=["list", "emit"])
    p.add_argument("name", nargs="?")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "examples" and args.action == "emit":
        if not args.name or not args.out:
            print("examples emit needs a name and --out", file=sys.stderr)
            return EXIT_PARSE
    try:
        return args.func(args)
    except (ParseError, InvalidSymbol, EmptyInitialSet) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except NotZeroAvoiding as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_ZERO_AVOIDING
    except NotInputAltering as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_INPUT_ALTERING
    except BoundTooSmall as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_BOUND_TOO_SMALL
    except RelsplitError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NOT_APPLICABLE


if __name__ == "__main__":
    sys.exit(main())
