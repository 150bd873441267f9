"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 refused by a size guard.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys

from .counting import (
    DEFAULT_MAX_FREE_STEPS,
    count,
    expansion_terms,
    parse_pattern,
)
from .errors import CrossCheckError, DomainError, GuardError, ParseError
from .excedance import excedance_word, parse_word
from .group import DEFAULT_MAX_ENUMERATION, Signature, enumerate_group, format_window
from .sequences import bk_table, is_log_concave, is_palindromic, is_unimodal
from .verify import SUITES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=False))


def cmd_count(args):
    sig = Signature(args.r, args.n)
    w = parse_word(args.word, sig)
    report = count(
        w,
        method=args.method,
        cross_check=args.cross_check,
        max_elements=args.max_enumeration,
        max_free=args.max_expansion,
    )
    if args.format == "json":
        _emit_json(report.as_dict())
    else:
        print(f"word: {report.word}")
        print(f"realizable: {str(report.realizable).lower()}")
        print(f"method: {report.method}")
        if report.cross_checked is not None:
            print(f"cross-checked: {str(report.cross_checked).lower()}")
        print(f"count: {report.count}")
    return EXIT_OK


def cmd_pattern_count(args):
    p = parse_pattern(args.pattern, args.n)
    terms = list(expansion_terms(p, args.max_expansion))
    total = sum(t.value for t in terms)
    if args.trace:
        for t in terms:
            print(f"walk {' '.join(map(str, t.walk.entries))}: {t.value:+d}", file=sys.stderr)
    if args.format == "json":
        _emit_json({"n": args.n, "pattern": str(p), "count": str(total)})
    else:
        print(total)
    return EXIT_OK


def cmd_table(args):
    sig = Signature(args.r, args.n)
    seq = bk_table(sig, args.max_expansion)
    verdicts = {
        "log_concave": is_log_concave(seq.values),
        "unimodal": is_unimodal(seq.values),
        "palindromic": is_palindromic(seq.values),
    }
    if args.format == "json":
        _emit_json({"r": sig.r, "n": sig.n, "values": [str(v) for v in seq.values], **verdicts})
    else:
        for k, v in enumerate(seq.values):
            print(f"{k} {v}")
        print(f"log-concave: {str(verdicts['log_concave']).lower()}")
        print(f"unimodal: {str(verdicts['unimodal']).lower()}")
        print(f"palindromic: {str(verdicts['palindromic']).lower()}")
    return EXIT_OK


def cmd_enumerate(args):
    sig = Signature(args.r, args.n)
    w = parse_word(args.word, sig)
    found = []
    truncated = False
    for pi in enumerate_group(sig, args.max_enumeration):
        if excedance_word(pi).letters != w.letters:
            continue
        if args.limit is not None and len(found) >= args.limit:
            truncated = True
            break
        found.append(format_window(pi))
    if args.format == "json":
        _emit_json({"r": sig.r, "n": sig.n, "word": str(w), "elements": found, "truncated": truncated})
    else:
        for line in found:
            print(line)
    if truncated:
        print(f"truncated after {args.limit} elements", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    sig = Signature(args.r, args.n)
    report = run_verification(sig, args.what, args.max_enumeration, args.max_expansion)
    if args.format == "json":
        _emit_json(report.as_dict())
    else:
        print(report.render())
    if not args.no_timestamp:
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
        print(f"# generated {stamp}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gexc", description="Excedance statistics on colored permutation groups G(r,n)."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-enumeration", type=positive_int, default=DEFAULT_MAX_ENUMERATION,
                        help="refuse to enumerate groups larger than this")
    common.add_argument("--max-expansion", type=int, default=DEFAULT_MAX_FREE_STEPS,
                        help="refuse inclusion-exclusion sums with more free steps")

    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--r", type=positive_int, required=True, help="number of colors")
    group.add_argument("--n", type=positive_int, required=True, help="number of digits")

    p = sub.add_parser("count", parents=[common, group], help="count elements with a given excedance word")
    p.add_argument("--word", required=True)
    p.add_argument("--method", choices=("auto", "oracle", "ie"), default="auto")
    p.add_argument("--cross-check", action="store_true", help="also run the other method and compare")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("pattern-count", parents=[common], help="count permutations of S_n matching an a/b/* pattern")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--trace", action="store_true", help="print expansion terms to stderr")
    p.set_defaults(func=cmd_pattern_count)

    p = sub.add_parser("table", parents=[common, group], help="the sequence [b^k a^(rn-1-k)]")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[common, group], help="list elements with a given excedance word")
    p.add_argument("--word", required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common, group], help="cross-check all counting routes")
    p.add_argument("--what", choices=("all",) + SUITES, default="all")
    p.add_argument("--no-timestamp", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
