"""Command-line entry point: ``noisydup <subcommand> ...``.

Payload goes to stdout, diagnostics to stderr. Exit status 0 on success,
1 on a domain failure (decode failure, failed verification, budget
exhausted), 2 on bad usage or malformed input.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import analysis, oracle
from .channel import EnumerationLimitError, dump_events, sample_channel
from .indel import DecodeError
from .ndcode import Codebook, CodeParams, build_codebook, nd_decode
from .words import (
    cusum,
    format_word,
    indicator,
    interleave,
    mu,
    parse_word,
    phi,
    root,
    zeta,
)

TRANSFORMS = ("phi", "root", "mu", "interleave", "cusum", "indicator", "zeta")
SCENARIOS = ("sample", "guard", "syndromes", "cone", "decode", "coverage")


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for {args.command}")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def sample_codebook_text() -> str:
    return resources.files("noisydup").joinpath("data/sample_codebook.txt").read_text()


def _load_codebook(path: str | None) -> Codebook:
    text = sample_codebook_text() if path in (None, "sample") else Path(path).read_text()
    return Codebook.from_text(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _n_range(text: str) -> list[int]:
    """'100:400:20' (inclusive), '8,9,10' or a single value."""
    if ":" in text:
        parts = [int(v) for v in text.split(":")]
        if len(parts) == 2:
            parts.append(1)
        if len(parts) != 3 or parts[2] <= 0:
            raise UsageError(f"bad range {text!r}; use start:stop[:step]")
        return list(range(parts[0], parts[1] + 1, parts[2]))
    return _int_list(text)


def cmd_transform(args) -> int:
    _need(args, "q", "k")
    x = parse_word(args.word, args.q)
    q, k = args.q, args.k
    if args.op == "phi":
        head, tail = phi(x, k, q)
        print(f"{format_word(head, q)}|{format_word(tail, q)}")
        return 0
    result = {
        "root": lambda: root(x, k, q),
        "mu": lambda: mu(x, k),
        "interleave": lambda: interleave(x, k),
        "cusum": lambda: cusum(x, q),
        "indicator": lambda: indicator(x),
        "zeta": lambda: zeta(x),
    }[args.op]()
    print(format_word(result, q))
    return 0


def cmd_corrupt(args) -> int:
    _need(args, "q", "k")
    x = parse_word(args.word, args.q)
    y, events = sample_channel(x, args.k, args.q, args.t, args.noisy, args.seed)
    print(format_word(y, args.q))
    if args.out:
        Path(args.out).write_text(dump_events(events))
    return 0


def cmd_codebook(args) -> int:
    _need(args, "q", "k", "n")
    params = None
    if args.params:
        params = CodeParams.from_flat(args.q, args.k, args.n, [int(v) for v in args.params.split()])
    book = build_codebook(args.q, args.k, args.n, params, budget=args.budget)
    _emit(book.to_text(), args.out)
    return 0


def cmd_decode(args) -> int:
    book = _load_codebook(args.codebook)
    p = book.params
    y = parse_word(args.received, p.q)
    try:
        x, trace = nd_decode(y, p, check_cone=args.check_cone, budget=args.budget)
    except DecodeError as e:
        print(f"decode failed: {e}", file=sys.stderr)
        return 1
    print(format_word(x, p.q))
    if args.trace:
        print(f"delta={trace.delta} branch={trace.branch} string={trace.star_string} stage={trace.stage}",
              file=sys.stderr)
    return 0


def cmd_rates(args) -> int:
    q_list = _int_list(args.q_list)
    n_values = _n_range(args.n_range)
    rows = analysis.rate_table(args.k, q_list, n_values)
    _emit(analysis.rates_csv(rows), args.out)
    return 0


def cmd_verify(args) -> int:
    budget = args.budget
    if args.scenario == "sample":
        book = _load_codebook(args.codebook)
        p = book.params
        t = args.t if args.t is not None else 2
        reports = [
            oracle.verify_syndromes(p.q, p.k, p.n),
            oracle.verify_cone_disjoint(book, t, budget),
            oracle.verify_decode_exhaustive(book, t, args.threads, budget),
        ]
    elif args.scenario == "guard":
        _need(args, "n")
        reports = [oracle.verify_guard_exhaustive(args.n)]
    elif args.scenario == "syndromes":
        _need(args, "q", "k", "n")
        reports = [oracle.verify_syndromes(args.q, args.k, args.n)]
    elif args.scenario in ("cone", "decode"):
        _need(args, "t")
        if args.codebook or (args.q, args.k, args.n) == (None, None, None):
            book = _load_codebook(args.codebook)
        else:
            _need(args, "q", "k", "n")
            book = build_codebook(args.q, args.k, args.n, budget=budget)
        if args.scenario == "cone":
            reports = [oracle.verify_cone_disjoint(book, args.t, budget)]
        else:
            reports = [oracle.verify_decode_exhaustive(book, args.t, args.threads, budget)]
    else:
        _need(args, "q", "k", "n", "t")
        reports = [oracle.verify_table_coverage(args.q, args.k, args.n, args.t, not args.exact_only, budget)]
    _emit("\n".join(r.to_text() for r in reports), args.out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="alphabet size")
    common.add_argument("--k", type=int, help="duplication length")
    common.add_argument("--n", type=int, help="code length (max root length for coverage)")
    common.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="enumeration node budget")
    common.add_argument("--out", help="write the payload to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="noisydup", description="Codes for exact and noisy tandem duplications.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common], help="apply a word transform")
    p.add_argument("--op", choices=TRANSFORMS, default="phi")
    p.add_argument("word")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("corrupt", parents=[common], help="pass a word through the duplication channel")
    p.add_argument("--t", type=int, default=1, help="number of duplications")
    p.add_argument("--noisy", action="store_true", help="make exactly one duplication noisy")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("word")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("codebook", parents=[common], help="enumerate a codebook")
    p.add_argument("--params", help="residues in file order; default picks the largest class")
    p.set_defaults(func=cmd_codebook)

    p = sub.add_parser("decode", parents=[common], help="decode a received word")
    p.add_argument("--codebook", default="sample", help="codebook file, or 'sample' for the shipped one")
    p.add_argument("--check-cone", action="store_true", help="confirm the answer by cone enumeration")
    p.add_argument("--trace", action="store_true", help="print the decoder branch to stderr")
    p.add_argument("received")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("rates", parents=[common], help="write the rate table as CSV")
    p.add_argument("--q-list", default="3,4,5", help="comma-separated alphabet sizes")
    p.add_argument("--n-range", default="100:400:20", help="start:stop[:step] inclusive, or a list")
    p.set_defaults(func=cmd_rates)

    p = sub.add_parser("verify", parents=[common], help="run a brute-force verification")
    p.add_argument("scenario", choices=SCENARIOS)
    p.add_argument("--codebook", help="codebook file for sample/cone/decode (default: the shipped one)")
    p.add_argument("--t", type=int, help="maximum number of duplications")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--exact-only", action="store_true", help="coverage sweep without the noisy duplication")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "rates" and args.k is None:
        parser.error("--k is required for rates")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"noisydup {args.command}: {e}", file=sys.stderr)
        return 2
    except EnumerationLimitError as e:
        print(f"noisydup {args.command}: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"noisydup {args.command}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
