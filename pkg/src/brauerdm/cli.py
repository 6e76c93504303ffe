"""Command-line interface: ``brauerdm <command> [options]``.

Partitions are dot-joined parts ("7.7.6.5.3.2", "-" for the empty one);
valley sets are comma-joined integers ("1,3,5,6", "-" for the empty set).
Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import decomp as dc
from .errors import BrauerDMError
from .klpoly import kl_row
from .sets import format_set, parse_set, short_label
from .suites import SUITES, run_suite, selftest
from .tlcube import hypercube, tl_diagram, to_binary, word_str
from .valley import PREFIX_ENV, block_ball, o_delta, o_delta_inverse, same_block
from .young import Partition, enumerate_lambda_n


class UsageError(Exception):
    pass


def _delta(text: str) -> int:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid delta {text!r}") from None
    if value.denominator != 1:
        raise argparse.ArgumentTypeError(
            f"delta={text} is not an integer: B_n(delta) is then semisimple and D is the identity")
    return int(value)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _valley_set(text: str) -> frozenset:
    try:
        return parse_set(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauerdm", description=__doc__.splitlines()[0])
    parser.add_argument("--prefix-len", type=_nonneg, default=None,
                        help=f"prefix length for the shifted embedding (same as {PREFIX_ENV})")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        return p

    p = add("odelta", "valley set o_delta(lam)")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--partition", type=_partition, required=True)

    p = add("block", "block of lam, within Lambda^n or as a graph ball")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--partition", type=_partition, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=_nonneg)
    g.add_argument("--radius", type=_nonneg)

    p = add("hypercube", "hypercube of a valley set, or of lam at delta")
    p.add_argument("--set", type=_valley_set)
    p.add_argument("--delta", type=_delta)
    p.add_argument("--partition", type=_partition)

    p = add("klrow", "parabolic KL row, or the exponent table with --table")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--set", type=_valley_set)
    g.add_argument("--table", type=_nonneg, metavar="M", help="all even subsets of {1..M}")
    p.add_argument("--via", type=_valley_set, help="lower end of the incoming edge")

    for name, text in (("decomp", "decomposition matrix"), ("cartan", "Cartan matrix")):
        p = add(name, text)
        p.add_argument("--delta", type=_delta, required=True)
        p.add_argument("--n", type=_nonneg)
        p.add_argument("--convention", choices=dc.CONVENTIONS,
                       default=dc.PRIMED if name == "decomp" else dc.MODULE)
        p.add_argument("--format", default="csv")
        if name == "decomp":
            p.add_argument("--partition", type=_partition, help="single row (primed labels)")
            p.add_argument("--depths", action="store_true", help="depth integers in CSV/LaTeX cells")

    p = add("blocks", "blocks of Lambda^n")
    p.add_argument("--delta", type=_delta, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = add("verify", "run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--max-n", type=_nonneg, default=6)
    p.add_argument("--verbose", action="store_true")

    add("selftest", "check the worked examples")
    return parser


def _cmd_odelta(args):
    return format_set(o_delta(args.delta, args.partition))


def _cmd_block(args):
    lam = args.partition
    if args.n is not None:
        members = [mu for mu in enumerate_lambda_n(args.n) if same_block(args.delta, lam, mu)]
    else:
        members = block_ball(args.delta, lam, 2 if args.radius is None else args.radius)
    return "\n".join(f"{mu}\t{format_set(o_delta(args.delta, mu))}" for mu in members)


def _cmd_hypercube(args):
    if args.set is not None:
        if args.partition is not None:
            raise UsageError("give either --set or --delta with --partition")
        a, lam = args.set, None
    else:
        if args.partition is None or args.delta is None:
            raise UsageError("hypercube needs --set, or --delta with --partition")
        a, lam = o_delta(args.delta, args.partition), args.partition
    h = hypercube(a)
    name = lambda v: short_label(v) + (f"\t{o_delta_inverse(args.delta, lam, v)}" if lam is not None else "")
    lines = [f"word {word_str(to_binary(a)) or '-'}", f"tl {tl_diagram(to_binary(a)).render() or '-'}",
             "vertices"]
    for depth, layer in enumerate(h.layers()):
        lines += [f"  {depth}\t{name(v)}" for v in layer]
    lines.append("edges")
    for upper, lower, k in sorted(h.edges, key=lambda e: (h.vertices[e[0]], sorted(e[0]), sorted(e[1]))):
        g = h.generators[k]
        lines.append(f"  {short_label(upper)} -> {short_label(lower)}\t({g.i} {g.j}){'' if g.kind == '01' else '_'}")
    return "\n".join(lines)


def _cmd_klrow(args):
    if args.table is not None:
        return dc.export(dc.poly_table(args.table), "polytable")
    return str(kl_row(args.set, via=args.via))


def _need_n(args):
    if args.n is None:
        raise UsageError("--n is required")
    return args.n


def _cmd_decomp(args):
    if args.partition is not None:
        return dc.export(dc.decomp_row(args.delta, args.partition), args.format, args.depths)
    return dc.export(dc.decomp_matrix(args.delta, _need_n(args), args.convention), args.format, args.depths)


def _cmd_cartan(args):
    return dc.export(dc.cartan(args.delta, _need_n(args), args.convention), args.format)


def _cmd_blocks(args):
    report = dc.blocks(args.delta, args.n)
    if args.format == "json":
        return json.dumps({"delta": report.delta, "n": report.n, "blocks": [
            {"representative": str(b.representative), "singularity": b.singularity,
             "members": [{"label": str(lam), "valley": sorted(b.valley[lam])} for lam in b.members]}
            for b in report.blocks]}, indent=2)
    lines = []
    for b in report.blocks:
        lines.append(f"block {b.representative} (singularity {b.singularity})")
        lines += [f"  {lam}\t{format_set(b.valley[lam])}" for lam in b.members]
    return "\n".join(lines)


def _cmd_verify(args, out):
    failures = 0
    total = 0
    for r in run_suite(args.suite, args.max_n):
        total += 1
        if not r.ok:
            failures += 1
            print(f"FAIL {r.name} {r.detail}".rstrip(), file=out)
        elif args.verbose:
            print(f"ok   {r.name}", file=out)
    print(f"{args.suite}: {total - failures}/{total} checks passed", file=out)
    return 1 if failures else 0


def _cmd_selftest(args, out):
    failures = 0
    for r in selftest():
        failures += not r.ok
        print(f"{'PASS' if r.ok else 'FAIL'} {r.name} {r.detail}".rstrip(), file=out)
    return 1 if failures else 0


COMMANDS = {"odelta": _cmd_odelta, "block": _cmd_block, "hypercube": _cmd_hypercube,
            "klrow": _cmd_klrow, "decomp": _cmd_decomp, "cartan": _cmd_cartan, "blocks": _cmd_blocks}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    saved = os.environ.get(PREFIX_ENV)
    if args.prefix_len is not None:
        os.environ[PREFIX_ENV] = str(args.prefix_len)
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "selftest":
            return _cmd_selftest(args, out)
        print(COMMANDS[args.command](args), file=out)
        return 0
    except (UsageError, BrauerDMError, ValueError) as exc:
        print(f"brauerdm {args.command}: {exc}", file=err)
        return 2
    finally:
        if saved is None:
            os.environ.pop(PREFIX_ENV, None)
        else:
            os.environ[PREFIX_ENV] = saved


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
