"""Command-line front end.

JSON goes to stdout, diagnostics to stderr.  Exit status: 0 on success (or
a passing ``verify``), 1 on a failing ``verify``, 2 on usage or resource
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import AlphabetOverflowError, BudgetExceededError, InvalidInputError
from .graphs import count_connected, enumerate_graphs, graph_to_word, word_to_graph
from .partitions import as_partition, invariant_dimension, multiplicity
from .tensors import build_invariant
from .verify import DEFAULT_BUDGET, certify_basis
from .words import format_word, parse_word


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected m >= 0, got {value}")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected n >= 1, got {value}")
    return value


def _parse_lambda(text: str, n: int) -> tuple[int, ...]:
    parts = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if not tok.isdigit():
            raise UsageError(f"bad part {tok!r} in --lambda {text!r}")
        parts.append(int(tok))
    try:
        return as_partition(parts, n)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None


def _emit(obj: object) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_count(args: argparse.Namespace) -> int:
    if args.connected:
        if args.m < 2:
            raise UsageError(f"--connected needs --m >= 2, got {args.m}")
        _emit({"count": count_connected(args.m, args.n)})
    else:
        _emit({"count": invariant_dimension(args.m, args.n)})
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    for g in enumerate_graphs(args.m, args.n):
        word = format_word(graph_to_word(g, args.n))
        if args.format == "json":
            _emit({"word": word, "graph": g.to_json()})
        else:
            edges = " ".join(f"{e.u}-{e.v}:{e.page}" for e in g.edges)
            sys.stdout.write(f"{word}\t{edges}\n")
    return 0


def cmd_tensor(args: argparse.Namespace) -> int:
    try:
        word = parse_word(args.word)
        g = word_to_graph(word, args.n)
    except InvalidInputError as exc:
        raise UsageError(str(exc)) from None
    _emit(build_invariant(g, args.n).to_json(args.n))
    return 0


def cmd_multiplicity(args: argparse.Namespace) -> int:
    lam = _parse_lambda(args.lam, args.n)
    _emit({"multiplicity": multiplicity(lam, args.m, args.n)})
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = certify_basis(
        args.m, args.n, with_brute_force=args.brute_force, budget=args.budget, with_rank=args.rank
    )
    out = report.to_json()
    if not args.timings:
        # wall-clock times would make the output nondeterministic
        del out["timings"]
    _emit(out)
    if not report.passed:
        print(f"verify: certification failed for m={args.m}, n={args.n}", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symwave", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--m", type=_nonneg, required=True, help="tensor degree / vertex count")
        p.add_argument("--n", type=_positive, required=True, help="rank; the group is Sp(2n)")

    p = sub.add_parser("count", help="dimension of the invariant space")
    common(p)
    p.add_argument("--connected", action="store_true", help="count connected wave graphs only")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list lattice words and their wave graphs")
    common(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tensor", help="invariant tensor of the graph of a word")
    p.add_argument("--word", required=True, help='signed letters, e.g. "1 2 -2 -1"')
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("multiplicity", help="multiplicity of an irreducible in V^(x)m")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True, help='comma-separated parts, e.g. "2,1"')
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("verify", help="certify the wave-graph basis")
    common(p)
    p.add_argument("--brute-force", action="store_true", help="also compute the kernel dimension directly")
    p.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET, help="max (2n)^m for --brute-force")
    p.add_argument("--rank", action="store_true", help="also compute the exact rank of all t_G")
    p.add_argument("--timings", action="store_true", help="include per-phase wall-clock seconds")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, AlphabetOverflowError, BudgetExceededError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
