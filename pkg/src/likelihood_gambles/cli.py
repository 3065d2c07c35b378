"""Command-line front end: price, reduce, canonicalize, compare, tabulate, conform.

Gambles are read from JSON files in the documented wire format.  The
ambiguity premium is passed as log-odds with ``-c`` or as the implicit prior
probability with ``--rho``.  Text output rounds to 4 decimals; JSON output
keeps full double precision.

Exit status: 0 on success, 1 when the conformance suite finds a failing
law, 2 on argument or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .binomial import (
    BinomialScenario,
    PricingRow,
    bayesian_prices,
    emit_table,
    format_price,
    likelihood_price,
    render_table_csv,
    render_table_text,
)
from .conformance import GenConfig, run_conformance
from .gambles import GambleError, dump_gamble, flatten, load_gamble
from .pricing import canonical_equivalent, logit, prefer, price

_SYMBOL = {"greater": ">", "equal": "=", "less": "<"}


def _add_premium_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "-c", "--premium", type=float, default=0.0,
        help="ambiguity premium as log-odds (default 0: neutral)",
    )
    group.add_argument(
        "--rho", type=float, default=None,
        help="implicit prior in (0, 1); converted to a premium via logit",
    )


def _premium(args: argparse.Namespace) -> float:
    if args.rho is not None:
        return logit(args.rho)
    return args.premium


def _add_format_arg(parser: argparse.ArgumentParser, choices: Sequence[str]) -> None:
    parser.add_argument(
        "-f", "--format", choices=list(choices), default="text", help="output format"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgamble",
        description="Price and compare likelihood gambles under an ambiguity premium.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("price", help="fair price of a gamble file")
    _add_premium_args(p)
    _add_format_arg(p, ("text", "json"))
    p.add_argument("file", help="gamble JSON file")

    p = sub.add_parser("reduce", help="flatten a gamble file to its normal form")
    p.add_argument("file", help="gamble JSON file")

    p = sub.add_parser("canonical", help="equivalent {alpha/1, beta/0} gamble")
    _add_premium_args(p)
    p.add_argument("file", help="gamble JSON file")

    p = sub.add_parser("compare", help="order two gamble files: prints >, =, or <")
    _add_premium_args(p)
    p.add_argument("file1", help="first gamble JSON file")
    p.add_argument("file2", help="second gamble JSON file")

    p = sub.add_parser("demo-binomial", help="price the bet on the next toss")
    _add_premium_args(p)
    _add_format_arg(p, ("text", "json", "csv"))
    p.add_argument("-m", "--trials", type=int, required=True, help="observed tosses")
    p.add_argument("-x", "--successes", type=int, default=None, help="one row only")

    p = sub.add_parser("conformance", help="replay the preference laws on random gambles")
    _add_premium_args(p)
    _add_format_arg(p, ("text", "json"))
    p.add_argument("--samples", type=int, default=500, help="instances per law")
    p.add_argument("--seed", type=int, default=0, help="generator seed")
    p.add_argument("--max-depth", type=int, default=4, help="gamble nesting bound")
    p.add_argument("--max-branching", type=int, default=4, help="prospects per node bound")

    return parser


def _cmd_price(args: argparse.Namespace) -> int:
    value = price(load_gamble(args.file), _premium(args))
    if args.format == "json":
        print(json.dumps(value))
    else:
        print(format_price(value))
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    print(dump_gamble(flatten(load_gamble(args.file))))
    return 0


def _cmd_canonical(args: argparse.Namespace) -> int:
    print(dump_gamble(canonical_equivalent(load_gamble(args.file), _premium(args))))
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    outcome = prefer(load_gamble(args.file1), load_gamble(args.file2), _premium(args))
    print(_SYMBOL[outcome])
    return 0


def _rows(args: argparse.Namespace, c: float) -> list[PricingRow]:
    if args.successes is None:
        return emit_table(args.trials, c)
    scenario = BinomialScenario(args.trials, args.successes, c)
    uniform, jeffreys, novick_hall = bayesian_prices(scenario)
    return [
        PricingRow(
            successes=args.successes,
            likelihood=likelihood_price(scenario),
            uniform=uniform,
            jeffreys=jeffreys,
            novick_hall=novick_hall,
        )
    ]


def _cmd_demo_binomial(args: argparse.Namespace) -> int:
    rows = _rows(args, _premium(args))
    if args.format == "json":
        print(json.dumps([r.to_json() for r in rows]))
    elif args.format == "csv":
        print(render_table_csv(rows))
    else:
        print(render_table_text(rows))
    return 0


def _cmd_conformance(args: argparse.Namespace) -> int:
    config = GenConfig(
        max_depth=args.max_depth,
        max_branching=args.max_branching,
        seed=args.seed,
        samples=args.samples,
    )
    report = run_conformance(config, _premium(args))
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print(report.summary())
    return 0 if report.all_passed else 1


_COMMANDS = {
    "price": _cmd_price,
    "reduce": _cmd_reduce,
    "canonical": _cmd_canonical,
    "compare": _cmd_compare,
    "demo-binomial": _cmd_demo_binomial,
    "conformance": _cmd_conformance,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (GambleError, OSError, json.JSONDecodeError) as exc:
        print(f"lgamble: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
