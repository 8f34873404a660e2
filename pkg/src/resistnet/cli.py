"""Command-line front end: ``resistnet <subcommand> ...``.

Exit codes: 0 ok, 1 usage error, 2 network not resistant, 3 enumeration
budget exceeded, 4 infeasible parameters.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .bounds import curve
from .designer import DesignParams, NoFeasibleCandidate, PreconditionError, design
from .formats import fraction_to_dict, load_network, network_to_dict, network_to_dot
from .reliability import (
    RNG_ALGORITHM,
    FailureModel,
    closed_form_mean_connectivity,
    infer_strategy,
    monte_carlo_mean_connectivity,
)
from .robustness import sweep_k2
from .verifier import BudgetExceeded, is_resistant

EXIT_OK, EXIT_USAGE, EXIT_NOT_RESISTANT, EXIT_BUDGET, EXIT_INFEASIBLE = 0, 1, 2, 3, 4

_DECIMAL = re.compile(r"^[+-]?\d+(\.\d{1,6})?$")
_RATIO = re.compile(r"^[+-]?\d+/\d+$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


def rational(text: str) -> Fraction:
    """Parse ``num/den`` or a decimal with at most 6 fractional digits exactly."""
    text = text.strip()
    if _RATIO.match(text):
        num, den = text.split("/")
        if int(den) == 0:
            raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    if _DECIMAL.match(text):
        return Fraction(text)
    raise argparse.ArgumentTypeError(f"expected num/den or a decimal with <= 6 fractional digits, got {text!r}")


def probability(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 <= value < 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1), got {text}")
    return value


def _add_params(p: argparse.ArgumentParser, with_k2: bool = True) -> None:
    p.add_argument("--n1", type=int, required=True, help="number of type-1 nodes")
    p.add_argument("--n2", type=int, required=True, help="number of type-2 nodes")
    p.add_argument("--k1", type=int, required=True, help="attack budget for the whole network")
    if with_k2:
        p.add_argument("--k2", type=int, required=True, help="attack budget for the type-2 layer")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="resistnet", description="Design and verify attack-resistant two-layer networks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("design", help="minimum-cost (k1,k2)-resistant network")
    _add_params(p)
    p.add_argument("--cp", type=rational, required=True, help="cost of a protected link")
    p.add_argument("--cnp", type=rational, required=True, help="cost of a non-protected link")
    p.add_argument("--format", choices=("json", "dot"), default="json")

    p = sub.add_parser("verify", help="check (k1,k2)-resistance of a network file")
    p.add_argument("--network", required=True, help="network JSON file")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--method", choices=("mincut", "brute"), default="mincut")

    p = sub.add_parser("bound", help="lower-bound curve as CSV")
    _add_params(p)

    p = sub.add_parser("sweep", help="design over a range of k2, CSV")
    _add_params(p, with_k2=False)
    p.add_argument("--cp", type=rational, required=True)
    p.add_argument("--cnp", type=rational, required=True)
    p.add_argument("--k2-from", type=int, required=True)
    p.add_argument("--k2-to", type=int, required=True)

    p = sub.add_parser("reliability", help="mean connectivity under random link failures, CSV")
    p.add_argument("--network", required=True)
    p.add_argument("--kappa", type=probability, nargs="+", required=True, help="one or more failure probabilities")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)

    p = sub.add_parser("export-dot", help="render a network file as DOT")
    p.add_argument("--network", required=True)
    return parser


def _fmt(x: Optional[Fraction]) -> str:
    return "" if x is None else str(x)


def cmd_design(args, out) -> int:
    params = DesignParams(args.n1, args.n2, args.k1, args.k2, args.cp, args.cnp)
    result = design(params)
    if args.format == "dot":
        out.write(network_to_dot(result.network))
        return EXIT_OK
    payload = {
        "strategy": result.strategy.value,
        "p": result.p,
        "m": result.m,
        "cost": fraction_to_dict(result.cost),
        "optimal_claimed": result.optimal_claimed,
        "verified": result.verified,
        "selection": result.selection,
        "network": network_to_dict(result.network),
    }
    out.write(json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    net = load_network(args.network)
    report = is_resistant(net, args.k1, args.k2, args.method)
    out.write(json.dumps(report.to_dict()) + "\n")
    return EXIT_OK if report.resistant else EXIT_NOT_RESISTANT


def cmd_bound(args, out) -> int:
    bc = curve(args.n1, args.n2, args.k1, args.k2)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["p", "phi_numerator", "phi_denominator", "ceil_phi", "segment_label"])
    for p, phi, ceil_phi, label in bc.rows():
        writer.writerow([p, phi.numerator, phi.denominator, ceil_phi, label])
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if args.k2_to < args.k2_from:
        raise UsageError("--k2-to must be >= --k2-from")
    rows = sweep_k2(args.n1, args.n2, args.k1, args.cp, args.cnp, range(args.k2_from, args.k2_to + 1))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k2", "strategy", "p", "m", "cost_num", "cost_den"])
    for row in rows:
        if row.error is not None:
            print(f"k2={row.k2}: {row.error}", file=sys.stderr)
            writer.writerow([row.k2, "error", "", "", "", ""])
            continue
        r = row.result
        writer.writerow([row.k2, r.strategy.value, r.p, r.m, r.cost.numerator, r.cost.denominator])
    return EXIT_OK


def cmd_reliability(args, out) -> int:
    net = load_network(args.network)
    kind = infer_strategy(net)
    params = DesignParams(net.n1, net.n2, args.k1, args.k2)
    print(f"rng={RNG_ALGORITHM} strategy={kind.value if kind else 'unknown'}", file=sys.stderr)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["kappa", "closed_form", "mc_estimate", "mc_halfwidth", "trials", "seed"])
    for kappa in args.kappa:
        closed = "" if kind is None else repr(closed_form_mean_connectivity(params, kind, kappa))
        est = monte_carlo_mean_connectivity(net, FailureModel(kappa, args.trials, args.seed), args.k1, args.k2)
        writer.writerow([repr(kappa), closed, repr(est.estimate), repr(est.halfwidth), est.trials, est.seed])
    return EXIT_OK


def cmd_export_dot(args, out) -> int:
    out.write(network_to_dot(load_network(args.network)))
    return EXIT_OK


COMMANDS = {
    "design": cmd_design,
    "verify": cmd_verify,
    "bound": cmd_bound,
    "sweep": cmd_sweep,
    "reliability": cmd_reliability,
    "export-dot": cmd_export_dot,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PreconditionError, NoFeasibleCandidate) as exc:
        print(f"infeasible parameters: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
