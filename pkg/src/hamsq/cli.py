"""Command-line front end.

Subcommands:

- ``verify TARGET``: run one named verification target and write its report
  as JSON and Markdown into the output directory.
- ``extremal``: edge-count or spectral-radius optimum at one order, with the
  extremal complement patterns.
- ``embed``: test graph6 patterns against the complement host of one order.
- ``closure``: degree-sum closure of graph6 inputs at a threshold.
- ``spectral``: spectral radius of graph6 inputs.

Exit codes: 0 for a confirmed run (utilities exit 0 on success), 2 refuted,
3 partial, 1 for usage or I/O errors.  The utility subcommands are queries,
not verdicts; their findings go to stdout and do not move the exit code.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .closure import is_complete, k_closure
from .core import encode_graph6
from .enumeration import embeds_in_host
from .errors import BudgetExceededError, Graph6ParseError, GraphConstructionError
from .harness import run
from .reports import RunConfig, TARGETS, import_graphs, write_report
from .spectral import DEFAULT_TOL, spectral_radius
from .squareham import edge_extremal, spectral_extremal

_EXIT_BY_STATUS = {"confirmed": 0, "refuted": 2, "partial": 3}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract reserves 2 for refuted
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-min", type=int, default=None, help="lowest order to sweep")
    p.add_argument("--n-max", type=int, default=None, help="highest order to sweep")
    p.add_argument("--t-max", type=int, default=None, help="highest complement edge level to touch")
    p.add_argument("--max-members", type=int, default=None, help="cap on classes per edge level")
    p.add_argument("--tol", type=float, default=1e-9, help="numeric tolerance")
    p.add_argument("--gadgets", metavar="PATH", default=None, help="gadget file overriding the bundled one")
    p.add_argument("--workers", type=int, default=1, help="worker count (recorded in the config hash)")
    p.add_argument("--out", metavar="DIR", default="reports", help="report output directory")
    p.add_argument("--budget-seconds", type=float, default=None, help="wall-clock cap; exceeding it yields a partial report")


def build_parser() -> _Parser:
    parser = _Parser(prog="hamsq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run one verification target")
    p_verify.add_argument("target", choices=TARGETS)
    _add_run_flags(p_verify)

    p_ext = sub.add_parser("extremal", help="extremal optimum at one order")
    p_ext.add_argument("--n", type=int, required=True, help="graph order")
    p_ext.add_argument("--objective", choices=("edges", "mu"), required=True)
    p_ext.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_ext.add_argument("--budget-seconds", type=float, default=None)

    p_emb = sub.add_parser("embed", help="embed graph6 patterns into the complement host")
    p_emb.add_argument("--pattern", metavar="P.g6", required=True, help="graph6 file of patterns")
    p_emb.add_argument("--host-order", type=int, required=True)

    p_clo = sub.add_parser("closure", help="degree-sum closure of graph6 inputs")
    p_clo.add_argument("--k", type=int, required=True, help="degree-sum threshold")
    p_clo.add_argument("--graphs", metavar="G.g6", required=True, help="graph6 input file")

    p_spec = sub.add_parser("spectral", help="spectral radius of graph6 inputs")
    p_spec.add_argument("--graphs", metavar="G.g6", required=True, help="graph6 input file")
    p_spec.add_argument("--tol", type=float, default=DEFAULT_TOL)

    return parser


def _cmd_verify(args) -> int:
    cfg = RunConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        t_max=args.t_max,
        max_members=args.max_members,
        budget_seconds=args.budget_seconds,
        tol=args.tol,
        gadget_path=args.gadgets,
        workers=args.workers,
        out_dir=None,
    )
    report = run(args.target, cfg)
    json_path, md_path = write_report(report, args.out)
    print(f"{report.target}: {report.status}")
    print(f"orders {report.n_range[0]}..{report.n_range[1]}, {report.instances_checked} instances, {report.wall_time:.2f}s")
    for d in report.discrepancies:
        print(f"discrepancy: {d.graph6}  {d.classification}")
    for key, value in report.details:
        print(f"{key}: {value}")
    print(f"wrote {json_path} and {md_path}")
    return _EXIT_BY_STATUS[report.status]


def _cmd_extremal(args) -> int:
    if args.objective == "edges":
        rep = edge_extremal(args.n, budget_seconds=args.budget_seconds)
        print(f"order {args.n}: maximum edges {rep.optimum}")
    else:
        rep = spectral_extremal(args.n, tol=args.tol, budget_seconds=args.budget_seconds)
        print(f"order {args.n}: maximum spectral radius {rep.optimum:.12f}")
    for name, g in zip(rep.extremal_complements.names, rep.extremal_complements.members):
        print(f"extremal complement: {name}\t{encode_graph6(g)}")
    return 0


def _cmd_embed(args) -> int:
    fam = import_graphs(args.pattern)
    n = args.host_order
    if n < 6:
        raise _UsageError(f"host order must be at least 6, got {n}")
    for name, g in zip(fam.names, fam.members):
        verdict = "embeds" if embeds_in_host(g, n) else "does not embed"
        print(f"{name}\t{encode_graph6(g)}\t{verdict}")
    return 0


def _cmd_closure(args) -> int:
    fam = import_graphs(args.graphs)
    for name, g in zip(fam.names, fam.members):
        result = k_closure(g, args.k)
        mark = "complete" if is_complete(result.graph) else "incomplete"
        print(f"{name}\t{encode_graph6(result.graph)}\t{mark}\tjoined {len(result.joined)}")
    return 0


def _cmd_spectral(args) -> int:
    fam = import_graphs(args.graphs)
    for name, g in zip(fam.names, fam.members):
        res = spectral_radius(g, tol=args.tol)
        print(f"{name}\t{encode_graph6(g)}\t{res.mu:.12f}")
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "extremal": _cmd_extremal,
    "embed": _cmd_embed,
    "closure": _cmd_closure,
    "spectral": _cmd_spectral,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (Graph6ParseError, GraphConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        # library budget errors outside run() land here (extremal subcommand)
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
