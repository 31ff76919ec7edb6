"""Command-line entry point: ``bipinfluence <command> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import io as bio
from .ablation import run_ablation
from .community import find_communities
from .datasets import BUILTINS
from .exceptions import InputError, InvariantError
from .graph import Mode, project
from .scoring import Measure, compare_measures, score_all

log = logging.getLogger("bipinfluence")

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _min_size(value: str) -> int:
    n = int(value)
    if n < 2:
        raise argparse.ArgumentTypeError("must be >= 2")
    return n


def _fraction(value: str) -> float:
    f = float(value)
    if not 0 < f <= 1:
        raise argparse.ArgumentTypeError("must be in (0, 1]")
    return f


def _measures(value: str) -> list[Measure]:
    if value == "all":
        return list(Measure)
    try:
        return [Measure.parse(v) for v in value.split(",")]
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_input(p: argparse.ArgumentParser, min_size=True) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="edge-list file")
    src.add_argument("--builtin", choices=sorted(BUILTINS), help="embedded dataset")
    p.add_argument("--format", choices=["tsv", "konect"], default="tsv")
    p.add_argument("--onto", choices=["a", "b"], default="a",
                   help="mode to project onto; the other mode is scored")
    if min_size:
        p.add_argument("--min-size", type=_min_size, default=3,
                       help="smallest clique counted as a community (default 3)")
    p.add_argument("--output", type=Path, help="output file (default: stdout)")


def _load(args):
    if args.builtin:
        return BUILTINS[args.builtin]()
    return bio.load_graph(args.input, args.format)


# destinations and logging do not affect results, so they stay out of reports
_NOT_CONFIG = {"func", "output", "svg", "csv", "json", "verbose"}


def _config(args) -> dict:
    cfg = {}
    for k, v in sorted(vars(args).items()):
        if k in _NOT_CONFIG or v is None:
            continue
        if isinstance(v, Path):
            v = str(v)
        elif isinstance(v, list):
            v = [m.value for m in v]
        cfg[k] = v
    return cfg


def _emit(args, text: str) -> None:
    if args.output:
        bio.write_text(args.output, text)
    else:
        sys.stdout.write(text)


def cmd_demo(args) -> None:
    g = BUILTINS[args.dataset]()
    tables = list(score_all(g, Mode.A, args.min_size).values())
    p = project(g, Mode.A)
    report = bio.Report(tables=tables, communities=find_communities(p, args.min_size),
                        r2=compare_measures(tables), config=_config(args))
    sys.stdout.write(bio.scores_csv(tables[:1]))
    if args.csv or args.json or args.svg:
        bio.emit_report(report, json_path=args.json, csv_path=args.csv, svg_path=args.svg)


def cmd_project(args) -> None:
    g = _load(args)
    _emit(args, bio.write_projection(project(g, args.onto)))


def cmd_communities(args) -> None:
    p = project(_load(args), args.onto)
    cs = find_communities(p, args.min_size)
    doc = {"config": _config(args), "count": len(cs), "communities": bio.communities_json(cs)}
    _emit(args, json.dumps(doc, indent=2) + "\n")


def cmd_score(args) -> None:
    g = _load(args)
    tables = list(score_all(g, args.onto, args.min_size, args.measure).values())
    if args.json:
        _emit(args, bio.Report(tables=tables, config=_config(args)).to_json())
    else:
        _emit(args, bio.scores_csv(tables))


def cmd_ablate(args) -> None:
    g = _load(args)
    reports = []
    for table in score_all(g, args.onto, args.min_size, args.measure).values():
        r = run_ablation(g, table, args.fraction, args.direction, args.min_size)
        log.info("%s: %d -> %d communities, change rate %.4f",
                 table.measure.title, len(r.before), len(r.after), r.change_rate)
        reports.append(r)
    doc = bio.Report(communities=reports[0].before if reports else None,
                     ablations=reports, config=_config(args))
    _emit(args, doc.to_json())


def cmd_compare(args) -> None:
    g = _load(args)
    tables = list(score_all(g, args.onto, args.min_size).values())
    measures, matrix = compare_measures(tables)
    doc = {"config": _config(args), "r_squared": bio.r2_json(measures, matrix)}
    _emit(args, json.dumps(doc, indent=2) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bipinfluence",
                     description="Find the nodes that create communities in a "
                                 "bipartite network's one-mode projection.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("demo", help="score an embedded dataset")
    p.add_argument("dataset", choices=sorted(BUILTINS))
    p.add_argument("--min-size", type=_min_size, default=3)
    p.add_argument("--svg", type=Path, help="write a bar chart of all measures")
    p.add_argument("--csv", type=Path, help="write all score tables as CSV")
    p.add_argument("--json", type=Path, help="write the full JSON report")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("project", help="write the one-mode projection with provenance")
    _add_input(p, min_size=False)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("communities", help="list maximal-clique communities")
    _add_input(p)
    p.set_defaults(func=cmd_communities)

    p = sub.add_parser("score", help="score nodes of the non-projected mode")
    _add_input(p)
    p.add_argument("--measure", type=_measures, default=[Measure.HH],
                   help="hh|degree|betweenness|closeness|eigenvector|all (comma list ok)")
    p.add_argument("--json", action="store_true", help="emit JSON instead of CSV")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("ablate", help="remove top/bottom scored nodes and classify changes")
    _add_input(p)
    p.add_argument("--measure", type=_measures, default=[Measure.HH])
    p.add_argument("--fraction", type=_fraction, default=0.10)
    p.add_argument("--direction", choices=["top", "bottom"], default="top")
    p.set_defaults(func=cmd_ablate)

    p = sub.add_parser("compare", help="pairwise R² between all measures")
    _add_input(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    logging.captureWarnings(True)
    try:
        args.func(args)
    except InputError as exc:
        print(f"bipinfluence: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"bipinfluence: internal error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
