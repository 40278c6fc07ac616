"""Command-line interface: ``ndes {score,detect,eval,compare,bench}``.

Exit codes: 0 success, 1 runtime/data error, 2 usage error or unreadable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .bench import time_scoring
from .community import DetectorParams, detect, resolve_auto_threshold
from .graph import EmptyGraphError, Graph, GraphFormatError, format_partition, load_edge_list, load_ground_truth
from .metrics import evaluate, render_markdown, reports_to_csv, reports_to_json
from .similarity import MeasureId, score_all_edges


COMMANDS = ("score", "detect", "eval", "compare", "bench")
DEFAULT_COMPARE = (MeasureId.NDES, MeasureId.JACCARD, MeasureId.SALTON, MeasureId.ADAMIC_ADAR)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph_path: str | None = None
    truth_path: str | None = None
    measures: list[MeasureId] = field(default_factory=list)
    detector: DetectorParams = field(default_factory=DetectorParams)
    output_format: str = "csv"
    output_path: str | None = None
    seed: int = 0
    sizes: list[int] = field(default_factory=lambda: [1000, 4000, 16000])
    max_degree: int = 50

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if not self.measures:
            raise UsageError("at least one --measure is required")
        if self.command != "bench" and not self.graph_path:
            raise UsageError(f"{self.command} requires --graph")
        if self.command in ("eval", "compare") and not self.truth_path:
            raise UsageError(f"{self.command} requires --truth")
        if self.seed < 0:
            raise UsageError("--seed must be non-negative")


def _parse_threshold(text: str):
    if text == "auto":
        return "auto"
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"threshold must be a number or 'auto', got {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError("threshold must be non-negative")
    return value


def _parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--sizes expects comma-separated integers, got {text!r}") from None
    if not sizes or any(s <= 0 for s in sizes):
        raise argparse.ArgumentTypeError("--sizes must list positive integers")
    return sizes


def _parse_measure(text: str) -> MeasureId:
    try:
        return MeasureId.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ndes", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--measure", action="append", type=_parse_measure, dest="measures", metavar="NAME")
    common.add_argument("--format", choices=("csv", "json", "markdown"), dest="output_format")
    common.add_argument("--out", dest="output_path", metavar="PATH")
    common.add_argument("--seed", type=int, default=0)

    graph_opts = argparse.ArgumentParser(add_help=False)
    graph_opts.add_argument("--graph", dest="graph_path", metavar="PATH")
    graph_opts.add_argument("--truth", dest="truth_path", metavar="PATH")

    detector = argparse.ArgumentParser(add_help=False)
    detector.add_argument("--threshold", type=_parse_threshold, default="auto")
    detector.add_argument("--min-size", type=int, default=1, dest="min_size")
    detector.add_argument("--seed-order", choices=("degree_desc", "info_desc"), default="degree_desc")

    sub.add_parser("score", parents=[common, graph_opts], help="score every edge")
    sub.add_parser("detect", parents=[common, graph_opts, detector], help="detect communities")
    sub.add_parser("eval", parents=[common, graph_opts, detector], help="detect and evaluate against ground truth")
    sub.add_parser("compare", parents=[common, graph_opts, detector], help="evaluation table across measures")
    bench = sub.add_parser("bench", parents=[common], help="time edge scoring on synthetic graphs")
    bench.add_argument("--sizes", type=_parse_sizes, default=[1000, 4000, 16000])
    bench.add_argument("--max-degree", type=int, default=50, dest="max_degree")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    measures = args.measures
    if measures is None:
        measures = list(DEFAULT_COMPARE) if args.command == "compare" else [MeasureId.NDES]
    fmt = args.output_format or ("markdown" if args.command == "compare" else "csv")
    detector = DetectorParams()
    if hasattr(args, "threshold"):
        try:
            detector = DetectorParams(args.threshold, args.min_size, args.seed_order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    cfg = RunConfig(
        command=args.command,
        graph_path=getattr(args, "graph_path", None),
        truth_path=getattr(args, "truth_path", None),
        measures=measures,
        detector=detector,
        output_format=fmt,
        output_path=args.output_path,
        seed=args.seed,
        sizes=getattr(args, "sizes", [1000, 4000, 16000]),
        max_degree=getattr(args, "max_degree", 50),
    )
    cfg.validate()
    return cfg


# ------------------------------------------------------------------ commands


def _dataset_name(path: str) -> str:
    return Path(path).name.split(".")[0]


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _markdown(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _load(cfg: RunConfig):
    g = load_edge_list(cfg.graph_path)
    truth = load_ground_truth(cfg.truth_path, g) if cfg.truth_path else None
    return g, truth


def cmd_score(cfg: RunConfig) -> str:
    g, _ = _load(cfg)
    results = [(m, score_all_edges(g, m)) for m in cfg.measures]
    if cfg.output_format == "json":
        docs = [json.loads(s.to_json(g)) for _, s in results]
        return json.dumps(docs if len(docs) > 1 else docs[0], indent=2) + "\n"
    rows = [
        (m.value, g.label_of(x), g.label_of(y), repr(v))
        for m, s in results
        for (x, y), v in s.items()
    ]
    header = ("measure", "src", "dst", "score")
    if cfg.output_format == "markdown":
        return _markdown(header, rows)
    return _csv([header, *rows])


def _detect_all(cfg: RunConfig, g: Graph):
    for m in cfg.measures:
        scores = score_all_edges(g, m)
        threshold = resolve_auto_threshold(scores) if cfg.detector.threshold == "auto" else float(cfg.detector.threshold)
        params = DetectorParams(threshold, cfg.detector.min_community_size, cfg.detector.seed_order)
        yield m, threshold, detect(g, scores, params)


def cmd_detect(cfg: RunConfig) -> str:
    g, _ = _load(cfg)
    results = list(_detect_all(cfg, g))
    if cfg.output_format == "json":
        doc = [
            {
                "measure": m.value,
                "threshold": t,
                "communities": [[g.label_of(int(x)) for x in c] for c in p.communities()],
            }
            for m, t, p in results
        ]
        return json.dumps(doc, indent=2) + "\n"
    if len(results) == 1 and cfg.output_format == "csv":
        # plain ground-truth format so the file round-trips into --truth
        return format_partition(results[0][2], g)
    rows = [(m.value, i, " ".join(g.label_of(int(x)) for x in c)) for m, _, p in results for i, c in enumerate(p.communities())]
    header = ("measure", "community", "members")
    if cfg.output_format == "markdown":
        return _markdown(header, rows)
    return _csv([header, *rows])


def _reports(cfg: RunConfig):
    g, truth = _load(cfg)
    dataset = _dataset_name(cfg.graph_path)
    detail = cfg.command == "eval" and cfg.output_format == "json"
    return [
        evaluate(g, p, truth, measure=m.value, dataset=dataset, threshold=t, per_community=detail)
        for m, t, p in _detect_all(cfg, g)
    ]


def cmd_eval(cfg: RunConfig) -> str:
    reports = _reports(cfg)
    if cfg.output_format == "json":
        return reports_to_json(reports) + "\n"
    if cfg.output_format == "markdown":
        return render_markdown(reports)
    return reports_to_csv(reports)


def cmd_compare(cfg: RunConfig) -> str:
    return cmd_eval(cfg)


def cmd_bench(cfg: RunConfig) -> str:
    rows = time_scoring(cfg.sizes, cfg.max_degree, cfg.measures, seed=cfg.seed)
    header = ("n", "k", "measure", "seconds")
    table = [(r.n, r.k, r.measure.value, f"{r.seconds:.6f}") for r in rows]
    if cfg.output_format == "json":
        return json.dumps([dict(zip(header, row)) for row in table], indent=2) + "\n"
    if cfg.output_format == "markdown":
        return _markdown(header, table)
    return _csv([header, *table])


HANDLERS = {
    "score": cmd_score,
    "detect": cmd_detect,
    "eval": cmd_eval,
    "compare": cmd_compare,
    "bench": cmd_bench,
}


def run(cfg: RunConfig) -> int:
    try:
        text = HANDLERS[cfg.command](cfg)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"ndes: cannot read input: {exc}", file=sys.stderr)
        return 2
    except (GraphFormatError, EmptyGraphError, ValueError) as exc:
        print(f"ndes: {exc}", file=sys.stderr)
        return 1
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"ndes: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ndes: error: {exc}", file=sys.stderr)
        return 2
    if cfg.graph_path and not os.path.exists(cfg.graph_path):
        print(f"ndes: cannot read input: {cfg.graph_path}: no such file", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
