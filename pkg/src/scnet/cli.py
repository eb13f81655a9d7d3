"""Command-line entry point.

Subcommands: ``extract``, ``metrics``, ``eval``, ``slices`` and
``validate-gazetteer``. Exit status is 0 on success, 1 for usage or
configuration errors and 2 for data errors.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from scnet.config import EXPORT_FORMATS, PipelineConfig, load_config
from scnet.errors import ConfigError, DataError, EvaluationError
from scnet.evaluation import EvalReport, evaluate, load_gold, sample_documents
from scnet.gazetteer import load_gazetteer
from scnet.ingestion import DateRange, split_range
from scnet.network import export
from scnet.network.centrality import MEASURES, CentralityReport, compute, top_k
from scnet.network.graph import CollaborationGraph
from scnet.network.structure import connected_components, maximal_cliques
from scnet.network.temporal import slice_deltas, temporal_slices
from scnet.pipeline import Extraction, extract_corpus, load_inputs, run_extraction

logger = logging.getLogger("scnet")

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


def write_graph(g: CollaborationGraph, out_dir: Path, formats: Sequence[str]) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    if "nodes-csv" in formats:
        export.write_nodes(g, out_dir / "nodes.csv")
    if "edges-csv" in formats:
        export.write_edges(g, out_dir / "edges.csv")
    if "graphml" in formats:
        export.write_graphml(g, out_dir / "scn.graphml")
    if "dot" in formats:
        export.write_dot(g, out_dir / "scn.dot")


def cmd_extract(config: PipelineConfig, out: TextIO | None = None) -> Extraction:
    out = out or sys.stdout
    result = run_extraction(config)
    write_graph(result.graph, config.output_dir, config.export_formats)
    if "mentions-csv" in config.export_formats:
        export.write_mentions(result.mentions, config.output_dir / "mentions.csv")
    print(f"documents processed     {len(result.records)}", file=out)
    print(f"mentions                {len(result.mentions)}", file=out)
    print(f"unique stakeholders     {result.graph.node_count}", file=out)
    print(f"unique interactions     {result.graph.edge_count}", file=out)
    return result


def _format_score(measure: str, score: float) -> str:
    return str(int(score)) if measure == "degree" else f"{score:.4f}"


def cmd_metrics(
    config: PipelineConfig,
    measure: str = "all",
    k: int = 5,
    *,
    graph_dir: Path | None = None,
    out: TextIO | None = None,
) -> dict[str, CentralityReport]:
    """Rank stakeholders by centrality and write full score tables.

    The graph comes from ``graph_dir/nodes.csv`` + ``edges.csv`` when given,
    otherwise it is extracted in-run from the configured inputs.
    """
    out = out or sys.stdout
    measures = MEASURES if measure == "all" else (measure,)
    if measure != "all" and measure not in MEASURES:
        raise ConfigError(f"unknown measure {measure!r}; choose from {', '.join(MEASURES)} or all")
    if k < 1:
        raise ConfigError(f"--top must be >= 1, got {k}")
    if graph_dir is not None:
        g = export.read_graph(graph_dir / "nodes.csv", graph_dir / "edges.csv")
    else:
        g = run_extraction(config).graph
    config.output_dir.mkdir(parents=True, exist_ok=True)
    reports = {}
    for m in measures:
        report = compute(m, g)
        reports[m] = report
        export.write_centrality(report, config.output_dir / f"centrality_{m}.csv")
        print(f"{m} centrality, top {k}", file=out)
        for rank, (sid, score) in enumerate(top_k(report, k), 1):
            print(f"  {rank:>3}  {sid:<16} {_format_score(m, score)}", file=out)
    comps = connected_components(g)
    cliques = maximal_cliques(g)
    with (config.output_dir / "components.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("component", "size", "members"))
        w.writerows((i, len(c), " ".join(sorted(c))) for i, c in enumerate(comps, 1))
    with (config.output_dir / "cliques.csv").open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("clique", "size", "members"))
        w.writerows((i, len(c), " ".join(c)) for i, c in enumerate(cliques, 1))
    giant = len(comps[0]) if comps else 0
    print(f"components {len(comps)} (giant: {giant} of {g.node_count} stakeholders)", file=out)
    print(f"maximal cliques {len(cliques)} (largest: {len(cliques[0]) if cliques else 0})", file=out)
    return reports


def cmd_eval(
    config: PipelineConfig,
    n: int | None = None,
    seed: int | None = None,
    *,
    report_format: str = "text",
    out: TextIO | None = None,
) -> EvalReport:
    """Evaluate extraction on the gold-annotated documents.

    With ``n`` set, ``n`` of those documents are drawn using ``seed``.
    """
    out = out or sys.stdout
    if config.gold_path is None:
        raise ConfigError("eval needs a gold file (config key 'gold' or --gold)")
    if n is not None and seed is None:
        raise ConfigError("--sample requires an explicit --seed")
    config.require_inputs(gold=True)
    records, g = load_inputs(config)
    gold = load_gold(config.gold_path)
    by_id = {r.doc_id: r for r in records}
    unknown = [a.doc_id for a in gold if a.doc_id not in by_id]
    if unknown:
        raise EvaluationError(f"gold references documents not in the corpus: {', '.join(unknown)}")
    gold_ids = {a.doc_id for a in gold}
    pool = [r for r in records if r.doc_id in gold_ids]
    chosen = pool if n is None else sample_documents(pool, n, seed)
    chosen_ids = {r.doc_id for r in chosen}
    extraction = extract_corpus(chosen, g, jobs=config.jobs)
    report = evaluate(extraction.mentions_by_doc(), [a for a in gold if a.doc_id in chosen_ids])
    print(report.to_kv() if report_format == "kv" else report.to_text(), file=out)
    return report


def cmd_slices(config: PipelineConfig, window_days: int, out: TextIO | None = None) -> list[CollaborationGraph]:
    out = out or sys.stdout
    if config.date_range is None:
        raise ConfigError("slices needs a date range (config keys from/to or --from/--to)")
    if window_days < 1:
        raise ConfigError(f"--window-days must be >= 1, got {window_days}")
    full: DateRange = config.date_range
    if window_days > full.days:
        logger.warning("window of %d days exceeds the %d-day range; using a single window", window_days, full.days)
    windows = split_range(full, window_days)
    records, g = load_inputs(config)
    graphs = temporal_slices(records, g, windows)
    deltas = slice_deltas(graphs)
    base = config.output_dir / "slices"
    base.mkdir(parents=True, exist_ok=True)
    summary_rows = []
    emerging_rows = []
    for i, (w, graph, delta) in enumerate(zip(windows, graphs, deltas), 1):
        name = f"{i:02d}_{w.start.isoformat()}_{w.end.isoformat()}"
        write_graph(graph, base / name, [f for f in config.export_formats if f != "mentions-csv"])
        n_docs = sum(1 for r in records if w.start <= r.date <= w.end)
        summary_rows.append(
            (i, w.start, w.end, n_docs, graph.node_count, graph.edge_count,
             len(delta.emerging_nodes), len(delta.emerging_edges))
        )
        emerging_rows += [(i, "node", v, "") for v in delta.emerging_nodes]
        emerging_rows += [(i, "edge", a, b) for a, b in delta.emerging_edges]
    with (base / "summary.csv").open("w", newline="", encoding="utf-8") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(("window", "start", "end", "documents", "nodes", "edges", "emerging_nodes", "emerging_edges"))
        wr.writerows(summary_rows)
    with (base / "emerging.csv").open("w", newline="", encoding="utf-8") as fh:
        wr = csv.writer(fh, lineterminator="\n")
        wr.writerow(("window", "kind", "source", "target"))
        wr.writerows(emerging_rows)
    print("window  start       end         docs  nodes  edges  +nodes  +edges", file=out)
    for row in summary_rows:
        i, start, end, docs, nodes, edges, en, ee = row
        print(f"{i:>6}  {start}  {end}  {docs:>4}  {nodes:>5}  {edges:>5}  {en:>6}  {ee:>6}", file=out)
    return graphs


def cmd_validate_gazetteer(path: Path, out: TextIO | None = None) -> None:
    out = out or sys.stdout
    if not path.is_file():
        raise ConfigError(f"gazetteer file not found: {path}")
    g = load_gazetteer(path)
    print(f"{path}: {g.surface_count} surfaces, {g.id_count} stakeholder IDs", file=out)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="flat key = value config file")
    common.add_argument("--documents", help="work-order file")
    common.add_argument("--gazetteer", help="gazetteer file (surface,stakeholder_id)")
    common.add_argument("--from", dest="date_from", metavar="DATE", help="window start, inclusive")
    common.add_argument("--to", dest="date_to", metavar="DATE", help="window end, inclusive")
    common.add_argument("--out", help="output directory")
    common.add_argument("--format", help=f"comma list of {', '.join(EXPORT_FORMATS)}")
    common.add_argument("--jobs", help="worker processes for extraction")
    common.add_argument(
        "--set", action="append", default=[], metavar="KEY=VALUE", help="override any config key"
    )
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="scnet", description="Build stakeholder collaboration networks from work orders.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("extract", parents=[common], help="extract mentions and write node/edge datasets")

    p = sub.add_parser("metrics", parents=[common], help="centrality rankings, components and cliques")
    p.add_argument("--measure", default="all", choices=(*MEASURES, "all"))
    p.add_argument("--top", type=int, default=5)
    p.add_argument("--graph-dir", type=Path, help="read nodes.csv/edges.csv from here instead of extracting")

    p = sub.add_parser("eval", parents=[common], help="score extraction against gold annotations")
    p.add_argument("--gold", help="gold file (doc_id,stakeholder_id)")
    p.add_argument("--sample", type=int, help="evaluate a seeded random sample of this many gold documents")
    p.add_argument("--seed", type=int)
    p.add_argument("--report", choices=("text", "kv"), default="text")

    p = sub.add_parser("slices", parents=[common], help="one network per consecutive time window")
    p.add_argument("--window-days", type=int, required=True)

    p = sub.add_parser("validate-gazetteer", parents=[common], help="load and validate a gazetteer")
    p.add_argument("path", nargs="?", type=Path)
    return parser


def _config_from_args(args: argparse.Namespace) -> PipelineConfig:
    overrides: dict[str, str | None] = {}
    for item in args.set:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
        overrides[key.strip()] = value.strip()
    overrides.update(
        {
            "documents": args.documents,
            "gazetteer": args.gazetteer,
            "from": args.date_from,
            "to": args.date_to,
            "output_dir": args.out,
            "formats": args.format,
            "jobs": args.jobs,
            "gold": getattr(args, "gold", None),
        }
    )
    return load_config(args.config, overrides)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        config = _config_from_args(args)
        if args.command == "extract":
            cmd_extract(config)
        elif args.command == "metrics":
            cmd_metrics(config, args.measure, args.top, graph_dir=args.graph_dir)
        elif args.command == "eval":
            cmd_eval(config, args.sample, args.seed, report_format=args.report)
        elif args.command == "slices":
            cmd_slices(config, args.window_days)
        elif args.command == "validate-gazetteer":
            path = args.path or config.gazetteer_path
            if path is None:
                raise ConfigError("no gazetteer given")
            cmd_validate_gazetteer(Path(path))
    except ConfigError as exc:
        print(f"scnet: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"scnet: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
