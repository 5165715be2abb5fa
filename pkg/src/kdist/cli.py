"""Command-line front end: build and query index files, inspect them, score
pairs, and run the link-prediction benchmark.

All data goes to stdout, all diagnostics to stderr; exit status 0 iff no
error. Vertex ids on the command line are the ids from the source edge-list
file and are mapped internally.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .errors import KdistError
from .evaluation import EvalConfig, run_experiment
from .graph import load_edge_list
from .index import build_index, deserialize_index, index_stats, serialize_index
from .query import query_by_id
from .similarity import (
    parse_predictor,
    score_adamic_adar,
    score_common_neighbors,
    score_jaccard,
    score_preferential_attachment,
    score_topk,
)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _ratio(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"ratio must be in (0, 1), got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kdist",
        description="Top-k shortest-path distance index and link-prediction benchmark",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index from an edge list")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--k", required=True, type=_positive_int, help="index capacity K")
    p.add_argument("--out", required=True, help="output index file")

    p = sub.add_parser("query", help="top-k distances between two vertices")
    p.add_argument("--index", required=True, help="index file from `kdist build`")
    p.add_argument("--s", required=True, type=int, help="source vertex (file id)")
    p.add_argument("--t", required=True, type=int, help="target vertex (file id)")
    p.add_argument("--k", required=True, type=_positive_int, help="how many distances")

    p = sub.add_parser("stats", help="size statistics of an index file")
    p.add_argument("--index", required=True)

    p = sub.add_parser("predict", help="score one vertex pair with a predictor")
    p.add_argument("--graph", required=True)
    p.add_argument("--predictor", required=True, help="top<k>, cn, jaccard, adamic or pref")
    p.add_argument("--s", required=True, type=int)
    p.add_argument("--t", required=True, type=int)

    p = sub.add_parser("evaluate", help="run the link-prediction benchmark")
    p.add_argument("--graph", required=True)
    p.add_argument(
        "--predictors",
        default="top1,top4,top16,top64,cn,jaccard,adamic,pref",
        help="comma-separated predictor names",
    )
    p.add_argument("--reps", type=_positive_int, default=10)
    p.add_argument("--ratio", type=_ratio, default=0.6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the report TSV here instead of stdout")
    p.add_argument("--detail", help="also write per-run AUROC rows here")

    return parser


def _cmd_build(args) -> int:
    started = time.perf_counter()
    g = load_edge_list(args.graph)
    idx = build_index(g, args.k)
    with open(args.out, "wb") as sink:
        written = serialize_index(idx, sink)
    elapsed = time.perf_counter() - started
    stats = index_stats(idx)
    print(f"vertices\t{g.vertex_count}")
    print(f"edges\t{g.edge_count}")
    print(f"label_entries\t{stats.label_entries}")
    print(f"loop_entries\t{stats.loop_entries}")
    print(f"bytes\t{written}")
    print(f"build_seconds\t{elapsed:.3f}")
    return 0


def _cmd_query(args) -> int:
    with open(args.index, "rb") as source:
        idx = deserialize_index(source)
    lengths = query_by_id(idx, args.s, args.t, args.k)
    print(" ".join(str(d) for d in lengths))
    return 0


def _cmd_stats(args) -> int:
    with open(args.index, "rb") as source:
        idx = deserialize_index(source)
    stats = index_stats(idx)
    print(f"vertices\t{idx.vertex_count}")
    print(f"capacity\t{stats.capacity}")
    print(f"label_entries\t{stats.label_entries}")
    print(f"loop_entries\t{stats.loop_entries}")
    print(f"bytes\t{stats.byte_size}")
    return 0


def _cmd_predict(args) -> int:
    g = load_edge_list(args.graph)
    kind, k = parse_predictor(args.predictor)
    id_to_dense = {vid: i for i, vid in enumerate(g.vertex_ids)}
    try:
        s, t = id_to_dense[args.s], id_to_dense[args.t]
    except KeyError as missing:
        raise KdistError(f"unknown vertex id {missing.args[0]}") from None
    if kind == "topk":
        idx = build_index(g, k)
        value = score_topk(idx, s, t, k)
    else:
        scorer = {
            "cn": score_common_neighbors,
            "jaccard": score_jaccard,
            "adamic": score_adamic_adar,
            "pref": score_preferential_attachment,
        }[kind]
        value = scorer(g, s, t)
    print(f"{value:.6f}")
    return 0


def _cmd_evaluate(args) -> int:
    g = load_edge_list(args.graph)
    predictors = tuple(p.strip() for p in args.predictors.split(",") if p.strip())
    cfg = EvalConfig(
        predictors=predictors,
        train_ratio=args.ratio,
        repetitions=args.reps,
        base_seed=args.seed,
    )
    print(
        f"seeds: repetition r uses base_seed+r = {args.seed}..{args.seed + args.reps - 1}"
        " for both the edge split and the negative sample",
        file=sys.stderr,
    )
    report = run_experiment(g, cfg, dataset=Path(args.graph).stem)
    tsv = report.to_tsv()
    if args.out:
        Path(args.out).write_text(tsv, encoding="utf-8")
    else:
        sys.stdout.write(tsv)
    if args.detail:
        Path(args.detail).write_text(report.detail_tsv(), encoding="utf-8")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "build": _cmd_build,
        "query": _cmd_query,
        "stats": _cmd_stats,
        "predict": _cmd_predict,
        "evaluate": _cmd_evaluate,
    }
    try:
        return handlers[args.command](args)
    except (KdistError, OSError) as exc:
        print(f"kdist {args.command}: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
