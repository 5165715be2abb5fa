"""Link-prediction benchmark: seeded edge splits, negative sampling, AUROC,
repeated runs, and a tab-separated report.

Protocol per repetition r: split the edges with seed base_seed + r (train
fraction rounded half up), build one top-k index on the training graph sized
to the largest requested k, draw as many non-edge negatives as there are test
edges (times negative_multiple) from the full pre-split graph, score test
edges and negatives with every predictor, and compute AUROC by the exact
rank statistic. Reports aggregate mean and population std per predictor.

Identical (graph, config) inputs reproduce the report bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInputError
from .graph import Graph, remove_edges
from .index import build_index
from .query import query
from .similarity import (
    padded_topk_sum,
    parse_predictor,
    score_adamic_adar,
    score_common_neighbors,
    score_jaccard,
    score_preferential_attachment,
)

# role tags keep the split and negative-sample PRNG streams apart
_ROLE_SPLIT = 101
_ROLE_NEGATIVE = 202


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


@dataclass(frozen=True)
class EdgeSplit:
    train_edges: list[tuple[int, int]]
    test_edges: list[tuple[int, int]]
    seed: int


@dataclass(frozen=True)
class EvalConfig:
    predictors: tuple[str, ...] = ("top1", "top4", "cn", "jaccard", "adamic", "pref")
    train_ratio: float = 0.6
    repetitions: int = 10
    base_seed: int = 0
    negative_multiple: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.train_ratio < 1.0:
            raise DegenerateInputError(f"train_ratio must be in (0, 1), got {self.train_ratio}")
        if self.repetitions < 1:
            raise DegenerateInputError("repetitions must be at least 1")
        if self.negative_multiple <= 0:
            raise DegenerateInputError("negative_multiple must be positive")
        for name in self.predictors:
            parse_predictor(name)


@dataclass(frozen=True)
class PredictorResult:
    predictor: str
    runs: list[float]

    @property
    def mean(self) -> float:
        return float(np.mean(self.runs))

    @property
    def std(self) -> float:
        return float(np.std(self.runs))


@dataclass(frozen=True)
class EvalReport:
    dataset: str
    config: EvalConfig
    results: list[PredictorResult] = field(default_factory=list)

    def result(self, predictor: str) -> PredictorResult:
        for r in self.results:
            if r.predictor == predictor:
                return r
        raise KeyError(predictor)

    def to_tsv(self) -> str:
        cfg = self.config
        lines = [
            f"# config: dataset={self.dataset} ratio={cfg.train_ratio} reps={cfg.repetitions}"
            f" base_seed={cfg.base_seed} negative_multiple={cfg.negative_multiple}"
            f" predictors={','.join(cfg.predictors)}",
            "dataset\tpredictor\tmean_auroc\tstd_auroc\truns\tseed",
        ]
        for r in self.results:
            lines.append(
                f"{self.dataset}\t{r.predictor}\t{r.mean:.6f}\t{r.std:.6f}"
                f"\t{len(r.runs)}\t{cfg.base_seed}"
            )
        return "\n".join(lines) + "\n"

    def detail_tsv(self) -> str:
        lines = ["predictor\trun\tauroc"]
        for r in self.results:
            for i, value in enumerate(r.runs):
                lines.append(f"{r.predictor}\t{i}\t{value:.6f}")
        return "\n".join(lines) + "\n"


def split_edges(g: Graph, ratio: float, seed: int) -> EdgeSplit:
    """Seeded uniform partition of the edge list; train gets round(ratio*m)."""
    if not 0.0 < ratio < 1.0:
        raise DegenerateInputError(f"ratio must be in (0, 1), got {ratio}")
    edges = list(g.edges())
    m = len(edges)
    if m < 2:
        raise DegenerateInputError(f"need at least 2 edges to split, got {m}")
    rng = np.random.default_rng([_ROLE_SPLIT, seed])
    perm = rng.permutation(m)
    n_train = _round_half_up(ratio * m)
    train = sorted(edges[i] for i in perm[:n_train])
    test = sorted(edges[i] for i in perm[n_train:])
    return EdgeSplit(train, test, seed)


def sample_negatives(g: Graph, count: int, seed: int) -> list[tuple[int, int]]:
    """``count`` distinct unordered non-adjacent pairs, sampled uniformly.

    Rejection-samples against the full graph; for graphs dense or small
    enough that rejection would crawl, enumerates the non-edges and draws
    without replacement from the same seeded stream.
    """
    n = g.vertex_count
    total_pairs = n * (n - 1) // 2
    available = total_pairs - g.edge_count
    if count < 1:
        raise DegenerateInputError("count must be positive")
    if available < count:
        raise DegenerateInputError(
            f"graph has only {available} non-adjacent pairs, need {count}"
        )
    rng = np.random.default_rng([_ROLE_NEGATIVE, seed])
    if n <= 256 or available < total_pairs // 4:
        non_edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)
        ]
        chosen = rng.choice(len(non_edges), size=count, replace=False)
        return [non_edges[i] for i in chosen]
    picked: set[tuple[int, int]] = set()
    out: list[tuple[int, int]] = []
    while len(out) < count:
        batch = rng.integers(0, n, size=(max(count, 1024), 2))
        for u, v in batch:
            if u == v:
                continue
            pair = (int(u), int(v)) if u < v else (int(v), int(u))
            if pair in picked or g.has_edge(*pair):
                continue
            picked.add(pair)
            out.append(pair)
            if len(out) == count:
                break
    return out


def auroc(positive_scores, negative_scores) -> float:
    """Probability a random positive outranks a random negative, ties half.

    Exact Mann-Whitney statistic computed from midranks, invariant under any
    strictly increasing transform of the scores.
    """
    pos = np.asarray(positive_scores, dtype=np.float64)
    neg = np.asarray(negative_scores, dtype=np.float64)
    if pos.size == 0 or neg.size == 0:
        raise DegenerateInputError("auroc needs non-empty score lists")
    combined = np.concatenate([pos, neg])
    order = np.argsort(combined, kind="stable")
    ranks = np.empty(combined.size, dtype=np.float64)
    sorted_vals = combined[order]
    i = 0
    while i < sorted_vals.size:
        j = i
        while j + 1 < sorted_vals.size and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i : j + 1]] = 0.5 * (i + j) + 1.0  # midrank, 1-based
        i = j + 1
    rank_sum_pos = float(ranks[: pos.size].sum())
    u = rank_sum_pos - pos.size * (pos.size + 1) / 2.0
    return u / (pos.size * neg.size)


def _score_pairs(
    train: Graph,
    idx,
    pairs: list[tuple[int, int]],
    predictors: tuple[str, ...],
    topk_cap: int,
    vertex_count: int,
) -> dict[str, list[float]]:
    """Score every pair with every predictor; top-k predictors share a single
    capacity-sized query per pair (prefixes give the smaller k)."""
    out: dict[str, list[float]] = {name: [] for name in predictors}
    kinds = [(name, *parse_predictor(name)) for name in predictors]
    for s, t in pairs:
        lengths = query(idx, s, t, topk_cap) if idx is not None else None
        for name, kind, k in kinds:
            if kind == "topk":
                value = -float(padded_topk_sum(lengths, k, vertex_count))
            elif kind == "cn":
                value = score_common_neighbors(train, s, t)
            elif kind == "jaccard":
                value = score_jaccard(train, s, t)
            elif kind == "adamic":
                value = score_adamic_adar(train, s, t)
            else:
                value = score_preferential_attachment(train, s, t)
            out[name].append(value)
    return out


def run_experiment(g: Graph, cfg: EvalConfig, dataset: str = "graph") -> EvalReport:
    """Run the full split/build/score/AUROC protocol for every repetition."""
    topk_ks = [parse_predictor(p)[1] for p in cfg.predictors if parse_predictor(p)[0] == "topk"]
    capacity = max(topk_ks) if topk_ks else 0
    runs: dict[str, list[float]] = {name: [] for name in cfg.predictors}
    for rep in range(cfg.repetitions):
        seed = cfg.base_seed + rep
        split = split_edges(g, cfg.train_ratio, seed)
        train = remove_edges(g, split.test_edges)
        idx = build_index(train, capacity) if capacity else None
        n_neg = _round_half_up(len(split.test_edges) * cfg.negative_multiple)
        negatives = sample_negatives(g, n_neg, seed)
        pos_scores = _score_pairs(train, idx, split.test_edges, cfg.predictors, capacity, g.vertex_count)
        neg_scores = _score_pairs(train, idx, negatives, cfg.predictors, capacity, g.vertex_count)
        for name in cfg.predictors:
            runs[name].append(auroc(pos_scores[name], neg_scores[name]))
    return EvalReport(dataset, cfg, [PredictorResult(name, runs[name]) for name in cfg.predictors])
