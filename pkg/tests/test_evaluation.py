import math

import numpy as np
import pytest

from kdist import (
    DegenerateInputError,
    EvalConfig,
    Graph,
    auroc,
    build_index,
    remove_edges,
    run_experiment,
    sample_negatives,
    split_edges,
    top1_distance,
)

from .conftest import gnp_graph


def test_split_sizes():
    g = gnp_graph(12, 0.35, 0)
    m = g.edge_count
    split = split_edges(g, 0.6, 1)
    assert len(split.train_edges) == math.floor(0.6 * m + 0.5)
    assert len(split.train_edges) + len(split.test_edges) == m


def test_split_deterministic_and_partitions():
    g = gnp_graph(15, 0.3, 1)
    a = split_edges(g, 0.6, 42)
    b = split_edges(g, 0.6, 42)
    assert a == b
    assert sorted(a.train_edges + a.test_edges) == sorted(g.edges())
    assert not (set(a.train_edges) & set(a.test_edges))
    c = split_edges(g, 0.6, 43)
    assert c.train_edges != a.train_edges  # other seeds move the split


def test_split_fig1_round_half_up(fig1):
    split = split_edges(fig1, 0.6, 0)
    assert len(split.train_edges) == 4  # round(3.6) rounds half up


def test_split_rejects_degenerate():
    with pytest.raises(DegenerateInputError):
        split_edges(Graph.from_edges(2, [(0, 1)]), 0.6, 0)
    with pytest.raises(DegenerateInputError):
        split_edges(gnp_graph(10, 0.4, 0), 1.5, 0)


def test_negatives_on_complete_graph_rejected():
    k4 = Graph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    with pytest.raises(DegenerateInputError):
        sample_negatives(k4, 1, 0)


def test_negatives_postconditions(fig1):
    pairs = sample_negatives(fig1, 3, 7)
    assert len(pairs) == len(set(pairs)) == 3
    for u, v in pairs:
        assert u < v
        assert not fig1.has_edge(u, v)


def test_negatives_deterministic(fig1):
    assert sample_negatives(fig1, 5, 3) == sample_negatives(fig1, 5, 3)
    assert sample_negatives(fig1, 5, 3) != sample_negatives(fig1, 5, 4)


def test_negatives_rejection_path_matches_contract():
    # large sparse graph takes the rejection-sampling branch
    g = gnp_graph(400, 0.01, 2)
    pairs = sample_negatives(g, 200, 11)
    assert len(pairs) == len(set(pairs)) == 200
    assert all(not g.has_edge(u, v) and u != v for u, v in pairs)


def test_auroc_perfect_separation():
    assert auroc([3, 4], [1, 2]) == 1.0


def test_auroc_all_ties():
    assert auroc([5, 5, 5], [5, 5]) == 0.5


def test_auroc_mixed_example():
    # pairs: (2>1), (2>0), (1=1 ties half), (1>0) -> 3.5/4
    assert auroc([2, 1], [1, 0]) == pytest.approx(0.875)


def test_auroc_monotone_transform_invariance():
    rng = np.random.default_rng(0)
    pos = rng.normal(1.0, 1.0, 80)
    neg = rng.normal(0.0, 1.0, 120)
    base = auroc(pos, neg)
    assert auroc(2 * pos + 7, 2 * neg + 7) == pytest.approx(base)
    assert auroc(np.exp(pos), np.exp(neg)) == pytest.approx(base)


def test_auroc_complement():
    rng = np.random.default_rng(1)
    pos = rng.integers(0, 5, 50).astype(float)
    neg = rng.integers(0, 5, 60).astype(float)
    assert auroc(pos, neg) + auroc(neg, pos) == pytest.approx(1.0)


def test_auroc_rejects_empty():
    with pytest.raises(DegenerateInputError):
        auroc([], [1.0])
    with pytest.raises(DegenerateInputError):
        auroc([1.0], [])


def test_single_repetition_zero_std():
    g = gnp_graph(30, 0.2, 5)
    cfg = EvalConfig(predictors=("top1", "cn"), repetitions=1, base_seed=3)
    report = run_experiment(g, cfg)
    for r in report.results:
        assert r.std == 0.0
        assert len(r.runs) == 1
        assert 0.0 <= r.mean <= 1.0


def test_report_reproducible_and_mean_in_envelope():
    g = gnp_graph(30, 0.2, 6)
    cfg = EvalConfig(predictors=("top2", "jaccard"), repetitions=3, base_seed=9)
    a = run_experiment(g, cfg, dataset="toy")
    b = run_experiment(g, cfg, dataset="toy")
    assert a.to_tsv() == b.to_tsv()
    assert a.detail_tsv() == b.detail_tsv()
    for r in a.results:
        assert min(r.runs) <= r.mean <= max(r.runs)


def test_no_test_edge_leaks_into_index():
    g = gnp_graph(40, 0.12, 7)
    for rep in range(3):
        split = split_edges(g, 0.6, rep)
        train = remove_edges(g, split.test_edges)
        idx = build_index(train, 2)
        for u, v in split.test_edges:
            # a length-1 walk exists only for a train edge; test edges were removed
            assert top1_distance(idx, u, v) != 1
        for u, v in split.train_edges:
            assert top1_distance(idx, u, v) == 1


def test_config_validation():
    with pytest.raises(DegenerateInputError):
        EvalConfig(train_ratio=0.0)
    with pytest.raises(DegenerateInputError):
        EvalConfig(repetitions=0)
    with pytest.raises(DegenerateInputError):
        EvalConfig(negative_multiple=0)
    from kdist import ContractViolationError

    with pytest.raises(ContractViolationError):
        EvalConfig(predictors=("nope",))


def test_tsv_shape():
    g = gnp_graph(30, 0.2, 8)
    cfg = EvalConfig(predictors=("top1", "pref"), repetitions=2, base_seed=1)
    report = run_experiment(g, cfg, dataset="toy")
    lines = report.to_tsv().strip().splitlines()
    assert lines[0].startswith("# config:")
    assert "ratio=0.6" in lines[0]
    assert lines[1] == "dataset\tpredictor\tmean_auroc\tstd_auroc\truns\tseed"
    assert len(lines) == 2 + 2
    detail = report.detail_tsv().strip().splitlines()
    assert detail[0] == "predictor\trun\tauroc"
    assert len(detail) == 1 + 2 * 2
