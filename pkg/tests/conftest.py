from pathlib import Path

import numpy as np
import pytest

from kdist import Graph

DATA_DIR = Path(__file__).resolve().parents[1] / "data"

# Running example: the six-vertex graph whose pairs (a,b) and (b,c) share a
# shortest distance of 2 but differ in how many short walks connect them.
# a=0 b=1 c=2 d=3 e=4 f=5
FIG1_EDGES = [(0, 3), (3, 1), (1, 4), (1, 5), (4, 2), (5, 2)]
A, B, C, D, E, F = range(6)


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run the slow dataset benchmarks (CondMat)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def fig1() -> Graph:
    return Graph.from_edges(6, FIG1_EDGES)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi graph used by the randomized property tests."""
    rng = np.random.default_rng(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def dataset_path(name: str) -> Path:
    return DATA_DIR / name


def require_dataset(name: str) -> Path:
    path = dataset_path(name)
    if not path.exists():
        pytest.skip(f"dataset {name} not present under {DATA_DIR}; see data/README.md")
    return path
