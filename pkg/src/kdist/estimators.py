"""scikit-learn style estimators wrapping the index and the pair scorers.

``fit`` takes a Graph (or an (m, 2) edge array); link predictors then score
vertex pairs with ``predict``, higher meaning a likelier future link. All
estimators expose get_params/set_params and clone cleanly.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .index import build_index
from .query import query
from .similarity import (
    padded_topk_sum,
    score_adamic_adar,
    score_common_neighbors,
    score_jaccard,
    score_preferential_attachment,
)
from .validation import check_graph, check_pairs, check_positive_int


class TopKDistanceIndex(BaseEstimator):
    """Top-k distance oracle: fit builds the labeling, query answers pairs.

    Parameters
    ----------
    k_max : int, default=8
        Capacity of the index; queries may ask for any k up to this.
    """

    def __init__(self, k_max: int = 8):
        self.k_max = k_max

    def fit(self, X, y=None):
        g = check_graph(X)
        check_positive_int(self.k_max, "k_max")
        self.graph_ = g
        self.index_ = build_index(g, self.k_max)
        return self

    def _check_fitted(self):
        if not hasattr(self, "index_"):
            raise NotFittedError("this estimator is not fitted; call fit first")

    def query(self, s: int, t: int, k: int | None = None) -> list[int]:
        """The k smallest s-t walk lengths (defaults to k_max)."""
        self._check_fitted()
        return query(self.index_, s, t, self.k_max if k is None else k)

    def pair_distance_sums(self, pairs, k: int | None = None) -> np.ndarray:
        """Padded top-k distance sums for each pair (smaller = closer)."""
        self._check_fitted()
        k = self.k_max if k is None else k
        n = self.graph_.vertex_count
        checked = check_pairs(pairs, n)
        return np.array(
            [padded_topk_sum(query(self.index_, s, t, k), k, n) for s, t in checked],
            dtype=np.float64,
        )


class _PairScorer(BaseEstimator):
    """Shared fit/predict skeleton for the link predictors."""

    def fit(self, X, y=None):
        self.graph_ = check_graph(X)
        return self

    def _check_fitted(self):
        if not hasattr(self, "graph_"):
            raise NotFittedError("this estimator is not fitted; call fit first")

    def _score_one(self, s: int, t: int) -> float:
        raise NotImplementedError

    def predict(self, pairs) -> np.ndarray:
        """Scores for each (s, t) pair; higher means likelier link."""
        self._check_fitted()
        checked = check_pairs(pairs, self.graph_.vertex_count)
        return np.array([self._score_one(s, t) for s, t in checked], dtype=np.float64)


class TopKSimilarity(_PairScorer):
    """Negated sum of the k smallest walk lengths between the endpoints.

    Parameters
    ----------
    k : int, default=4
        How many shortest walk lengths the sum covers.
    k_max : int or None, default=None
        Index capacity; defaults to k. Raising it lets one fitted instance
        serve later predictions at larger k via set_params.
    """

    def __init__(self, k: int = 4, k_max: int | None = None):
        self.k = k
        self.k_max = k_max

    def fit(self, X, y=None):
        g = check_graph(X)
        check_positive_int(self.k, "k")
        capacity = self.k if self.k_max is None else check_positive_int(self.k_max, "k_max")
        if capacity < self.k:
            capacity = self.k
        self.graph_ = g
        self.index_ = build_index(g, capacity)
        return self

    def _check_fitted(self):
        if not hasattr(self, "index_"):
            raise NotFittedError("this estimator is not fitted; call fit first")

    def _score_one(self, s: int, t: int) -> float:
        n = self.graph_.vertex_count
        return -float(padded_topk_sum(query(self.index_, s, t, self.k), self.k, n))


class CommonNeighbors(_PairScorer):
    """Number of shared neighbors."""

    def _score_one(self, s: int, t: int) -> float:
        return score_common_neighbors(self.graph_, s, t)


class JaccardCoefficient(_PairScorer):
    """Neighborhood overlap normalized by the union."""

    def _score_one(self, s: int, t: int) -> float:
        return score_jaccard(self.graph_, s, t)


class AdamicAdar(_PairScorer):
    """Shared neighbors weighted by inverse log-degree."""

    def _score_one(self, s: int, t: int) -> float:
        return score_adamic_adar(self.graph_, s, t)


class PreferentialAttachment(_PairScorer):
    """Degree product."""

    def _score_one(self, s: int, t: int) -> float:
        return score_preferential_attachment(self.graph_, s, t)


def make_predictor(name: str):
    """Estimator instance for a CLI-facing predictor name (top<k>, cn, ...)."""
    from .similarity import parse_predictor

    kind, k = parse_predictor(name)
    if kind == "topk":
        return TopKSimilarity(k=k)
    return {
        "cn": CommonNeighbors,
        "jaccard": JaccardCoefficient,
        "adamic": AdamicAdar,
        "pref": PreferentialAttachment,
    }[kind]()
