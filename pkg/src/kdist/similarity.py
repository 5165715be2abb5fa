"""Link-prediction scores: the top-k distance-sum measure and four classical
neighborhood baselines.

Every scorer returns a plain float oriented so that HIGHER means "more likely
future link". The top-k measure sums the k smallest walk lengths (padding
missing entries with 2n so disconnected pairs rank last) and negates the sum,
since smaller distance sums mean tighter connection.
"""

from __future__ import annotations

import math

from .errors import CapacityError, ContractViolationError
from .graph import Graph
from .index import TopKIndex
from .query import query

# CLI-facing predictor names, mirroring the benchmark's column set.
PREDICTOR_NAMES = ("top1", "top4", "top16", "top64", "cn", "jaccard", "adamic", "pref")


def parse_predictor(name: str) -> tuple[str, int | None]:
    """Parse a predictor name into (kind, k). Accepts any 'top<k>' with k >= 1."""
    name = name.strip().lower()
    if name.startswith("top"):
        try:
            k = int(name[3:])
        except ValueError:
            raise ContractViolationError(f"bad predictor name {name!r}") from None
        if k < 1:
            raise ContractViolationError(f"top-k predictor needs k >= 1, got {k}")
        return ("topk", k)
    if name in ("cn", "jaccard", "adamic", "pref"):
        return (name, None)
    raise ContractViolationError(f"unknown predictor {name!r} (expected top<k>, cn, jaccard, adamic or pref)")


def padded_topk_sum(lengths: list[int], k: int, vertex_count: int) -> int:
    """Sum of the k smallest walk lengths, missing entries padded with 2n."""
    pad = 2 * vertex_count
    head = lengths[:k]
    return sum(head) + pad * (k - len(head))


def score_topk(idx: TopKIndex, s: int, t: int, k: int, vertex_count: int | None = None) -> float:
    """Negated padded sum of the k smallest s-t walk lengths."""
    if k > idx.capacity:
        raise CapacityError(f"k={k} exceeds index capacity {idx.capacity}")
    n = idx.vertex_count if vertex_count is None else vertex_count
    return -float(padded_topk_sum(query(idx, s, t, k), k, n))


def _check_vertices(g: Graph, s: int, t: int) -> None:
    if not (0 <= s < g.vertex_count and 0 <= t < g.vertex_count):
        raise ContractViolationError(f"vertex pair ({s}, {t}) out of range")


def _common_neighbors(g: Graph, s: int, t: int) -> list[int]:
    a, b = g.adjacency[s], g.adjacency[t]
    if len(a) > len(b):
        a, b = b, a
    bset = set(b)
    return [z for z in a if z in bset]


def score_common_neighbors(g: Graph, s: int, t: int) -> float:
    _check_vertices(g, s, t)
    return float(len(_common_neighbors(g, s, t)))


def score_jaccard(g: Graph, s: int, t: int) -> float:
    """|N(s) & N(t)| / |N(s) | N(t)|; 0 when both neighborhoods are empty."""
    _check_vertices(g, s, t)
    inter = len(_common_neighbors(g, s, t))
    union = g.degree(s) + g.degree(t) - inter
    return inter / union if union else 0.0


def score_adamic_adar(g: Graph, s: int, t: int) -> float:
    """Sum of 1/ln(deg(z)) over common neighbors z.

    A common neighbor is adjacent to both endpoints, so deg(z) >= 2 and the
    logarithm is always positive.
    """
    _check_vertices(g, s, t)
    return sum(1.0 / math.log(g.degree(z)) for z in _common_neighbors(g, s, t))


def score_preferential_attachment(g: Graph, s: int, t: int) -> float:
    _check_vertices(g, s, t)
    return float(g.degree(s) * g.degree(t))
