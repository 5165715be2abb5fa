"""Input validation helpers for the estimator API."""

from __future__ import annotations

import numpy as np

from .errors import ContractViolationError
from .graph import Graph


def check_graph(X) -> Graph:
    """Coerce estimator input to a Graph.

    Accepts a Graph as-is, or an (m, 2) integer edge array / list of pairs
    (vertex count inferred as max id + 1; pass a Graph to control it).
    """
    if isinstance(X, Graph):
        return X
    edges = np.asarray(X)
    if edges.ndim != 2 or edges.shape[1] != 2:
        raise ContractViolationError(
            f"expected a Graph or an (m, 2) edge array, got shape {getattr(edges, 'shape', None)}"
        )
    if edges.size and not np.issubdtype(edges.dtype, np.integer):
        if not np.all(edges == edges.astype(np.int64)):
            raise ContractViolationError("edge array must hold integers")
        edges = edges.astype(np.int64)
    if edges.size and edges.min() < 0:
        raise ContractViolationError("vertex ids must be non-negative")
    n = int(edges.max()) + 1 if edges.size else 0
    return Graph.from_edges(n, [(int(u), int(v)) for u, v in edges])


def check_pairs(pairs, vertex_count: int) -> list[tuple[int, int]]:
    """Validate a sequence of vertex pairs against the fitted graph."""
    arr = np.asarray(pairs)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ContractViolationError(f"expected an (m, 2) pair array, got shape {arr.shape}")
    out = []
    for u, v in arr:
        u, v = int(u), int(v)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ContractViolationError(f"pair ({u}, {v}) out of range for n={vertex_count}")
        out.append((u, v))
    return out


def check_positive_int(value, name: str) -> int:
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool) or value < 1:
        raise ContractViolationError(f"{name} must be a positive integer, got {value!r}")
    return int(value)
