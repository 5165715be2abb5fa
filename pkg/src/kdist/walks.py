"""Brute-force walk counting: the ground truth the index is validated against.

Counts s-t walks per length by propagating saturating count vectors through
the adjacency structure (the adjacency-power recurrence), then emits the k
smallest lengths with multiplicity. Exists for small-instance validation and
for deriving expected test values; not meant to scale past the enforced
vertex limit.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .errors import CapacityError, ContractViolationError
from .graph import Graph

MAX_ORACLE_VERTICES = 1024


def _check(g: Graph, *vertices: int) -> None:
    if g.vertex_count > MAX_ORACLE_VERTICES:
        raise CapacityError(
            f"walk oracle is limited to {MAX_ORACLE_VERTICES} vertices, got {g.vertex_count}"
        )
    for v in vertices:
        if not 0 <= v < g.vertex_count:
            raise ContractViolationError(f"vertex {v} out of range for n={g.vertex_count}")


def _csr(adjacency: list[list[int]], keep: np.ndarray | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Flatten adjacency into (tails, heads) arrays, optionally masked to a vertex subset."""
    tails, heads = [], []
    for u, row in enumerate(adjacency):
        if keep is not None and not keep[u]:
            continue
        for v in row:
            if keep is None or keep[v]:
                tails.append(u)
                heads.append(v)
    return np.asarray(tails, dtype=np.int64), np.asarray(heads, dtype=np.int64)


def _count_levels(
    n: int, tails: np.ndarray, heads: np.ndarray, start: int, cap: int
) -> Iterator[np.ndarray]:
    """Yield walk-count vectors from ``start`` for lengths 0, 1, 2, ...

    Counts saturate at ``cap``; capping never changes a top-cap answer because
    a vertex's cap smallest walk lengths extend only from its parents' cap
    smallest.
    """
    counts = np.zeros(n, dtype=np.int64)
    counts[start] = 1
    while True:
        yield counts
        if tails.size:
            nxt = np.bincount(heads, weights=counts[tails].astype(np.float64), minlength=n)
            counts = np.minimum(nxt, cap).astype(np.int64)
        else:
            counts = np.zeros(n, dtype=np.int64)


def _scan_cutoff(n: int, k: int) -> int:
    """Termination bound for the level scan.

    If any walk exists its shortest is under n, and bouncing a final edge
    realizes every length d, d+2, d+4, ..., so the k-th smallest walk length
    never exceeds n + 2k - 3; no walk within 2n means no walk at all. The
    max covers both facts for every n, k combination.
    """
    return max(2 * n + k, n + 2 * k)


def topk_walk_lengths(g: Graph, s: int, t: int, k: int) -> list[int]:
    """The k smallest s-t walk lengths, with multiplicity, sorted non-decreasing.

    A short list means the pair genuinely has fewer than k finite walk
    lengths (disconnected pair, or an isolated self-query).
    """
    _check(g, s, t)
    if k < 1:
        raise ContractViolationError("k must be positive")
    tails, heads = _csr(g.adjacency)
    out: list[int] = []
    cutoff = _scan_cutoff(g.vertex_count, k)
    for length, counts in enumerate(_count_levels(g.vertex_count, tails, heads, s, k)):
        take = min(int(counts[t]), k - len(out))
        out.extend([length] * take)
        if len(out) == k or length >= cutoff:
            break
    return out


def restricted_topk_loops(g: Graph, v: int, allowed: Iterable[int], k: int) -> list[int]:
    """The k smallest closed-walk lengths at v visiting only ``allowed`` vertices.

    Includes the trivial length-0 loop. ``v`` must itself be allowed.
    """
    _check(g, v)
    if k < 1:
        raise ContractViolationError("k must be positive")
    keep = np.zeros(g.vertex_count, dtype=bool)
    keep[list(allowed)] = True
    if not keep[v]:
        raise ContractViolationError(f"vertex {v} is not in the allowed set")
    tails, heads = _csr(g.adjacency, keep)
    out: list[int] = []
    cutoff = _scan_cutoff(g.vertex_count, k)
    for length, counts in enumerate(_count_levels(g.vertex_count, tails, heads, v, k)):
        take = min(int(counts[v]), k - len(out))
        out.extend([length] * take)
        if len(out) == k or length >= cutoff:
            break
    return out
