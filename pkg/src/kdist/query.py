"""Top-k distance queries against a built index.

A query evaluates the candidate multiset {len(s->x) + loop(x) + len(x->t)}
over the landmarks shared by the two endpoint labels and keeps its k smallest
elements. Landmark streams are merged under a size-k bound rather than
materialized: under walk semantics the full multiset is infinite.

Pure read-only functions over an immutable index; safe for any number of
concurrent callers.
"""

from __future__ import annotations

from .errors import CapacityError, ContractViolationError
from .index import SENTINEL, TopKIndex, _insert_capped


def _check_pair(idx: TopKIndex, s: int, t: int) -> None:
    n = idx.vertex_count
    if not (0 <= s < n and 0 <= t < n):
        raise ContractViolationError(f"vertex pair ({s}, {t}) out of range for n={n}")


def _common_landmarks(idx: TopKIndex, rs: int, rt: int):
    ls, lt = idx.labels[rs], idx.labels[rt]
    i = j = 0
    out = []
    while i < len(ls) and j < len(lt):
        xs, xt = ls[i][0], lt[j][0]
        if xs == xt:
            out.append((ls[i][1], lt[j][1], idx.loops[xs]))
            i += 1
            j += 1
        elif xs < xt:
            i += 1
        else:
            j += 1
    return out


def query_ranks(idx: TopKIndex, rs: int, rt: int, k: int) -> list[int]:
    """Top-k walk lengths between two vertices given by rank."""
    candidates = _common_landmarks(idx, rs, rt)
    # loop labels always start at 0, so the cheapest sum a landmark can offer
    # is first-length(s) + first-length(t); visit landmarks in that order and
    # stop once none can beat the current k-th best.
    candidates.sort(key=lambda c: c[0][0][0] + c[1][0][0])
    best: list[int] = []
    for pairs_s, pairs_t, loop in candidates:
        if len(best) == k and pairs_s[0][0] + pairs_t[0][0] >= best[-1]:
            break
        for ds, cs in pairs_s:
            if len(best) == k and ds + pairs_t[0][0] >= best[-1]:
                break
            for dt, ct in pairs_t:
                base = ds + dt
                if len(best) == k and base >= best[-1]:
                    break
                mult = cs * ct
                for dl in loop:
                    if dl == SENTINEL:
                        break
                    total = base + dl
                    if len(best) == k and total >= best[-1]:
                        break
                    _insert_capped(best, total, mult, k)
    return best


def query(idx: TopKIndex, s: int, t: int, k: int) -> list[int]:
    """The k smallest s-t walk lengths with multiplicity, non-decreasing.

    Returns fewer than k entries when fewer finite walk lengths exist
    (disconnected pairs); absent walks are omitted, never padded here.
    """
    if k < 1:
        raise ContractViolationError("k must be positive")
    if k > idx.capacity:
        raise CapacityError(f"k={k} exceeds index capacity {idx.capacity}")
    _check_pair(idx, s, t)
    return query_ranks(idx, idx.order.rank_of[s], idx.order.rank_of[t], k)


def query_by_id(idx: TopKIndex, s_id: int, t_id: int, k: int) -> list[int]:
    """Like query, but addresses vertices by their source-file ids."""
    if k < 1:
        raise ContractViolationError("k must be positive")
    if k > idx.capacity:
        raise CapacityError(f"k={k} exceeds index capacity {idx.capacity}")
    return query_ranks(idx, idx.rank_of_id(s_id), idx.rank_of_id(t_id), k)


def count_paths_within(idx: TopKIndex, s: int, t: int, bound: int) -> int:
    """Number of s-t walks of length <= bound derivable from the index,
    capped at the index capacity. This is the pruning predicate the
    construction applies from the landmark's point of view."""
    _check_pair(idx, s, t)
    k = idx.capacity
    acc = 0
    for pairs_s, pairs_t, loop in _common_landmarks(idx, idx.order.rank_of[s], idx.order.rank_of[t]):
        for ds, cs in pairs_s:
            if ds + pairs_t[0][0] > bound:
                break
            for dt, ct in pairs_t:
                base = ds + dt
                if base > bound:
                    break
                mult = cs * ct
                for dl in loop:
                    if dl == SENTINEL or base + dl > bound:
                        break
                    acc += mult
                    if acc >= k:
                        return k
    return acc


def top1_distance(idx: TopKIndex, s: int, t: int) -> int | None:
    """Classic shortest-path distance, or None when the pair is disconnected."""
    result = query(idx, s, t, 1)
    return result[0] if result else None
