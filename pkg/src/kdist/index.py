"""Pruned landmark labeling for top-k distance queries.

The index pairs per-vertex distance labels (landmark, length, count) with
per-vertex loop labels (the k smallest closed-walk lengths over the vertex
and its lower-ranked peers). Landmarks are processed in decreasing-degree
order; each runs a breadth-first traversal over not-higher-ranked vertices
that is cut short wherever the partially built index already certifies k
walks at least as short. Counts cap at k throughout: multiplicity beyond k
can never surface in a top-k answer.

A built index is immutable; construction is sequential in landmark order.
"""

from __future__ import annotations

import struct
from bisect import bisect_right
from dataclasses import dataclass
from typing import BinaryIO

from .errors import ContractViolationError, IndexFormatError
from .graph import Graph, VertexOrder, degree_order, relabel

SENTINEL = 0xFFFF_FFFF  # "no such walk"; compares greater than every finite length

# labels[r] is a list of (landmark_rank, [(length, count), ...]) groups sorted
# by landmark; within a group lengths are strictly increasing.
LabelGroups = list[tuple[int, list[tuple[int, int]]]]


@dataclass(eq=False)
class TopKIndex:
    capacity: int
    order: VertexOrder        # dense graph id <-> rank (identity after deserialization)
    vertex_ids: list[int]     # rank -> id in the source edge list
    loops: list[list[int]]    # rank -> capacity lengths, sentinel padded
    labels: list[LabelGroups]

    @property
    def vertex_count(self) -> int:
        return len(self.loops)

    def rank_of_id(self, vertex_id: int) -> int:
        """Rank of a source-file vertex id (the handle CLI queries use)."""
        cache = getattr(self, "_rank_by_id", None)
        if cache is None:
            cache = self._rank_by_id = {vid: r for r, vid in enumerate(self.vertex_ids)}
        try:
            return cache[vertex_id]
        except KeyError:
            raise ContractViolationError(f"unknown vertex id {vertex_id}") from None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TopKIndex):
            return NotImplemented
        return (
            self.capacity == other.capacity
            and self.vertex_ids == other.vertex_ids
            and self.loops == other.loops
            and self.labels == other.labels
        )


def _insert_capped(values: list[int], value: int, copies: int, cap: int) -> None:
    """Insert up to ``copies`` of ``value`` keeping only the ``cap`` smallest."""
    pos = bisect_right(values, value)
    if pos >= cap:
        return
    values[pos:pos] = [value] * min(copies, cap - pos)
    del values[cap:]


def _loop_label(radj: list[list[int]], v: int, k: int) -> list[int]:
    """k smallest closed-walk lengths at v over ranks >= v, sentinel padded.

    If v has any allowed neighbor, bouncing along that edge realizes every
    even length, so the k-th smallest loop is at most 2(k-1) and the level
    scan below always terminates within that depth.
    """
    out = [0]
    cur = {v: 1}
    for length in range(1, 2 * (k - 1) + 1):
        if len(out) == k:
            break
        nxt: dict[int, int] = {}
        for u, c in cur.items():
            c = min(c, k)
            for w in radj[u]:
                if w >= v:
                    nxt[w] = nxt.get(w, 0) + c
        cur = nxt
        if not cur:
            break
        found = cur.get(v, 0)
        if found:
            take = min(found, k - len(out))
            out.extend([length] * take)
    out.extend([SENTINEL] * (k - len(out)))
    return out


def _certified_lengths(
    label_u: LabelGroups,
    pairs_by_landmark: list[list[tuple[int, int]] | None],
    loops: list[list[int]],
    k: int,
) -> list[int]:
    """k smallest walk lengths between the two labeled vertices derivable from
    the index built so far (multiplicity expanded).

    ``pairs_by_landmark`` is the landmark's own label spread over a dense
    rank-indexed array (hot path of construction).
    """
    out: list[int] = []
    full = False
    for x, pairs_u in label_u:
        pairs_v = pairs_by_landmark[x]
        if pairs_v is None:
            continue
        loop_x = loops[x]
        dv0 = pairs_v[0][0]
        for du, cu in pairs_u:
            if full and du + dv0 >= out[-1]:
                break
            for dv, cv in pairs_v:
                base = du + dv
                if full and base >= out[-1]:
                    break
                mult = cu * cv
                for dl in loop_x:
                    if dl == SENTINEL:
                        break
                    total = base + dl
                    if full and total >= out[-1]:
                        break
                    pos = bisect_right(out, total)
                    out[pos:pos] = [total] * min(mult, k - pos)
                    del out[k:]
                    full = len(out) == k
    return out


def _landmark_bfs(
    radj: list[list[int]],
    v: int,
    k: int,
    loops: list[list[int]],
    labels: list[LabelGroups],
    pruned: bool,
    pairs_by_landmark: list[list[tuple[int, int]] | None],
) -> None:
    for x, pairs in labels[v]:
        pairs_by_landmark[x] = pairs
    loops_v = [d for d in loops[v] if d != SENTINEL]
    certified: dict[int, list[int]] = {}
    recorded: dict[int, int] = {}
    group: dict[int, list[tuple[int, int]]] = {}

    cur = {v: 1}
    depth = 0
    while cur:
        nxt: dict[int, int] = {}
        for u, cnt in cur.items():
            if cnt > k:
                cnt = k
            if pruned:
                cert_u = certified.get(u)
                if cert_u is None:
                    cert_u = _certified_lengths(labels[u], pairs_by_landmark, loops, k)
                    certified[u] = cert_u
                if len(cert_u) == k and cert_u[-1] <= depth:
                    continue
            room = k - recorded.get(u, 0)
            if room <= 0:
                # exhaustive-mode multiplicity budget; unreachable when pruned
                continue
            rec = cnt if cnt < room else room
            grp = group.get(u)
            if grp is None:
                grp = []
                group[u] = grp
                labels[u].append((v, grp))
            grp.append((depth, rec))
            recorded[u] = recorded.get(u, 0) + rec
            if pruned:
                cert_u = certified[u]
                for dl in loops_v:
                    total = depth + dl
                    if len(cert_u) == k and total >= cert_u[-1]:
                        break
                    _insert_capped(cert_u, total, rec, k)
            for w in radj[u]:
                if w > v:
                    nxt[w] = nxt.get(w, 0) + cnt
        depth += 1
        cur = nxt
    for x, _ in labels[v]:
        pairs_by_landmark[x] = None


def build_index(g: Graph, k: int, pruned: bool = True) -> TopKIndex:
    """Construct the top-k labeling for ``g`` with capacity ``k``.

    ``pruned=False`` keeps every label the traversal can justify (identical
    query answers, larger index); it exists so pruning soundness is testable.
    """
    if k < 1:
        raise ContractViolationError("index capacity must be at least 1")
    order = degree_order(g)
    ranked = relabel(g, order)
    radj = ranked.adjacency
    n = g.vertex_count
    loops = [_loop_label(radj, v, k) for v in range(n)]
    labels: list[LabelGroups] = [[] for _ in range(n)]
    pairs_by_landmark: list[list[tuple[int, int]] | None] = [None] * n
    for v in range(n):
        _landmark_bfs(radj, v, k, loops, labels, pruned, pairs_by_landmark)
    return TopKIndex(k, order, list(ranked.vertex_ids), loops, labels)


def compute_loop_label(g: Graph, v: int, k: int, order: VertexOrder) -> list[int]:
    """The loop label of ``v``: k smallest closed-walk lengths using only
    vertices ranked no higher than v (v and its lower-priority peers),
    starting with the trivial length-0 loop, sentinel padded."""
    if k < 1:
        raise ContractViolationError("k must be positive")
    if not 0 <= v < g.vertex_count:
        raise ContractViolationError(f"vertex {v} out of range")
    ranked = relabel(g, order)
    return _loop_label(ranked.adjacency, order.rank_of[v], k)


@dataclass(frozen=True)
class IndexStats:
    label_entries: int
    loop_entries: int
    byte_size: int
    capacity: int


def index_stats(idx: TopKIndex) -> IndexStats:
    label_entries = sum(len(pairs) for groups in idx.labels for _, pairs in groups)
    loop_entries = sum(1 for row in idx.loops for d in row if d != SENTINEL)
    n = idx.vertex_count
    byte_size = 4 + 4 + 4 + 8 + 4 * n + 4 * idx.capacity * n
    byte_size += sum(4 + 12 * sum(len(pairs) for _, pairs in groups) for groups in idx.labels)
    return IndexStats(label_entries, loop_entries, byte_size, idx.capacity)


_MAGIC = b"TKPL"
_VERSION = 1


def serialize_index(idx: TopKIndex, sink: BinaryIO) -> int:
    """Write the index as its little-endian binary image; returns bytes written."""
    n = idx.vertex_count
    written = sink.write(_MAGIC)
    written += sink.write(struct.pack("<IIQ", _VERSION, idx.capacity, n))
    for vid in idx.vertex_ids:
        if not 0 <= vid <= 0xFFFF_FFFF:
            raise ContractViolationError(f"vertex id {vid} does not fit in u32")
    written += sink.write(struct.pack(f"<{n}I", *idx.vertex_ids))
    for row in idx.loops:
        written += sink.write(struct.pack(f"<{idx.capacity}I", *row))
    for groups in idx.labels:
        flat: list[int] = []
        for x, pairs in groups:
            for length, count in pairs:
                flat.extend((x, length, count))
        written += sink.write(struct.pack("<I", len(flat) // 3))
        if flat:
            written += sink.write(struct.pack(f"<{len(flat)}I", *flat))
    return written


def deserialize_index(source: BinaryIO) -> TopKIndex:
    """Rebuild an index from a serialize_index image; raises IndexFormatError
    naming the offending field on any corruption."""

    def read_exact(size: int, field: str) -> bytes:
        data = source.read(size)
        if len(data) != size:
            raise IndexFormatError(f"truncated image while reading {field}")
        return data

    if read_exact(4, "magic") != _MAGIC:
        raise IndexFormatError("bad magic: not a serialized index")
    version, capacity, n = struct.unpack("<IIQ", read_exact(16, "header"))
    if version != _VERSION:
        raise IndexFormatError(f"unsupported format version {version}")
    if capacity < 1:
        raise IndexFormatError(f"invalid capacity {capacity}")
    vertex_ids = list(struct.unpack(f"<{n}I", read_exact(4 * n, "vertex ids"))) if n else []
    loops = []
    for r in range(n):
        row = struct.unpack(f"<{capacity}I", read_exact(4 * capacity, f"loop label of rank {r}"))
        loops.append(list(row))
    labels: list[LabelGroups] = []
    for r in range(n):
        (entry_count,) = struct.unpack("<I", read_exact(4, f"label count of rank {r}"))
        flat = struct.unpack(
            f"<{3 * entry_count}I", read_exact(12 * entry_count, f"label entries of rank {r}")
        )
        groups: LabelGroups = []
        for i in range(entry_count):
            x, length, count = flat[3 * i : 3 * i + 3]
            if groups and groups[-1][0] == x:
                groups[-1][1].append((length, count))
            else:
                groups.append((x, [(length, count)]))
        labels.append(groups)
    if source.read(1):
        raise IndexFormatError("trailing bytes after label blocks")
    order = VertexOrder.from_vertex_at(list(range(n)))
    return TopKIndex(capacity, order, vertex_ids, loops, labels)
