"""Normalized undirected unweighted simple graphs and their orderings.

Everything downstream (index construction, scoring, evaluation) consumes the
adjacency substrate defined here. Graphs are immutable after construction and
safe to share across threads.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import ContractViolationError, EdgeListParseError

COMMENT_PREFIXES = ("#", "%")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over dense vertex ids [0, n).

    ``adjacency[v]`` is the sorted list of neighbors of ``v``. ``vertex_ids``
    maps each dense id back to the id it carried in the source edge list
    (identity for graphs built programmatically).
    """

    vertex_count: int
    edge_count: int
    adjacency: list[list[int]]
    vertex_ids: list[int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.vertex_ids is None:
            object.__setattr__(self, "vertex_ids", list(range(self.vertex_count)))

    @classmethod
    def from_edges(
        cls,
        vertex_count: int,
        edges: Iterable[tuple[int, int]],
        vertex_ids: Sequence[int] | None = None,
    ) -> "Graph":
        """Build a normalized graph: self-loops dropped, duplicates collapsed."""
        seen: set[tuple[int, int]] = set()
        adjacency: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ContractViolationError(f"edge ({u}, {v}) out of range for n={vertex_count}")
            if u == v:
                continue
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        for lst in adjacency:
            lst.sort()
        return cls(vertex_count, len(seen), adjacency, list(vertex_ids) if vertex_ids else None)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def validate(self) -> None:
        """Check all structural invariants; raises ContractViolationError."""
        n = self.vertex_count
        if len(self.adjacency) != n:
            raise ContractViolationError("adjacency length differs from vertex_count")
        if len(self.vertex_ids) != n:
            raise ContractViolationError("vertex_ids length differs from vertex_count")
        total = 0
        for u, row in enumerate(self.adjacency):
            if sorted(set(row)) != row:
                raise ContractViolationError(f"adjacency[{u}] is not sorted and duplicate-free")
            for v in row:
                if not 0 <= v < n:
                    raise ContractViolationError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ContractViolationError(f"self-loop at {u}")
                if not self.has_edge(v, u):
                    raise ContractViolationError(f"asymmetric edge ({u}, {v})")
            total += len(row)
        if total != 2 * self.edge_count:
            raise ContractViolationError("edge_count does not match adjacency entries")


@dataclass(frozen=True)
class VertexOrder:
    """A permutation of [0, n): ``rank_of[v]`` is v's rank, ``vertex_at[r]`` its inverse."""

    rank_of: list[int]
    vertex_at: list[int]

    @classmethod
    def from_vertex_at(cls, vertex_at: Sequence[int]) -> "VertexOrder":
        rank_of = [0] * len(vertex_at)
        for rank, v in enumerate(vertex_at):
            rank_of[v] = rank
        return cls(rank_of, list(vertex_at))

    def __len__(self) -> int:
        return len(self.rank_of)


def parse_edge_list(source: Iterable[str] | str) -> Graph:
    """Parse a whitespace-separated edge list into a normalized Graph.

    Vertex ids may be arbitrary non-negative integers; they are remapped to a
    dense [0, n) range in first-appearance order. Self-loops are dropped,
    duplicate/parallel edges collapse to one, direction is ignored. Lines
    starting with '#' or '%' and blank lines are skipped. Empty input yields
    the empty graph.
    """
    if isinstance(source, str):
        source = source.splitlines()
    id_map: dict[int, int] = {}
    original: list[int] = []
    edges: list[tuple[int, int]] = []

    def dense(token_id: int) -> int:
        idx = id_map.get(token_id)
        if idx is None:
            idx = len(original)
            id_map[token_id] = idx
            original.append(token_id)
        return idx

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(f"expected two integer tokens, got {len(tokens)}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer token in {line!r}", lineno) from None
        if a < 0 or b < 0:
            raise EdgeListParseError(f"negative vertex id in {line!r}", lineno)
        if a == b:
            # dropped before id assignment: a vertex seen only in self-loops
            # is not part of the normalized graph
            continue
        edges.append((dense(a), dense(b)))

    return Graph.from_edges(len(original), edges, original)


def load_edge_list(path: str | Path) -> Graph:
    """Read and parse an edge-list file (UTF-8)."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh)


def write_edge_list(g: Graph, path: str | Path) -> None:
    """Serialize the normalized edge list (dense ids, one 'u v' per line).

    Edges are emitted so that vertices make their first appearance in
    ascending id order; re-parsing a written parse output therefore yields a
    structurally identical graph. Isolated vertices cannot be expressed in
    the edge-list format and are dropped.
    """
    intro: list[tuple[int, int]] = []
    introduced: set[int] = set()
    for j in range(g.vertex_count):
        if j in introduced or not g.adjacency[j]:
            continue
        least = g.adjacency[j][0]
        if least < j:
            intro.append((least, j))
        else:
            # for parse outputs, a vertex with no smaller neighbor was
            # introduced together with its successor, so least == j + 1
            intro.append((j, least))
            introduced.add(least)
        introduced.add(j)
    seen = set(intro)
    with open(path, "w", encoding="utf-8") as fh:
        for u, v in intro:
            fh.write(f"{u} {v}\n")
        for u, v in g.edges():
            if (u, v) not in seen:
                fh.write(f"{u} {v}\n")


def degree_order(g: Graph) -> VertexOrder:
    """Order vertices by decreasing degree, ties broken by ascending vertex id."""
    vertex_at = sorted(range(g.vertex_count), key=lambda v: (-g.degree(v), v))
    return VertexOrder.from_vertex_at(vertex_at)


def relabel(g: Graph, order: VertexOrder) -> Graph:
    """Return the isomorphic graph where new vertex i is the rank-i vertex of g."""
    n = g.vertex_count
    if len(order) != n:
        raise ContractViolationError(f"permutation size {len(order)} != vertex count {n}")
    adjacency = [sorted(order.rank_of[w] for w in g.adjacency[order.vertex_at[i]]) for i in range(n)]
    vertex_ids = [g.vertex_ids[order.vertex_at[i]] for i in range(n)]
    return Graph(n, g.edge_count, adjacency, vertex_ids)


def remove_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Remove the given edges; vertex set (and isolated vertices) are retained."""
    drop: set[tuple[int, int]] = set()
    for u, v in edges:
        key = (u, v) if u < v else (v, u)
        if not (0 <= u < g.vertex_count and 0 <= v < g.vertex_count) or not g.has_edge(u, v):
            raise ContractViolationError(f"edge ({u}, {v}) not present in graph")
        drop.add(key)
    adjacency = []
    for u, row in enumerate(g.adjacency):
        adjacency.append([v for v in row if ((u, v) if u < v else (v, u)) not in drop])
    return Graph(g.vertex_count, g.edge_count - len(drop), adjacency, list(g.vertex_ids))
