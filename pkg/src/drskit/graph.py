"""Simple undirected graphs with cached BFS all-pairs distances.

Vertices are dense integers ``0..n-1``.  A :class:`Graph` is immutable after
construction, so the distance matrix is computed once and shared freely
between threads.  Unreachable pairs carry the marker :data:`UNREACHABLE`;
operations that require a metric reject disconnected graphs explicitly.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, NotConnectedError

UNREACHABLE = -1


class Graph:
    """Finite simple undirected graph on vertices ``0..n_vertices-1``."""

    __slots__ = ("n_vertices", "adjacency", "_dist", "_connected")

    def __init__(self, n_vertices: int, adjacency: Sequence[Iterable[int]]):
        if n_vertices < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adjacency) != n_vertices:
            raise ValueError("adjacency length does not match vertex count")
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adjacency)
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if not 0 <= v < n_vertices:
                    raise ValueError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        self.n_vertices = n_vertices
        self.adjacency = adj
        self._dist: tuple[tuple[int, ...], ...] | None = None
        self._connected: bool | None = None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from ``(u, v)`` pairs; duplicates are merged.

        Raises ``ValueError`` on out-of-range endpoints or self-loops.
        """
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def n_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs ``u < v``, ascending."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def distance_matrix(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs hop distances; ``UNREACHABLE`` marks disconnected pairs."""
        if self._dist is None:
            self._dist = tuple(
                tuple(_bfs_row(self.adjacency, s, self.n_vertices))
                for s in range(self.n_vertices)
            )
        return self._dist

    def dist(self, u: int, v: int) -> int:
        return self.distance_matrix()[u][v]

    def is_connected(self) -> bool:
        if self._connected is None:
            if self.n_vertices == 0:
                self._connected = True
            else:
                row = _bfs_row(self.adjacency, 0, self.n_vertices)
                self._connected = UNREACHABLE not in row
        return self._connected

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n_vertices}, m={self.n_edges()})"


def _bfs_row(adjacency: Sequence[Sequence[int]], source: int, n: int) -> list[int]:
    row = [UNREACHABLE] * n
    row[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du1 = row[u] + 1
        for v in adjacency[u]:
            if row[v] < 0:
                row[v] = du1
                queue.append(v)
    return row


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    return g.distance_matrix()


def is_connected(g: Graph) -> bool:
    return g.is_connected()


def require_connected(g) -> None:
    """Raise ``NotConnectedError`` unless ``g`` is connected."""
    if not g.is_connected():
        raise NotConnectedError("operation requires a connected graph")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product G x H: vertex ``(a, b)`` gets id ``a * |V(H)| + b``;
    two pairs are adjacent iff they agree in one coordinate and are adjacent
    in the other.  Distances add coordinate-wise."""
    if g.n_vertices == 0 or h.n_vertices == 0:
        raise ValueError("cartesian product requires nonempty factors")
    nh = h.n_vertices
    adj: list[list[int]] = []
    for a in range(g.n_vertices):
        for b in range(h.n_vertices):
            nbrs = [a * nh + b2 for b2 in h.adjacency[b]]
            nbrs.extend(a2 * nh + b for a2 in g.adjacency[a])
            adj.append(nbrs)
    return Graph(g.n_vertices * h.n_vertices, adj)


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n m``, then ``m`` lines
    ``u v`` with 0-indexed endpoints.  ``#`` starts a comment."""
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("empty edge-list input")
    head = rows[0]
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {' '.join(head)!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header: {' '.join(head)!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for fields in rows[1:]:
        if len(fields) != 2:
            raise FormatError(f"edge line must be 'u v', got {' '.join(fields)!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise FormatError(f"non-integer edge line: {' '.join(fields)!r}") from exc
        edges.append((u, v))
    try:
        return Graph.from_edge_list(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n_vertices} {g.n_edges()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
