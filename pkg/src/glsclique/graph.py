"""Immutable simple graphs on dense vertex indices ``0..n-1``.

Vertex sets are plain tuples of ints in strictly increasing order.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Invalid graph construction, vertex index, or graph file."""


class Graph:
    """Simple undirected graph with one frozenset of neighbours per vertex."""

    def __init__(self, n: int, adj: Sequence[frozenset[int]]):
        # Trusted constructor; use from_edge_list for validated input.
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, [frozenset(s) for s in nbrs])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @cached_property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @cached_property
    def forward(self) -> tuple[frozenset[int], ...]:
        """Neighbours with a larger index, per vertex (ordered-extension candidates)."""
        return tuple(frozenset(u for u in s if u > v) for v, s in enumerate(self.adj))

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in sorted(self.forward[v])]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for graph on {self.n} vertices")

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        s = tuple(sorted(set(vertices)))
        if s and not (0 <= s[0] and s[-1] < self.n):
            raise GraphError(f"vertex set {s} not contained in [0, {self.n})")
        return s

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return tuple(sorted(self.adj[v] | {v}))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Return ``G[S]`` and the order-preserving map old index -> new index."""
        s = self.vertex_set(vertices)
        mapping = {old: new for new, old in enumerate(s)}
        adj = [frozenset(mapping[u] for u in self.adj[old] if u in mapping) for old in s]
        return Graph(len(s), adj), mapping

    def remove_closed_neighborhood(self, v: int) -> tuple[Graph, dict[int, int]]:
        gone = set(self.closed_neighborhood(v))
        return self.induced_subgraph(u for u in range(self.n) if u not in gone)

    def is_connected_induced(self, vertices: Iterable[int]) -> bool:
        s = set(self.vertex_set(vertices))
        if not s:
            raise GraphError("connectivity of the empty vertex set is undefined")
        start = next(iter(s))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y in s and y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == len(s)

    def is_clique(self, vertices: Sequence[int]) -> bool:
        return all(
            vertices[j] in self.adj[vertices[i]]
            for i in range(len(vertices))
            for j in range(i + 1, len(vertices))
        )


def parse_graph(text: str) -> Graph:
    """Parse the edge-list text format: ``n`` on the first data line, then ``u v`` pairs.

    ``#`` comment lines and blank lines are skipped; ``\\r\\n`` endings are accepted.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise GraphError(f"line {lineno}: expected the vertex count, got {line!r}")
            n = values[0]
        elif len(values) != 2:
            raise GraphError(f"line {lineno}: expected an edge 'u v', got {line!r}")
        else:
            edges.append((values[0], values[1]))
    if n is None:
        raise GraphError("missing vertex count line")
    return Graph.from_edge_list(n, edges)


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    with open(path, newline="") as fh:
        return parse_graph(fh.read())
