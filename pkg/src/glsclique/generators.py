"""Graph corpora: extremal examples, seeded random bounded-degree graphs,
all labelled graphs on a few vertices, and named fixtures."""

from __future__ import annotations

import random
import re
from collections.abc import Iterator
from itertools import combinations

from .graph import Graph, GraphError

MAX_EXHAUSTIVE_VERTICES = 7


def complete(k: int) -> Graph:
    return Graph.from_edge_list(k, combinations(range(k), 2))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edge_list(offset, edges)


def extremizer(a: int, delta: int, b: int) -> Graph:
    """``a`` disjoint copies of ``K_{delta+1}`` followed by one ``K_b``."""
    if a < 0 or delta < 0 or not 0 <= b <= delta:
        raise GraphError(f"need a >= 0 and 0 <= b <= delta, got a={a}, delta={delta}, b={b}")
    return disjoint_union(*[complete(delta + 1)] * a, complete(b))


def random_bounded(n: int, delta: int, edge_attempts: int, seed: int) -> Graph:
    """Insert uniformly drawn vertex pairs, skipping loops, repeats, and saturated endpoints.

    Uses ``random.Random(seed)`` (Mersenne Twister); results are reproducible
    for a fixed Python version.
    """
    rng = random.Random(seed)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    if n < 2 or delta == 0:
        return Graph(n, [frozenset()] * n)
    draw = rng.randrange
    for _ in range(edge_attempts):
        u = draw(n)
        v = draw(n)
        nu, nv = nbrs[u], nbrs[v]
        if u != v and v not in nu and len(nu) < delta and len(nv) < delta:
            nu.add(v)
            nv.add(u)
    return Graph(n, [frozenset(s) for s in nbrs])


def labeled_graph(n: int, index: int) -> Graph:
    """The graph whose edge indicators are the bits of ``index`` over lexicographic pairs."""
    pairs = list(combinations(range(n), 2))
    if not 0 <= index < 1 << len(pairs):
        raise GraphError(f"index {index} out of range for n={n}")
    return Graph.from_edge_list(n, (p for i, p in enumerate(pairs) if index >> i & 1))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    if not 0 <= n <= MAX_EXHAUSTIVE_VERTICES:
        raise GraphError(f"exhaustive enumeration supports 0 <= n <= {MAX_EXHAUSTIVE_VERTICES}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj: list[set[int]] = [set() for _ in range(n)]
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u].add(v)
                adj[v].add(u)
        yield Graph(n, [frozenset(s) for s in adj])


def _cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError(f"a simple cycle needs at least 3 vertices, got {k}")
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def _petersen() -> Graph:
    # Kneser graph K(5,2): 2-subsets of a 5-set, adjacent when disjoint.
    verts = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(verts[i]) & set(verts[j])]
    return Graph.from_edge_list(10, edges)


_FAMILIES = {
    "complete": complete,
    "cycle": _cycle,
    "path": lambda k: Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)]),
    "star": lambda k: Graph.from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)]),
}

_FIXED = {
    "petersen": _petersen,
    "paw": lambda: Graph.from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "diamond": lambda: Graph.from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
}


def named(name: str) -> Graph:
    """Fixture by name: ``complete_k``, ``cycle_k``, ``path_k``, ``star_k`` (k leaves),
    ``petersen``, ``paw``, ``diamond``."""
    if name in _FIXED:
        return _FIXED[name]()
    m = re.fullmatch(r"([a-z]+)_([1-9][0-9]*)", name)
    if m and m.group(1) in _FAMILIES:
        return _FAMILIES[m.group(1)](int(m.group(2)))
    raise GraphError(f"unknown graph name {name!r}")
