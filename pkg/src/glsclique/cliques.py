"""Fixed-size clique enumeration and counting by ordered extension.

A clique is grown only with larger-indexed common neighbours of its current
members, so every clique is produced once, from its smallest vertex up.  On a
graph of maximum degree ``D`` the work is ``O(n * D^(t-1))`` set operations.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import combinations
from typing import Iterable, Sequence

from .bound import DomainError, checked, checked_add
from .graph import Graph, VertexSet


def _check_t(t: int) -> None:
    if t < 1:
        raise DomainError(f"clique size must be positive, got {t}")


def _count_within(forward: Sequence[frozenset[int]], cand: frozenset[int] | set[int], s: int) -> int:
    """Number of ``s``-cliques with all vertices in ``cand``."""
    if s == 1:
        return len(cand)
    if s == 2:
        return sum(len(cand & forward[x]) for x in cand)
    total = 0
    for x in cand:
        nxt = cand & forward[x]
        if len(nxt) >= s - 1:
            total += _count_within(forward, nxt, s - 1)
    return total


def enumerate_cliques(g: Graph, t: int) -> Iterator[VertexSet]:
    """Yield every ``t``-clique once, sorted, in lexicographic order."""
    _check_t(t)
    forward = g.forward

    def extend(prefix: tuple[int, ...], cand: frozenset[int]) -> Iterator[VertexSet]:
        if len(prefix) == t:
            yield prefix
            return
        need = t - len(prefix) - 1
        for x in sorted(cand):
            nxt = cand & forward[x]
            if len(nxt) >= need:
                yield from extend(prefix + (x,), nxt)

    for v in range(g.n):
        if len(forward[v]) >= t - 1:
            yield from extend((v,), forward[v])


def count_cliques(g: Graph, t: int) -> int:
    _check_t(t)
    if t == 1:
        return checked(g.n)
    forward = g.forward
    total = 0
    for v in range(g.n):
        fv = forward[v]
        if len(fv) >= t - 1:
            total = checked_add(total, _count_within(forward, fv, t - 1))
    return total


def count_T(g: Graph, v: int, t: int) -> int:
    """Number of ``t``-cliques meeting the closed neighbourhood of ``v``.

    Each such clique is charged to its smallest member ``w`` inside ``N[v]``;
    the remaining ``t-1`` vertices are neighbours of ``w`` that avoid the
    smaller part of ``N[v]``.
    """
    _check_t(t)
    closed = g.closed_neighborhood(v)
    forward = g.forward
    total = 0
    for i, w in enumerate(closed):
        cand = g.adj[w].difference(closed[:i])
        if t == 1:
            total += 1
        elif len(cand) >= t - 1:
            total += _count_within(forward, cand, t - 1)
    return checked(total)


def contains_s_clique(g: Graph, vertices: Iterable[int], s: int) -> bool:
    _check_t(s)
    members = g.vertex_set(vertices)
    return any(g.is_clique(c) for c in combinations(members, s))

