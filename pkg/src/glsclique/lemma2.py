"""Exact tuple censuses behind the averaging inequality ``sum |T_v| <= sum C(deg(v)+1, t)``.

Tuples are ``(u, x_1..x_t)`` in ``V^(t+1)``:

* ``Phi``: the ``x_i`` form a t-clique and ``u`` is adjacent to some ``x_i``;
  a tuple is *good* when all ``t+1`` coordinates are distinct.
* ``Omega_good``: good tuples ``(w, y_1..y_t)`` with ``w`` adjacent to every
  ``y_i`` and some ``t-1`` of the ``y_i`` pairwise adjacent.

Counts are obtained per clique and per vertex (times ``t!`` for the orderings)
instead of scanning ``n^(t+1)`` raw tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable

from .bound import DomainError, binomial, checked_add, checked_mul, factorial
from .cliques import count_T, enumerate_cliques
from .graph import Graph, GraphError, VertexSet

MAX_CENSUS_VERTICES = 12


class CensusGuardError(ValueError):
    """Graph too large for exhaustive tuple enumeration."""


def _check_args(g: Graph, t: int) -> None:
    if t < 3:
        raise DomainError(f"tuple census is defined for t >= 3, got t={t}")
    if g.n > MAX_CENSUS_VERTICES:
        raise CensusGuardError(f"census refuses n={g.n} > {MAX_CENSUS_VERTICES}")


@dataclass(frozen=True)
class TupleCensus:
    phi_total: int
    phi_good: int
    phi_bad: int
    omega_good: int


def census(g: Graph, t: int) -> TupleCensus:
    _check_args(g, t)
    orderings = factorial(t)
    good = bad = 0
    for clique in enumerate_cliques(g, t):
        touched = set().union(*(g.adj[x] for x in clique))
        # every clique vertex is adjacent to another clique vertex (t >= 2)
        bad += len(clique)
        good += len(touched.difference(clique))
    omega = 0
    for w in range(g.n):
        nbrs = sorted(g.adj[w])
        for ys in combinations(nbrs, t):
            if any(g.is_clique(c) for c in combinations(ys, t - 1)):
                omega += 1
    phi_good = checked_mul(orderings, good)
    phi_bad = checked_mul(orderings, bad)
    return TupleCensus(checked_add(phi_good, phi_bad), phi_good, phi_bad, checked_mul(orderings, omega))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    left: int
    right: int
    passed: bool

    def line(self) -> str:
        return f"{self.name} {self.left} {self.right} {'PASS' if self.passed else 'FAIL'}"


def check_identities(g: Graph, t: int) -> list[IdentityCheck]:
    """The exact identity for ``|Phi|`` and the four inequalities, both sides numeric."""
    c = census(g, t)
    tf = factorial(t)
    sum_T = sum(count_T(g, v, t) for v in range(g.n))
    degs = [len(s) for s in g.adj]
    bad_cap = checked_mul(tf, sum(binomial(d, t - 1) for d in degs))
    omega_cap = checked_mul(tf, sum(binomial(d, t) for d in degs))
    lemma_cap = sum(binomial(d + 1, t) for d in degs)
    phi_rhs = checked_mul(tf, sum_T)
    return [
        IdentityCheck("phi_equals_tfact_sum_T", c.phi_total, phi_rhs, c.phi_total == phi_rhs),
        IdentityCheck("phi_bad_le_tfact_sum_C(deg,t-1)", c.phi_bad, bad_cap, c.phi_bad <= bad_cap),
        IdentityCheck("omega_good_le_tfact_sum_C(deg,t)", c.omega_good, omega_cap, c.omega_good <= omega_cap),
        IdentityCheck("phi_good_le_omega_good", c.phi_good, c.omega_good, c.phi_good <= c.omega_good),
        IdentityCheck("sum_T_le_sum_C(deg+1,t)", sum_T, lemma_cap, sum_T <= lemma_cap),
    ]


class CaseLabel(enum.Enum):
    NOT_APPLICABLE = "not_applicable"
    SMALL_K = "small_k"
    K_EQ_T_MINUS_1 = "k_eq_t_minus_1"
    COMPLETE = "complete"


@dataclass(frozen=True)
class HClassification:
    subset: VertexSet
    label: CaseLabel
    k: int | None
    phi_good_local: int
    omega_good_local: int

    def expected(self, t: int) -> tuple[int, int]:
        """Contributions ``(Phi_good, Omega_good)`` predicted by the case table."""
        tf = factorial(t)
        if self.label is CaseLabel.SMALL_K:
            return tf, self.k * tf
        if self.label is CaseLabel.K_EQ_T_MINUS_1:
            return 2 * tf, (t - 1) * tf
        if self.label is CaseLabel.COMPLETE:
            return (t + 1) * tf, (t + 1) * tf
        return 0, 0

    def conforms(self, t: int) -> bool:
        return (self.phi_good_local, self.omega_good_local) == self.expected(t)


def _local_pattern(g: Graph, subset: VertexSet) -> int:
    bits = 0
    bit = 1
    for i in range(len(subset)):
        for j in range(i + 1, len(subset)):
            if subset[j] in g.adj[subset[i]]:
                bits |= bit
            bit <<= 1
    return bits


@lru_cache(maxsize=None)
def _classify_pattern(t: int, pattern: int) -> tuple[CaseLabel, int | None, int, int]:
    """Classify the labelled graph on ``0..t`` whose edges are the set bits of ``pattern``."""
    size = t + 1
    pairs = list(combinations(range(size), 2))
    adj = [set() for _ in range(size)]
    for bit, (i, j) in enumerate(pairs):
        if pattern >> bit & 1:
            adj[i].add(j)
            adj[j].add(i)

    def clique(vs) -> bool:
        return all(b in adj[a] for a, b in combinations(vs, 2))

    # tuples whose coordinates are exactly the t+1 local vertices
    phi = omega = 0
    for u, *xs in permutations(range(size)):
        if clique(xs) and any(x in adj[u] for x in xs):
            phi += 1
        if all(x in adj[u] for x in xs) and any(clique(c) for c in combinations(xs, t - 1)):
            omega += 1

    connected = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for y in adj[x] - connected:
            connected.add(y)
            frontier.append(y)
    outsiders = [z for z in range(size) if clique([y for y in range(size) if y != z])]
    if len(connected) < size or not outsiders:
        return CaseLabel.NOT_APPLICABLE, None, phi, omega
    if len(outsiders) == size:
        return CaseLabel.COMPLETE, t, phi, omega
    if len(outsiders) == 2:
        return CaseLabel.K_EQ_T_MINUS_1, t - 1, phi, omega
    # unique t-clique: k = neighbours of the leftover vertex inside it
    return CaseLabel.SMALL_K, len(adj[outsiders[0]]), phi, omega


def classify_H(g: Graph, subset: Iterable[int], t: int) -> HClassification:
    s = g.vertex_set(subset)
    if t < 3:
        raise DomainError(f"classification is defined for t >= 3, got t={t}")
    if len(s) != t + 1:
        raise GraphError(f"expected {t + 1} distinct vertices, got {len(s)}")
    label, k, phi, omega = _classify_pattern(t, _local_pattern(g, s))
    return HClassification(s, label, k, phi, omega)


def clique_neighbors(g: Graph, subset: Iterable[int], clique: Iterable[int]) -> int:
    """Neighbours that the one vertex of ``subset`` outside ``clique`` has inside it."""
    clique = set(clique)
    (z,) = set(subset) - clique
    return len(g.adj[z] & clique)


@dataclass
class SumOverHReport:
    phi_good_sum: int
    omega_good_sum: int
    census: TupleCensus
    applicable: int
    nonconforming: list[HClassification]

    @property
    def passed(self) -> bool:
        return (
            not self.nonconforming
            and self.phi_good_sum == self.census.phi_good
            and self.omega_good_sum == self.census.omega_good
        )

    def lines(self) -> list[str]:
        verdict = "PASS" if self.passed else "FAIL"
        return [
            f"sum_over_H_phi_good {self.phi_good_sum} {self.census.phi_good} {verdict}",
            f"sum_over_H_omega_good {self.omega_good_sum} {self.census.omega_good} {verdict}",
        ]


def sum_over_H_check(g: Graph, t: int) -> SumOverHReport:
    """Add up per-subgraph contributions over all ``(t+1)``-subsets and compare with the census."""
    c = census(g, t)
    phi = omega = applicable = 0
    bad: list[HClassification] = []
    for s in combinations(range(g.n), t + 1):
        h = classify_H(g, s, t)
        if h.label is not CaseLabel.NOT_APPLICABLE:
            applicable += 1
        if not h.conforms(t):
            bad.append(h)
        phi += h.phi_good_local
        omega += h.omega_good_local
    return SumOverHReport(phi, omega, c, applicable, bad)
