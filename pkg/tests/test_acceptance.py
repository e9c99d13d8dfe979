"""Exit criteria.  Each test records one verdict line shown in the pytest summary."""

import random
import time
from itertools import combinations

import pytest

from glsclique.bound import convexity_step_check, gls_bound
from glsclique.cliques import count_cliques
from glsclique.decompose import decompose, verify_certificate
from glsclique.generators import all_labeled_graphs, complete, extremizer, named, random_bounded
from glsclique.lemma2 import CaseLabel, TupleCensus, census, check_identities, classify_H, sum_over_H_check

from oracles import case_formula, raw_census

CORPUS_MAX_N = 6


@pytest.fixture(scope="module")
def corpus():
    return [g for n in range(CORPUS_MAX_N + 1) for g in all_labeled_graphs(n)]


def test_ac1_exhaustive_bound(corpus, criterion):
    start = time.perf_counter()
    violations = 0
    for g in corpus:
        delta = g.max_degree()
        for t in (3, 4):
            violations += count_cliques(g, t) > gls_bound(g.n, delta, t)
    elapsed = time.perf_counter() - start
    criterion(
        "AC1 exhaustive bound n<=6, t=3,4",
        violations == 0 and elapsed < 120,
        f"{len(corpus)} graphs, {violations} violations, {elapsed:.1f}s (limit 120s)",
    )


def test_ac2_exhaustive_tuple_counts(corpus, criterion):
    start = time.perf_counter()
    violations = oracle_checked = 0
    for g in corpus:
        for t in (3, 4):
            checks = check_identities(g, t)
            violations += not all(c.passed for c in checks)
            if g.n <= 5:
                oracle_checked += 1
                violations += census(g, t) != TupleCensus(*raw_census(g, t))
    elapsed = time.perf_counter() - start
    criterion(
        "AC2 exhaustive identity/inequalities + raw tuple oracle",
        violations == 0 and elapsed < 600,
        f"{2 * len(corpus)} (graph, t) pairs, {oracle_checked} raw-oracle cross-checks, "
        f"{violations} violations, {elapsed:.1f}s (limit 600s)",
    )


def test_ac3_extremizer_equality(criterion):
    mismatches = cases = 0
    for delta in range(2, 7):
        for a in range(4):
            for b in range(delta + 1):
                g = extremizer(a, delta, b)
                for t in (3, 4, 5):
                    cases += 1
                    mismatches += count_cliques(g, t) != gls_bound(a * (delta + 1) + b, delta, t)
    criterion("AC3 extremizer attains bound", mismatches == 0, f"{cases} cases, {mismatches} mismatches")


def test_ac4_fixed_census_values(criterion):
    expected = {4: (96, 24, 72, 24), 3: (18, 0, 18, 0)}
    got = {k: census(complete(k), 3) for k in expected}
    raw = {k: raw_census(complete(k), 3) for k in expected}
    ok = all(got[k] == TupleCensus(*expected[k]) and raw[k] == expected[k] for k in expected)
    criterion("AC4 fixed census values K4, K3", ok, f"K4 {raw[4]}, K3 {raw[3]}")


def test_ac5_case_table(corpus, criterion):
    subsets = nonconforming = mismatched = 0
    for g in corpus:
        report = sum_over_H_check(g, 3)
        subsets += len(list(combinations(range(g.n), 4)))
        nonconforming += len(report.nonconforming)
        mismatched += not report.passed
        for s in combinations(range(g.n), 4):
            h = classify_H(g, s, 3)
            if h.label is not CaseLabel.NOT_APPLICABLE:
                nonconforming += (h.phi_good_local, h.omega_good_local) != case_formula(h.label.value, h.k, 3)

    rng = random.Random(20240615)
    sampled = 0
    for i in range(1000):
        t = (3, 4, 5)[i % 3]
        n = rng.randint(t + 1, 9)
        delta = rng.randint(1, n - 1)
        g = random_bounded(n, delta, rng.randint(0, 3 * n * delta), rng.getrandbits(64))
        report = sum_over_H_check(g, t)
        sampled += 1
        nonconforming += len(report.nonconforming)
        mismatched += not report.passed
    criterion(
        "AC5 case-table conformance and sum over H",
        nonconforming == 0 and mismatched == 0,
        f"{subsets} subsets exhaustive (t=3) + {sampled} random graphs (t=3,4,5); "
        f"{nonconforming} nonconforming, {mismatched} census mismatches",
    )


def test_ac6_t3_good_counts_equal(corpus, criterion):
    unequal = sum(1 for g in corpus if (c := census(g, 3)).phi_good != c.omega_good)
    criterion("AC6 t=3 |Phi_good| = |Omega_good|", unequal == 0, f"{len(corpus)} graphs, {unequal} unequal")


def test_ac7_decomposition_round_trip(criterion):
    rng = random.Random(7)
    start = time.perf_counter()
    failures = runs = 0
    for _ in range(200):
        n = rng.randint(0, 48)
        delta = rng.randint(0, 8)
        g = random_bounded(n, delta, rng.randint(0, 2 * n * max(delta, 1)), rng.getrandbits(64))
        for t in (3, 4):
            runs += 1
            report = verify_certificate(g, decompose(g, t))
            failures += not (report.passed and len(report.checks) == 5)
    elapsed = time.perf_counter() - start
    criterion(
        "AC7 decomposition round trip",
        failures == 0 and elapsed < 60,
        f"{runs} certificates, {failures} failures, {elapsed:.1f}s (limit 60s)",
    )


def test_ac8_named_spot_checks(criterion):
    petersen = named("petersen")
    k3, bound = count_cliques(petersen, 3), gls_bound(10, 3, 3)
    h = classify_H(named("diamond"), range(4), 3)
    ok = (
        (k3, bound) == (0, 8)
        and petersen.max_degree() == 3
        and (h.label, h.phi_good_local, h.omega_good_local) == (CaseLabel.K_EQ_T_MINUS_1, 12, 12)
    )
    criterion(
        "AC8 named spot checks",
        ok,
        f"petersen k3={k3} bound={bound}; diamond {h.label.name} ({h.phi_good_local}, {h.omega_good_local})",
    )


def test_ac9_large_triangle_count(criterion):
    g = random_bounded(100_000, 16, 800_000, 9)
    start = time.perf_counter()
    k3 = count_cliques(g, 3)
    elapsed = time.perf_counter() - start
    criterion(
        "AC9 triangle count n=100000, delta=16",
        g.max_degree() <= 16 and elapsed < 5,
        f"m={g.edge_count}, max degree {g.max_degree()}, k3={k3}, {elapsed:.2f}s (limit 5s)",
    )


def test_ac10_convexity_grid(criterion):
    cases = failures = 0
    for delta in range(13):
        for b in range(delta + 1):
            for d in range(delta + 1):
                for t in range(3, 9):
                    cases += 1
                    failures += not convexity_step_check(d, delta, b, t)
    criterion("AC10 convexity grid", failures == 0, f"{cases} cases, {failures} failures")
