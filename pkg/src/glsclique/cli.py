"""Command-line interface.

Exit status: 0 when everything checked out, 1 when a verification failed
(the offending graph is echoed to stderr in the edge-list format), 2 for
usage, parse, or parameter errors.  Results go to stdout, commentary to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .bound import CountOverflowError, DomainError, decompose_n, gls_bound
from .cliques import count_cliques
from .decompose import (
    Certificate,
    MalformedCertificateError,
    NoWitnessError,
    ParameterError,
    decompose,
    verify_certificate,
)
from .generators import extremizer, labeled_graph, named, random_bounded
from .graph import Graph, GraphError, format_graph, read_graph
from .lemma2 import CensusGuardError, check_identities, sum_over_H_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

USAGE_ERRORS = (
    GraphError,
    DomainError,
    ParameterError,
    MalformedCertificateError,
    CensusGuardError,
    CountOverflowError,
    OSError,
)


def _info(msg: str) -> None:
    print(msg, file=sys.stderr)


def _report_failure(g: Graph, what: str) -> None:
    _info(f"FAIL: {what}; offending graph follows")
    sys.stderr.write(format_graph(g, comment=what))


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x]


def cmd_count(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    print(count_cliques(g, args.t))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    a, b = decompose_n(args.n, args.delta)
    print(f"a={a} b={b} bound={gls_bound(args.n, args.delta, args.t)}")
    return EXIT_OK


def _check_graph(g: Graph, t: int, delta: int | None) -> tuple[int, int, int]:
    max_deg = g.max_degree()
    if delta is None:
        delta = max_deg
    elif delta < max_deg:
        raise ParameterError(f"delta={delta} is below the maximum degree {max_deg}")
    bound = gls_bound(g.n, delta, t)
    return count_cliques(g, t), bound, delta


def cmd_check(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    k_t, bound, delta = _check_graph(g, args.t, args.delta)
    ok = k_t <= bound
    print(f"k_t={k_t} bound={bound} {'PASS' if ok else 'FAIL'}")
    if not ok:
        _report_failure(g, f"k_{args.t}={k_t} exceeds bound {bound} at delta={delta}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    cert = decompose(g, args.t, args.delta)
    text = cert.to_json()
    if args.out:
        Path(args.out).write_text(text)
        _info(f"wrote certificate with {len(cert.steps)} steps to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify_cert(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    cert = Certificate.from_json(Path(args.certificate).read_text())
    report = verify_certificate(g, cert)
    print("\n".join(report.lines()))
    if not report.passed:
        _report_failure(g, "certificate rejected")
        return EXIT_FAIL
    return EXIT_OK


def cmd_lemma2(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    checks = check_identities(g, args.t)
    cross = sum_over_H_check(g, args.t)
    for c in checks:
        print(c.line())
    print("\n".join(cross.lines()))
    if not (all(c.passed for c in checks) and cross.passed):
        _report_failure(g, f"tuple-count check failed at t={args.t}")
        return EXIT_FAIL
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "extremizer":
        g = extremizer(args.a, args.delta, args.b)
    elif args.kind == "random":
        g = random_bounded(args.n, args.delta, args.attempts, args.seed)
    elif args.kind == "exhaustive":
        g = labeled_graph(args.n, args.index)
    else:
        g = named(args.name)
    sys.stdout.write(format_graph(g))
    return EXIT_OK


def fuzz_one(g: Graph, ts: list[int], lemma2_max_n: int = 9) -> list[str]:
    """Run every check on one graph and return descriptions of the failures."""
    failures = []
    for t in ts:
        k_t, bound, delta = _check_graph(g, t, None)
        if k_t > bound:
            failures.append(f"t={t}: k_t={k_t} > bound={bound}")
        try:
            report = verify_certificate(g, decompose(g, t, delta))
        except NoWitnessError as exc:
            failures.append(f"t={t}: {exc}")
        else:
            failures.extend(f"t={t}: {c.name} {c.detail}" for c in report.checks if not c.passed)
        if g.n <= lemma2_max_n:
            failures.extend(
                f"t={t}: {c.line()}" for c in check_identities(g, t) if not c.passed
            )
            cross = sum_over_H_check(g, t)
            if not cross.passed:
                failures.append(f"t={t}: " + "; ".join(cross.lines()))
    return failures


def cmd_fuzz(args: argparse.Namespace) -> int:
    rng = random.Random(args.seed)
    ts = [t for group in args.t for t in group]
    out = Path(args.out) if args.out else None
    failed = 0
    for i in range(args.count):
        n = rng.randint(0, args.n_max)
        delta = rng.randint(0, args.delta_max)
        attempts = rng.randint(0, 2 * n * max(delta, 1))
        g = random_bounded(n, delta, attempts, rng.getrandbits(64))
        failures = fuzz_one(g, ts)
        if failures:
            failed += 1
            what = f"fuzz graph {i}: " + " | ".join(failures)
            _report_failure(g, what)
            if out:
                out.mkdir(parents=True, exist_ok=True)
                (out / f"fail_{i}.txt").write_text(format_graph(g, comment=what))
    print(f"{args.count} graphs, {failed} failures")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glsclique",
        description="Count t-cliques and check the clique bound for bounded-degree graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the number of t-cliques")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bound", help="print a, b and the bound for (n, delta, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("check", help="compare k_t with the bound")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--delta", type=int, help="degree bound (default: maximum degree)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="write a removal certificate as JSON")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--delta", type=int, help="degree bound (default: maximum degree)")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-cert", help="replay a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("lemma2", help="exact tuple censuses and their inequalities (n <= 12)")
    p.add_argument("graph")
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_lemma2)

    p = sub.add_parser("gen", help="write a generated graph to stdout")
    gen = p.add_subparsers(dest="kind", required=True)
    q = gen.add_parser("extremizer")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--delta", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q = gen.add_parser("random")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--delta", type=int, required=True)
    q.add_argument("--attempts", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    q = gen.add_parser("exhaustive", help="the labelled graph with the given edge bitmask")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--index", type=int, required=True)
    q = gen.add_parser("named")
    q.add_argument("name")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="sweep random bounded-degree graphs through every check")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n-max", type=int, default=48)
    p.add_argument("--delta-max", type=int, default=8)
    p.add_argument("--t", type=_int_list, nargs="+", default=[[3, 4]], help="e.g. --t 3 4 or --t 3,4")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for failing graphs")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except USAGE_ERRORS as exc:
        _info(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
