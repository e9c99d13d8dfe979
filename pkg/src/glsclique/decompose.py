"""Certificates for the bounded-degree clique bound via closed-neighbourhood removal.

``decompose`` repeatedly picks a witness ``v`` with ``|T_v| <= C(deg(v)+1, t)``
in the residual graph, charges those cliques to the step, and deletes
``N[v]``.  Every clique dies at exactly one step and is counted there, and the
per-step budgets ``C(deg+1, t)`` telescope to at most the bound, so replaying
the log is a proof of ``k_t(G) <= bound`` for this particular graph.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .bound import BoundParams, DomainError, binomial, checked_add, gls_bound
from .cliques import count_cliques, count_T
from .graph import Graph, VertexSet


class ParameterError(ValueError):
    """The requested degree bound is below the graph's maximum degree."""


class MalformedCertificateError(ValueError):
    """A certificate document is structurally invalid for the graph it is checked against."""


class NoWitnessError(RuntimeError):
    """No vertex satisfies the witness inequality; the clique counter is broken."""


@dataclass(frozen=True)
class CertificateStep:
    vertex: int
    degree: int
    t_count: int
    removed: VertexSet


@dataclass(frozen=True)
class Certificate:
    params: BoundParams
    k_t: int
    bound: int
    steps: tuple[CertificateStep, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        p = self.params
        return {
            "n": p.n,
            "delta": p.delta,
            "t": p.t,
            "a": p.a,
            "b": p.b,
            "k_t": self.k_t,
            "bound": self.bound,
            "steps": [{**asdict(s), "removed": list(s.removed)} for s in self.steps],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, doc: dict) -> Certificate:
        try:
            ints = {k: doc[k] for k in ("n", "delta", "t", "a", "b", "k_t", "bound")}
            steps = doc["steps"]
            if not all(type(v) is int for v in ints.values()) or not isinstance(steps, list):
                raise TypeError("header fields must be integers and steps a list")
            parsed = []
            for s in steps:
                vals = (s["vertex"], s["degree"], s["t_count"])
                if not all(type(v) is int for v in vals) or not all(type(r) is int for r in s["removed"]):
                    raise TypeError("step fields must be integers")
                parsed.append(CertificateStep(*vals, tuple(s["removed"])))
            params = BoundParams(ints["n"], ints["delta"], ints["t"], ints["a"], ints["b"])
        except (KeyError, TypeError, DomainError) as exc:
            raise MalformedCertificateError(f"bad certificate: {exc}") from None
        return cls(params, ints["k_t"], ints["bound"], tuple(parsed))

    @classmethod
    def from_json(cls, text: str) -> Certificate:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedCertificateError(f"certificate is not valid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise MalformedCertificateError("certificate must be a JSON object")
        return cls.from_dict(doc)


def _check_t(t: int) -> None:
    if t < 3:
        raise DomainError(f"the bound is stated for t >= 3, got t={t}")


def find_witness(g: Graph, t: int) -> int:
    """Vertex with ``|T_v| <= C(deg(v)+1, t)``.

    Among qualifying vertices: smallest slack, then largest degree, then
    smallest index.
    """
    _check_t(t)
    if g.n == 0:
        raise DomainError("the empty graph has no witness vertex")
    best: tuple[int, int, int] | None = None
    for v in range(g.n):
        d = len(g.adj[v])
        slack = binomial(d + 1, t) - count_T(g, v, t)
        if slack >= 0:
            key = (slack, -d, v)
            if best is None or key < best:
                best = key
    if best is None:
        raise NoWitnessError(f"no witness vertex for t={t} in {g!r}")
    return best[2]


def decompose(g: Graph, t: int, delta: int | None = None) -> Certificate:
    _check_t(t)
    max_deg = g.max_degree()
    if delta is None:
        delta = max_deg
    elif delta < max_deg:
        raise ParameterError(f"delta={delta} is below the maximum degree {max_deg}")
    params = BoundParams.of(g.n, delta, t)

    steps = []
    residual, original = g, list(range(g.n))
    while residual.n:
        v = find_witness(residual, t)
        closed = residual.closed_neighborhood(v)
        steps.append(
            CertificateStep(
                vertex=original[v],
                degree=len(closed) - 1,
                t_count=count_T(residual, v, t),
                removed=tuple(sorted(original[u] for u in closed)),
            )
        )
        residual, mapping = residual.remove_closed_neighborhood(v)
        original = [original[old] for old in sorted(mapping, key=mapping.__getitem__)]
    return Certificate(params, count_cliques(g, t), gls_bound(g.n, delta, t), tuple(steps))


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"{c.name}: {'PASS' if c.passed else 'FAIL'} ({c.detail})" for c in self.checks]
        out.append(f"verdict: {'PASS' if self.passed else 'FAIL'}")
        return out


def _replay(g: Graph, cert: Certificate) -> CheckResult:
    t = cert.params.t
    residual, original = g, list(range(g.n))
    for i, step in enumerate(cert.steps):
        position = {o: new for new, o in enumerate(original)}
        v = position.get(step.vertex)
        if v is None:
            return CheckResult("replay", False, f"step {i}: vertex {step.vertex} already removed")
        closed = residual.closed_neighborhood(v)
        degree = len(closed) - 1
        t_count = count_T(residual, v, t)
        removed = tuple(sorted(original[u] for u in closed))
        if (degree, t_count, removed) != (step.degree, step.t_count, tuple(sorted(step.removed))):
            return CheckResult(
                "replay",
                False,
                f"step {i}: recomputed degree={degree} t_count={t_count} removed={list(removed)}, "
                f"recorded degree={step.degree} t_count={step.t_count} removed={list(step.removed)}",
            )
        residual, mapping = residual.remove_closed_neighborhood(v)
        original = [original[old] for old in sorted(mapping, key=mapping.__getitem__)]
    if residual.n:
        return CheckResult("replay", False, f"{residual.n} vertices left after the last step")
    return CheckResult("replay", True, f"{len(cert.steps)} steps reach the empty graph")


def verify_certificate(g: Graph, cert: Certificate) -> VerificationReport:
    """Replay ``cert`` against ``g`` from scratch; recorded counts are not trusted."""
    p = cert.params
    _check_t(p.t)
    for i, step in enumerate(cert.steps):
        if not all(0 <= x < g.n for x in (step.vertex, *step.removed)):
            raise MalformedCertificateError(f"step {i} names a vertex outside [0, {g.n})")
    max_deg = g.max_degree()
    if p.delta < max_deg:
        raise ParameterError(f"certificate delta={p.delta} is below the maximum degree {max_deg}")
    t = p.t
    checks = [_replay(g, cert)]

    bad = [i for i, s in enumerate(cert.steps) if s.t_count > binomial(s.degree + 1, t)]
    checks.append(
        CheckResult(
            "step_inequality",
            not bad,
            "every step has t_count <= C(degree+1, t)" if not bad else f"violated at steps {bad}",
        )
    )

    seen: list[int] = []
    for s in cert.steps:
        seen.extend(s.removed)
    partition = p.n == g.n and sorted(seen) == list(range(g.n))
    checks.append(
        CheckResult(
            "partition",
            partition,
            f"{len(seen)} removed vertices cover [0, {g.n}) exactly once"
            if partition
            else f"removed sets do not partition [0, {g.n}) (certificate n={p.n})",
        )
    )

    k_t = count_cliques(g, t)
    charged = 0
    for s in cert.steps:
        charged = checked_add(charged, s.t_count)
    ok = k_t <= charged and cert.k_t == k_t
    checks.append(
        CheckResult("cliques_charged", ok, f"k_t={k_t} (recorded {cert.k_t}) <= sum t_count={charged}")
    )

    bound = gls_bound(g.n, p.delta, t)
    budget = 0
    for s in cert.steps:
        budget = checked_add(budget, binomial(s.degree + 1, t))
    header_ok = cert.bound == bound and BoundParams.of(g.n, p.delta, t) == p
    checks.append(
        CheckResult(
            "budget_within_bound",
            budget <= bound and header_ok,
            f"sum C(degree+1, t)={budget} <= bound={bound} (recorded {cert.bound}, a={p.a}, b={p.b})",
        )
    )
    return VerificationReport(checks)
