"""Checked 64-bit binomials and the maximum t-clique count for bounded-degree graphs.

For ``n = a(delta+1) + b`` with ``0 <= b <= delta`` the bound is
``a*C(delta+1, t) + C(b, t)``, attained by ``a`` disjoint copies of
``K_{delta+1}`` plus one ``K_b``.
"""

from __future__ import annotations

from dataclasses import dataclass

INT64_MAX = 2**63 - 1


class CountOverflowError(OverflowError):
    """A count left the signed 64-bit range."""


class DomainError(ValueError):
    """Arguments outside the range where the bound is claimed."""


def checked(value: int) -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise CountOverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def checked_add(x: int, y: int) -> int:
    return checked(x + y)


def checked_mul(x: int, y: int) -> int:
    return checked(x * y)


def binomial(m: int, k: int) -> int:
    """``C(m, k)``, zero when ``m < k``.

    Multiplicative formula; each intermediate product is range-checked, so
    the error surfaces at the first step that would overflow a machine word
    even if the final value itself fits.
    """
    if m < 0 or k < 0:
        raise DomainError(f"binomial({m}, {k}) needs nonnegative arguments")
    if k > m:
        return 0
    k = min(k, m - k)
    result = 1
    for i in range(1, k + 1):
        result = checked_mul(result, m - k + i) // i
    return result


def factorial(k: int) -> int:
    result = 1
    for i in range(2, k + 1):
        result = checked_mul(result, i)
    return result


@dataclass(frozen=True)
class BoundParams:
    n: int
    delta: int
    t: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a * (self.delta + 1) + self.b != self.n or not 0 <= self.b <= self.delta:
            raise DomainError(f"inconsistent bound parameters {self}")

    @classmethod
    def of(cls, n: int, delta: int, t: int) -> BoundParams:
        a, b = decompose_n(n, delta)
        return cls(n, delta, t, a, b)


def decompose_n(n: int, delta: int) -> tuple[int, int]:
    if n < 0 or delta < 0:
        raise DomainError(f"n and delta must be nonnegative, got n={n}, delta={delta}")
    return divmod(n, delta + 1)


def gls_bound(n: int, delta: int, t: int) -> int:
    if t < 3:
        raise DomainError(f"the bound is stated for t >= 3, got t={t}")
    a, b = decompose_n(n, delta)
    return checked_add(checked_mul(a, binomial(delta + 1, t)), binomial(b, t))


def convexity_step_check(deg_v: int, delta: int, b: int, t: int) -> bool:
    """Check the inequality that closes the induction step after removing ``N[v]``.

    With ``d = deg_v``: if ``b >= d+1`` then ``C(d+1,t) + C(b-d-1,t) <= C(b,t)``,
    otherwise ``C(d+1,t) + C(b+delta-d,t) <= C(delta+1,t) + C(b,t)``.
    """
    if not (0 <= deg_v <= delta and 0 <= b <= delta and t >= 3):
        raise DomainError(
            f"need 0 <= deg_v <= delta, 0 <= b <= delta, t >= 3; "
            f"got deg_v={deg_v}, delta={delta}, b={b}, t={t}"
        )
    removed = binomial(deg_v + 1, t)
    if b >= deg_v + 1:
        return removed + binomial(b - deg_v - 1, t) <= binomial(b, t)
    return removed + binomial(b + delta - deg_v, t) <= binomial(delta + 1, t) + binomial(b, t)
