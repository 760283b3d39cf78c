"""Lower bounds on family correlation and the antipodal-code size bound."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction


class ZeroDenominator(ZeroDivisionError):
    pass


class OddM(ValueError):
    pass


def welch_bound(N: int, M: int) -> float:
    """N * sqrt((M - 1) / (N M - 1)); zero for a single sequence."""
    if N < 1 or M < 1:
        raise ValueError("N and M must be positive")
    if M == 1:
        return 0.0
    return N * math.sqrt((M - 1) / (N * M - 1))


def odd_factorial(u: int) -> int:
    """1 * 3 * 5 * ... * (2u - 1); 1 for u = 0."""
    return math.prod(range(1, 2 * u, 2))


def sidelnikov_estimate(N: int, u: int, alphabet: str) -> Fraction:
    """Exact lower estimate of T_max^2 when M = N^u.

    binary: N (2u + 1 - 1/(1*3*...*(2u-1))); nonbinary: N (u + 1 - 1/u!).
    """
    if u < 1:
        raise ValueError("u must be >= 1")
    if alphabet == "binary":
        return N * (2 * u + 1 - Fraction(1, odd_factorial(u)))
    if alphabet == "nonbinary":
        return N * (u + 1 - Fraction(1, math.factorial(u)))
    raise ValueError(f"alphabet must be 'binary' or 'nonbinary', got {alphabet!r}")


def simplified_bound(N: int, alphabet: str) -> float:
    """sqrt(2N) for binary, sqrt(N) for nonbinary families with M close to N."""
    if N < 1:
        raise ValueError("N must be positive")
    if alphabet == "binary":
        return math.sqrt(2 * N)
    if alphabet == "nonbinary":
        return math.sqrt(N)
    raise ValueError(f"alphabet must be 'binary' or 'nonbinary', got {alphabet!r}")


@dataclass(frozen=True)
class AntipodalBound:
    value: float
    fraction: Fraction


def antipodal_code_bound(n: int, d: int) -> AntipodalBound:
    """(2n^3 - 2n(n-2d)^2) / (3n - (n-2d)^2 - 2), evaluated exactly."""
    t = (n - 2 * d) ** 2
    den = 3 * n - t - 2
    if den == 0:
        raise ZeroDenominator(f"denominator vanishes for n={n}, d={d}")
    frac = Fraction(2 * n**3 - 2 * n * t, den)
    return AntipodalBound(float(frac), frac)


@dataclass(frozen=True)
class KerdockParams:
    n: int
    d: int
    size: int


def kerdock_params(m: int) -> KerdockParams:
    if m < 2 or m % 2:
        raise OddM(f"Kerdock codes need an even m >= 2, got {m}")
    n = 2**m
    return KerdockParams(n, (n - 2 ** (m // 2)) // 2, n * n)


@dataclass(frozen=True)
class BoundReport:
    N: int
    M: int
    u: float
    u_int: int
    welch: float
    sidelnikov_sq_binary: float
    sidelnikov_sq_nonbinary: float
    simplified_binary: float
    simplified_nonbinary: float

    def to_json(self) -> dict:
        out = asdict(self)
        out["note"] = "sidelnikov and simplified values are family-level lower bounds, meaningful when M is close to N"
        return out


def bound_report(N: int, M: int) -> BoundReport:
    """All bound values for a family of M sequences of length N.

    u = ln M / ln N; the estimates use the nearest integer u >= 1.
    """
    if N < 1 or M < 1:
        raise ValueError("N and M must be positive")
    u = math.log(M) / math.log(N) if N > 1 else 0.0
    u_int = max(1, round(u))
    return BoundReport(
        N=N,
        M=M,
        u=u,
        u_int=u_int,
        welch=welch_bound(N, M),
        sidelnikov_sq_binary=float(sidelnikov_estimate(N, u_int, "binary")),
        sidelnikov_sq_nonbinary=float(sidelnikov_estimate(N, u_int, "nonbinary")),
        simplified_binary=simplified_bound(N, "binary"),
        simplified_nonbinary=simplified_bound(N, "nonbinary"),
    )
