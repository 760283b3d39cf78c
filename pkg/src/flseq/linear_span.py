"""Linear span over a prime field: Berlekamp-Massey and an LFSR generator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy import isprime

from .sequence_family import CharSequence


class NonPrimeModulus(ValueError):
    pass


class SeedLengthMismatch(ValueError):
    pass


class CompositeCharacterOrder(ValueError):
    pass


@dataclass(frozen=True)
class SymbolStream:
    p: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if any(not 0 <= s < self.p for s in self.symbols):
            raise ValueError(f"symbols must lie in [0, {self.p})")

    def __len__(self) -> int:
        return len(self.symbols)


@dataclass(frozen=True)
class LinearSpanResult:
    """s_n = c_1 s_{n-1} + ... + c_L s_{n-L} (mod p) with ``connection = (c_1, ..., c_L)``."""

    span: int
    connection: tuple[int, ...]
    modulus: int

    def regenerate(self, seed: Sequence[int], length: int) -> SymbolStream:
        return lfsr_generate(self.modulus, self.connection, seed, length)

    def to_json(self) -> dict:
        return {"span": self.span, "connection": list(self.connection), "modulus": self.modulus}


def berlekamp_massey(stream: SymbolStream) -> LinearSpanResult:
    p = stream.p
    if not isprime(p):
        raise NonPrimeModulus(f"{p} is not prime")
    s = stream.symbols
    C = [1]  # connection polynomial, C(x) = 1 + C_1 x + ...
    B = [1]
    L, m, b = 0, 1, 1
    for n in range(len(s)):
        delta = s[n]
        for i in range(1, L + 1):
            if i < len(C):
                delta = (delta + C[i] * s[n - i]) % p
        if delta == 0:
            m += 1
            continue
        coef = delta * pow(b, -1, p) % p
        T = list(C)
        if len(C) < len(B) + m:
            C = C + [0] * (len(B) + m - len(C))
        for i, bi in enumerate(B):
            C[i + m] = (C[i + m] - coef * bi) % p
        if 2 * L <= n:
            L = n + 1 - L
            B, b, m = T, delta, 1
        else:
            m += 1
    C = C + [0] * (L + 1 - len(C))
    connection = tuple((-c) % p for c in C[1 : L + 1])
    return LinearSpanResult(L, connection, p)


def lfsr_generate(p: int, connection: Sequence[int], seed: Sequence[int], length: int) -> SymbolStream:
    L = len(connection)
    if len(seed) != L:
        raise SeedLengthMismatch(f"seed has {len(seed)} symbols, connection has {L}")
    if length < L:
        raise ValueError("length shorter than the seed")
    out = [x % p for x in seed]
    for n in range(L, length):
        out.append(sum(c * out[n - i] for i, c in enumerate(connection, 1)) % p)
    return SymbolStream(p, tuple(out))


def linear_span(symbols: Sequence[int], p: int) -> int:
    return berlekamp_massey(SymbolStream(p, tuple(symbols))).span


def to_symbol_stream(seq: CharSequence, periods: int = 1) -> SymbolStream:
    """Root-of-unity exponents reduced into Z_d for the character order d.

    An entry exp(2 pi i e/(q-1)) is a d-th root of unity zeta_d^k with
    k = e d/(q-1); that k is the symbol. The trivial character gives the
    all-zero stream over Z_2.
    """
    if periods < 1:
        raise ValueError("periods must be >= 1")
    d = seq.chi.order
    n = seq.denominator
    if d == 1:
        return SymbolStream(2, (0,) * (len(seq) * periods))
    if not isprime(d):
        raise CompositeCharacterOrder(
            f"character order {d} is composite; linear span is only defined here over a prime field Z_d"
        )
    syms = tuple(e * d // n % d for e in seq.exponents)
    return SymbolStream(d, syms * periods)
