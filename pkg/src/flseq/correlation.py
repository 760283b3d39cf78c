"""Periodic auto- and cross-correlation of character sequences.

T_s(a, b) = sum_j a_j * conj(b_{(j+s) mod N}). Sums are formed from exponent
differences, so a sum whose terms are all +1/-1 comes back as an exact int.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .sequence_family import CharSequence, Family

TIE_TOL = 1e-9


class LengthMismatch(ValueError):
    pass


def _unit_sum(diffs: Counter, n: int) -> int | complex:
    """sum over k of count[k] * exp(2 pi i k / n), exact when only +1/-1 occur."""
    if all(2 * k % n == 0 for k in diffs):
        return sum(c if k == 0 else -c for k, c in diffs.items())
    re = im = 0.0
    for k, c in sorted(diffs.items()):
        angle = 2 * math.pi * k / n
        re += c * math.cos(angle)
        im += c * math.sin(angle)
    return complex(re, im)


def cross_correlation(a: CharSequence, b: CharSequence, s: int) -> int | complex:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths {len(a)} and {len(b)} differ")
    if a.denominator != b.denominator:
        raise ValueError("sequences use different roots of unity")
    n = a.denominator
    N = len(a)
    ea, eb = a.exponents, b.exponents
    diffs = Counter((ea[j] - eb[(j + s) % N]) % n for j in range(N))
    return _unit_sum(diffs, n)


def autocorrelation(seq: CharSequence, s: int) -> int | complex:
    return cross_correlation(seq, seq, s)


@dataclass(frozen=True)
class CorrelationReport:
    N: int
    spectrum: tuple
    tmax: float
    argmax_shift: int


def _argmax(values, keys):
    """Largest magnitude, ties within TIE_TOL broken by the smallest key."""
    best = max(values)
    return min(k for v, k in zip(values, keys) if v >= best - TIE_TOL), best


def correlation_spectrum(a: CharSequence, b: CharSequence | None = None) -> list:
    b = a if b is None else b
    return [cross_correlation(a, b, s) for s in range(len(a))]


def auto_report(seq: CharSequence) -> CorrelationReport:
    spec = correlation_spectrum(seq)
    N = len(seq)
    mags = [abs(v) for v in spec[1:]]
    s, best = _argmax(mags, range(1, N))
    return CorrelationReport(N, tuple(spec), float(best), s)


def tmax_auto(seq: CharSequence) -> float:
    """max |T_s| over the nontrivial shifts 1..N-1."""
    if len(seq) < 2:
        raise ValueError("need N >= 2")
    return auto_report(seq).tmax


@dataclass(frozen=True)
class FamilyMax:
    value: float
    i: int
    j: int
    s: int


def family_spectra(fam: Family) -> np.ndarray:
    """Array C[s, i, j] = T_s(member i, member j)."""
    N = fam.N
    if all(seq.is_binary() for seq in fam):
        V = np.array([seq.signs() for seq in fam], dtype=np.int64)
    else:
        V = np.array([seq.complex_values() for seq in fam])
    out = np.empty((N,) + (fam.M, fam.M), dtype=V.dtype)
    for s in range(N):
        out[s] = V @ np.conj(np.roll(V, -s, axis=1)).T
    return out


def tmax_family(fam: Family) -> FamilyMax:
    """max |T_s(a_i, a_j)| over all (i, j, s) except i == j with s == 0."""
    C = np.abs(family_spectra(fam)).astype(float)
    idx = np.arange(fam.M)
    C[0, idx, idx] = -1.0
    best = C.max()
    if best < 0:  # M == 1 and N == 1
        return FamilyMax(0.0, 0, 0, 0)
    s_, i_, j_ = np.nonzero(C >= best - TIE_TOL)
    i, j, s = min(zip(i_.tolist(), j_.tolist(), s_.tolist()))
    return FamilyMax(float(C[s, i, j]), i, j, s)

