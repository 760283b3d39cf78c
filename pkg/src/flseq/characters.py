"""Multiplicative characters of F_q^*, extended to the projective line.

Values are stored exactly as exponents of the primitive (q-1)-th root of
unity; complex numbers appear only when correlations are summed.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .finite_field import FieldError, FieldSpec, discrete_log
from .projective_group import ProjPoint


class OrderDoesNotDivide(FieldError):
    pass


@dataclass(frozen=True)
class UnitValue:
    """exp(2 pi i * exponent / denominator)."""

    exponent: int
    denominator: int

    def __post_init__(self):
        if not 0 <= self.exponent < self.denominator:
            raise ValueError(f"exponent {self.exponent} outside [0, {self.denominator})")

    def reduced(self) -> Fraction:
        """The turn fraction in lowest terms, e.g. 1/2 for -1."""
        return Fraction(self.exponent, self.denominator)

    def __complex__(self) -> complex:
        return cmath.exp(2j * math.pi * self.exponent / self.denominator)

    def __mul__(self, other: UnitValue) -> UnitValue:
        if other.denominator != self.denominator:
            raise ValueError("unit values over different roots of unity")
        return UnitValue((self.exponent + other.exponent) % self.denominator, self.denominator)


@dataclass(frozen=True)
class Character:
    """chi(g^k) = zeta^(index * k) with zeta = exp(2 pi i / (q - 1)) and g the field generator."""

    field: FieldSpec
    index: int

    @property
    def modulus(self) -> int:
        return self.field.q - 1

    @property
    def order(self) -> int:
        return self.modulus // math.gcd(self.index, self.modulus)

    @property
    def is_trivial(self) -> bool:
        return self.index % self.modulus == 0

    def __call__(self, pt: ProjPoint) -> UnitValue:
        return eval_char(self, pt)

    def to_json(self) -> dict:
        return {"index": self.index, "order": self.order}


def make_character(field: FieldSpec, *, index: int | None = None, order: int | None = None) -> Character:
    """Character by index, or the canonical one of a given order (index (q-1)/order)."""
    n = field.q - 1
    if (index is None) == (order is None):
        raise ValueError("give exactly one of index or order")
    if order is not None:
        if order < 1 or n % order:
            raise OrderDoesNotDivide(f"order {order} does not divide q-1={n}")
        index = n // order
    return Character(field, index % n)


def eval_char(chi: Character, pt: ProjPoint) -> UnitValue:
    """chi at a projective point; chi(0) = chi(inf) = 1 by convention."""
    n = chi.modulus
    if pt.x is None or not pt.x:
        return UnitValue(0, n)
    return UnitValue(chi.index * discrete_log(chi.field, pt.x) % n, n)


def all_characters(field: FieldSpec) -> list[Character]:
    return [Character(field, k) for k in range(field.q - 1)]
