"""Exact arithmetic in GF(p^m) with a polynomial-basis representation.

Elements are encoded as integers ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of ``x**i``; this encoding also fixes the enumeration order used
for the deterministic generator search. Prime fields are the ``m == 1`` case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from sympy import factorint, isprime

DLOG_TABLE_LIMIT = 2**16


class FieldError(ValueError):
    """Base class for invalid field constructions and operations."""


class NotPrime(FieldError):
    pass


class ReduciblePolynomial(FieldError):
    pass


class DegreeMismatch(FieldError):
    pass


class FieldMismatch(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class LogOfZero(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


# -- polynomials over Z_p: coefficient lists, constant term first ----------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fc) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial ``f`` over Z_p."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) == x mod f
    xp = x
    for _ in range(m):
        xp = _poly_powmod(xp, p, f, p)
    if _poly_sub(xp, x, p):
        return False
    for r in factorint(m):
        xp = x
        for _ in range(m // r):
            xp = _poly_powmod(xp, p, f, p)
        g = _poly_gcd(f, _poly_sub(xp, x, p), p)
        if len(g) != 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``m``, lower coefficients read as a base-p integer."""
    for low in range(p**m):
        coeffs = [(low // p**i) % p for i in range(m)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("irreducible polynomials exist for every degree")


# -- fields -----------------------------------------------------------------


class FieldSpec:
    """The finite field GF(p^m) together with a fixed primitive element.

    Immutable after construction. For ``q <= DLOG_TABLE_LIMIT`` exponent and
    logarithm tables are built eagerly and used for multiplication.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int], generator: int | None = None):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if generator is None:
            generator = self._search_generator()
        elif not self._has_full_order(generator):
            raise FieldError(f"element {generator} is not primitive in GF({self.q})")
        self.generator_value = generator
        if self.q <= DLOG_TABLE_LIMIT:
            self._build_tables()

    # construction helpers

    def _has_full_order(self, v: int) -> bool:
        if not 0 < v < self.q:
            return False
        n = self.q - 1
        if self._pow_value(v, n) != 1:
            return False
        return all(self._pow_value(v, n // r) != 1 for r in factorint(n))

    def _search_generator(self) -> int:
        for v in range(1, self.q):
            if self._has_full_order(v):
                return v
        raise AssertionError("F_q^* is cyclic")

    def _build_tables(self) -> None:
        n = self.q - 1
        exp = [0] * n
        log = [-1] * self.q
        v = 1
        for k in range(n):
            exp[k] = v
            log[v] = k
            v = self._poly_mul_value(v, self.generator_value)
        self._exp, self._log = exp, log

    # encoding

    def to_coeffs(self, v: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(v % p)
            v //= p
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p) if self.m > 1 else [coeffs[0] % self.p]
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    # raw arithmetic on encodings

    def _add_value(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _neg_value(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_coeffs([-c for c in self.to_coeffs(a)])

    def _poly_mul_value(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        prod = _poly_mul(self.to_coeffs(a), self.to_coeffs(b), self.p)
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    def _mul_value(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._poly_mul_value(a, b)

    def _pow_value(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise DivisionByZero("0 has no inverse")
            return 1 if k == 0 else 0
        k %= self.q - 1
        if self._exp is not None:
            return self._exp[self._log[a] * k % (self.q - 1)]
        result, base = 1, a
        while k:
            if k & 1:
                result = self._poly_mul_value(result, base)
            base = self._poly_mul_value(base, base)
            k >>= 1
        return result

    def _inv_value(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return self._pow_value(a, self.q - 2)

    # public surface

    def __call__(self, value: int | Sequence[int]) -> FieldElement:
        """Element from an integer encoding or a coefficient vector."""
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise FieldError(f"encoding {value} out of range for GF({self.q})")
            return FieldElement(self, value)
        return FieldElement(self, self.from_coeffs(value))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, self.generator_value)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in ascending encoding order."""
        return (FieldElement(self, v) for v in range(self.q))

    def nonzero(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in range(1, self.q))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "generator": list(self.to_coeffs(self.generator_value)),
        }

    @classmethod
    def from_json(cls, data: dict) -> FieldSpec:
        field = make_field(int(data["p"]), int(data["m"]), data.get("modulus"))
        if data.get("generator") is not None:
            field = FieldSpec(field.p, field.m, field.modulus, field.from_coeffs(data["generator"]))
        return field

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (
            self.p == other.p
            and self.modulus == other.modulus
            and self.generator_value == other.generator_value
        )

    def __hash__(self) -> int:
        return hash((self.p, self.modulus, self.generator_value))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={list(self.modulus)})"


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.to_coeffs(self.value)

    def _check(self, other: object) -> FieldElement:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return other

    def __add__(self, other: FieldElement) -> FieldElement:
        other = self._check(other)
        return FieldElement(self.field, self.field._add_value(self.value, other.value))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field._neg_value(self.value))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-self._check(other))

    def __mul__(self, other: FieldElement) -> FieldElement:
        other = self._check(other)
        return FieldElement(self.field, self.field._mul_value(self.value, other.value))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * self._check(other).inv()

    def __pow__(self, k: int) -> FieldElement:
        return FieldElement(self.field, self.field._pow_value(self.value, k))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv_value(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        if self.field.m == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return "+".join(reversed(terms)) or "0"

    def __repr__(self) -> str:
        return f"FieldElement({self}, GF({self.field.q}))"


# -- operations ---------------------------------------------------------------


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated GF(p^m); without a modulus the smallest irreducible is chosen."""
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
    if modulus is None:
        modulus = (0, 1) if m == 1 else smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) - 1 != m:
            raise DegreeMismatch(f"modulus has degree {len(modulus) - 1}, expected {m}")
        if modulus[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        if not is_irreducible(modulus, p):
            raise ReduciblePolynomial(f"{list(modulus)} is reducible over Z_{p}")
    return FieldSpec(p, m, modulus)


def field_of_order(q: int) -> FieldSpec:
    factors = factorint(q)
    if q < 2 or len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    (p, m), = factors.items()
    return make_field(p, m)


def prime_powers(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if len(factorint(q)) == 1]


def find_generator(field: FieldSpec) -> FieldElement:
    """First element in ascending encoding order with multiplicative order q - 1."""
    return FieldElement(field, field._search_generator())


def discrete_log(field: FieldSpec, x: FieldElement) -> int:
    if x.field != field:
        raise FieldMismatch(f"{x.field!r} vs {field!r}")
    if x.value == 0:
        raise LogOfZero("log of 0 is undefined")
    if field._log is None:
        raise FieldTooLarge(f"q={field.q} exceeds discrete-log table limit {DLOG_TABLE_LIMIT}")
    return field._log[x.value]

