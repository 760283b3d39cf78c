"""The projective line P^1(F_q) and the group of fractional linear maps on it."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .finite_field import FieldElement, FieldError, FieldMismatch, FieldSpec, FieldTooLarge

ENUMERATE_LIMIT = 64


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^1(F_q): a finite field element, or infinity when ``x`` is None."""

    field: FieldSpec
    x: FieldElement | None = None

    @classmethod
    def finite(cls, x: FieldElement) -> ProjPoint:
        return cls(x.field, x)

    @classmethod
    def infinity(cls, field: FieldSpec) -> ProjPoint:
        return cls(field, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def to_json(self):
        return "inf" if self.x is None else list(self.x.coeffs)

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> ProjPoint:
        if data == "inf" or data is None:
            return cls.infinity(field)
        return cls.finite(field(data))

    def __str__(self) -> str:
        return "inf" if self.x is None else str(self.x)


def all_points(field: FieldSpec) -> list[ProjPoint]:
    return [ProjPoint.finite(x) for x in field.elements()] + [ProjPoint.infinity(field)]


@dataclass(frozen=True)
class MoebiusMap:
    """z -> (a z + b) / (c z + d), kept in canonical form.

    Canonical form scales (a, b, c, d) so the first nonzero entry is 1; two
    maps are equal exactly when they act identically on P^1.
    Build instances with :meth:`make`.
    """

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    @classmethod
    def make(cls, field: FieldSpec, a, b, c, d) -> MoebiusMap:
        """Accepts field elements, integer encodings or coefficient vectors."""
        ents = [v if isinstance(v, FieldElement) else field(v) for v in (a, b, c, d)]
        for v in ents:
            if v.field != field:
                raise FieldMismatch(f"{v.field!r} vs {field!r}")
        a, b, c, d = ents
        if not (a * d - b * c):
            raise FieldError("singular map: ad - bc = 0")
        lead = next(v for v in ents if v)
        s = lead.inv()
        return cls(a * s, b * s, c * s, d * s)

    @classmethod
    def identity(cls, field: FieldSpec) -> MoebiusMap:
        return cls(field.one, field.zero, field.zero, field.one)

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    @property
    def entries(self) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
        return (self.a, self.b, self.c, self.d)

    def __call__(self, pt: ProjPoint) -> ProjPoint:
        return apply(self, pt)

    def inverse(self) -> MoebiusMap:
        return MoebiusMap.make(self.field, self.d, -self.b, -self.c, self.a)

    def to_json(self) -> list[list[int]]:
        return [list(v.coeffs) for v in self.entries]

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> MoebiusMap:
        if len(data) != 4:
            raise FieldError("a map needs exactly four coefficients")
        return cls.make(field, *(field(v) for v in data))

    def __str__(self) -> str:
        return "({})".format(",".join(str(v) for v in self.entries))


def apply(f: MoebiusMap, pt: ProjPoint) -> ProjPoint:
    if pt.field != f.field:
        raise FieldMismatch(f"{pt.field!r} vs {f.field!r}")
    field = f.field
    if pt.x is None:
        return ProjPoint.infinity(field) if not f.c else ProjPoint(field, f.a / f.c)
    z = pt.x
    den = f.c * z + f.d
    if not den:
        return ProjPoint.infinity(field)
    return ProjPoint(field, (f.a * z + f.b) / den)


def compose(f: MoebiusMap, g: MoebiusMap) -> MoebiusMap:
    """The map x -> f(g(x)), from the 2x2 matrix product f @ g."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field!r} vs {g.field!r}")
    return MoebiusMap.make(
        f.field,
        f.a * g.a + f.b * g.c,
        f.a * g.b + f.b * g.d,
        f.c * g.a + f.d * g.c,
        f.c * g.b + f.d * g.d,
    )


def power(f: MoebiusMap, k: int) -> MoebiusMap:
    if k < 0:
        return power(f.inverse(), -k)
    result = MoebiusMap.identity(f.field)
    base = f
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def fixed_points(f: MoebiusMap) -> set[ProjPoint]:
    return {pt for pt in all_points(f.field) if apply(f, pt) == pt}


def element_order(f: MoebiusMap) -> int:
    ident = MoebiusMap.identity(f.field)
    g, k = f, 1
    while g != ident:
        g = compose(g, f)
        k += 1
    return k


def enumerate_group(field: FieldSpec) -> list[MoebiusMap]:
    """Every element of FL(F_q), each once; q(q^2 - 1) maps."""
    if field.q > ENUMERATE_LIMIT:
        raise FieldTooLarge(f"q={field.q} exceeds enumeration limit {ENUMERATE_LIMIT}")
    return list(_canonical_maps(field))


def _canonical_maps(field: FieldSpec) -> Iterator[MoebiusMap]:
    # Direct generation of canonical representatives: the leading nonzero entry
    # of (a, b, c, d) is 1. Ordered by the position of the leader, then by the
    # encodings of the remaining entries.
    zero, one = field.zero, field.one
    elems = list(field.elements())
    # leader a: (1, b, c, d) with d - bc != 0
    for b, c, d in itertools.product(elems, repeat=3):
        if d - b * c:
            yield MoebiusMap(one, b, c, d)
    # leader b: (0, 1, c, d) with c != 0
    for c, d in itertools.product(elems, repeat=2):
        if c:
            yield MoebiusMap(zero, one, c, d)
    # a = b = 0 is always singular, so c and d cannot lead.


def find_psi(field: FieldSpec) -> MoebiusMap:
    """First (a z + b)/(z + d) whose orbit through 1 covers all q + 1 points.

    Candidates are scanned with a outermost, then b, then d, each in ascending
    encoding order. A single (q+1)-cycle on a (q+1)-point set means the map has
    order q + 1 and no fixed point.
    """
    one = field.one
    start = ProjPoint.finite(one)
    n = field.q + 1
    elems = list(field.elements())
    for a, b, d in itertools.product(elems, repeat=3):
        if not (a * d - b):
            continue
        f = MoebiusMap.make(field, a, b, one, d)
        if _orbit_length(f, start, n) == n:
            return f
    raise NotFound(f"no fixed-point-free element of order {n} in FL(F_{field.q})")


def _orbit_length(f: MoebiusMap, start: ProjPoint, limit: int) -> int:
    pt, k = apply(f, start), 1
    while pt != start and k <= limit:
        pt = apply(f, pt)
        k += 1
    return k


def orbit(psi: MoebiusMap, start: ProjPoint) -> list[ProjPoint]:
    """[start, psi(start), psi^2(start), ...] up to the first return to ``start``."""
    out = [start]
    pt = apply(psi, start)
    while pt != start:
        out.append(pt)
        pt = apply(psi, pt)
    return out
