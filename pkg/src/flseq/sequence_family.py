"""Character sequences chi(phi(psi^j(1))) and families of them."""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field as dc_field

import numpy as np

from .characters import Character, UnitValue, eval_char
from .finite_field import FieldError, FieldSpec, FieldTooLarge
from .projective_group import (
    ENUMERATE_LIMIT,
    MoebiusMap,
    ProjPoint,
    apply,
    compose,
    enumerate_group,
    find_psi,
    orbit,
    power,
)


class PsiNotFullCycle(FieldError):
    pass


@dataclass(frozen=True)
class CharSequence:
    """Length q+1 sequence of roots of unity, stored as exponents mod q-1."""

    exponents: tuple[int, ...]
    psi: MoebiusMap
    phi: MoebiusMap
    chi: Character

    @property
    def field(self) -> FieldSpec:
        return self.psi.field

    @property
    def denominator(self) -> int:
        return self.chi.modulus

    @property
    def entries(self) -> list[UnitValue]:
        return [UnitValue(e, self.denominator) for e in self.exponents]

    def __len__(self) -> int:
        return len(self.exponents)

    def complex_values(self) -> np.ndarray:
        e = np.asarray(self.exponents, dtype=float)
        return np.exp(2j * np.pi * e / self.denominator)

    def is_binary(self) -> bool:
        """Every entry is +1 or -1."""
        n = self.denominator
        return all(2 * e % n == 0 for e in self.exponents)

    def signs(self) -> list[int]:
        """+1/-1 integer realization; only valid when :meth:`is_binary`."""
        return [1 if e == 0 else -1 for e in self.exponents]

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "psi": self.psi.to_json(),
            "phi": self.phi.to_json(),
            "chi": self.chi.to_json(),
            "entries": list(self.exponents),
        }


@dataclass(frozen=True)
class Family:
    members: tuple[CharSequence, ...]
    phis: tuple[MoebiusMap, ...] = dc_field(repr=False)

    def __post_init__(self):
        if not self.members:
            raise ValueError("a family needs at least one member")
        if len({len(m) for m in self.members}) != 1:
            raise ValueError("family members differ in length")

    @property
    def N(self) -> int:
        return len(self.members[0])

    @property
    def M(self) -> int:
        return len(self.members)

    @property
    def psi(self) -> MoebiusMap:
        return self.members[0].psi

    @property
    def chi(self) -> Character:
        return self.members[0].chi

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i: int) -> CharSequence:
        return self.members[i]


def psi_orbit(psi: MoebiusMap) -> list[ProjPoint]:
    pts = orbit(psi, ProjPoint.finite(psi.field.one))
    if len(pts) != psi.field.q + 1:
        raise PsiNotFullCycle(f"orbit of 1 under {psi} has length {len(pts)}, not {psi.field.q + 1}")
    return pts


def build_sequence(phi: MoebiusMap, psi: MoebiusMap, chi: Character, *, _orbit=None) -> CharSequence:
    if not (phi.field == psi.field == chi.field):
        raise FieldError("phi, psi and chi must share a field")
    pts = _orbit if _orbit is not None else psi_orbit(psi)
    exps = tuple(eval_char(chi, apply(phi, pt)).exponent for pt in pts)
    return CharSequence(exps, psi, phi, chi)


def cyclic_shift(seq: CharSequence, s: int) -> CharSequence:
    """Left shift: entry j of the result is entry (j + s) mod N of ``seq``."""
    n = len(seq)
    s %= n
    exps = seq.exponents[s:] + seq.exponents[:s]
    # phi o psi^s generates exactly this shift
    phi = compose(seq.phi, power(seq.psi, s))
    return CharSequence(exps, seq.psi, phi, seq.chi)


def build_family(phis, psi: MoebiusMap, chi: Character) -> Family:
    phis = tuple(phis)
    if not phis:
        raise ValueError("phi list is empty")
    pts = psi_orbit(psi)
    return Family(tuple(build_sequence(phi, psi, chi, _orbit=pts) for phi in phis), phis)


def random_map(field: FieldSpec, rng: random.Random) -> MoebiusMap:
    q = field.q
    while True:
        a, b, c, d = (rng.randrange(q) for _ in range(4))
        try:
            return MoebiusMap.make(field, a, b, c, d)
        except FieldError:
            continue


def select_phis(
    field: FieldSpec,
    strategy: str = "coset-distinct",
    *,
    k: int | None = None,
    seed: int = 0,
    psi: MoebiusMap | None = None,
) -> list[MoebiusMap]:
    """Choose the maps that index a family.

    ``all`` returns the whole group, ``sample`` draws ``k`` distinct maps with a
    seeded RNG, ``coset-distinct`` keeps the first map (in enumeration order) of
    each left coset phi<psi>, so no two chosen maps differ by a power of psi.
    """
    if strategy == "all":
        return enumerate_group(field)
    if strategy == "sample":
        if k is None or k < 1:
            raise ValueError("sample strategy needs k >= 1")
        total = field.q * (field.q**2 - 1)
        if k > total:
            raise ValueError(f"cannot sample {k} distinct maps from a group of order {total}")
        rng = random.Random(seed)
        out: list[MoebiusMap] = []
        seen = set()
        while len(out) < k:
            f = random_map(field, rng)
            if f not in seen:
                seen.add(f)
                out.append(f)
        return out
    if strategy == "coset-distinct":
        if field.q > ENUMERATE_LIMIT:
            raise FieldTooLarge(f"q={field.q} exceeds enumeration limit {ENUMERATE_LIMIT}")
        psi = psi or find_psi(field)
        cycle = [MoebiusMap.identity(field)]
        for _ in range(field.q):
            cycle.append(compose(cycle[-1], psi))
        covered = set()
        reps = []
        for phi in enumerate_group(field):
            if phi in covered:
                continue
            reps.append(phi)
            covered.update(compose(phi, g) for g in cycle)
        return reps
    raise ValueError(f"unknown phi strategy {strategy!r}")


def parse_strategy(text: str) -> dict:
    """'all', 'coset-distinct' or 'sample:K[,seed=S]' -> select_phis keyword arguments."""
    text = text.strip()
    if text in ("all", "coset-distinct"):
        return {"strategy": text}
    if text.startswith("sample:"):
        parts = text[len("sample:"):].split(",")
        try:
            out = {"strategy": "sample", "k": int(parts[0])}
            for part in parts[1:]:
                key, _, val = part.partition("=")
                if key.strip() != "seed":
                    raise ValueError(part)
                out["seed"] = int(val)
        except ValueError as exc:
            raise ValueError(f"bad sample strategy {text!r}") from exc
        return out
    raise ValueError(f"unknown phi strategy {text!r}")


def family_to_csv(fam: Family) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for seq in fam:
        writer.writerow(seq.exponents)
    return buf.getvalue()
