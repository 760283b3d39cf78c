import itertools
import random

import pytest

from flseq.finite_field import FieldError, FieldMismatch, FieldTooLarge, field_of_order, make_field, prime_powers
from flseq.projective_group import (
    MoebiusMap,
    ProjPoint,
    all_points,
    apply,
    compose,
    element_order,
    enumerate_group,
    find_psi,
    fixed_points,
    orbit,
    power,
)

INF = "inf"


def pt(F, v):
    return ProjPoint.infinity(F) if v == INF else ProjPoint.finite(F(v))


def mod_p_moebius(a, b, c, d, p, z):
    """Independent evaluation over a prime field with plain integers."""
    if z == INF:
        return INF if c % p == 0 else a * pow(c, -1, p) % p
    den = (c * z + d) % p
    if den == 0:
        return INF
    return (a * z + b) * pow(den, -1, p) % p


@pytest.fixture
def f3():
    return make_field(3)


def test_apply_examples(f3):
    psi = MoebiusMap.make(f3, 1, 1, 2, 1)
    assert apply(psi, pt(f3, 1)) == pt(f3, INF)
    assert apply(psi, pt(f3, INF)) == pt(f3, 2)
    ident = MoebiusMap.identity(f3)
    for x in all_points(f3):
        assert apply(ident, x) == x


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_apply_matches_integer_oracle(p):
    F = make_field(p)
    rng = random.Random(p)
    for _ in range(50):
        while True:
            a, b, c, d = (rng.randrange(p) for _ in range(4))
            if (a * d - b * c) % p:
                break
        f = MoebiusMap.make(F, a, b, c, d)
        for z in list(range(p)) + [INF]:
            assert apply(f, pt(F, z)) == pt(F, mod_p_moebius(a, b, c, d, p, z))


def test_canonical_form():
    F = make_field(5)
    f = MoebiusMap.make(F, 2, 1, 0, 1)
    assert f == MoebiusMap.make(F, 1, 3, 0, 3)
    assert f == MoebiusMap.make(F, 4, 2, 0, 2)
    g = MoebiusMap.make(F, 0, 3, 2, 1)
    assert g.b == F.one and g.a == F.zero


def test_singular_rejected(f3):
    with pytest.raises(FieldError):
        MoebiusMap.make(f3, 1, 2, 2, 1)  # 1 - 4 = -3 = 0


def test_compose_examples():
    F = make_field(5)
    t = MoebiusMap.make(F, 1, 1, 0, 1)
    s = MoebiusMap.make(F, 2, 0, 0, 1)
    h = compose(t, s)
    assert (h.a.value, h.b.value, h.c.value, h.d.value) == (1, 3, 0, 3)
    ident = MoebiusMap.identity(F)
    assert compose(t, ident) == t
    f = MoebiusMap.make(F, 2, 3, 1, 1)
    assert compose(f, f.inverse()) == ident
    assert compose(f.inverse(), f) == ident


def test_compose_mismatch():
    with pytest.raises(FieldMismatch):
        compose(MoebiusMap.identity(make_field(3)), MoebiusMap.identity(make_field(5)))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9])
def test_apply_respects_composition(q):
    F = field_of_order(q)
    G = enumerate_group(F)
    rng = random.Random(q)
    pts = all_points(F)
    for _ in range(1000):
        f, g, x = rng.choice(G), rng.choice(G), rng.choice(pts)
        assert apply(compose(f, g), x) == apply(f, apply(g, x))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_group_axioms_exhaustive(q):
    F = field_of_order(q)
    G = enumerate_group(F)
    Gs = set(G)
    ident = MoebiusMap.identity(F)
    for f in G:
        assert compose(f, ident) == f == compose(ident, f)
        assert compose(f, f.inverse()) == ident
        assert f.inverse() in Gs
    triples = itertools.product(G[:12], G[-12:], G[::7])
    for f, g, h in triples:
        assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_canonical_maps_act_distinctly():
    # distinct canonical maps must be distinct permutations of P^1
    for q in (3, 4, 5):
        F = field_of_order(q)
        pts = all_points(F)
        perms = {tuple(apply(f, x) for x in pts) for f in enumerate_group(F)}
        assert len(perms) == q * (q * q - 1)


def test_fixed_points_examples(f3):
    assert fixed_points(MoebiusMap.identity(f3)) == set(all_points(f3))
    assert fixed_points(MoebiusMap.make(f3, 1, 1, 2, 1)) == set()
    assert fixed_points(MoebiusMap.make(f3, 1, 1, 0, 1)) == {pt(f3, INF)}


def test_fixed_points_match_quadratic():
    # finite fixed points are roots of c z^2 + (d - a) z - b; inf is fixed iff c = 0
    F = make_field(7)
    for f in enumerate_group(F)[::13]:
        a, b, c, d = (v.value for v in f.entries)
        roots = {z for z in range(7) if (c * z * z + (d - a) * z - b) % 7 == 0}
        if c == 0 and (d - a) % 7 == 0 and b % 7 == 0:
            roots = set(range(7))
        expect = {pt(F, z) for z in roots} | ({pt(F, INF)} if c == 0 else set())
        assert fixed_points(f) == expect


def test_element_order_examples(f3):
    assert element_order(MoebiusMap.identity(f3)) == 1
    assert element_order(MoebiusMap.make(f3, 1, 1, 2, 1)) == 4
    assert element_order(MoebiusMap.make(f3, 0, 2, 1, 0)) == 2


@pytest.mark.parametrize("q", [3, 4, 5])
def test_element_order_divides_group_order(q):
    F = field_of_order(q)
    n = q * (q * q - 1)
    for f in enumerate_group(F):
        k = element_order(f)
        assert n % k == 0
        assert power(f, k) == MoebiusMap.identity(F)


@pytest.mark.parametrize("q,size", [(2, 6), (3, 24), (4, 60), (5, 120)])
def test_enumerate_group_size(q, size):
    G = enumerate_group(field_of_order(q))
    assert len(G) == size
    assert len(set(G)) == size


def test_enumerate_guard():
    with pytest.raises(FieldTooLarge):
        enumerate_group(field_of_order(67))


def test_find_psi_q2():
    F = make_field(2)
    psi = find_psi(F)
    assert [v.value for v in psi.entries] == [0, 1, 1, 1]
    assert orbit(psi, pt(F, 1)) == [pt(F, 1), pt(F, INF), pt(F, 0)]


def test_find_psi_q3():
    F = make_field(3)
    psi = find_psi(F)
    assert len(orbit(psi, pt(F, 1))) == 4


@pytest.mark.parametrize("q", prime_powers(32))
def test_psi_properties(q):
    F = field_of_order(q)
    psi = find_psi(F)
    pts = orbit(psi, pt(F, 1))
    assert len(pts) == q + 1 and set(pts) == set(all_points(F))
    assert fixed_points(psi) == set()
    assert element_order(psi) == q + 1
    assert power(psi, q + 1) == MoebiusMap.identity(F)


def test_orbit_examples(f3):
    psi = MoebiusMap.make(f3, 1, 1, 2, 1)
    assert orbit(psi, pt(f3, 1)) == [pt(f3, 1), pt(f3, INF), pt(f3, 2), pt(f3, 0)]
    translate = MoebiusMap.make(f3, 1, 1, 0, 1)
    assert orbit(translate, pt(f3, INF)) == [pt(f3, INF)]


def test_json_roundtrip():
    F = field_of_order(9)
    f = MoebiusMap.make(F, 3, 1, 1, 5)
    assert MoebiusMap.from_json(F, f.to_json()) == f
    assert ProjPoint.from_json(F, "inf").is_infinity
