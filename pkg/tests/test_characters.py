import itertools
from collections import Counter

import pytest

from flseq.characters import OrderDoesNotDivide, UnitValue, all_characters, eval_char, make_character
from flseq.finite_field import field_of_order, make_field, prime_powers
from flseq.projective_group import ProjPoint


def P(x):
    return ProjPoint.finite(x)


def test_make_character_examples():
    assert make_character(make_field(5), order=2).index == 2
    triv = make_character(make_field(7), index=0)
    assert triv.order == 1 and triv.is_trivial
    assert make_character(field_of_order(4), order=3).index == 1


def test_order_must_divide():
    with pytest.raises(OrderDoesNotDivide):
        make_character(make_field(7), order=4)


def test_quadratic_character_gf5():
    F = make_field(5)
    chi = make_character(F, order=2)
    squares = {x * x % 5 for x in range(1, 5)}
    assert squares == {1, 4}
    for x in range(1, 5):
        e = eval_char(chi, P(F(x))).exponent
        assert e == (0 if x in squares else 2)
    assert eval_char(chi, P(F(4))) == UnitValue(0, 4)
    assert eval_char(chi, P(F(2))) == UnitValue(2, 4)


def test_quadratic_character_gf7():
    F = make_field(7)
    chi = make_character(F, order=2)
    squares = {x * x % 7 for x in range(1, 7)}
    assert squares == {1, 2, 4}
    assert complex(eval_char(chi, P(F(3)))) == pytest.approx(-1)
    for x in range(1, 7):
        assert (eval_char(chi, P(F(x))).exponent == 0) == (x in squares)


def test_zero_and_infinity_map_to_one():
    for q in (3, 4, 5, 9):
        F = field_of_order(q)
        for chi in all_characters(F):
            assert eval_char(chi, P(F.zero)).exponent == 0
            assert eval_char(chi, ProjPoint.infinity(F)).exponent == 0


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_multiplicative(q):
    F = field_of_order(q)
    for chi in all_characters(F):
        for x, y in itertools.product(F.nonzero(), repeat=2):
            assert eval_char(chi, P(x * y)) == eval_char(chi, P(x)) * eval_char(chi, P(y))


@pytest.mark.parametrize("q", prime_powers(64))
def test_orthogonality_exact(q):
    # the exponents of a nontrivial character of order d hit each d-th root of unity equally often
    F = field_of_order(q)
    for chi in all_characters(F)[1:]:
        d, n = chi.order, q - 1
        exps = Counter(eval_char(chi, P(x)).exponent for x in F.nonzero())
        assert set(exps) == {k * n // d for k in range(d)}
        assert set(exps.values()) == {n // d}


@pytest.mark.parametrize("q", [5, 7, 9, 13])
def test_values_are_dth_roots(q):
    F = field_of_order(q)
    for chi in all_characters(F):
        for x in F.nonzero():
            assert chi.order * eval_char(chi, P(x)).exponent % (q - 1) == 0


def test_unit_value():
    v = UnitValue(2, 4)
    assert str(v.reduced()) == "1/2"
    assert abs(complex(v)) == pytest.approx(1)
    with pytest.raises(ValueError):
        UnitValue(4, 4)
