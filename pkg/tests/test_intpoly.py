"""
Tests de l'arithmétique exacte sur ℤ[x]
"""
import pytest
from sympy import Poly, resultant, symbols

from conftest import irreducible_grid
from tools.errors import CoefficientBlowup
from tools.intpoly import (
    Dyadic,
    MonicIntPoly,
    QuadParams,
    compose,
    discriminant,
    eval_dyadic,
    int_valuation,
    iterate,
    shift,
    zz_divmod_monic,
    zz_resultant,
)

X = symbols('x')


def _sympy(dense):
    return Poly(list(reversed(dense)), X)


def test_compose_x2_minus_2(x2m2):
    assert str(compose(x2m2.poly, x2m2.poly)) == "x^4 - 4x^2 + 2"


# x^32 … x^0 de f⁵, termes impairs nuls
F5_EVEN_COEFFS = [1, -32, 464, -4032, 23400, -95680, 283360, -615296, 980628,
                  -1136960, 940576, -537472, 201552, -45696, 5440, -256, 2]


def test_iterates_of_x2_minus_2(x2m2):
    assert iterate(x2m2, 3).dense() == [2, 0, -16, 0, 20, 0, -8, 0, 1]
    assert iterate(x2m2, 4).dense() == [2, 0, -64, 0, 336, 0, -672, 0, 660, 0, -352, 0, 104, 0, -16, 0, 1]
    f5 = iterate(x2m2, 5).dense()
    assert len(f5) == 33
    assert f5[::-2] == F5_EVEN_COEFFS
    assert f5[1::2] == [0] * 16


def test_iterates_match_sympy_composition():
    for b, c in [(0, -2), (1, 1), (-3, 7)]:
        base = Poly(X**2 + b * X + c, X)
        expected = base
        for n in range(1, 6):
            assert iterate(QuadParams(b, c), n).dense() == [int(a) for a in reversed(expected.all_coeffs())]
            expected = base.compose(expected)


def test_iterate_zero_is_identity(x2m2):
    assert iterate(x2m2, 0) == MonicIntPoly.identity()
    assert iterate(x2m2, 1) == x2m2.poly


def test_iterate_matches_repeated_composition():
    q = QuadParams(3, -5)
    f3 = compose(q.poly, compose(q.poly, q.poly))
    assert iterate(q, 3) == f3


def test_iterate_coefficient_blowup(x2m2):
    with pytest.raises(CoefficientBlowup) as err:
        iterate(x2m2, 5, max_bits=4)
    assert err.value.max_bits == 4


def test_shift():
    assert shift(MonicIntPoly((0, 0)), 1).dense() == [1, 2, 1]


def test_divmod_monic():
    q, r = zz_divmod_monic([3, 0, 1], [1, 1])
    assert q == [-1, 1]
    assert r == [4]


def test_resultant_small():
    assert zz_resultant([1, 0, 1], [-1, 1]) == 2
    assert zz_resultant([-1, 1], [1, 0, 1]) == 2


@pytest.mark.parametrize("a, b", [
    ([2, -3, 0, 1], [5, 1, 1]),
    ([1, 1, 0, 0, 1], [-7, 0, 3]),
    ([4, 0, 6, 2, 1], [9, -3, 0, 1]),
    ([0, 1, 1], [0, 2, 0, 1]),
])
def test_resultant_matches_sympy(a, b):
    assert zz_resultant(a, b) == int(resultant(_sympy(a), _sympy(b)))


def test_quadratic_discriminant(x2m2):
    assert discriminant(x2m2.poly) == 8 == x2m2.disc
    for q in irreducible_grid(4):
        assert discriminant(q.poly) == q.b * q.b - 4 * q.c


@pytest.mark.parametrize("b, c", [(0, -2), (-1, 2), (1, 1), (2, 3), (-3, 7)])
def test_iterate_discriminant_matches_sympy(b, c):
    for n in (2, 3):
        fn = iterate(QuadParams(b, c), n)
        assert discriminant(fn) == int(_sympy(fn.dense()).discriminant())


def test_dyadic_canonical_form():
    assert Dyadic(4, 3) == Dyadic(1, 1)
    assert Dyadic(6, 1) == Dyadic(3)
    assert Dyadic(0, 5) == Dyadic(0)
    assert str(Dyadic(7, 2)) == "7/4"
    assert Dyadic(-12).odd_part() == -3


def test_critical_value_is_minus_quarter_discriminant():
    q = QuadParams(1, 1)
    assert q.apply(q.critical_point) == Dyadic(3, 2)
    assert eval_dyadic(q.poly, q.critical_point) == Dyadic(3, 2)
    for q in irreducible_grid(5):
        assert q.apply(q.critical_point) == Dyadic(-q.disc, 2)


def test_valuations():
    assert int_valuation(24, 2) == 3
    assert int_valuation(0, 5) is None


def test_reducibility():
    assert QuadParams(0, -4).is_reducible()
    assert not QuadParams(0, 4).is_reducible()
    assert QuadParams(2, 1).is_reducible()
