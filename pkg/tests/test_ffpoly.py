"""
Tests des polynômes sur GF(p), GF(2) et des corps résiduels
"""
import random
from functools import reduce

import pytest
from sympy import Poly, symbols

from tools.errors import DegreeCapExceeded, DivisionByZero
from tools.ffpoly import (
    F,
    G,
    FqElem,
    GF2Poly,
    GFpPoly,
    factor,
    fq_arith,
    fqx_factor_degrees,
    fqx_is_separable,
    gf2_compose,
    gf2_factor_bits,
    gf2_iterate,
    gf2_mul,
    gf2_sqr,
    gf2_sqrt,
    gf_ddf,
    gf_degree,
    gf_is_irreducible,
    gf_sqf_list,
    is_irreducible,
)

X = symbols('x')

FACTOR_PRIMES = [2, 3, 5, 7, 13]
SAMPLE_SIZE = 1000
MAX_DEGREE = 64


def _random_poly(rng: random.Random, p: int, max_degree: int) -> GFpPoly:
    deg = rng.randrange(1, max_degree + 1)
    return GFpPoly(p, tuple([rng.randrange(p) for _ in range(deg)] + [1]))


def _shape(factors):
    return sorted((g.degree, e) for g, e in factors)


def _sympy_shape(coeffs, p):
    _, parts = Poly(list(reversed(coeffs)), X, modulus=p).factor_list()
    return sorted((g.degree(), e) for g, e in parts)


def _check_factorization(g: GFpPoly):
    factors = factor(g, random.Random(0))
    product = reduce(lambda acc, ge: acc * ge[0] ** ge[1], factors, GFpPoly(g.p, (1,)))
    assert product == g, g
    assert all(is_irreducible(f) for f, _ in factors), g
    assert _shape(factors) == _sympy_shape(g.coeffs, g.p), g


@pytest.mark.parametrize("p", FACTOR_PRIMES)
def test_factor_matches_sympy(p):
    rng = random.Random(p)
    for _ in range(15):
        _check_factorization(_random_poly(rng, p, 11))


@pytest.mark.slow
@pytest.mark.parametrize("p", FACTOR_PRIMES)
def test_factor_matches_sympy_full_sample(p):
    rng = random.Random(1000 + p)
    for _ in range(SAMPLE_SIZE // len(FACTOR_PRIMES)):
        _check_factorization(_random_poly(rng, p, MAX_DEGREE))


@pytest.mark.parametrize("p", [2, 3, 11])
def test_factor_reconstructs_input(p):
    rng = random.Random(100 + p)
    for _ in range(10):
        coeffs = [rng.randrange(p) for _ in range(9)] + [1]
        g = GFpPoly(p, tuple(coeffs))
        factors = factor(g)
        product = reduce(lambda acc, ge: acc * ge[0] ** ge[1], factors, GFpPoly(p, (1,)))
        assert product == g
        assert all(f.monic() == f and is_irreducible(f) for f, _ in factors)


def test_factor_with_repeated_roots():
    # x^4 + x^2 = x^2 (x + 1)^2
    factors = factor(GFpPoly(2, (0, 0, 1, 0, 1)))
    assert [(str(g), e) for g, e in factors] == [("x", 2), ("x + 1", 2)]
    # (x + 1)^3 (x^2 + 1) sur GF(3)
    g = GFpPoly(3, (1, 1)) ** 3 * GFpPoly(3, (1, 0, 1))
    assert _shape(factor(g)) == [(1, 3), (2, 1)]


def test_factor_is_deterministic():
    g = GFpPoly(7, (3, 1, 4, 1, 5, 0, 2, 6, 1))
    assert factor(g, random.Random(1)) == factor(g, random.Random(99))


def test_irreducibility():
    assert is_irreducible(GFpPoly(2, (1, 1, 0, 0, 1)))
    assert not is_irreducible(GFpPoly(2, (1, 0, 0, 0, 1)))
    assert is_irreducible(GFpPoly(3, (1, 0, 1)))
    assert not is_irreducible(GFpPoly(5, (1, 0, 1)))


def test_gf2_square_and_root():
    for a in (0b1, 0b1011, 0b110101, 0b10000001):
        assert gf2_sqr(a) == gf2_mul(a, a)
        assert gf2_sqrt(gf2_sqr(a)) == a


def _naive_compose(P: int, Q: int) -> int:
    acc = 0
    for i in range(P.bit_length() - 1, -1, -1):
        acc = gf2_mul(acc, Q) ^ ((P >> i) & 1)
    return acc


def test_gf2_compose_matches_horner():
    for P, Q in [(0b111, 0b110), (0b1011, 0b111), (0b110101, 0b10011), (0b1, 0b101)]:
        assert gf2_compose(P, Q) == _naive_compose(P, Q)


def test_gf2_iterate_small_levels():
    assert gf2_iterate(G, 2) == G * F == GF2Poly(0b10010)
    assert gf2_iterate(F, 2) == GF2Poly(0b10011)
    assert str(gf2_iterate(F, 2)) == "x^4 + x + 1"


def test_gf2_iterate_degree_cap():
    with pytest.raises(DegreeCapExceeded):
        gf2_iterate(F, 5, cap=16)


def test_gf2_factor_of_third_iterate():
    factors = gf2_factor_bits(gf2_iterate(F, 3).bits)
    assert [e for _, e in factors] == [1, 1]
    assert {GF2Poly(b).degree for b, _ in factors} == {4}


def _generic_shape(g: GFpPoly):
    """(degré, exposant) par sans-carré puis degrés distincts, sans scission"""
    _, parts = gf_sqf_list(g.coeffs, g.p)
    shape = []
    for part, e in parts:
        for block, d in gf_ddf(part, g.p):
            shape += [(d, e)] * (gf_degree(block) // d)
    return sorted(shape)


def _check_gf2_against_generic(g: GFpPoly):
    packed = gf2_factor_bits(g.to_gf2().bits)
    assert sorted((GF2Poly(b).degree, e) for b, e in packed) == _generic_shape(g), g
    assert all(gf_is_irreducible(GF2Poly(b).to_gfp().coeffs, 2) for b, _ in packed), g


def test_gf2_and_generic_paths_agree():
    g = GFpPoly(2, (1, 1, 0, 1, 1, 0, 0, 1, 1))
    via_bits = [(GF2Poly(b).to_gfp(), e) for b, e in gf2_factor_bits(g.to_gf2().bits)]
    assert via_bits == factor(g)
    rng = random.Random(2)
    for _ in range(20):
        _check_gf2_against_generic(_random_poly(rng, 2, 16))


@pytest.mark.slow
def test_gf2_and_generic_paths_agree_full_sample():
    rng = random.Random(2 * SAMPLE_SIZE)
    for _ in range(SAMPLE_SIZE):
        _check_gf2_against_generic(_random_poly(rng, 2, MAX_DEGREE))


def test_gf2_arithmetic_matches_generic():
    rng = random.Random(7)
    for _ in range(SAMPLE_SIZE):
        a, b = _random_poly(rng, 2, MAX_DEGREE), _random_poly(rng, 2, MAX_DEGREE)
        A, B = a.to_gf2(), b.to_gf2()
        assert (A * B).to_gfp() == a * b
        assert (A % B).to_gfp() == a % b
        assert A.gcd(B).to_gfp() == a.gcd(b)


def test_residue_field_arithmetic():
    modulus = GFpPoly(2, (1, 1, 1))
    w = FqElem.embed(modulus, GFpPoly.x(2))
    one = FqElem.embed(modulus, 1)
    assert w * w * w == one
    assert w * w.inverse() == one
    assert fq_arith(w, w, '/') == one
    assert fq_arith(w, one, '+') == w * w
    assert w.order == 4


def test_residue_field_zero_inverse():
    modulus = GFpPoly(5, (2, 0, 1))
    with pytest.raises(DivisionByZero):
        FqElem.embed(modulus, 0).inverse()


def test_residual_polynomial_helpers():
    gf2 = GFpPoly(2, (0, 1))
    gf4 = GFpPoly(2, (1, 1, 1))
    y2_y_1 = lambda m: [FqElem.embed(m, 1)] * 3
    assert fqx_factor_degrees(y2_y_1(gf2), gf2) == [2]
    assert fqx_factor_degrees(y2_y_1(gf4), gf4) == [1, 1]
    gf3 = GFpPoly(3, (0, 1))
    one, two = FqElem.embed(gf3, 1), FqElem.embed(gf3, 2)
    assert fqx_is_separable([one, FqElem.embed(gf3, 0), one], gf3)
    assert not fqx_is_separable([one, two, one], gf3)
