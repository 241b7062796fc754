"""
Tests du moteur d'Ore
"""
import pytest

from conftest import irreducible_grid
from tools.analyzer import critical_orbit
from tools.dedekind import dedekind_p_maximal
from tools.errors import PhiNotIrreducibleModP
from tools.intpoly import MonicIntPoly, QuadParams, iterate
from tools.orenewton import (
    FURTHER_DISSECTION,
    develop,
    ind_phi,
    ore_analyze,
    principal_polygon,
    residual_polynomial,
)

X_PLUS_1 = MonicIntPoly((1,))


def test_development_of_x2_plus_3():
    f = QuadParams(0, 3).poly
    dev = develop(f, X_PLUS_1, 2)
    assert dev.terms == ((4,), (-2,), (1,))
    assert dev.valuations == (2, 1, 0)
    assert dev.reconstruct() == f.dense()


def test_development_reconstructs_iterates(x2m2):
    f = iterate(x2m2, 3)
    phi = MonicIntPoly((1, 1))
    assert develop(f, phi, 2).reconstruct() == f.dense()


@pytest.mark.parametrize("b, c, p", [(1, 7, 3), (3, 5, 5), (-1, 11, 7), (5, 2, 3)])
def test_development_at_half_shift(b, c, p):
    # φ = x + bt, 2t ≡ 1 mod p²
    t = pow(2, -1, p * p)
    f = QuadParams(b, c).poly
    dev = develop(f, MonicIntPoly((b * t,)), p)
    assert dev.terms == ((b * b * t * t - b * b * t + c,), (b - 2 * b * t,), (1,))
    assert dev.reconstruct() == f.dense()


def test_half_shift_witnesses_index():
    dev = develop(QuadParams(1, 7).poly, MonicIntPoly((5,)), 3)
    assert dev.terms == ((27,), (-9,), (1,))
    assert dev.valuations == (3, 2, 0)
    polygon = principal_polygon(dev)
    assert len(polygon.sides) == 1
    assert ind_phi(polygon) == 1
    assert not ore_analyze(QuadParams(1, 7).poly, 3).p_maximal


def test_develop_rejects_reducible_phi():
    with pytest.raises(PhiNotIrreducibleModP):
        develop(QuadParams(0, 3).poly, MonicIntPoly((1, 0)), 2)


def test_collinear_points_form_one_side():
    dev = develop(QuadParams(0, 3).poly, X_PLUS_1, 2)
    polygon = principal_polygon(dev)
    assert len(polygon.sides) == 1
    side = polygon.sides[0]
    assert (side.h, side.e, side.degree, polygon.length) == (1, 1, 2, 2)
    assert ind_phi(polygon) == 1
    residual = residual_polynomial(dev, side)
    assert str(residual) == "y^2 + y + 1"
    assert residual.is_separable()
    assert residual.factor_degrees() == [2]


def test_x2_plus_3_not_2_maximal():
    rep = ore_analyze(QuadParams(0, 3).poly, 2)
    assert rep.index_lower_bound == 1
    assert not rep.p_maximal
    assert rep.exact
    assert rep.shape.entries == ((1, 2, 1),)


def test_eisenstein_is_totally_ramified(x2m2):
    rep = ore_analyze(x2m2.poly, 2)
    assert rep.p_maximal
    assert rep.shape.entries == ((2, 1, 1),)


def test_x2_x_1_at_3_ramifies():
    rep = ore_analyze(QuadParams(1, 1).poly, 3)
    assert rep.p_maximal
    assert rep.shape.entries == ((2, 1, 1),)


def test_inert_prime():
    rep = ore_analyze(QuadParams(1, 1).poly, 2)
    assert rep.p_maximal
    assert rep.shape.entries == ((1, 2, 1),)
    assert rep.factors[0].polygon.sides == ()


def test_shape_total_degree_matches():
    f = iterate(QuadParams(-1, 2), 3)
    rep = ore_analyze(f, 2)
    assert rep.p_maximal
    assert rep.shape.total_degree == f.degree
    assert rep.shape.is_unramified()


def test_inseparable_residual_needs_further_dissection():
    # x² + 4 en 2 : polygone d'un côté de pente −1, résiduel y² + 1 = (y + 1)²
    rep = ore_analyze(QuadParams(0, 4).poly, 2)
    assert not rep.exact
    assert rep.shape is None
    assert rep.reason == FURTHER_DISSECTION


def test_weighted_bound_counts_phi_degree():
    f = QuadParams(0, 12).poly
    rep = ore_analyze(f, 2)
    assert rep.weighted_index_bound == sum(a.phi.degree * a.ind for a in rep.factors)
    assert rep.weighted_index_bound >= rep.index_lower_bound


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ore_agrees_with_dedekind(p):
    for q in irreducible_grid(3):
        for n in (1, 2):
            if any(v.num == 0 for v in critical_orbit(q, n).values):
                continue
            fn = iterate(q, n)
            assert ore_analyze(fn, p).p_maximal == dedekind_p_maximal(fn, p).p_maximal, (q, n, p)
