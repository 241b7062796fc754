"""
Moteur d'Ore au premier niveau sur ℚ

Développement φ-adique, polygone principal, polynômes résiduels, indice
ind_φ, formule de l'indice et dissection en trois étapes lorsque tous les
polynômes résiduels sont séparables.
"""
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from tools.errors import PhiNotIrreducibleModP
from tools.ffpoly import (
    FqElem,
    GFpPoly,
    factor,
    fqx_factor_degrees,
    fqx_is_separable,
    is_irreducible,
)
from tools.intpoly import MonicIntPoly, poly_valuation, zz_add, zz_divmod_monic, zz_mul, zz_trim
from tools.shape import SplittingShape

logger = logging.getLogger(__name__)

FURTHER_DISSECTION = "requires further dissection"

Point = Tuple[int, int]


@dataclass(frozen=True)
class PhiDevelopment:
    """f = Σ aᵢ(x)·φ(x)^i ; valuations[i] vaut None pour aᵢ = 0"""
    phi: MonicIntPoly
    p: int
    terms: Tuple[Tuple[int, ...], ...]
    valuations: Tuple[Optional[int], ...]

    def reconstruct(self) -> List[int]:
        """Réexpansion Σ aᵢ·φ^i par Horner"""
        phi = self.phi.dense()
        acc: List[int] = []
        for a in reversed(self.terms):
            acc = zz_add(zz_mul(acc, phi), list(a))
        return acc


@dataclass(frozen=True)
class PolygonSide:
    """Côté de pente −h/e, de longueur l = k − s et de degré d = l/e"""
    start: Point
    end: Point
    h: int
    e: int

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def degree(self) -> int:
        return self.length // self.e

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.h, self.e)

    def height_at(self, i: int) -> Fraction:
        return self.start[1] - Fraction(self.h * (i - self.start[0]), self.e)


@dataclass(frozen=True)
class NewtonPolygon:
    points: Tuple[Point, ...]
    sides: Tuple[PolygonSide, ...]

    @property
    def length(self) -> int:
        """Abscisse terminale moins abscisse initiale"""
        if not self.sides:
            return 0
        return self.sides[-1].end[0] - self.sides[0].start[0]


@dataclass(frozen=True)
class ResidualPoly:
    side: PolygonSide
    coeffs: Tuple[FqElem, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_separable(self) -> bool:
        return fqx_is_separable(self.coeffs, self.coeffs[0].modulus)

    def factor_degrees(self) -> List[int]:
        return fqx_factor_degrees(self.coeffs, self.coeffs[0].modulus)

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            coef = str(c)
            mono = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            if not mono:
                terms.append(coef)
            elif coef == "1":
                terms.append(mono)
            else:
                terms.append(f"({coef}){mono}")
        return " + ".join(reversed(terms)) if terms else "0"


@dataclass(frozen=True)
class PhiAnalysis:
    """Données d'Ore attachées à un facteur irréductible φ̄ de f̄"""
    phi: MonicIntPoly
    exponent: int
    development: PhiDevelopment
    polygon: NewtonPolygon
    ind: int
    residuals: Tuple[ResidualPoly, ...]
    separable: bool


@dataclass(frozen=True)
class OreReport:
    p: int
    index_lower_bound: int
    weighted_index_bound: int
    exact: bool
    p_maximal: bool
    shape: Optional[SplittingShape]
    reason: Optional[str] = None
    factors: Tuple[PhiAnalysis, ...] = field(default=())


def _reduce_mod_p(f: MonicIntPoly, p: int) -> GFpPoly:
    return GFpPoly(p, tuple(f.dense()))


def develop(f: MonicIntPoly, phi: MonicIntPoly, p: int) -> PhiDevelopment:
    """
    Développement φ-adique par divisions successives

    Args:
        f: Polynôme unitaire à développer
        phi: Relèvement unitaire d'un facteur irréductible mod p
        p: Nombre premier

    Returns:
        Le développement et les valuations p-adiques des termes

    Raises:
        PhiNotIrreducibleModP: si φ̄ est réductible
    """
    if phi.degree > f.degree:
        raise ValueError("deg φ doit être au plus deg f")
    if not is_irreducible(_reduce_mod_p(phi, p)):
        raise PhiNotIrreducibleModP(f"{phi} n'est pas irréductible modulo {p}")
    terms: List[Tuple[int, ...]] = []
    a = f.dense()
    divisor = phi.dense()
    while a:
        a, r = zz_divmod_monic(a, divisor)
        terms.append(tuple(r))
    valuations = tuple(poly_valuation(t, p) for t in terms)
    return PhiDevelopment(phi, p, tuple(terms), valuations)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def principal_polygon(dev: PhiDevelopment) -> NewtonPolygon:
    """Enveloppe convexe inférieure (chaîne monotone), côtés de pente négative"""
    points = tuple((i, v) for i, v in enumerate(dev.valuations) if v is not None)
    hull: List[Point] = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    sides = []
    for a, b in zip(hull, hull[1:]):
        drop, run = a[1] - b[1], b[0] - a[0]
        if drop <= 0:
            break
        g = math.gcd(drop, run)
        sides.append(PolygonSide(a, b, drop // g, run // g))
    return NewtonPolygon(points, tuple(sides))


def ind_phi(polygon: NewtonPolygon) -> int:
    """Points entiers (i, y), 1 ≤ y, 1 ≤ i < abscisse terminale, sur ou sous le polygone"""
    total = 0
    for side in polygon.sides:
        s, ys = side.start
        for i in range(max(s, 1), side.end[0]):
            height = (ys * side.e - side.h * (i - s)) // side.e
            total += max(0, height)
    return total


def residual_polynomial(dev: PhiDevelopment, side: PolygonSide) -> ResidualPoly:
    """
    Polynôme résiduel R_S(y) = c_s + c_{s+e}·y + … + c_{s+de}·y^d

    Les coefficients vivent dans GF(p)[x]/(φ̄) ; un point strictement
    au-dessus du côté (ou de valuation infinie) donne 0.
    """
    modulus = _reduce_mod_p(dev.phi, dev.p)
    s, ys = side.start
    coeffs = []
    for j in range(side.degree + 1):
        i = s + j * side.e
        v = dev.valuations[i]
        if v is not None and v == ys - j * side.h:
            unit = [a // dev.p ** v for a in dev.terms[i]]
            coeffs.append(FqElem.embed(modulus, GFpPoly(dev.p, tuple(unit))))
        else:
            coeffs.append(FqElem.embed(modulus, 0))
    return ResidualPoly(side, tuple(coeffs))


def lift(factor_bar: GFpPoly) -> MonicIntPoly:
    """Relèvement à coefficients dans [0, p)"""
    return MonicIntPoly.from_dense(factor_bar.monic().coeffs)


def analyze_phi(f: MonicIntPoly, phi: MonicIntPoly, exponent: int, p: int) -> PhiAnalysis:
    dev = develop(f, phi, p)
    polygon = principal_polygon(dev)
    residuals = tuple(residual_polynomial(dev, side) for side in polygon.sides)
    return PhiAnalysis(
        phi=phi,
        exponent=exponent,
        development=dev,
        polygon=polygon,
        ind=ind_phi(polygon),
        residuals=residuals,
        separable=all(r.is_separable() for r in residuals),
    )


def ore_analyze(f: MonicIntPoly, p: int, rng: Optional[random.Random] = None) -> OreReport:
    """
    Formule de l'indice et dissection d'Ore au premier niveau

    Args:
        f: Polynôme unitaire irréductible sur ℚ (certifié par l'appelant)
        p: Nombre premier
        rng: Générateur pour la factorisation modulo p

    Returns:
        OreReport ; shape vaut None si un polynôme résiduel n'est pas séparable
    """
    analyses = tuple(
        analyze_phi(f, lift(g), e, p)
        for g, e in factor(_reduce_mod_p(f, p), rng)
    )
    index = sum(a.ind for a in analyses)
    weighted = sum(a.phi.degree * a.ind for a in analyses)
    exact = all(a.separable for a in analyses)
    shape = None
    reason = None
    if exact:
        pairs = []
        for a in analyses:
            if a.development.valuations[0] is None:
                # φ divise f sur ℤ : f = φ, idéal non ramifié de degré deg φ
                pairs.append((1, a.phi.degree))
            for r in a.residuals:
                for deg_gamma in r.factor_degrees():
                    pairs.append((r.side.e, deg_gamma * a.phi.degree))
        shape = SplittingShape.from_pairs(pairs)
    else:
        reason = FURTHER_DISSECTION
    logger.debug("Ore p=%s : ind=%s exact=%s", p, index, exact)
    return OreReport(
        p=p,
        index_lower_bound=index,
        weighted_index_bound=weighted,
        exact=exact,
        p_maximal=index == 0,
        shape=shape,
        reason=reason,
        factors=analyses,
    )
