"""
Oracle de p-maximalité par le critère de Dedekind
"""
import logging
import random
from dataclasses import dataclass
from functools import reduce
from typing import Optional

from config import Config
from tools.errors import OracleDegreeExceeded
from tools.ffpoly import GFpPoly, factor
from tools.intpoly import MonicIntPoly, zz_mul, zz_sub

logger = logging.getLogger(__name__)

DEDEKIND_MAX_DEGREE = Config.DEDEKIND_MAX_DEGREE


@dataclass(frozen=True)
class DedekindVerdict:
    """witness = pgcd(T̄, ḡ, h̄), constant exactement quand f est p-maximal"""
    p: int
    p_maximal: bool
    witness: GFpPoly


def dedekind_p_maximal(
    f: MonicIntPoly,
    p: int,
    rng: Optional[random.Random] = None,
    max_degree: int = DEDEKIND_MAX_DEGREE,
) -> DedekindVerdict:
    """
    Critère de Dedekind

    f̄ = Π ḡᵢ^eᵢ, g* = Π gᵢ, h* relève f̄/ḡ*, T = (g*·h* − f)/p ;
    f est p-maximal si et seulement si pgcd(T̄, ḡ*, h̄*) = 1.

    Args:
        f: Polynôme unitaire, irréductible sur ℚ (certifié par l'appelant)
        p: Nombre premier
        rng: Générateur pour la factorisation modulo p
        max_degree: Degré maximal accepté

    Returns:
        DedekindVerdict

    Raises:
        OracleDegreeExceeded: si deg f dépasse max_degree
    """
    if f.degree > max_degree:
        raise OracleDegreeExceeded(f.degree, max_degree)
    f_bar = GFpPoly(p, tuple(f.dense()))
    factors = factor(f_bar, rng)
    one = GFpPoly(p, (1,))
    g_bar = reduce(lambda acc, ge: acc * ge[0], factors, one)
    h_bar = f_bar // g_bar
    # relèvements à coefficients dans [0, p)
    t_int = zz_sub(zz_mul(list(g_bar.coeffs), list(h_bar.coeffs)), f.dense())
    if any(x % p for x in t_int):
        raise AssertionError("g*·h* − f n'est pas divisible par p")
    t_bar = GFpPoly(p, tuple(x // p for x in t_int))
    witness = t_bar.gcd(g_bar).gcd(h_bar)
    verdict = DedekindVerdict(p=p, p_maximal=witness.degree == 0, witness=witness)
    logger.debug("Dedekind p=%s : %s", p, verdict.p_maximal)
    return verdict
