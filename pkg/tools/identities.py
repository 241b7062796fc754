"""
Suites d'identités : factorisations de F et G dans GF(2)[x], orbite critique
et discriminant
"""
import logging
from typing import Callable, Dict, List

from tools.analyzer import scaling_relation
from tools.intpoly import Dyadic, QuadParams
from tools.splitting import IdentityCheck, fF_identities

logger = logging.getLogger(__name__)

COMPOSITION_NAMES = ("G^(n+1) = G^n F^n", "F^n + 1 = G^n")


def composition_suite() -> List[IdentityCheck]:
    return [c for c in fF_identities(n_max=10, factor_max=0, m_max=-1) if c.name in COMPOSITION_NAMES]


def factorization_suite() -> List[IdentityCheck]:
    return [c for c in fF_identities(n_max=0, factor_max=8, m_max=4) if c.name not in COMPOSITION_NAMES]


def orbit_suite(bound: int = 12, n_max: int = 3) -> List[IdentityCheck]:
    """
    f(−b/2) = −Disc/4 et A₁ = ±partie impaire de Disc sur la grille,
    plus la relation d'échelle observée (consignée, jamais en échec)

    Args:
        bound: Borne de |b| et |c|
        n_max: Dernier niveau de la relation d'échelle

    Returns:
        Liste de vérifications
    """
    checks: List[IdentityCheck] = []
    first_value_ok, odd_part_ok = True, True
    gaps: Dict[int, set] = {n: set() for n in range(1, n_max + 1)}
    odd_equal: Dict[int, bool] = {n: True for n in range(1, n_max + 1)}
    for b in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            q = QuadParams(b, c)
            c1 = q.apply(q.critical_point)
            first_value_ok &= c1 == Dyadic(-q.disc, 2)
            odd_part_ok &= abs(c1.odd_part()) == abs(Dyadic(q.disc).odd_part())
            for n in range(1, n_max + 1):
                rel = scaling_relation(q, n)
                odd_equal[n] &= rel.odd_parts_equal
                if rel.two_adic_gap is not None:
                    gaps[n].add(rel.two_adic_gap)
    span = f"|b|, |c| ≤ {bound}"
    checks.append(IdentityCheck("f(−b/2) = −Disc/4", span, first_value_ok))
    checks.append(IdentityCheck("A_1 = ±partie impaire de Disc", span, odd_part_ok))
    for n in range(1, n_max + 1):
        checks.append(IdentityCheck(
            "4^(2^n) f^n(−b/2) ~ 4^(2^(n−1)) f^(n−1)(−Disc/4) : parties impaires égales",
            f"n={n}", odd_equal[n],
            f"écart 2-adique observé : {sorted(gaps[n])}",
        ))
    return checks


SUITES: Dict[str, Callable[[], List[IdentityCheck]]] = {
    'composition': composition_suite,
    'factorization': factorization_suite,
    'orbit': orbit_suite,
}


def run_suite(name: str = "all") -> List[IdentityCheck]:
    """
    Exécute une suite nommée, ou toutes

    Raises:
        KeyError: si la suite est inconnue
    """
    names = list(SUITES) if name == "all" else [name]
    checks: List[IdentityCheck] = []
    for suite in names:
        result = SUITES[suite]()
        logger.info("📊 Suite %s : %s/%s vérifications réussies",
                    suite, sum(c.passed for c in result), len(result))
        checks.extend(result)
    return checks
