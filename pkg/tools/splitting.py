"""
Décomposition de l'idéal (2) dans le corps engendré par une racine de fⁿ

Prédiction fermée selon la parité de (b, c), vérification par factorisation
de fⁿ dans GF(2)[x] et audit des identités sur F = x²+x+1 et G = x²+x.
"""
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import List, Optional, Tuple

from tools.analyzer import classify_2
from tools.errors import Not2MaximalInput
from tools.ffpoly import (
    F,
    G,
    GF2_DEGREE_CAP,
    GF2Poly,
    gf2_deg,
    gf2_factor_bits,
    gf2_is_irreducible_bits,
    gf2_iterate,
)
from tools.intpoly import QuadParams, format_poly
from tools.shape import SplittingShape

logger = logging.getLogger(__name__)


# ===== TYPES =====

@dataclass(frozen=True)
class SplitVerification:
    """Forme prédite face à la factorisation réelle de fⁿ modulo 2"""
    params: QuadParams
    n: int
    predicted: SplittingShape
    actual: SplittingShape
    factors: Tuple[Tuple[GF2Poly, int], ...]
    ideals: Tuple[str, ...]

    @property
    def match(self) -> bool:
        return self.predicted.same_primes(self.actual)

    @property
    def squarefree_mod_2(self) -> bool:
        return all(e == 1 for _, e in self.factors)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    parameter: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class OpenQuestionRow:
    """Une ligne de l'expérience sur les facteurs de F^(2^(m−1))"""
    m: int
    n: int
    factor_count: int
    factors_matching: int
    pattern_irreducibles: int
    sets_equal: bool

    @property
    def pattern_holds(self) -> bool:
        return self.factors_matching == self.factor_count


# ===== PRÉDICTION =====

def predict_split2(q: QuadParams, n: int) -> SplittingShape:
    """
    Forme de 2·O_K pour K = ℚ(αₙ), αₙ racine de fⁿ

    Args:
        q: Paramètres de f
        n: Niveau d'itération (≥ 1)

    Returns:
        SplittingShape triée par (f, e)

    Raises:
        Not2MaximalInput: si ℤ[α₁] n'est pas 2-maximal
    """
    if n < 1:
        raise ValueError("n doit être au moins 1")
    two = classify_2(q)
    if not two.maximal:
        raise Not2MaximalInput(f"{q} : {two.detail}")
    if q.b % 2 == 0:
        return SplittingShape(((1 << n, 1, 1),), n)
    if q.c % 2:
        m = n.bit_length()
        return SplittingShape(((1, 1 << m, 1 << (n - m)),), n)
    if n == 1:
        return SplittingShape(((1, 1, 2),), n)
    m = (n - 1).bit_length()
    entries = [(1, 1, 2)]
    for r in range(1, m):
        entries.append((1, 1 << r, (1 << ((1 << r) - r)) - (1 << ((1 << (r - 1)) - r))))
    top = sum(1 << (j - m) for j in range((1 << (m - 1)), n))
    entries.append((1, 1 << m, top))
    return SplittingShape(tuple(entries), n)


# ===== VÉRIFICATION =====

@lru_cache(maxsize=256)
def _factor_iterate_mod2(b_odd: int, c_odd: int, n: int, cap: int) -> Tuple[Tuple[int, int], ...]:
    # fⁿ mod 2 ne dépend que des parités de b et c
    f_bar = GF2Poly(0b100 | (b_odd << 1) | c_odd)
    fn = gf2_iterate(f_bar, n, cap)
    return tuple(gf2_factor_bits(fn.bits, random.Random(0)))


def factor_mod2(q: QuadParams, n: int, cap: int = GF2_DEGREE_CAP) -> List[Tuple[GF2Poly, int]]:
    """
    Factorisation de fⁿ dans GF(2)[x], par itération de f̄

    Raises:
        DegreeCapExceeded: si 2ⁿ dépasse le plafond
    """
    return [(GF2Poly(bits), e) for bits, e in _factor_iterate_mod2(q.b % 2, q.c % 2, n, cap)]


def ideal_presentations(n: int, factors: List[Tuple[GF2Poly, int]]) -> List[str]:
    """Présentations (2, g(αₙ)) ; un exposant e > 1 est noté ^e"""
    var = f"α_{n}"
    out = []
    for g, e in factors:
        text = f"(2, {format_poly(list(g.to_gfp().coeffs), var)})"
        out.append(text if e == 1 else f"{text}^{e}")
    return out


def verify_split2(q: QuadParams, n: int, cap: int = GF2_DEGREE_CAP) -> SplitVerification:
    """
    Confronte la prédiction à la factorisation réelle de fⁿ modulo 2

    Args:
        q: Paramètres de f (classe 2-maximale)
        n: Niveau
        cap: Plafond de degré pour GF(2)

    Returns:
        SplitVerification ; la forme réelle est [(e, deg g)] sur les facteurs g^e

    Raises:
        Not2MaximalInput: hors des classes 2-maximales
        DegreeCapExceeded: si 2ⁿ dépasse le plafond
    """
    predicted = predict_split2(q, n)
    factors = factor_mod2(q, n, cap)
    actual = SplittingShape.from_pairs(((e, g.degree) for g, e in factors), n)
    result = SplitVerification(
        params=q,
        n=n,
        predicted=predicted,
        actual=actual,
        factors=tuple(factors),
        ideals=tuple(ideal_presentations(n, factors)),
    )
    if result.match:
        logger.info("✅ Décomposition de 2 conforme pour %s, n=%s", q, n)
    else:
        logger.warning("❌ Décomposition de 2 divergente pour %s, n=%s : %s ≠ %s",
                       q, n, predicted, actual)
    return result


def verify_grid(bound: int = 9, n_max: int = 7) -> List[Tuple[int, int, int]]:
    """Cellules (b, c, n), b impair, |b|,|c| ≤ bound, où la prédiction échoue"""
    mismatches = []
    for b in range(-bound, bound + 1, 2):
        for c in range(-bound, bound + 1):
            q = QuadParams(b, c)
            if q.is_reducible():
                continue
            for n in range(1, n_max + 1):
                if not verify_split2(q, n).match:
                    mismatches.append((b, c, n))
    return mismatches


# ===== IDENTITÉS SUR F ET G =====

def _iterates(P: GF2Poly, n_max: int) -> List[GF2Poly]:
    """[P¹, …, P^n_max] par composition à gauche"""
    out = [P]
    for _ in range(n_max - 1):
        out.append(P.compose(out[-1]))
    return out


def _level_exponent(n: int) -> int:
    """m tel que 2^(m−1) ≤ n < 2^m"""
    return n.bit_length()


def _irreducibles(degree: int, fixed: Optional[dict] = None) -> List[int]:
    """Irréductibles unitaires de ce degré dont les coefficients imposés valent fixed[i]"""
    fixed = dict(fixed or {})
    fixed.setdefault(0, 1)
    free = [i for i in range(1, degree) if i not in fixed]
    base = 1 << degree
    for i, v in fixed.items():
        if v:
            base |= 1 << i
    out = []
    for choice in product((0, 1), repeat=len(free)):
        bits = base
        for i, v in zip(free, choice):
            if v:
                bits |= 1 << i
        if gf2_is_irreducible_bits(bits):
            out.append(bits)
    return sorted(out)


def fF_identities(n_max: int = 10, factor_max: int = 8, m_max: int = 4,
                  cap: int = GF2_DEGREE_CAP) -> List[IdentityCheck]:
    """
    Audit des identités de factorisation dans GF(2)[x]

    Args:
        n_max: Dernier niveau pour G^(n+1) = Gⁿ·Fⁿ et Fⁿ + 1 = Gⁿ
        factor_max: Dernier niveau factorisé (comptes et coprimalité)
        m_max: Dernier m pour G^(2^m) = x^(2^(2^m)) + x
        cap: Plafond de degré

    Returns:
        Liste de vérifications, dans l'ordre d'exécution
    """
    checks: List[IdentityCheck] = []
    g_iter = _iterates(G, n_max + 1)
    f_iter = _iterates(F, max(n_max, factor_max))

    for n in range(1, n_max + 1):
        lhs, rhs = g_iter[n], g_iter[n - 1] * f_iter[n - 1]
        checks.append(IdentityCheck("G^(n+1) = G^n F^n", f"n={n}", lhs == rhs))
        checks.append(IdentityCheck("F^n + 1 = G^n", f"n={n}", f_iter[n - 1] + GF2Poly(1) == g_iter[n - 1]))

    for m in range(0, m_max + 1):
        gm = gf2_iterate(G, 1 << m, cap)
        target = GF2Poly((1 << (1 << (1 << m))) | 0b10)
        checks.append(IdentityCheck("G^(2^m) = x^(2^(2^m)) + x", f"m={m}", gm == target))

    for i, j in combinations(range(1, factor_max + 1), 2):
        coprime = f_iter[i - 1].gcd(f_iter[j - 1]).bits == 1
        checks.append(IdentityCheck("pgcd(F^i, F^j) = 1", f"i={i}, j={j}", coprime))

    factored = {}
    for n in range(1, factor_max + 1):
        fac = gf2_factor_bits(f_iter[n - 1].bits, random.Random(0))
        factored[n] = fac
        m = _level_exponent(n)
        degrees = {gf2_deg(g) for g, _ in fac}
        ok = all(e == 1 for _, e in fac) and degrees == {1 << m} and len(fac) == 1 << (n - m)
        checks.append(IdentityCheck("F^n : 2^(n−m) irréductibles distincts de degré 2^m", f"n={n}", ok,
                                    f"{len(fac)} facteurs de degrés {sorted(degrees)}"))

    for m in range(1, 4):
        lo, hi = 1 << (m - 1), (1 << m) - 1
        if hi > factor_max:
            break
        union = sorted(g for k in range(lo, hi + 1) for g, _ in factored[k])
        expected = ((1 << (1 << m)) - (1 << (1 << (m - 1)))) >> m
        everything = _irreducibles(1 << m)
        ok = len(union) == expected and union == everything
        checks.append(IdentityCheck("Π F^n, 2^(m−1) ≤ n < 2^m : tous les irréductibles de degré 2^m", f"m={m}", ok,
                                    f"{len(union)} facteurs, {expected} attendus"))

        d = 1 << m
        top = factored[hi]
        trace_ok = all((g >> (d - 1)) & 1 for g, _ in top)
        nonzero_trace = [g for g in everything if (g >> (d - 1)) & 1]
        checks.append(IdentityCheck("F^(2^m − 1) : facteurs de trace non nulle", f"m={m}",
                                    trace_ok and sorted(g for g, _ in top) == nonzero_trace,
                                    f"{len(top)} facteurs, {len(nonzero_trace)} irréductibles de trace non nulle"))

    failed = [c for c in checks if not c.passed]
    if failed:
        logger.warning("❌ %s identités en échec sur %s", len(failed), len(checks))
    else:
        logger.info("✅ %s identités vérifiées", len(checks))
    return checks


# ===== QUESTION OUVERTE =====

def open_question_pattern(m: int) -> dict:
    """Coefficients imposés : a_(2^m−1) = 0 et a_(2^m−1−2^i) = 1 pour 0 ≤ i < m"""
    top = (1 << m) - 1
    pattern = {top: 0}
    for i in range(m):
        pattern[top - (1 << i)] = 1
    return pattern


def open_question_experiment(m_max: int = 4, cap: int = GF2_DEGREE_CAP) -> List[OpenQuestionRow]:
    """
    Compare les facteurs de F^(2^(m−1)) aux irréductibles de degré 2^m
    dont les coefficients suivent le motif ; aucune conclusion n'est tirée

    Args:
        m_max: Dernier m examiné (au plus 4)
        cap: Plafond de degré

    Returns:
        Une ligne par m
    """
    if m_max > 4:
        raise ValueError("m_max est limité à 4")
    rows = []
    for m in range(1, m_max + 1):
        n = 1 << (m - 1)
        pattern = open_question_pattern(m)
        fac = sorted(g for g, _ in gf2_factor_bits(gf2_iterate(F, n, cap).bits, random.Random(0)))
        matching = [g for g in fac if all(((g >> i) & 1) == v for i, v in pattern.items())]
        candidates = _irreducibles(1 << m, pattern)
        rows.append(OpenQuestionRow(
            m=m,
            n=n,
            factor_count=len(fac),
            factors_matching=len(matching),
            pattern_irreducibles=len(candidates),
            sets_equal=fac == candidates,
        ))
        logger.info("📊 m=%s : %s/%s facteurs suivent le motif, %s irréductibles du motif",
                    m, len(matching), len(fac), len(candidates))
    return rows
