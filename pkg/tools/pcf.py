"""
Familles post-critiquement finies f_a, g_a, h_a = (x + a)² − a − k

Certificats de monogénéité par conditions sans facteur carré et
congruences, balayages recoupés par l'analyseur et par Dedekind.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Optional, Tuple

from config import Budgets, Config
from tools.analyzer import CriticalOrbit, VerdictKind, report
from tools.dedekind import dedekind_p_maximal
from tools.errors import ReducibleInput
from tools.intpoly import Dyadic, MonicIntPoly, QuadParams, iterate, shift
from tools.squarefree import SquarefreeVerdict, squarefree

logger = logging.getLogger(__name__)

__all__ = [
    'Family', 'FamilyParam', 'FamilyVerdict', 'CrossCheck', 'ScanRow', 'FamilyScan',
    'SquarefreeVerdict', 'squarefree', 'family_verdict', 'family_scan',
    'specialization_map', 'expected_orbit',
]

SCAN_DEPTH = 4
ORACLE_DEPTH = 3


class Family(str, Enum):
    F_A = "f"
    G_A = "g"
    H_A = "h"

    @property
    def shift_k(self) -> int:
        """k dans (x + a)² − a − k"""
        return {"f": 0, "g": 1, "h": 2}[self.value]


@dataclass(frozen=True)
class FamilyParam:
    family: Family
    a: int

    @property
    def quad(self) -> QuadParams:
        return QuadParams(2 * self.a, self.a * self.a - self.a - self.family.shift_k)

    @property
    def d4(self) -> int:
        """Disc/4 = a + k"""
        return self.a + self.family.shift_k

    @property
    def base(self) -> QuadParams:
        """x², x² − 1 ou x² − 2"""
        return QuadParams(0, -self.family.shift_k)

    def __str__(self) -> str:
        return f"{self.family.value}_{self.a}"


@dataclass(frozen=True)
class FamilyVerdict:
    """monogenic_all_n vaut None si un test sans facteur carré n'a pas conclu"""
    param: FamilyParam
    monogenic_all_n: Optional[bool]
    reasons: Tuple[str, ...]
    certificates: Tuple[SquarefreeVerdict, ...]


@dataclass(frozen=True)
class CrossCheck:
    """Contrôle indépendant : analyseur à profondeur 4, Dedekind pour n ≤ 3"""
    analyzer_verdict: str
    analyzer_ok: Optional[bool]
    dedekind_ok: bool
    failure: Optional[Tuple[int, int]]

    def agrees_with(self, verdict: Optional[bool]) -> bool:
        return verdict is not None and self.analyzer_ok == verdict and self.dedekind_ok == verdict


@dataclass(frozen=True)
class ScanRow:
    verdict: FamilyVerdict
    check: Optional[CrossCheck]

    @property
    def agree(self) -> bool:
        return self.check is None or self.check.agrees_with(self.verdict.monogenic_all_n)


@dataclass(frozen=True)
class FamilyScan:
    family: Family
    a_min: int
    a_max: int
    rows: Tuple[ScanRow, ...]

    @property
    def counts(self) -> dict:
        values = [r.verdict.monogenic_all_n for r in self.rows]
        return {
            'true': values.count(True),
            'false': values.count(False),
            'unknown': values.count(None),
            'disagreements': sum(1 for r in self.rows if not r.agree),
        }


# ===== VERDICT FERMÉ =====

def _squarefree_condition(label: str, n: int, budgets: Budgets,
                          certs: List[SquarefreeVerdict], reasons: List[str]) -> Optional[bool]:
    if n == 0:
        reasons.append(f"{label} = 0 n'est pas sans facteur carré")
        return False
    verdict = squarefree(n, budget=budgets.factor_budget, trial_bound=budgets.trial_bound,
                         seed=budgets.seed)
    certs.append(verdict)
    if verdict.squarefree is None:
        reasons.append(f"{label} = {n} : factorisation incomplète")
    elif verdict.squarefree:
        reasons.append(f"{label} = {n} sans facteur carré")
    else:
        reasons.append(f"{label} = {n} = {verdict.certificate()} a un facteur carré")
    return verdict.squarefree


def family_verdict(fp: FamilyParam, budgets: Optional[Budgets] = None) -> FamilyVerdict:
    """
    Monogénéité de toutes les itérées d'un membre de famille

    f_a, g_a : a et D/4 sans facteur carré, D/4 ≡ 2 ou 3 mod 4.
    h_a : a − 2 et D/4 = a + 2 sans facteur carré, D/4 ≡ 2 ou 3 mod 4.

    Args:
        fp: Membre de famille
        budgets: Budgets de factorisation

    Returns:
        FamilyVerdict ; None seulement si un test sans facteur carré est indécis
    """
    budgets = budgets or Config.budgets()
    certs: List[SquarefreeVerdict] = []
    reasons: List[str] = []
    first = ("a − 2", fp.a - 2) if fp.family == Family.H_A else ("a", fp.a)
    outcomes = [
        _squarefree_condition(first[0], first[1], budgets, certs, reasons),
        _squarefree_condition("D/4", fp.d4, budgets, certs, reasons),
    ]
    congruent = fp.d4 % 4 in (2, 3)
    reasons.append(f"D/4 ≡ {fp.d4 % 4} mod 4" + ("" if congruent else ", ni 2 ni 3"))
    outcomes.append(congruent)
    if False in outcomes:
        decided: Optional[bool] = False
    elif None in outcomes:
        decided = None
    else:
        decided = True
    return FamilyVerdict(fp, decided, tuple(reasons), tuple(certs))


# ===== RECOUPEMENT ET BALAYAGE =====

def cross_check(fp: FamilyParam, budgets: Optional[Budgets] = None,
                primes: Tuple[int, ...] = Config.ORACLE_PRIMES,
                extra_primes: Iterable[int] = ()) -> CrossCheck:
    """
    Analyseur général à profondeur 4 et Dedekind sur fⁿ, n ≤ 3

    Dedekind examine les petits premiers, les premiers extra (facteurs carrés
    des certificats) et ceux que l'analyseur a trouvés en défaut.

    Args:
        fp: Membre de famille
        budgets: Budgets de factorisation
        primes: Premiers toujours examinés
        extra_primes: Premiers supplémentaires

    Returns:
        CrossCheck ; failure = (n, p) avec p minimal au premier niveau en défaut
    """
    q = fp.quad
    if q.is_reducible():
        return CrossCheck("REDUCIBLE", False, False, None)
    try:
        rep = report(q, SCAN_DEPTH, budgets)
        kind = rep.verdict.kind
        analyzer_ok = None if kind == VerdictKind.UNKNOWN else kind != VerdictKind.NOT_MONOGENIC_AT
        analyzer_verdict = str(rep.verdict)
    except ReducibleInput:
        return CrossCheck("REDUCIBLE", False, False, None)
    candidates = set(primes) | set(extra_primes)
    if rep.verdict.prime is not None:
        candidates.add(rep.verdict.prime)
    for o in rep.obstructions:
        candidates.update(o.offending_primes)
    checked = sorted(candidates)
    failure = None
    for n in range(1, ORACLE_DEPTH + 1):
        fn = iterate(q, n)
        bad = [p for p in checked if not dedekind_p_maximal(fn, p).p_maximal]
        if bad:
            failure = (n, bad[0])
            break
    return CrossCheck(analyzer_verdict, analyzer_ok, failure is None, failure)


def _scan_row(job: Tuple[Family, int, bool, Optional[Budgets]]) -> ScanRow:
    family, a, checked, budgets = job
    fp = FamilyParam(family, a)
    verdict = family_verdict(fp, budgets)
    if not checked:
        return ScanRow(verdict, None)
    square_primes = {p for cert in verdict.certificates for p in cert.square_primes}
    return ScanRow(verdict, cross_check(fp, budgets, extra_primes=square_primes))


def family_scan(family: Family, a_min: int, a_max: int, jobs: int = 1,
                check: bool = True, budgets: Optional[Budgets] = None) -> FamilyScan:
    """
    Verdict fermé pour chaque a de [a_min, a_max]

    Args:
        family: Famille balayée
        a_min: Borne inférieure
        a_max: Borne supérieure (incluse)
        jobs: Nombre de processus (1 = exécution directe)
        check: Recouper chaque ligne par l'analyseur et Dedekind
        budgets: Budgets de factorisation

    Returns:
        FamilyScan, lignes dans l'ordre croissant de a
    """
    if a_min > a_max:
        raise ValueError("a_min doit être inférieur ou égal à a_max")
    work = [(family, a, check, budgets) for a in range(a_min, a_max + 1)]
    logger.info("🔍 Balayage de la famille %s sur [%s, %s]", family.value, a_min, a_max)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(_scan_row, work))
    else:
        rows = [_scan_row(job) for job in work]
    scan = FamilyScan(family, a_min, a_max, tuple(rows))
    counts = scan.counts
    logger.info("📊 %s vrais, %s faux, %s indécis, %s désaccords",
                counts['true'], counts['false'], counts['unknown'], counts['disagreements'])
    return scan


# ===== IDENTITÉS DE LA FAMILLE =====

def specialization_map(fp: FamilyParam, n: int) -> Tuple[MonicIntPoly, MonicIntPoly]:
    """
    Renvoie (familleⁿ(x − a), baseⁿ(x) − a), égaux par construction

    Raises:
        AssertionError: si les deux côtés diffèrent
    """
    lhs = shift(iterate(fp.quad, n), -fp.a)
    dense = iterate(fp.base, n).dense()
    dense[0] -= fp.a
    rhs = MonicIntPoly.from_dense(dense)
    if lhs != rhs:
        raise AssertionError(f"spécialisation en défaut pour {fp}, n={n}")
    return lhs, rhs


def expected_orbit(fp: FamilyParam) -> CriticalOrbit:
    """Orbite de −a : point fixe (f), 2-cycle (g), −a−2 ↦ −a+2 fixe (h)"""
    a = fp.a
    if fp.family == Family.F_A:
        values, preperiod, period = [-a], 0, 1
    elif fp.family == Family.G_A:
        values, preperiod, period = [-a - 1, -a], 0, 2
    else:
        values, preperiod, period = [-a - 2, -a + 2], 1, 1
    return CriticalOrbit(tuple(Dyadic.of(v) for v in values), preperiod, period, False)
