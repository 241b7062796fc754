"""
Monogénéité des itérées de f(x) = x² + bx + c

Trichotomie de la 2-maximalité, critère des nombres premiers impairs par
l'orbite critique, certification de stabilité, détection des paramètres
post-critiquement finis et verdict combiné.
"""
import logging
import random
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union

from sympy import sieve

from config import Budgets, Config
from tools.cache import FactorizationCache
from tools.dedekind import DedekindVerdict, dedekind_p_maximal
from tools.errors import ReducibleInput
from tools.ffpoly import GFpPoly, is_irreducible
from tools.intpoly import Dyadic, MonicIntPoly, QuadParams, iterate, shift
from tools.orenewton import OreReport, ore_analyze
from tools.squarefree import squarefree

logger = logging.getLogger(__name__)


# ===== TYPES =====

class TwoClassTag(str, Enum):
    B_ODD_UNRAMIFIED = "B_ODD_UNRAMIFIED"
    EISENSTEIN_RAMIFIED = "EISENSTEIN_RAMIFIED"
    UNIT_RAMIFIED = "UNIT_RAMIFIED"
    NOT_2_MAXIMAL = "NOT_2_MAXIMAL"


@dataclass(frozen=True)
class TwoClass:
    tag: TwoClassTag
    detail: str

    @property
    def maximal(self) -> bool:
        return self.tag != TwoClassTag.NOT_2_MAXIMAL

    @property
    def ramification(self) -> Optional[str]:
        if self.tag == TwoClassTag.B_ODD_UNRAMIFIED:
            return "unramified"
        if self.maximal:
            return "totally ramified"
        return None


class Irreducibility(str, Enum):
    CERTIFIED_STABLE = "CERTIFIED_STABLE"
    CERTIFIED_TO_N = "CERTIFIED_TO_N"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class CriticalOrbit:
    """values[k] = f^(k+1)(−b/2) ; le cycle commence à l'indice preperiod"""
    values: Tuple[Dyadic, ...]
    preperiod: Optional[int]
    period: Optional[int]
    truncated: bool

    @property
    def finite(self) -> bool:
        return self.period is not None

    def value_at(self, n: int) -> Dyadic:
        """c_n pour n ≥ 1, en parcourant le cycle si nécessaire"""
        if n < 1:
            raise ValueError("le niveau commence à 1")
        idx = n - 1
        if idx < len(self.values):
            return self.values[idx]
        if self.period is None:
            raise IndexError(f"niveau {n} non calculé")
        return self.values[self.preperiod + (idx - self.preperiod) % self.period]


class ObstructionStatus(str, Enum):
    SQUAREFREE = "SQUAREFREE"
    OBSTRUCTED = "OBSTRUCTED"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class OddObstruction:
    """odd_part garde son signe ; offending_primes liste les p impairs avec p² | odd_part"""
    n: int
    odd_part: int
    offending_primes: Tuple[int, ...]
    complete: bool

    @property
    def status(self) -> ObstructionStatus:
        if self.offending_primes:
            return ObstructionStatus.OBSTRUCTED
        return ObstructionStatus.SQUAREFREE if self.complete else ObstructionStatus.UNKNOWN


class VerdictKind(str, Enum):
    DYNAMICALLY_MONOGENIC_ALL_N = "DYNAMICALLY_MONOGENIC_ALL_N"
    MONOGENIC_TO_N = "MONOGENIC_TO_N"
    NOT_MONOGENIC_AT = "NOT_MONOGENIC_AT"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    level: Optional[int] = None
    prime: Optional[int] = None
    reason: Optional[str] = None

    def __str__(self) -> str:
        if self.kind == VerdictKind.NOT_MONOGENIC_AT:
            return f"NOT_MONOGENIC_AT({self.level}, {self.prime})"
        if self.kind == VerdictKind.UNKNOWN:
            return f"UNKNOWN({self.reason})"
        return self.kind.value


@dataclass(frozen=True)
class MonogenicityReport:
    params: QuadParams
    N: Union[int, str]
    depth: int
    irreducibility: Irreducibility
    certified_depth: Optional[int]
    two_class: TwoClass
    obstructions: Tuple[OddObstruction, ...]
    pcf: CriticalOrbit
    verdict: Verdict


# ===== OPÉRATIONS =====

def classify_2(q: QuadParams) -> TwoClass:
    """Trichotomie de la 2-maximalité, plus l'échec"""
    b, c = q.b, q.c
    if b % 2:
        return TwoClass(TwoClassTag.B_ODD_UNRAMIFIED, "b impair")
    if c % 4 == 2:
        return TwoClass(TwoClassTag.EISENSTEIN_RAMIFIED, "b pair et c ≡ 2 mod 4")
    if (b + c) % 4 == 1:
        return TwoClass(TwoClassTag.UNIT_RAMIFIED, "b pair et b + c ≡ 1 mod 4")
    return TwoClass(TwoClassTag.NOT_2_MAXIMAL, f"b pair, c ≡ {c % 4} mod 4, b + c ≡ {(b + c) % 4} mod 4")


def critical_orbit(q: QuadParams, max_n: int, max_bits: int = Config.MAX_BITS) -> CriticalOrbit:
    """
    Orbite exacte du point critique −b/2

    Args:
        q: Paramètres de f
        max_n: Nombre maximal d'applications de f
        max_bits: Taille maximale d'une valeur

    Returns:
        CriticalOrbit ; truncated vaut True si aucune répétition n'a été vue
    """
    if max_n < 1:
        raise ValueError("max_n doit être au moins 1")
    values: List[Dyadic] = []
    seen: Dict[Dyadic, int] = {}
    t = q.critical_point
    for _ in range(max_n):
        t = q.apply(t)
        if t.bits() > max_bits:
            break
        if t in seen:
            start = seen[t]
            period = len(values) - start
            cycle_point = values[start]
            point = cycle_point
            for _ in range(period):
                point = q.apply(point)
            if point != cycle_point:
                raise AssertionError("cycle de l'orbite critique non confirmé")
            return CriticalOrbit(tuple(values), start, period, False)
        seen[t] = len(values)
        values.append(t)
    return CriticalOrbit(tuple(values), None, None, True)


def stability_check(q: QuadParams) -> Irreducibility:
    """
    Critère de stabilité d'Ayad-McQuillan

    Raises:
        ReducibleInput: si b² − 4c est un carré parfait
    """
    if q.is_reducible():
        raise ReducibleInput(f"x² + {q.b}x + {q.c} est réductible (discriminant {q.disc})")
    d = q.disc
    if d % 4 == 1 or (d % 4 == 0 and d % 16 != 0):
        return Irreducibility.CERTIFIED_STABLE
    return Irreducibility.UNKNOWN


def odd_p_obstructions(
    orbit: CriticalOrbit,
    factor_budget: int = Config.FACTOR_BUDGET,
    max_level: Optional[int] = None,
    cache: Optional[FactorizationCache] = None,
    trial_bound: int = Config.TRIAL_DIVISION_BOUND,
    seed: int = Config.SEED,
) -> List[OddObstruction]:
    """
    Obstructions p² | Aₙ pour p impair, Aₙ partie impaire du numérateur de c_n

    Args:
        orbit: Orbite critique exacte
        factor_budget: Budget de Pollard-rho
        max_level: Dernier niveau examiné (tous les niveaux calculés par défaut)
        cache: Cache disque des factorisations
        trial_bound: Borne de la division d'essai
        seed: Graine de Pollard-rho

    Returns:
        Une obstruction par niveau, dans l'ordre des niveaux
    """
    levels = len(orbit.values) if max_level is None else min(max_level, len(orbit.values))
    out = []
    for n in range(1, levels + 1):
        odd = orbit.values[n - 1].odd_part()
        if odd == 0:
            out.append(OddObstruction(n, 0, (), False))
            continue
        verdict = squarefree(odd, budget=factor_budget, trial_bound=trial_bound, seed=seed, cache=cache)
        offending = tuple(p for p in verdict.square_primes if p != 2)
        out.append(OddObstruction(n, odd, offending, verdict.complete))
    return out


def iterate_mod_p(q: QuadParams, n: int, p: int) -> GFpPoly:
    """fⁿ mod p, calculé sans construire l'itérée entière"""
    fb = GFpPoly(p, (q.b,))
    fc = GFpPoly(p, (q.c,))
    cur = GFpPoly.x(p)
    for _ in range(n):
        cur = cur * cur + fb * cur + fc
    return cur


def _irreducible_depth(q: QuadParams, top: int, p: int) -> int:
    """Dernier k ≤ top avec fᵏ irréductible mod p ; un échec se propage vers le haut"""
    fb = GFpPoly(p, (q.b,))
    fc = GFpPoly(p, (q.c,))
    cur = GFpPoly.x(p)
    for k in range(1, top + 1):
        cur = cur * cur + fb * cur + fc
        if not is_irreducible(cur):
            return k - 1
    return top


def irreducibility_witness(q: QuadParams, n: int, bound: int = Config.WITNESS_PRIME_BOUND) -> Optional[int]:
    """Plus petit premier p ≤ bound tel que fⁿ soit irréductible modulo p"""
    for p in sieve.primerange(2, bound + 1):
        if _irreducible_depth(q, n, p) >= n:
            return p
    return None


def witness_depth(q: QuadParams, top: int, bound: int = Config.WITNESS_PRIME_BOUND) -> Tuple[int, Optional[int]]:
    """
    Plus grand niveau k ≤ top certifié irréductible par un témoin modulo p

    Returns:
        Couple (k, p) ; (0, None) si aucun premier ne convient
    """
    best, prime = 0, None
    for p in sieve.primerange(2, bound + 1):
        depth = _irreducible_depth(q, top, p)
        if depth > best:
            best, prime = depth, p
            if best >= top:
                break
    return best, prime


class MonogenicityAnalyzer:
    """Enchaîne les étapes de l'analyse pour un paramètre (b, c)"""

    def __init__(self, q: QuadParams, depth: int = Config.DEFAULT_DEPTH,
                 budgets: Optional[Budgets] = None, cache: Optional[FactorizationCache] = None):
        """
        Initialise l'analyse

        Args:
            q: Paramètres de f
            depth: Profondeur N demandée
            budgets: Budgets de calcul (Config.budgets() par défaut)
            cache: Cache disque des factorisations
        """
        if depth < 1:
            raise ValueError("la profondeur doit être au moins 1")
        self.q = q
        self.depth = depth
        self.budgets = budgets or Config.budgets()
        self.cache = cache

    def execute_classification(self) -> TwoClass:
        two = classify_2(self.q)
        logger.info("🔍 Classe 2-adique de %s : %s", self.q, two.tag.value)
        return two

    def execute_irreducibility(self) -> Tuple[Irreducibility, Optional[int]]:
        """Stabilité, sinon témoins modulo p ; renvoie aussi la profondeur certifiée"""
        stability = stability_check(self.q)
        if stability == Irreducibility.CERTIFIED_STABLE:
            logger.info("✅ Stabilité certifiée par congruence")
            return stability, None
        depth, p = witness_depth(self.q, min(self.depth, Config.WITNESS_MAX_DEPTH))
        if p is not None:
            logger.info("✅ f^%s irréductible modulo %s", depth, p)
        # f elle-même est irréductible sur ℚ
        depth = max(depth, 1)
        status = Irreducibility.CERTIFIED_TO_N if depth >= self.depth else Irreducibility.UNKNOWN
        return status, depth

    def execute_orbit(self) -> CriticalOrbit:
        steps = max(self.depth, self.budgets.orbit_steps) + 1
        orbit = critical_orbit(self.q, steps, self.budgets.max_bits)
        if orbit.finite:
            logger.info("✅ Orbite critique finie : prépériode %s, période %s", orbit.preperiod, orbit.period)
        else:
            logger.info("🔍 Orbite critique infinie ou tronquée (%s valeurs)", len(orbit.values))
        return orbit

    def execute_obstructions(self, orbit: CriticalOrbit) -> List[OddObstruction]:
        max_level = None if orbit.finite else self.depth
        return odd_p_obstructions(orbit, self.budgets.factor_budget, max_level, self.cache,
                                  self.budgets.trial_bound, self.budgets.seed)

    def run_complete_analysis(self) -> MonogenicityReport:
        """
        Exécute toutes les étapes et assemble le verdict

        Returns:
            MonogenicityReport
        """
        two = self.execute_classification()
        irreducibility, certified = self.execute_irreducibility()
        orbit = self.execute_orbit()
        obstructions = tuple(self.execute_obstructions(orbit)) if two.maximal else ()
        verdict = self._decide(two, irreducibility, certified, orbit, obstructions)
        logger.info("📊 Verdict pour %s : %s", self.q, verdict)
        all_n = verdict.kind == VerdictKind.DYNAMICALLY_MONOGENIC_ALL_N
        return MonogenicityReport(
            params=self.q,
            N="ALL" if all_n else self.depth,
            depth=self.depth,
            irreducibility=irreducibility,
            certified_depth=certified,
            two_class=two,
            obstructions=obstructions,
            pcf=orbit,
            verdict=verdict,
        )

    def _decide(self, two: TwoClass, irreducibility: Irreducibility, certified: Optional[int],
                orbit: CriticalOrbit, obstructions: Tuple[OddObstruction, ...]) -> Verdict:
        if not two.maximal:
            return Verdict(VerdictKind.NOT_MONOGENIC_AT, 1, 2, two.detail)
        obstructed = [o for o in obstructions if o.status == ObstructionStatus.OBSTRUCTED]
        if obstructed:
            first = obstructed[0]
            if certified is None or first.n <= certified:
                return Verdict(VerdictKind.NOT_MONOGENIC_AT, first.n, min(first.offending_primes),
                               f"{min(first.offending_primes)}² divise A_{first.n} = {first.odd_part}")
            return Verdict(VerdictKind.UNKNOWN,
                           reason=f"obstruction au niveau {first.n} sans irréductibilité certifiée")
        if irreducibility == Irreducibility.UNKNOWN:
            return Verdict(VerdictKind.UNKNOWN, reason="irréductibilité non certifiée jusqu'à N")
        if any(o.status == ObstructionStatus.UNKNOWN for o in obstructions):
            return Verdict(VerdictKind.UNKNOWN, reason="factorisation incomplète d'une valeur de l'orbite")
        if orbit.finite and irreducibility == Irreducibility.CERTIFIED_STABLE:
            return Verdict(VerdictKind.DYNAMICALLY_MONOGENIC_ALL_N)
        if not orbit.finite and len(orbit.values) < self.depth:
            return Verdict(VerdictKind.UNKNOWN, reason="orbite tronquée avant N")
        return Verdict(VerdictKind.MONOGENIC_TO_N)


def report(q: QuadParams, N: int = Config.DEFAULT_DEPTH, budgets: Optional[Budgets] = None,
           cache: Optional[FactorizationCache] = None) -> MonogenicityReport:
    """Verdict combiné pour (b, c) à la profondeur N"""
    return MonogenicityAnalyzer(q, N, budgets, cache).run_complete_analysis()


# ===== CRITÈRES FERMÉS ET VÉRIFICATIONS =====

def closed_form_p_maximal(q: QuadParams, n: int, p: int) -> bool:
    """
    Verdict fermé pour fⁿ en p (fⁿ supposé irréductible)

    p = 2 : classe 2-adique ; p impair : p² ne divise aucun A_k, k ≤ n.
    """
    if p == 2:
        return classify_2(q).maximal
    t = q.critical_point
    for _ in range(n):
        t = q.apply(t)
        if t.odd_part() % (p * p) == 0:
            return False
    return True


def quadratic_odd_p_maximal(q: QuadParams, p: int) -> bool:
    """Quadratique p-maximal en p impair ⇔ p² ∤ Disc"""
    return q.disc % (p * p) != 0


def quadratic_2_maximal(q: QuadParams) -> bool:
    """Quadratique 2-maximal ⇔ b impair ou c² − bc + c ≢ 0 mod 4"""
    return q.b % 2 == 1 or (q.c * q.c - q.b * q.c + q.c) % 4 != 0


def is_eisenstein(f: MonicIntPoly, p: int) -> bool:
    return all(a % p == 0 for a in f.coeffs) and f.coeffs[0] % (p * p) != 0


def ramified_generator(q: QuadParams, n: int) -> Optional[str]:
    """Idéal premier au-dessus de 2 dans les classes ramifiées"""
    tag = classify_2(q).tag
    if tag == TwoClassTag.EISENSTEIN_RAMIFIED or (tag == TwoClassTag.UNIT_RAMIFIED and n % 2 == 0):
        return f"(2, α_{n})"
    if tag == TwoClassTag.UNIT_RAMIFIED:
        return f"(2, α_{n} + 1)"
    return None


def eisenstein_witness_shift(q: QuadParams, n: int, max_bits: int = Config.MAX_BITS) -> Optional[int]:
    """Décalage s ∈ {0, 1} rendant fⁿ(x + s) 2-Eisenstein, ou None"""
    fn = iterate(q, n, max_bits)
    for s in (0, 1):
        if is_eisenstein(shift(fn, s) if s else fn, 2):
            return s
    return None


@dataclass(frozen=True)
class OracleComparison:
    params: QuadParams
    n: int
    p: int
    dedekind: DedekindVerdict
    ore: OreReport
    closed_form: bool

    @property
    def agree(self) -> bool:
        return self.dedekind.p_maximal == self.ore.p_maximal == self.closed_form


def oracle_comparison(q: QuadParams, n: int, p: int, rng: Optional[random.Random] = None) -> OracleComparison:
    """Dedekind, Ore et critère fermé côte à côte pour fⁿ en p"""
    fn = iterate(q, n)
    return OracleComparison(
        params=q,
        n=n,
        p=p,
        dedekind=dedekind_p_maximal(fn, p, rng),
        ore=ore_analyze(fn, p, rng),
        closed_form=closed_form_p_maximal(q, n, p),
    )


def nonmaximality_propagates(q: QuadParams, n: int, p: int) -> bool:
    """Si fⁿ n'est pas p-maximal, f^(n+1) ne l'est pas non plus"""
    if dedekind_p_maximal(iterate(q, n), p).p_maximal:
        return True
    return not dedekind_p_maximal(iterate(q, n + 1), p).p_maximal


@dataclass(frozen=True)
class ScalingRelation:
    """4^(2^n)·fⁿ(−b/2) face à 4^(2^(n−1))·f^(n−1)(−Disc/4)"""
    n: int
    lhs: Dyadic
    rhs: Dyadic
    values_equal: bool

    @property
    def odd_parts_equal(self) -> bool:
        return self.lhs.odd_part() == self.rhs.odd_part()

    @property
    def two_adic_gap(self) -> Optional[int]:
        """v₂(lhs) − v₂(rhs), None si une valeur est nulle"""
        if self.lhs.num == 0 or self.rhs.num == 0:
            return None
        return _v2(self.lhs) - _v2(self.rhs)


def _v2(t: Dyadic) -> int:
    n = t.num
    return (n & -n).bit_length() - 1 - t.exp2


def scaling_relation(q: QuadParams, n: int) -> ScalingRelation:
    if n < 1:
        raise ValueError("n doit être au moins 1")
    left = q.critical_point
    for _ in range(n):
        left = q.apply(left)
    right = Dyadic(-q.disc, 2)
    for _ in range(n - 1):
        right = q.apply(right)
    return ScalingRelation(
        n=n,
        lhs=left * Dyadic(1 << (2 << n)),
        rhs=right * Dyadic(1 << (1 << n)),
        values_equal=left == right,
    )
