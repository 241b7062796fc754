"""
Test sans facteur carré des entiers : division d'essai, Miller-Rabin,
puissances parfaites et Pollard-rho (variante de Brent) à budget borné
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import isprime, sieve
from sympy.ntheory import perfect_power, pollard_rho

from config import Config
from tools.cache import FactorizationCache
from tools.errors import ZeroInput

logger = logging.getLogger(__name__)

# au-delà, la primalité et rho sont hors de portée : le cofacteur reste non résolu
RHO_MAX_BITS = 2048


@dataclass(frozen=True)
class SquarefreeVerdict:
    """squarefree vaut None quand la factorisation est incomplète et ne conclut pas"""
    n: int
    squarefree: Optional[bool]
    factors: Tuple[Tuple[int, int], ...]
    cofactors: Tuple[int, ...] = ()

    @property
    def sign(self) -> int:
        return -1 if self.n < 0 else 1

    @property
    def complete(self) -> bool:
        return not self.cofactors

    @property
    def square_primes(self) -> Tuple[int, ...]:
        return tuple(p for p, e in self.factors if e >= 2)

    @property
    def status(self) -> str:
        if self.squarefree is None:
            return "UNKNOWN"
        return "SQUAREFREE" if self.squarefree else "NOT_SQUAREFREE"

    def reproduces(self) -> bool:
        """Le certificat redonne |n| exactement"""
        total = math.prod(p ** e for p, e in self.factors) * math.prod(self.cofactors)
        return total == abs(self.n)

    def certificate(self) -> str:
        parts = [str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors]
        parts += [f"[cofacteur non factorisé de {c.bit_length()} bits]" for c in self.cofactors]
        return " · ".join(parts) if parts else "1"


def _product_tree(values: List[int]) -> int:
    while len(values) > 1:
        values = [math.prod(values[i:i + 2]) for i in range(0, len(values), 2)]
    return values[0] if values else 1


@lru_cache(maxsize=4)
def _primorial(bound: int) -> int:
    return _product_tree(list(sieve.primerange(2, bound + 1)))


def _strip_small(m: int, bound: int, found: Dict[int, int]) -> int:
    """Retire les facteurs premiers ≤ bound, renvoie le cofacteur"""
    if m.bit_length() <= 64:
        for p in sieve.primerange(2, bound + 1):
            if p * p > m:
                break
            while m % p == 0:
                found[p] = found.get(p, 0) + 1
                m //= p
        if m > 1 and math.isqrt(m) <= bound:
            found[m] = found.get(m, 0) + 1
            m = 1
        return m
    g = math.gcd(m, _primorial(bound))
    for p in sieve.primerange(2, bound + 1):
        if g == 1:
            break
        if g % p == 0:
            g //= p
            while m % p == 0:
                found[p] = found.get(p, 0) + 1
                m //= p
    return m


def _split(m: int, bound: int, budget: int, seed: int, found: Dict[int, int]) -> List[int]:
    """Factorise un cofacteur sans petit facteur ; renvoie les morceaux non résolus"""
    unresolved: List[int] = []
    pending = [m] if m > 1 else []
    attempt = 0
    while pending:
        k = pending.pop()
        if k == 1:
            continue
        if k <= bound * bound:
            found[k] = found.get(k, 0) + 1
            continue
        if k.bit_length() > RHO_MAX_BITS:
            unresolved.append(k)
            continue
        if isprime(k):
            found[k] = found.get(k, 0) + 1
            continue
        power = perfect_power(k)
        if power:
            base, e = power
            pending.extend([base] * e)
            continue
        attempt += 1
        d = pollard_rho(k, retries=3, seed=seed + attempt, max_steps=budget)
        if d is None or d in (1, k):
            unresolved.append(k)
            continue
        pending.extend([d, k // d])
    return unresolved


def squarefree(
    n: int,
    budget: int = Config.FACTOR_BUDGET,
    trial_bound: int = Config.TRIAL_DIVISION_BOUND,
    seed: int = Config.SEED,
    cache: Optional[FactorizationCache] = None,
) -> SquarefreeVerdict:
    """
    Décide si |n| est sans facteur carré

    Args:
        n: Entier non nul (le signe est ignoré)
        budget: Nombre maximal d'itérations de Pollard-rho par cofacteur
        trial_bound: Borne de la division d'essai
        seed: Graine de Pollard-rho
        cache: Cache disque optionnel

    Returns:
        SquarefreeVerdict ; squarefree vaut None si un cofacteur composé
        reste non factorisé sans qu'aucun carré n'ait été trouvé

    Raises:
        ZeroInput: si n = 0
    """
    if n == 0:
        raise ZeroInput("squarefree(0) n'est pas défini")
    if cache is not None:
        entry = cache.get(n)
        if entry is not None:
            factors = tuple((int(p), int(e)) for p, e in entry['factors'])
            cofactors = tuple(int(c) for c in entry['cofactors'])
            return SquarefreeVerdict(n, entry['squarefree'], factors, cofactors)
    found: Dict[int, int] = {}
    m = _strip_small(abs(n), trial_bound, found)
    unresolved = _split(m, trial_bound, budget, seed, found)
    factors = tuple(sorted(found.items()))
    if any(e >= 2 for _, e in factors):
        decided: Optional[bool] = False
    elif unresolved:
        decided = None
    else:
        decided = True
    verdict = SquarefreeVerdict(n, decided, factors, tuple(sorted(unresolved)))
    if decided is None:
        logger.info("🔍 Factorisation incomplète : %s", verdict.certificate())
    elif cache is not None:
        cache.insert(n, {
            'squarefree': decided,
            'factors': [[str(p), e] for p, e in factors],
            'cofactors': [str(c) for c in verdict.cofactors],
        })
    return verdict
