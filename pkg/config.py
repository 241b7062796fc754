"""
Configuration de l'application
"""
import os
from dataclasses import dataclass
from typing import Dict, Optional


@dataclass(frozen=True)
class Budgets:
    """Budgets de calcul transmis aux opérations coûteuses"""
    max_bits: int
    factor_budget: int
    trial_bound: int
    orbit_steps: int
    seed: int = 0


class Config:
    """Classe de configuration centralisée"""

    # Profondeur et tailles
    DEFAULT_DEPTH = 12
    MAX_BITS = 1_000_000
    ORBIT_STEPS = 16

    # Factorisation entière
    TRIAL_DIVISION_BOUND = 1_000_000
    FACTOR_BUDGET = 200_000
    SEED = 0

    # Plafonds de degré
    GF2_DEGREE_CAP = 1 << 16
    DEDEKIND_MAX_DEGREE = 64
    ORACLE_MAX_LEVEL = 6
    ORACLE_PRIMES = (2, 3, 5, 7, 11, 13)

    # Témoins d'irréductibilité
    WITNESS_PRIME_BOUND = 200
    WITNESS_MAX_DEPTH = 6

    # Rapports
    SCHEMA_VERSION = "1.0"
    TOOL_NAME = "monogen"
    TOOL_VERSION = "1.0.0"
    REPORTS_DIR = "reports"

    @classmethod
    def cache_dir(cls) -> Optional[str]:
        """
        Retourne le répertoire de cache des factorisations

        Returns:
            Chemin lu dans MONOGEN_CACHE_DIR, ou None si le cache est désactivé
        """
        value = os.getenv('MONOGEN_CACHE_DIR', '').strip()
        return value or None

    @classmethod
    def budgets(cls, budget_factor: float = 1.0, max_bits: Optional[int] = None,
                seed: Optional[int] = None) -> Budgets:
        """
        Construit les budgets effectifs

        Args:
            budget_factor: Multiplicateur du budget de Pollard-rho
            max_bits: Limite de bits (défaut MAX_BITS)
            seed: Graine de Pollard-rho (défaut SEED)

        Returns:
            Budgets figés
        """
        return Budgets(
            max_bits=max_bits if max_bits is not None else cls.MAX_BITS,
            factor_budget=max(1, int(cls.FACTOR_BUDGET * budget_factor)),
            trial_bound=cls.TRIAL_DIVISION_BOUND,
            orbit_steps=cls.ORBIT_STEPS,
            seed=seed if seed is not None else cls.SEED,
        )

    @classmethod
    def validate(cls) -> Dict[str, bool]:
        """
        Valide la configuration

        Returns:
            Dictionnaire avec les statuts de validation
        """
        cache = cls.cache_dir()
        return {
            'budgets': all(v > 0 for v in (cls.MAX_BITS, cls.FACTOR_BUDGET, cls.TRIAL_DIVISION_BOUND)),
            'degree_caps': cls.DEDEKIND_MAX_DEGREE <= cls.GF2_DEGREE_CAP,
            'cache_dir': cache is None or os.access(os.path.dirname(os.path.abspath(cache)) or '.', os.W_OK),
        }
