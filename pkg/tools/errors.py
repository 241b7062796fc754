"""
Exceptions typées de la bibliothèque de monogénéité
"""


class MonogenicityError(Exception):
    """Classe de base de toutes les erreurs de la bibliothèque"""


class CoefficientBlowup(MonogenicityError):
    """Un coefficient dépasse la limite de bits autorisée"""

    def __init__(self, bits: int, max_bits: int):
        self.bits = bits
        self.max_bits = max_bits
        super().__init__(f"coefficient de {bits} bits (limite {max_bits})")


class DegreeCapExceeded(MonogenicityError):
    """Le degré demandé dépasse le plafond configuré"""

    def __init__(self, degree: int, cap: int):
        self.degree = degree
        self.cap = cap
        super().__init__(f"degré {degree} supérieur au plafond {cap}")


class DivisionByZero(MonogenicityError, ZeroDivisionError):
    """Inversion de l'élément nul dans un corps fini"""


class PhiNotIrreducibleModP(MonogenicityError):
    """Le polynôme φ n'est pas irréductible modulo p"""


class ReducibleInput(MonogenicityError):
    """Le polynôme x²+bx+c est réductible sur ℚ"""


class Not2MaximalInput(MonogenicityError):
    """Le paramètre est dans la classe non 2-maximale"""


class ZeroInput(MonogenicityError, ValueError):
    """Entier nul là où une valeur non nulle est requise"""


class OracleDegreeExceeded(DegreeCapExceeded):
    """Polynôme trop grand pour les oracles de vérification"""
