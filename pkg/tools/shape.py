"""
Forme de factorisation d'un idéal premier : multiensemble de (e, f, nombre)
"""
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple


@dataclass(frozen=True)
class SplittingShape:
    """Entrées (indice de ramification e, degré résiduel f, nombre), triées par (f, e)"""
    entries: Tuple[Tuple[int, int, int], ...]
    n: Optional[int] = None

    def __post_init__(self):
        merged: Counter = Counter()
        for e, f, count in self.entries:
            if count:
                merged[(e, f)] += count
        ordered = tuple((e, f, merged[(e, f)]) for e, f in sorted(merged, key=lambda ef: (ef[1], ef[0])))
        object.__setattr__(self, 'entries', ordered)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], n: Optional[int] = None) -> "SplittingShape":
        """Construit la forme à partir d'une liste de couples (e, f)"""
        return cls(tuple((e, f, 1) for e, f in pairs), n)

    @property
    def total_degree(self) -> int:
        return sum(e * f * count for e, f, count in self.entries)

    @property
    def prime_count(self) -> int:
        return sum(count for _, _, count in self.entries)

    def degree_multiset(self) -> List[int]:
        """Degrés résiduels avec répétition, triés"""
        return sorted(f for _, f, count in self.entries for _ in range(count))

    def is_unramified(self) -> bool:
        return all(e == 1 for e, _, _ in self.entries)

    def same_primes(self, other: "SplittingShape") -> bool:
        """Égalité des multiensembles, niveau ignoré"""
        return self.entries == other.entries

    def __str__(self) -> str:
        parts = [f"(e={e}, f={f})×{count}" for e, f, count in self.entries]
        return " · ".join(parts) if parts else "∅"
