"""
Fixtures partagées des tests
"""
import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import Config  # noqa: E402
from tools.cache import FactorizationCache  # noqa: E402
from tools.intpoly import QuadParams  # noqa: E402


@pytest.fixture
def rng():
    return random.Random(Config.SEED)


@pytest.fixture
def x2m2():
    """x² − 2"""
    return QuadParams(0, -2)


@pytest.fixture
def cache(tmp_path):
    return FactorizationCache(str(tmp_path / "cache"))


def irreducible_grid(bound: int):
    """(b, c) avec |b|, |c| ≤ bound et b² − 4c non carré"""
    for b in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            q = QuadParams(b, c)
            if not q.is_reducible():
                yield q


@pytest.fixture
def grid():
    return irreducible_grid
