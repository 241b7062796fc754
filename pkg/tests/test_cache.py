"""
Tests du cache disque des factorisations
"""
import os

from tools.squarefree import squarefree


def test_insert_and_get(cache):
    assert cache.get(12) is None
    assert cache.insert(12, {'squarefree': False, 'factors': [["2", 2], ["3", 1]], 'cofactors': []})
    entry = cache.get(-12)
    assert entry['n'] == "12"
    assert entry['squarefree'] is False


def test_clear(cache):
    cache.insert(6, {'squarefree': True, 'factors': [], 'cofactors': []})
    cache.insert(10, {'squarefree': True, 'factors': [], 'cofactors': []})
    assert cache.clear() == 2
    assert cache.get(6) is None


def test_corrupt_entry_is_ignored(cache):
    cache.insert(15, {'squarefree': True, 'factors': [], 'cofactors': []})
    with open(cache._path(15), 'w', encoding='utf-8') as fh:
        fh.write("{pas du json")
    assert cache.get(15) is None


def test_squarefree_populates_cache(cache):
    squarefree(360, cache=cache)
    entry = cache.get(360)
    assert entry['squarefree'] is False
    assert [int(p) for p, _ in entry['factors']] == [2, 3, 5]


def test_squarefree_reads_cache(cache):
    # une entrée stockée prime sur le calcul
    cache.insert(35, {'squarefree': True, 'factors': [["5", 1], ["7", 1]], 'cofactors': []})
    verdict = squarefree(35, cache=cache)
    assert verdict.factors == ((5, 1), (7, 1))


def test_unknown_verdicts_are_not_cached(cache):
    n = ((1 << 31) - 1) * ((1 << 61) - 1)
    squarefree(n, budget=1, cache=cache)
    assert not os.path.exists(cache._path(n))
