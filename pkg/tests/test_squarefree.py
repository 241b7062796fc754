"""
Tests du test sans facteur carré
"""
import pytest

from tools.errors import ZeroInput
from tools.squarefree import squarefree

P1 = 1_000_003
P2 = 1_000_033
M31 = (1 << 31) - 1
M61 = (1 << 61) - 1


@pytest.mark.parametrize("n, expected", [
    (1, True),
    (2, True),
    (-7, True),
    (12, False),
    (30, True),
    (-50, False),
    (2 ** 40, False),
])
def test_small_integers(n, expected):
    verdict = squarefree(n)
    assert verdict.squarefree is expected
    assert verdict.complete
    assert verdict.reproduces()


def test_certificate_and_sign():
    verdict = squarefree(-12)
    assert verdict.sign == -1
    assert verdict.factors == ((2, 2), (3, 1))
    assert verdict.square_primes == (2,)
    assert verdict.certificate() == "2^2 · 3"
    assert verdict.status == "NOT_SQUAREFREE"


def test_square_of_large_prime():
    verdict = squarefree(5 * P1 * P1)
    assert verdict.squarefree is False
    assert (P1, 2) in verdict.factors


def test_product_of_large_primes():
    verdict = squarefree(P1 * P2)
    assert verdict.squarefree is True
    assert verdict.factors == ((P1, 1), (P2, 1))


def test_large_prime_factor():
    verdict = squarefree(3 * M61)
    assert verdict.squarefree is True
    assert verdict.factors == ((3, 1), (M61, 1))


def test_exhausted_budget_is_unknown():
    verdict = squarefree(M31 * M61, budget=1)
    assert verdict.squarefree is None
    assert verdict.status == "UNKNOWN"
    assert verdict.cofactors == (M31 * M61,)
    assert verdict.reproduces()
    assert "cofacteur non factorisé" in verdict.certificate()


def test_square_found_despite_unresolved_cofactor():
    verdict = squarefree(9 * M31 * M61, budget=1)
    assert verdict.squarefree is False


def test_zero_is_rejected():
    with pytest.raises(ZeroInput):
        squarefree(0)


def test_seed_does_not_change_decided_verdict():
    assert squarefree(P1 * P2, seed=0).factors == squarefree(P1 * P2, seed=7).factors
