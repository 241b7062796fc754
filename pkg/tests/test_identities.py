"""
Tests des suites d'identités
"""
import pytest

from tools.identities import SUITES, composition_suite, factorization_suite, orbit_suite, run_suite


def test_composition_suite():
    checks = composition_suite()
    assert len(checks) == 20
    assert all(c.passed for c in checks)
    assert checks[0].parameter == "n=1"


def test_factorization_suite():
    checks = factorization_suite()
    assert checks and all(c.passed for c in checks)
    names = {c.name for c in checks}
    assert "G^(2^m) = x^(2^(2^m)) + x" in names
    assert "pgcd(F^i, F^j) = 1" in names
    assert "G^(n+1) = G^n F^n" not in names


def test_orbit_suite_records_two_adic_gap():
    checks = orbit_suite(bound=4, n_max=2)
    assert all(c.passed for c in checks)
    scaling = [c for c in checks if c.parameter.startswith("n=")]
    assert [c.detail for c in scaling] == ["écart 2-adique observé : [2]", "écart 2-adique observé : [4]"]


def test_run_suite():
    assert len(run_suite('composition')) == 20
    assert len(run_suite('all')) == sum(len(suite()) for suite in SUITES.values())
    with pytest.raises(KeyError):
        run_suite('inconnue')
