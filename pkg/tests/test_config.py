"""
Tests de la configuration
"""
from config import Budgets, Config


def test_default_budgets():
    budgets = Config.budgets()
    assert budgets == Budgets(
        max_bits=Config.MAX_BITS,
        factor_budget=Config.FACTOR_BUDGET,
        trial_bound=Config.TRIAL_DIVISION_BOUND,
        orbit_steps=Config.ORBIT_STEPS,
        seed=Config.SEED,
    )


def test_budget_factor_and_overrides():
    budgets = Config.budgets(budget_factor=0.5, max_bits=64, seed=3)
    assert budgets.factor_budget == Config.FACTOR_BUDGET // 2
    assert budgets.max_bits == 64
    assert budgets.seed == 3
    assert Config.budgets(budget_factor=0).factor_budget == 1


def test_cache_dir_from_environment(monkeypatch, tmp_path):
    monkeypatch.delenv('MONOGEN_CACHE_DIR', raising=False)
    assert Config.cache_dir() is None
    monkeypatch.setenv('MONOGEN_CACHE_DIR', f"  {tmp_path}  ")
    assert Config.cache_dir() == str(tmp_path)


def test_validate(monkeypatch):
    monkeypatch.delenv('MONOGEN_CACHE_DIR', raising=False)
    status = Config.validate()
    assert set(status) == {'budgets', 'degree_caps', 'cache_dir'}
    assert all(status.values())
