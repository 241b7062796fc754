"""
Tests des exemples de référence
"""
from repro import EXAMPLES, run_healthcheck, run_repro


def test_example_names_are_unique():
    names = [name for name, _, _ in EXAMPLES]
    assert len(names) == len(set(names))


def test_all_examples_reproduce():
    rows = run_repro()
    assert len(rows) == len(EXAMPLES)
    assert [r['name'] for r in rows if not r['passed']] == []


def test_failing_check_is_reported(monkeypatch):
    def boom():
        raise RuntimeError("panne")

    monkeypatch.setattr("repro.EXAMPLES", [("boom", "toujours en échec", boom)])
    rows = run_repro()
    assert rows == [{'name': "boom", 'description': "toujours en échec", 'passed': False,
                     'detail': "RuntimeError : panne"}]


def test_healthcheck_output(capsys, monkeypatch):
    monkeypatch.delenv('MONOGEN_CACHE_DIR', raising=False)
    assert run_healthcheck()
    out = capsys.readouterr().out
    assert "✅ Tous les exemples sont reproduits !" in out
