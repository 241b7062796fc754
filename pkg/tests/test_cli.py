"""
Tests de l'interface en ligne de commande
"""
import json
import os

import pytest

from cli import EXIT_INTERNAL, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE, main


def _run_json(capsys, *argv):
    code = main([*argv, '--json'])
    return code, json.loads(capsys.readouterr().out)


def test_analyze(capsys):
    code, doc = _run_json(capsys, 'analyze', '0', '-2', '--depth', '4')
    assert code == EXIT_OK
    assert doc['command'] == 'analyze'
    assert doc['arguments'] == {'b': 0, 'c': -2, 'depth': 4}
    assert doc['result']['verdict']['kind'] == "DYNAMICALLY_MONOGENIC_ALL_N"


def test_analyze_text_output(capsys):
    assert main(['analyze', '0', '17', '--depth', '3']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("monogen analyze")
    assert "NOT_MONOGENIC_AT(2, 3)" in out


def test_analyze_reducible(capsys):
    assert main(['analyze', '0', '-4']) == EXIT_USAGE
    assert "réductible" in capsys.readouterr().err


def test_invalid_integer_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(['analyze', 'x', '1'])
    assert err.value.code == EXIT_USAGE


def test_split2_verify(capsys):
    code, doc = _run_json(capsys, 'split2', '-1', '2', '5', '--verify')
    assert code == EXIT_OK
    assert doc['result']['verification']['match'] is True
    assert doc['result']['predicted']['total_degree'] == 32


def test_split2_ramified_prime(capsys):
    code, doc = _run_json(capsys, 'split2', '0', '-2', '3')
    assert code == EXIT_OK
    assert doc['result']['prime'] == "(2, α_3)^8"


def test_split2_not_2_maximal(capsys):
    assert main(['split2', '0', '3', '2']) == EXIT_UNKNOWN


def test_oracle(capsys):
    code, doc = _run_json(capsys, 'oracle', '0', '-2', '3', '3')
    assert code == EXIT_OK
    assert doc['result']['banner'] == "AGREE"


@pytest.mark.parametrize("argv", [
    ['oracle', '0', '-2', '2', '4'],
    ['oracle', '0', '-2', '7', '3'],
    ['oracle', '0', '-4', '2', '3'],
])
def test_oracle_rejections(argv):
    assert main(argv) == EXIT_USAGE


def test_pcf_scan(capsys):
    code, doc = _run_json(capsys, 'pcf-scan', 'h', '0', '3')
    assert code == EXIT_OK
    assert doc['result']['counts'] == {'true': 2, 'false': 2, 'unknown': 0, 'disagreements': 0}


def test_pcf_scan_square_prime_above_small_primes(capsys):
    code, doc = _run_json(capsys, 'pcf-scan', 'f', '578', '578')
    assert code == EXIT_OK
    assert doc['result']['counts']['disagreements'] == 0


def test_pcf_scan_empty_range():
    assert main(['pcf-scan', 'f', '3', '1']) == EXIT_USAGE


def test_pcf_scan_unknown_family():
    with pytest.raises(SystemExit) as err:
        main(['pcf-scan', 'k', '0', '3'])
    assert err.value.code == EXIT_USAGE


def test_factor2(capsys):
    code, doc = _run_json(capsys, 'factor2', '-1', '2', '3')
    assert code == EXIT_OK
    assert sum(doc['result']['degrees']) == 8
    assert len(doc['result']['ideals']) == len(doc['result']['factors'])


def test_check_identities(capsys):
    code, doc = _run_json(capsys, 'check-identities', '--suite', 'composition')
    assert code == EXIT_OK
    assert doc['result']['passed'] == doc['result']['total'] == 20


def test_open_question(capsys):
    code, doc = _run_json(capsys, 'check-identities', '--suite', 'open-question')
    assert code == EXIT_OK
    assert [row['m'] for row in doc['result']['open_question']] == [1, 2, 3, 4]


def test_seed_is_recorded(capsys):
    _, doc = _run_json(capsys, 'analyze', '1', '1', '--depth', '2', '--seed', '7')
    assert doc['provenance']['seed'] == 7
    assert doc['provenance']['budgets']['seed'] == 7


def test_pdf_output(capsys, tmp_path):
    assert main(['analyze', '0', '-2', '--depth', '2', '--pdf', str(tmp_path)]) == EXIT_OK
    assert os.listdir(tmp_path) == ["rapport_analyze_b0_c-2_depth2.pdf"]


def test_cache_dir_option(capsys, tmp_path):
    cache_dir = tmp_path / "cache"
    assert main(['analyze', '0', '1', '--depth', '4', '--cache-dir', str(cache_dir)]) == EXIT_OK
    assert any(name.endswith(".json") for name in os.listdir(cache_dir))


@pytest.mark.slow
def test_repro(capsys):
    code, doc = _run_json(capsys, 'repro')
    assert code == EXIT_OK
    assert doc['result']['passed'] == doc['result']['total']


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_USAGE, EXIT_UNKNOWN, EXIT_INTERNAL}) == 4
