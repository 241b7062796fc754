"""
Tests des documents de rapport
"""
import json
import os

from config import Config
from tools.analyzer import oracle_comparison, report
from tools.intpoly import Dyadic, QuadParams
from tools.pdf_report import generate_pdf_report, report_filename
from tools.serialize import ReportDocument, build_document, dump_json, load_json, render_text, to_jsonable
from tools.splitting import verify_split2

SCHEMA_PATH = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                           "schemas", "report_document.schema.json")


def test_large_integers_become_strings():
    assert to_jsonable(-5) == -5
    assert to_jsonable((1 << 63) - 1) == (1 << 63) - 1
    assert to_jsonable(1 << 63) == str(1 << 63)
    assert to_jsonable([-(1 << 70)]) == [str(-(1 << 70))]


def test_library_values():
    assert to_jsonable(Dyadic(3, 2)) == "3/4"
    assert to_jsonable(QuadParams(1, 2)) == {'b': 1, 'c': 2}
    assert to_jsonable(QuadParams(0, -2).poly) == {'degree': 2, 'text': "x^2 - 2"}


def test_report_document(x2m2):
    doc = build_document('analyze', {'b': 0, 'c': -2, 'depth': 4}, report(x2m2, 4))
    result = doc.result
    assert result['verdict']['kind'] == "DYNAMICALLY_MONOGENIC_ALL_N"
    assert result['verdict']['text'] == "DYNAMICALLY_MONOGENIC_ALL_N"
    assert result['N'] == "ALL"
    assert result['two_class']['maximal'] is True
    assert result['pcf']['finite'] is True
    assert doc.provenance.tool == Config.TOOL_NAME
    assert doc.provenance.budgets['seed'] == Config.SEED


def test_json_is_deterministic_and_loads_back(x2m2):
    doc = build_document('analyze', {'b': 0, 'c': -2, 'depth': 3}, report(x2m2, 3), seed=5)
    text = dump_json(doc)
    assert text == dump_json(build_document('analyze', {'b': 0, 'c': -2, 'depth': 3}, report(x2m2, 3), seed=5))
    assert load_json(text) == doc
    assert json.loads(text)['provenance']['seed'] == 5


def test_shapes_and_ore_reports():
    split = to_jsonable(verify_split2(QuadParams(-1, 2), 3))
    assert split['match'] is True
    assert split['predicted']['total_degree'] == 8
    ore = to_jsonable(oracle_comparison(QuadParams(0, 3), 1, 2))
    factor = ore['ore']['factors'][0]
    assert 'terms' not in factor['development']
    assert factor['residuals'][0]['text'] == "y^2 + y + 1"
    assert factor['polygon']['sides'][0]['slope'] == "-1"
    assert ore['agree'] is True


def test_render_text(x2m2):
    text = render_text(build_document('analyze', {'b': 0, 'c': -2}, report(x2m2, 2)))
    assert text.splitlines()[0] == f"{Config.TOOL_NAME} analyze (schéma {Config.SCHEMA_VERSION})"
    assert "  verdict :" in text
    assert "DYNAMICALLY_MONOGENIC_ALL_N" in text


def test_schema_matches_model():
    with open(SCHEMA_PATH, encoding='utf-8') as fh:
        schema = json.load(fh)
    assert set(schema['required']) == set(ReportDocument.model_fields)
    assert schema['properties']['schema_version']['const'] == Config.SCHEMA_VERSION
    budgets = schema['properties']['provenance']['properties']['budgets']
    assert set(budgets['required']) == set(Config.budgets().__dataclass_fields__)


def test_pdf_report(tmp_path, x2m2):
    doc = build_document('analyze', {'b': 0, 'c': -2, 'depth': 2}, report(x2m2, 2))
    assert report_filename(doc) == "rapport_analyze_b0_c-2_depth2.pdf"
    path = generate_pdf_report(doc, str(tmp_path))
    assert path.endswith(".pdf")
    with open(path, 'rb') as fh:
        assert fh.read(5) == b"%PDF-"
