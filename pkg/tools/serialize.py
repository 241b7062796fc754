"""
Documents de rapport : modèle pydantic, conversion JSON et rendu texte
"""
import dataclasses
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from config import Budgets, Config
from tools.ffpoly import GF2Poly, GFpPoly
from tools.intpoly import Dyadic, MonicIntPoly, QuadParams
from tools.shape import SplittingShape

INT64_MIN, INT64_MAX = -(1 << 63), (1 << 63) - 1

# propriétés calculées exportées en plus des champs
_EXTRA_PROPERTIES: Dict[str, tuple] = {
    'TwoClass': ('maximal', 'ramification'),
    'CriticalOrbit': ('finite',),
    'OddObstruction': ('status',),
    'SquarefreeVerdict': ('status', 'complete'),
    'SplitVerification': ('match', 'squarefree_mod_2'),
    'OracleComparison': ('agree',),
    'ScalingRelation': ('odd_parts_equal', 'two_adic_gap'),
    'OpenQuestionRow': ('pattern_holds',),
    'ScanRow': ('agree',),
    'FamilyScan': ('counts',),
    'PolygonSide': ('slope', 'degree'),
    'ResidualPoly': ('degree', 'is_separable', 'factor_degrees'),
}

# types dont le rendu str() est joint sous la clé 'text'
_TEXT_TYPES = ('ResidualPoly', 'Verdict')

# champs volumineux ou redondants
_SKIPPED_FIELDS: Dict[str, tuple] = {
    'PhiDevelopment': ('terms',),
    'FqElem': ('modulus',),
}


# ===== MODÈLES =====

class Provenance(BaseModel):
    """Outil, version, graine et budgets ayant produit le document"""
    tool: str
    version: str
    seed: int
    budgets: Dict[str, int]


class ReportDocument(BaseModel):
    """Enveloppe commune à toutes les commandes"""
    schema_version: str
    command: str
    arguments: Dict[str, Any]
    result: Any
    provenance: Provenance


# ===== CONVERSION =====

def _int(value: int) -> Any:
    return value if INT64_MIN <= value <= INT64_MAX else str(value)


def to_jsonable(obj: Any) -> Any:
    """
    Convertit les objets de la bibliothèque en valeurs JSON

    Les entiers hors de l'intervalle signé 64 bits deviennent des chaînes
    décimales ; les polynômes et dyadiques sont rendus sous forme lisible.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, int):
        return _int(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Dyadic):
        return str(obj)
    if isinstance(obj, QuadParams):
        return {'b': _int(obj.b), 'c': _int(obj.c)}
    if isinstance(obj, MonicIntPoly):
        return {'degree': obj.degree, 'text': str(obj)}
    if isinstance(obj, (GFpPoly, GF2Poly)):
        return str(obj)
    if isinstance(obj, SplittingShape):
        return {
            'entries': [[e, f, count] for e, f, count in obj.entries],
            'n': obj.n,
            'prime_count': obj.prime_count,
            'total_degree': obj.total_degree,
            'text': str(obj),
        }
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        name = type(obj).__name__
        skipped = _SKIPPED_FIELDS.get(name, ())
        out = {f.name: to_jsonable(getattr(obj, f.name))
               for f in dataclasses.fields(obj) if f.name not in skipped}
        for prop in _EXTRA_PROPERTIES.get(name, ()):
            value = getattr(obj, prop)
            out[prop] = to_jsonable(value() if callable(value) else value)
        if name in _TEXT_TYPES:
            out['text'] = str(obj)
        return out
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    return str(obj)


def build_document(command: str, arguments: Dict[str, Any], result: Any,
                   seed: int = Config.SEED, budgets: Optional[Budgets] = None) -> ReportDocument:
    """
    Assemble un document de rapport

    Args:
        command: Nom de la sous-commande
        arguments: Arguments effectifs
        result: Résultat brut de la bibliothèque
        seed: Graine utilisée
        budgets: Budgets effectifs

    Returns:
        ReportDocument
    """
    budgets = budgets or Config.budgets()
    return ReportDocument(
        schema_version=Config.SCHEMA_VERSION,
        command=command,
        arguments=to_jsonable(arguments),
        result=to_jsonable(result),
        provenance=Provenance(
            tool=Config.TOOL_NAME,
            version=Config.TOOL_VERSION,
            seed=seed,
            budgets=dataclasses.asdict(budgets),
        ),
    )


def dump_json(doc: ReportDocument) -> str:
    """Sortie déterministe : clés triées, indentation fixe"""
    return json.dumps(doc.model_dump(), sort_keys=True, indent=2, ensure_ascii=False)


def load_json(text: str) -> ReportDocument:
    return ReportDocument.model_validate(json.loads(text))


# ===== RENDU TEXTE =====

def _render(value: Any, indent: int, lines: List[str], key: Optional[str] = None):
    pad = "  " * indent
    head = f"{pad}{key} :" if key is not None else f"{pad}-"
    if isinstance(value, dict):
        lines.append(head)
        for k in sorted(value):
            _render(value[k], indent + 1, lines, k)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        lines.append(head)
        for v in value:
            _render(v, indent + 1, lines)
    else:
        text = ", ".join(str(v) for v in value) if isinstance(value, list) else str(value)
        lines.append(f"{head} {text}")


def render_text(doc: ReportDocument) -> str:
    """Même contenu que le JSON, en arbre indenté"""
    data = doc.model_dump()
    lines = [f"{data['provenance']['tool']} {data['command']} (schéma {data['schema_version']})"]
    for section in ('arguments', 'result', 'provenance'):
        _render(data[section], 0, lines, section)
    return "\n".join(lines)
