"""
Interface en ligne de commande : analyse, décomposition de 2, oracles,
familles PCF, identités et reproduction des exemples
"""
import argparse
import logging
import random
import sys
from typing import Any, Dict, List, Optional, Tuple

from dotenv import load_dotenv
from sympy import isprime

from config import Budgets, Config
from tools.analyzer import (
    VerdictKind,
    oracle_comparison,
    ramified_generator,
    report,
)
from tools.cache import FactorizationCache
from tools.errors import (
    CoefficientBlowup,
    DegreeCapExceeded,
    MonogenicityError,
    Not2MaximalInput,
    ReducibleInput,
)
from tools.identities import SUITES, run_suite
from tools.intpoly import QuadParams
from tools.pcf import Family, family_scan
from tools.pdf_report import generate_pdf_report
from tools.serialize import ReportDocument, build_document, dump_json, render_text
from tools.splitting import factor_mod2, ideal_presentations, open_question_experiment, predict_split2, verify_split2

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    """Arguments invalides"""


class CliParser(argparse.ArgumentParser):
    """Les erreurs d'usage sortent avec le code 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog} : erreur : {message}\n")


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"entier invalide : {text!r}")


def _positive(text: str) -> int:
    value = _int_arg(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"entier ≥ 1 attendu : {text!r}")
    return value


def build_parser() -> CliParser:
    """
    Construit l'analyseur d'arguments

    Returns:
        CliParser avec une sous-commande par opération
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="sortie JSON")
    common.add_argument('--seed', type=_int_arg, default=Config.SEED, help="graine des factorisations")
    common.add_argument('--budget-factor', type=float, default=1.0, help="multiplicateur du budget de Pollard-rho")
    common.add_argument('--jobs', type=_positive, default=1, help="processus pour les balayages")
    common.add_argument('--max-bits', type=_positive, default=Config.MAX_BITS, help="taille maximale d'un coefficient")
    common.add_argument('--pdf', metavar='DIR', default=None, help="écrit aussi un rapport PDF dans DIR")
    common.add_argument('--cache-dir', default=None, help="cache disque des factorisations")
    common.add_argument('--verbose', '-v', action='store_true', help="journal détaillé sur stderr")

    parser = CliParser(prog=Config.TOOL_NAME, description="Monogénéité dynamique de x² + bx + c")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=CliParser)

    p = sub.add_parser('analyze', parents=[common], help="verdict de monogénéité des itérées")
    p.add_argument('b', type=_int_arg)
    p.add_argument('c', type=_int_arg)
    p.add_argument('--depth', type=_positive, default=Config.DEFAULT_DEPTH)

    p = sub.add_parser('split2', parents=[common], help="décomposition de 2 dans K_n")
    p.add_argument('b', type=_int_arg)
    p.add_argument('c', type=_int_arg)
    p.add_argument('n', type=_positive)
    p.add_argument('--verify', action='store_true', help="compare à la factorisation modulo 2")

    p = sub.add_parser('oracle', parents=[common], help="Dedekind, Ore et critère fermé côte à côte")
    p.add_argument('b', type=_int_arg)
    p.add_argument('c', type=_int_arg)
    p.add_argument('n', type=_positive)
    p.add_argument('p', type=_int_arg)

    p = sub.add_parser('pcf-scan', parents=[common], help="balayage d'une famille PCF")
    p.add_argument('family', choices=[f.value for f in Family])
    p.add_argument('a_min', type=_int_arg)
    p.add_argument('a_max', type=_int_arg)
    p.add_argument('--no-check', action='store_true', help="sans recoupement par les oracles")

    p = sub.add_parser('factor2', parents=[common], help="facteurs de fⁿ dans GF(2)[x]")
    p.add_argument('b', type=_int_arg)
    p.add_argument('c', type=_int_arg)
    p.add_argument('n', type=_positive)

    p = sub.add_parser('check-identities', parents=[common], help="suites d'identités")
    p.add_argument('--suite', choices=list(SUITES) + ['open-question', 'all'], default='all')

    sub.add_parser('repro', parents=[common], help="reproduit les exemples de référence")
    return parser


# ===== COMMANDES =====

def cmd_analyze(args, budgets: Budgets, cache: Optional[FactorizationCache]) -> Tuple[Any, int]:
    rep = report(QuadParams(args.b, args.c), args.depth, budgets, cache)
    code = EXIT_UNKNOWN if rep.verdict.kind == VerdictKind.UNKNOWN else EXIT_OK
    return rep, code


def cmd_split2(args, budgets: Budgets, cache) -> Tuple[Any, int]:
    q = QuadParams(args.b, args.c)
    result: Dict[str, Any] = {'predicted': predict_split2(q, args.n)}
    generator = ramified_generator(q, args.n)
    if generator:
        result['prime'] = f"{generator}^{1 << args.n}"
    if args.verify:
        result['verification'] = verify_split2(q, args.n)
        if not result['verification'].match:
            return result, EXIT_INTERNAL
    return result, EXIT_OK


def cmd_oracle(args, budgets: Budgets, cache) -> Tuple[Any, int]:
    if not isprime(args.p):
        raise UsageError(f"{args.p} n'est pas premier")
    if args.n > Config.ORACLE_MAX_LEVEL:
        raise UsageError(f"n ≤ {Config.ORACLE_MAX_LEVEL} pour les oracles")
    q = QuadParams(args.b, args.c)
    if q.is_reducible():
        raise ReducibleInput(f"x² + {q.b}x + {q.c} est réductible")
    comparison = oracle_comparison(q, args.n, args.p, random.Random(budgets.seed))
    banner = "AGREE" if comparison.agree else "DISAGREE"
    return {'banner': banner, 'comparison': comparison}, EXIT_OK if comparison.agree else EXIT_INTERNAL


def cmd_pcf_scan(args, budgets: Budgets, cache) -> Tuple[Any, int]:
    scan = family_scan(Family(args.family), args.a_min, args.a_max, args.jobs,
                       check=not args.no_check, budgets=budgets)
    counts = scan.counts
    if counts['disagreements']:
        return scan, EXIT_INTERNAL
    return scan, EXIT_UNKNOWN if counts['unknown'] else EXIT_OK


def cmd_factor2(args, budgets: Budgets, cache) -> Tuple[Any, int]:
    factors = factor_mod2(QuadParams(args.b, args.c), args.n)
    return {
        'factors': [{'poly': g, 'degree': g.degree, 'exponent': e} for g, e in factors],
        'degrees': sorted(g.degree for g, e in factors for _ in range(e)),
        'ideals': ideal_presentations(args.n, factors),
    }, EXIT_OK


def cmd_check_identities(args, budgets: Budgets, cache) -> Tuple[Any, int]:
    result: Dict[str, Any] = {}
    checks: List = []
    if args.suite != 'open-question':
        checks = run_suite(args.suite)
        result['checks'] = checks
        result['passed'] = sum(c.passed for c in checks)
        result['total'] = len(checks)
    if args.suite in ('open-question', 'all'):
        result['open_question'] = open_question_experiment()
    code = EXIT_OK if all(c.passed for c in checks) else EXIT_INTERNAL
    return result, code


def cmd_repro(args, budgets: Budgets, cache) -> Tuple[Any, int]:
    from repro import run_repro

    rows = run_repro()
    return {'examples': rows, 'passed': sum(r['passed'] for r in rows), 'total': len(rows)}, \
        EXIT_OK if all(r['passed'] for r in rows) else EXIT_INTERNAL


COMMANDS = {
    'analyze': cmd_analyze,
    'split2': cmd_split2,
    'oracle': cmd_oracle,
    'pcf-scan': cmd_pcf_scan,
    'factor2': cmd_factor2,
    'check-identities': cmd_check_identities,
    'repro': cmd_repro,
}

_GLOBAL_FLAGS = ('json', 'seed', 'budget_factor', 'jobs', 'max_bits', 'pdf', 'cache_dir', 'verbose', 'command')


# ===== POINT D'ENTRÉE =====

def _emit(doc: ReportDocument, as_json: bool, pdf_dir: Optional[str]):
    print(dump_json(doc) if as_json else render_text(doc))
    if pdf_dir:
        path = generate_pdf_report(doc, pdf_dir)
        if not path:
            logger.warning("❌ Rapport PDF non généré")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Exécute une sous-commande

    Args:
        argv: Arguments (sys.argv[1:] par défaut)

    Returns:
        Code de sortie : 0 succès, 1 usage, 2 indécis, 3 assertion interne
    """
    load_dotenv()
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(message)s",
    )
    budgets = Config.budgets(args.budget_factor, args.max_bits, args.seed)
    cache_dir = args.cache_dir or Config.cache_dir()
    cache = FactorizationCache(cache_dir) if cache_dir else None
    arguments = {k: v for k, v in vars(args).items() if k not in _GLOBAL_FLAGS}

    try:
        result, code = COMMANDS[args.command](args, budgets, cache)
    except (UsageError, ReducibleInput, DegreeCapExceeded, ValueError) as e:
        logger.error("❌ %s", e)
        print(f"erreur : {e}", file=sys.stderr)
        return EXIT_USAGE
    except (Not2MaximalInput, CoefficientBlowup) as e:
        logger.error("❌ %s", e)
        print(f"indécis : {e}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (AssertionError, MonogenicityError) as e:
        logger.error("❌ Erreur interne : %s", e)
        print(f"erreur interne : {e}", file=sys.stderr)
        return EXIT_INTERNAL

    doc = build_document(args.command, arguments, result, args.seed, budgets)
    _emit(doc, args.json, args.pdf)
    return code


if __name__ == "__main__":
    sys.exit(main())
