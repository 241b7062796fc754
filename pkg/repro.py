"""
Script de reproduction des exemples de référence
"""
import sys
from typing import Callable, Dict, List, Tuple

from config import Config
from tools.analyzer import (
    Irreducibility,
    TwoClassTag,
    VerdictKind,
    classify_2,
    critical_orbit,
    report,
    stability_check,
)
from tools.dedekind import dedekind_p_maximal
from tools.ffpoly import F, G, GF2Poly, gf2_iterate, gf2_is_irreducible_bits
from tools.intpoly import Dyadic, MonicIntPoly, QuadParams, compose, discriminant, iterate
from tools.orenewton import develop, ind_phi, ore_analyze, principal_polygon
from tools.pcf import Family, FamilyParam, family_scan, family_verdict, squarefree
from tools.splitting import factor_mod2, predict_split2, verify_split2

X2_MINUS_2 = QuadParams(0, -2)

# Coefficients pairs de f⁵, de x^32 à x^0
F5_EVEN_COEFFS = [1, -32, 464, -4032, 23400, -95680, 283360, -615296, 980628,
                  -1136960, 940576, -537472, 201552, -45696, 5440, -256, 2]

SPLIT_EXAMPLE_DEGREE_8 = {
    "x^8 + x^6 + x^5 + x^4 + x^3 + x + 1",
    "x^8 + x^6 + x^5 + x^3 + 1",
}
UNIFORM_EXAMPLE_DEGREE_8 = {
    "x^8 + x^6 + x^5 + x^2 + 1",
    "x^8 + x^6 + x^5 + x + 1",
    "x^8 + x^5 + x^3 + x + 1",
    "x^8 + x^5 + x^4 + x^3 + x^2 + x + 1",
}


def _bits(text: str) -> int:
    """'x^8 + x^3 + 1' → vecteur de bits"""
    bits = 0
    for term in text.split(" + "):
        if term == "1":
            bits |= 1
        elif term == "x":
            bits |= 2
        else:
            bits |= 1 << int(term.split("^")[1])
    return bits


def check_iterates() -> bool:
    """Itérées de x² − 2 jusqu'au niveau 5"""
    x2m2 = X2_MINUS_2.poly
    ok = compose(x2m2, x2m2) == MonicIntPoly.from_dense([2, 0, -4, 0, 1])
    ok &= iterate(X2_MINUS_2, 3) == MonicIntPoly.from_dense([2, 0, -16, 0, 20, 0, -8, 0, 1])
    ok &= iterate(X2_MINUS_2, 4).dense() == [2, 0, -64, 0, 336, 0, -672, 0, 660, 0, -352, 0, 104, 0, -16, 0, 1]
    f5 = iterate(X2_MINUS_2, 5).dense()
    ok &= f5[::-2] == F5_EVEN_COEFFS and not any(f5[1::2])
    return ok


def check_discriminant_and_critical_value() -> bool:
    ok = discriminant(X2_MINUS_2.poly) == 8 == X2_MINUS_2.disc
    q = QuadParams(1, 1)
    return ok and q.apply(q.critical_point) == Dyadic(3, 2)


def check_two_classes() -> bool:
    return (classify_2(QuadParams(-1, 2)).tag == TwoClassTag.B_ODD_UNRAMIFIED
            and classify_2(X2_MINUS_2).tag == TwoClassTag.EISENSTEIN_RAMIFIED)


def check_stability() -> bool:
    return all(stability_check(q) == Irreducibility.CERTIFIED_STABLE for q in (QuadParams(-1, 2), X2_MINUS_2))


def check_example_orbit() -> bool:
    orbit = critical_orbit(X2_MINUS_2, 8)
    return orbit.values == (Dyadic(-2), Dyadic(2)) and orbit.preperiod == 1 and orbit.period == 1


def check_example_verdict() -> bool:
    rep = report(X2_MINUS_2, 6)
    return rep.verdict.kind == VerdictKind.DYNAMICALLY_MONOGENIC_ALL_N and not any(
        o.offending_primes for o in rep.obstructions)


def check_eisenstein_oracles() -> bool:
    f = X2_MINUS_2.poly
    ore = ore_analyze(f, 2)
    return dedekind_p_maximal(f, 2).p_maximal and ore.p_maximal and ore.shape is not None \
        and ore.shape.entries == ((2, 1, 1),)


def check_split_mixed() -> bool:
    q = QuadParams(-1, 2)
    res = verify_split2(q, 5)
    degree_8 = {str(g) for g, _ in res.factors if g.degree == 8}
    return (res.match and res.actual.degree_multiset() == [1, 1, 2, 4, 4, 4, 8, 8]
            and res.squarefree_mod_2 and degree_8 == SPLIT_EXAMPLE_DEGREE_8
            and all(gf2_is_irreducible_bits(_bits(t)) for t in SPLIT_EXAMPLE_DEGREE_8))


def check_split_uniform() -> bool:
    q = QuadParams(-1, 1)
    shape = predict_split2(q, 5)
    factors = {str(g) for g, _ in factor_mod2(q, 5)}
    return shape.entries == ((1, 8, 4),) and factors == UNIFORM_EXAMPLE_DEGREE_8


def check_split_ramified() -> bool:
    return (predict_split2(X2_MINUS_2, 3).entries == ((8, 1, 1),)
            and predict_split2(X2_MINUS_2, 4).entries == ((16, 1, 1),))


def check_gf2_composition() -> bool:
    return (gf2_iterate(G, 2) == G * F
            and gf2_iterate(G, 2) == GF2Poly(0b10010)
            and gf2_iterate(F, 2) == GF2Poly(0b10011))


def check_families() -> bool:
    return (squarefree(2).squarefree is True
            and family_verdict(FamilyParam(Family.H_A, 0)).monogenic_all_n is True
            and family_verdict(FamilyParam(Family.F_A, 1)).monogenic_all_n is False)


def check_phi_development() -> bool:
    """f = (x + bt)² + (b − 2bt)(x + bt) + b²t² − b²t + c avec 2t ≡ 1 mod p²"""
    ok = True
    for q, p in ((QuadParams(1, 7), 3), (QuadParams(3, 5), 5)):
        b, c = q.b, q.c
        t = pow(2, -1, p * p)
        dev = develop(q.poly, MonicIntPoly((b * t,)), p)
        ok &= dev.terms == ((b * b * t * t - b * b * t + c,), (b - 2 * b * t,), (1,))
    return ok


def check_index_witness() -> bool:
    """a₀ ≡ a₁ ≡ 0 mod 9 pour x² + x + 7 : ind ≥ 1, donc non 3-maximal"""
    q = QuadParams(1, 7)
    dev = develop(q.poly, MonicIntPoly((5,)), 3)
    return ind_phi(principal_polygon(dev)) >= 1 and not ore_analyze(q.poly, 3).p_maximal


def check_example_odd_parts() -> bool:
    orbit = critical_orbit(X2_MINUS_2, 8)
    return [v.odd_part() for v in orbit.values] == [-1, 1]


def check_split_ideals() -> bool:
    return verify_split2(QuadParams(-1, 2), 5).ideals[:2] == ("(2, α_5)", "(2, α_5 + 1)")


def check_family_scan() -> bool:
    scan = family_scan(Family.H_A, -5, 5)
    row = next(r for r in scan.rows if r.verdict.param.a == 0)
    return row.verdict.monogenic_all_n is True and scan.counts['disagreements'] == 0


EXAMPLES: List[Tuple[str, str, Callable[[], bool]]] = [
    ("iterates", "itérées de x² − 2, n ≤ 5", check_iterates),
    ("discriminant", "Disc(x² − 2) = 8 et f(−b/2) = −Disc/4", check_discriminant_and_critical_value),
    ("two-class", "classes 2-adiques de (−1, 2) et (0, −2)", check_two_classes),
    ("stability", "stabilité de (−1, 2) et (0, −2)", check_stability),
    ("orbit", "orbite critique de x² − 2", check_example_orbit),
    ("odd-parts", "A₁ = −1 puis Aₙ = 1 pour x² − 2", check_example_odd_parts),
    ("verdict", "toutes les itérées de x² − 2 sont monogènes", check_example_verdict),
    ("eisenstein", "x² − 2 est 2-maximal, totalement ramifié", check_eisenstein_oracles),
    ("phi-development", "développement en x + bt, 2t ≡ 1 mod p²", check_phi_development),
    ("index-witness", "ind ≥ 1 pour x² + x + 7 en 3", check_index_witness),
    ("split-mixed", "2 dans K_5 pour x² − x + 2", check_split_mixed),
    ("split-ideals", "idéaux (2, α_5)(2, α_5 + 1)…", check_split_ideals),
    ("split-uniform", "2 dans K_5 pour x² − x + 1", check_split_uniform),
    ("split-ramified", "2 = p^(2^n) pour x² − 2", check_split_ramified),
    ("gf2-composition", "G² = G·F et F² = x⁴ + x + 1", check_gf2_composition),
    ("families", "familles PCF : h_0 vrai, f_1 faux, 2 sans carré", check_families),
    ("family-scan", "balayage h sur [−5, 5], h_0 vrai", check_family_scan),
]


def run_repro() -> List[Dict]:
    """
    Exécute chaque exemple de référence

    Returns:
        Liste de {'name', 'description', 'passed', 'detail'}
    """
    rows = []
    for name, description, check in EXAMPLES:
        try:
            passed, detail = bool(check()), ""
        except Exception as e:
            passed, detail = False, f"{type(e).__name__} : {e}"
        rows.append({'name': name, 'description': description, 'passed': passed, 'detail': detail})
    return rows


def run_healthcheck() -> bool:
    """
    Configuration puis exemples, avec affichage

    Returns:
        True si tout passe, False sinon
    """
    print("🏥 Reproduction des exemples de référence\n")
    all_ok = True

    print("1️⃣  Vérification de la configuration...")
    for key, ok in Config.validate().items():
        print(f"   {'✅' if ok else '❌'} {key}")
        all_ok &= ok
    print()

    print("2️⃣  Exemples...")
    for row in run_repro():
        status = "✅" if row['passed'] else "❌"
        print(f"   {status} {row['name']:<15} {row['description']}")
        if row['detail']:
            print(f"      {row['detail']}")
        all_ok &= row['passed']
    print()

    print("=" * 50)
    if all_ok:
        print("✅ Tous les exemples sont reproduits !")
    else:
        print("❌ Certains exemples ont échoué.")
    print("=" * 50)
    return all_ok


if __name__ == "__main__":
    from dotenv import load_dotenv
    load_dotenv()

    success = run_healthcheck()
    sys.exit(0 if success else 1)
