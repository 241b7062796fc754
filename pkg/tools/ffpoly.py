"""
Polynômes sur les corps premiers GF(p), spécialisation binaire GF(2) et
extensions résiduelles GF(p)[x]/(φ̄)

Chaîne de factorisation : décomposition sans carré, puis factorisation
par degrés distincts, puis scission en degré égal (Cantor-Zassenhaus, avec
l'application trace en caractéristique 2).
"""
import random
from dataclasses import dataclass
from functools import reduce
from typing import Dict, List, Optional, Sequence, Tuple

from config import Config
from tools.errors import DegreeCapExceeded, DivisionByZero


GF2_DEGREE_CAP = Config.GF2_DEGREE_CAP


def _prime_divisors(n: int) -> List[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _rng(rng: Optional[random.Random]) -> random.Random:
    return rng if rng is not None else random.Random(0)


# ===== LISTES DENSES SUR GF(p) =====

def gf_trim(a: Sequence[int], p: int) -> List[int]:
    out = [x % p for x in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def gf_degree(a: Sequence[int]) -> int:
    return len(a) - 1


def gf_add(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return gf_trim(out, p)


def gf_sub(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    return gf_add(a, [-x for x in b], p)


def gf_mul(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return gf_trim(out, p)


def gf_mul_ground(a: Sequence[int], k: int, p: int) -> List[int]:
    return gf_trim([x * k for x in a], p)


def gf_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[List[int], List[int]]:
    """Division euclidienne dans GF(p)[x]"""
    if not b:
        raise DivisionByZero("division par le polynôme nul")
    r = gf_trim(a, p)
    db = gf_degree(b)
    if gf_degree(r) < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (gf_degree(r) - db + 1)
    for k in range(gf_degree(r) - db, -1, -1):
        lead = r[k + db] * inv % p
        if lead:
            q[k] = lead
            for i in range(db + 1):
                r[k + i] = (r[k + i] - lead * b[i]) % p
    return gf_trim(q, p), gf_trim(r[:db], p)


def gf_rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    return gf_divmod(a, b, p)[1]


def gf_quo(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    return gf_divmod(a, b, p)[0]


def gf_monic(a: Sequence[int], p: int) -> Tuple[int, List[int]]:
    if not a:
        return 0, []
    lc = a[-1]
    inv = pow(lc, -1, p)
    return lc, gf_mul_ground(a, inv, p)


def gf_gcd(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """PGCD unitaire"""
    a, b = gf_trim(a, p), gf_trim(b, p)
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)[1]


def gf_derivative(a: Sequence[int], p: int) -> List[int]:
    return gf_trim([i * a[i] for i in range(1, len(a))], p)


def gf_pow_mod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> List[int]:
    """a^e mod m par exponentiation binaire"""
    result = [1]
    base = gf_rem(a, m, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = gf_rem(gf_mul(base, base, p), m, p)
    return gf_rem(result, m, p)


def gf_frobenius_power(m: Sequence[int], k: int, p: int) -> List[int]:
    """x^(p^k) mod m"""
    g = gf_rem([0, 1], m, p)
    for _ in range(k):
        g = gf_pow_mod(g, p, m, p)
    return g


def gf_sqf_list(f: Sequence[int], p: int) -> Tuple[int, List[Tuple[List[int], int]]]:
    """
    Décomposition sans carré en caractéristique p

    Args:
        f: Polynôme non nul
        p: Caractéristique

    Returns:
        Couple (coefficient dominant, liste de (facteur sans carré, exposant))
    """
    lc, f = gf_monic(gf_trim(f, p), p)
    if gf_degree(f) < 1:
        return lc, []
    n, factors = 1, []
    while True:
        sqf = False
        F = gf_derivative(f, p)
        if F:
            g = gf_gcd(f, F, p)
            h = gf_quo(f, g, p)
            i = 1
            while h != [1]:
                G = gf_gcd(g, h, p)
                H = gf_quo(h, G, p)
                if gf_degree(H) > 0:
                    factors.append((H, i * n))
                g, h, i = gf_quo(g, G, p), G, i + 1
            if g == [1]:
                sqf = True
            else:
                f = g
        if sqf:
            break
        # racine p-ième : f est une puissance p-ième
        f = [f[i * p] for i in range(gf_degree(f) // p + 1)]
        n *= p
    return lc, factors


def gf_ddf(f: Sequence[int], p: int) -> List[Tuple[List[int], int]]:
    """Factorisation par degrés distincts d'un polynôme unitaire sans carré"""
    f = list(f)
    i, g, factors = 1, [0, 1], []
    while 2 * i <= gf_degree(f):
        g = gf_pow_mod(g, p, f, p)
        h = gf_gcd(f, gf_sub(g, [0, 1], p), p)
        if h != [1]:
            factors.append((h, i))
            f = gf_quo(f, h, p)
            g = gf_rem(g, f, p)
        i += 1
    if f != [1]:
        factors.append((f, gf_degree(f)))
    return factors


def gf_edf(f: Sequence[int], n: int, p: int, rng: random.Random) -> List[List[int]]:
    """Cantor-Zassenhaus : scinde un produit de facteurs de degré n (p impair)"""
    f = list(f)
    if gf_degree(f) <= n:
        return [f]
    exponent = (p ** n - 1) // 2
    while True:
        a = gf_trim([rng.randrange(p) for _ in range(gf_degree(f))], p)
        if gf_degree(a) < 1:
            continue
        g = gf_gcd(f, gf_sub(gf_pow_mod(a, exponent, f, p), [1], p), p)
        if g != [1] and g != f:
            return gf_edf(g, n, p, rng) + gf_edf(gf_quo(f, g, p), n, p, rng)


def gf_is_irreducible(f: Sequence[int], p: int) -> bool:
    """Test de Rabin : x^(p^d) ≡ x mod f et aucun facteur de degré d/q"""
    f = gf_monic(gf_trim(f, p), p)[1]
    d = gf_degree(f)
    if d < 1:
        return False
    if d == 1:
        return True
    if gf_frobenius_power(f, d, p) != gf_rem([0, 1], f, p):
        return False
    for q in _prime_divisors(d):
        h = gf_sub(gf_frobenius_power(f, d // q, p), [0, 1], p)
        if gf_gcd(f, h, p) != [1]:
            return False
    return True


def _sort_key(coeffs: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    return (len(coeffs) - 1, tuple(reversed(coeffs)))


# ===== GF(2) EMPAQUETÉ DANS UN ENTIER =====

def gf2_deg(a: int) -> int:
    return a.bit_length() - 1


def gf2_mul(a: int, b: int) -> int:
    """Produit sans retenue des vecteurs de bits"""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def gf2_sqr(a: int) -> int:
    """Le carré est linéaire en caractéristique 2 : on intercale des zéros"""
    return int('0'.join(bin(a)[2:]), 2)


def gf2_divmod(a: int, m: int) -> Tuple[int, int]:
    if m == 0:
        raise DivisionByZero("division par le polynôme nul")
    dm = gf2_deg(m)
    q = 0
    while a and gf2_deg(a) >= dm:
        s = gf2_deg(a) - dm
        q ^= 1 << s
        a ^= m << s
    return q, a


def gf2_mod(a: int, m: int) -> int:
    return gf2_divmod(a, m)[1]


def gf2_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, gf2_mod(a, b)
    return a


def gf2_derivative(a: int) -> int:
    """Seuls les termes de degré impair survivent, décalés d'un cran"""
    even_mask = (4 ** ((a.bit_length() + 1) // 2 + 1) - 1) // 3
    return (a >> 1) & even_mask


def gf2_sqrt(a: int) -> int:
    """Racine carrée d'un carré parfait : bits de rang pair"""
    if a == 0:
        return 0
    low_first = bin(a)[:1:-1]
    return int(low_first[::2][::-1], 2)


def gf2_sqr_mod(a: int, m: int) -> int:
    return gf2_mod(gf2_sqr(a), m)


def gf2_compose(P: int, Q: int) -> int:
    """P(Q) = E(Q)² + Q·O(Q)² avec P(x) = E(x)² + x·O(x)²"""
    if gf2_deg(P) < 1:
        return P
    bits = bin(P)[:1:-1]
    E = int(bits[::2][::-1], 2) if bits[::2].strip('0') else 0
    O = int(bits[1::2][::-1], 2) if bits[1::2].strip('0') else 0
    return gf2_sqr(gf2_compose(E, Q)) ^ gf2_mul(Q, gf2_sqr(gf2_compose(O, Q)))


def gf2_sqf_list(f: int) -> List[Tuple[int, int]]:
    """Décomposition sans carré sur GF(2), même schéma que gf_sqf_list"""
    if gf2_deg(f) < 1:
        return []
    n, factors = 1, []
    while True:
        sqf = False
        F = gf2_derivative(f)
        if F:
            g = gf2_gcd(f, F)
            h = gf2_divmod(f, g)[0]
            i = 1
            while h != 1:
                G = gf2_gcd(g, h)
                H = gf2_divmod(h, G)[0]
                if gf2_deg(H) > 0:
                    factors.append((H, i * n))
                g, h, i = gf2_divmod(g, G)[0], G, i + 1
            if g == 1:
                sqf = True
            else:
                f = g
        if sqf:
            break
        f = gf2_sqrt(f)
        n *= 2
    return factors


def gf2_ddf(f: int) -> List[Tuple[int, int]]:
    i, g, factors = 1, 0b10, []
    while 2 * i <= gf2_deg(f):
        g = gf2_sqr_mod(g, f)
        h = gf2_gcd(f, g ^ 0b10)
        if h != 1:
            factors.append((h, i))
            f = gf2_divmod(f, h)[0]
            g = gf2_mod(g, f)
        i += 1
    if f != 1:
        factors.append((f, gf2_deg(f)))
    return factors


def gf2_edf(f: int, n: int, rng: random.Random) -> List[int]:
    """Scission en degré égal par la trace T(a) = a + a² + … + a^(2^(n−1))"""
    if gf2_deg(f) <= n:
        return [f]
    while True:
        a = rng.getrandbits(gf2_deg(f))
        if gf2_deg(a) < 1:
            continue
        t, r = a, a
        for _ in range(n - 1):
            r = gf2_sqr_mod(r, f)
            t ^= r
        g = gf2_gcd(f, t)
        if g != 1 and g != f:
            return gf2_edf(g, n, rng) + gf2_edf(gf2_divmod(f, g)[0], n, rng)


def gf2_factor_bits(f: int, rng: Optional[random.Random] = None) -> List[Tuple[int, int]]:
    """Factorisation complète d'un vecteur de bits, triée par (degré, bits)"""
    if f == 0:
        raise ValueError("polynôme nul")
    rng = _rng(rng)
    merged: Dict[int, int] = {}
    for part, e in gf2_sqf_list(f):
        for block, d in gf2_ddf(part):
            for irr in gf2_edf(block, d, rng):
                merged[irr] = merged.get(irr, 0) + e
    return sorted(merged.items(), key=lambda fe: (gf2_deg(fe[0]), fe[0]))


def gf2_is_irreducible_bits(f: int) -> bool:
    d = gf2_deg(f)
    if d < 1:
        return False
    if d == 1:
        return True

    def frob(k: int) -> int:
        g = 0b10
        for _ in range(k):
            g = gf2_sqr_mod(g, f)
        return g

    if frob(d) != 0b10:
        return False
    return all(gf2_gcd(f, frob(d // q) ^ 0b10) == 1 for q in _prime_divisors(d))


# ===== TYPES =====

@dataclass(frozen=True)
class GFpPoly:
    """Polynôme sur GF(p), coefficients réduits, du plus bas degré au plus haut"""
    p: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(gf_trim(self.coeffs, self.p)))

    @classmethod
    def from_ints(cls, p: int, ints: Sequence[int]) -> "GFpPoly":
        return cls(p, tuple(ints))

    @classmethod
    def x(cls, p: int) -> "GFpPoly":
        return cls(p, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def _check(self, other: "GFpPoly"):
        if other.p != self.p:
            raise ValueError(f"modules différents : {self.p} et {other.p}")

    def __add__(self, other: "GFpPoly") -> "GFpPoly":
        self._check(other)
        return GFpPoly(self.p, tuple(gf_add(self.coeffs, other.coeffs, self.p)))

    def __sub__(self, other: "GFpPoly") -> "GFpPoly":
        self._check(other)
        return GFpPoly(self.p, tuple(gf_sub(self.coeffs, other.coeffs, self.p)))

    def __mul__(self, other: "GFpPoly") -> "GFpPoly":
        self._check(other)
        return GFpPoly(self.p, tuple(gf_mul(self.coeffs, other.coeffs, self.p)))

    def __divmod__(self, other: "GFpPoly") -> Tuple["GFpPoly", "GFpPoly"]:
        self._check(other)
        q, r = gf_divmod(self.coeffs, other.coeffs, self.p)
        return GFpPoly(self.p, tuple(q)), GFpPoly(self.p, tuple(r))

    def __floordiv__(self, other: "GFpPoly") -> "GFpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "GFpPoly") -> "GFpPoly":
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "GFpPoly":
        return reduce(lambda acc, _: acc * self, range(e), GFpPoly(self.p, (1,)))

    def gcd(self, other: "GFpPoly") -> "GFpPoly":
        self._check(other)
        return GFpPoly(self.p, tuple(gf_gcd(self.coeffs, other.coeffs, self.p)))

    def monic(self) -> "GFpPoly":
        return GFpPoly(self.p, tuple(gf_monic(self.coeffs, self.p)[1]))

    def derivative(self) -> "GFpPoly":
        return GFpPoly(self.p, tuple(gf_derivative(self.coeffs, self.p)))

    def to_gf2(self) -> "GF2Poly":
        if self.p != 2:
            raise ValueError("conversion GF(2) impossible")
        return GF2Poly(sum(1 << i for i, c in enumerate(self.coeffs) if c))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return _sort_key(self.coeffs)

    def __str__(self) -> str:
        return _format(self.coeffs)


@dataclass(frozen=True)
class GF2Poly:
    """Polynôme sur GF(2), le bit i porte le coefficient de x^i"""
    bits: int = 0

    @property
    def degree(self) -> int:
        return gf2_deg(self.bits)

    def __add__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(gf2_mul(self.bits, other.bits))

    def __divmod__(self, other: "GF2Poly") -> Tuple["GF2Poly", "GF2Poly"]:
        q, r = gf2_divmod(self.bits, other.bits)
        return GF2Poly(q), GF2Poly(r)

    def __floordiv__(self, other: "GF2Poly") -> "GF2Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "GF2Poly") -> "GF2Poly":
        return divmod(self, other)[1]

    def square(self) -> "GF2Poly":
        return GF2Poly(gf2_sqr(self.bits))

    def gcd(self, other: "GF2Poly") -> "GF2Poly":
        return GF2Poly(gf2_gcd(self.bits, other.bits))

    def compose(self, inner: "GF2Poly") -> "GF2Poly":
        return GF2Poly(gf2_compose(self.bits, inner.bits))

    def coefficient(self, i: int) -> int:
        return (self.bits >> i) & 1

    def to_gfp(self) -> GFpPoly:
        return GFpPoly(2, tuple(int(b) for b in bin(self.bits)[:1:-1]) if self.bits else ())

    def __str__(self) -> str:
        return _format([int(b) for b in bin(self.bits)[:1:-1]] if self.bits else [])


F = GF2Poly(0b111)
G = GF2Poly(0b110)


def _format(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c != 1:
            mono = str(c) if i == 0 else f"{c}{mono}"
        terms.append(mono)
    return " + ".join(terms) if terms else "0"


# ===== OPÉRATIONS =====

def factor(g: GFpPoly, rng: Optional[random.Random] = None) -> List[Tuple[GFpPoly, int]]:
    """
    Factorisation complète dans GF(p)[x]

    Args:
        g: Polynôme non nul
        rng: Générateur pseudo-aléatoire (graine 0 par défaut)

    Returns:
        Liste triée de (facteur irréductible unitaire, exposant)
    """
    if g.is_zero():
        raise ValueError("polynôme nul")
    if g.p == 2:
        return [(GF2Poly(b).to_gfp(), e) for b, e in gf2_factor_bits(g.to_gf2().bits, rng)]
    rng = _rng(rng)
    merged: Dict[Tuple[int, ...], int] = {}
    _, parts = gf_sqf_list(g.coeffs, g.p)
    for part, e in parts:
        for block, d in gf_ddf(part, g.p):
            for irr in gf_edf(block, d, g.p, rng):
                key = tuple(irr)
                merged[key] = merged.get(key, 0) + e
    ordered = sorted(merged.items(), key=lambda fe: _sort_key(fe[0]))
    return [(GFpPoly(g.p, k), e) for k, e in ordered]


def is_irreducible(g: GFpPoly) -> bool:
    if g.p == 2:
        return gf2_is_irreducible_bits(g.to_gf2().bits)
    return gf_is_irreducible(g.coeffs, g.p)


def gf2_iterate(P: GF2Poly, n: int, cap: int = GF2_DEGREE_CAP) -> GF2Poly:
    """
    Composée n-ième de P dans GF(2)[x]

    Raises:
        DegreeCapExceeded: si deg(P)^n dépasse le plafond
    """
    if n < 1:
        raise ValueError("n doit être au moins 1")
    degree = max(P.degree, 0) ** n
    if degree > cap:
        raise DegreeCapExceeded(degree, cap)
    cur = P
    for _ in range(n - 1):
        cur = P.compose(cur)
    return cur


# ===== CORPS RÉSIDUELS GF(p)[x]/(φ̄) =====

@dataclass(frozen=True)
class FqElem:
    """Élément de GF(p)[x]/(φ̄), représentant de degré < deg φ̄"""
    modulus: GFpPoly
    rep: GFpPoly

    def __post_init__(self):
        if self.rep.p != self.modulus.p:
            raise ValueError("caractéristiques différentes")
        if self.rep.degree >= self.modulus.degree:
            object.__setattr__(self, 'rep', self.rep % self.modulus)

    @classmethod
    def embed(cls, modulus: GFpPoly, value: "int | GFpPoly") -> "FqElem":
        rep = value if isinstance(value, GFpPoly) else GFpPoly(modulus.p, (value,))
        return cls(modulus, rep % modulus)

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def order(self) -> int:
        """Cardinal du corps"""
        return self.p ** self.modulus.degree

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def _check(self, other: "FqElem"):
        if other.modulus != self.modulus:
            raise ValueError("éléments de corps différents")

    def __add__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        return FqElem(self.modulus, self.rep + other.rep)

    def __sub__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        return FqElem(self.modulus, self.rep - other.rep)

    def __neg__(self) -> "FqElem":
        return FqElem(self.modulus, GFpPoly(self.p) - self.rep)

    def __mul__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        return FqElem(self.modulus, (self.rep * other.rep) % self.modulus)

    def scale(self, k: int) -> "FqElem":
        return FqElem(self.modulus, self.rep * GFpPoly(self.p, (k,)))

    def inverse(self) -> "FqElem":
        """Inverse par l'algorithme d'Euclide étendu"""
        if self.is_zero():
            raise DivisionByZero("inversion de zéro dans le corps résiduel")
        p = self.p
        r0, r1 = self.modulus, self.rep
        s0, s1 = GFpPoly(p), GFpPoly(p, (1,))
        while not r1.is_zero():
            q, r = divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
        inv_lc = pow(r0.coeffs[-1], -1, p)
        return FqElem(self.modulus, s0 * GFpPoly(p, (inv_lc,)))

    def __truediv__(self, other: "FqElem") -> "FqElem":
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int) -> "FqElem":
        result, base = FqElem.embed(self.modulus, 1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __str__(self) -> str:
        return str(self.rep)


def fq_arith(a: FqElem, b: FqElem, op: str) -> FqElem:
    """Opération de corps désignée par '+', '-', '*' ou '/'"""
    ops = {
        '+': lambda: a + b,
        '-': lambda: a - b,
        '*': lambda: a * b,
        '/': lambda: a / b,
    }
    if op not in ops:
        raise ValueError(f"opération inconnue : {op}")
    return ops[op]()


# ----- polynômes à coefficients dans un corps résiduel -----

FqPoly = Tuple[FqElem, ...]


def fqx_trim(a: Sequence[FqElem]) -> FqPoly:
    out = list(a)
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def fqx_sub(a: Sequence[FqElem], b: Sequence[FqElem], modulus: GFpPoly) -> FqPoly:
    zero = FqElem.embed(modulus, 0)
    n = max(len(a), len(b))
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return fqx_trim([x - y for x, y in zip(a, b)])


def fqx_mul(a: Sequence[FqElem], b: Sequence[FqElem], modulus: GFpPoly) -> FqPoly:
    if not a or not b:
        return ()
    out = [FqElem.embed(modulus, 0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return fqx_trim(out)


def fqx_divmod(a: Sequence[FqElem], b: Sequence[FqElem], modulus: GFpPoly) -> Tuple[FqPoly, FqPoly]:
    b = fqx_trim(b)
    if not b:
        raise DivisionByZero("division par le polynôme nul")
    r = list(fqx_trim(a))
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), tuple(r)
    inv = b[-1].inverse()
    q = [FqElem.embed(modulus, 0)] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        lead = r[k + db] * inv
        if not lead.is_zero():
            q[k] = lead
            for i in range(db + 1):
                r[k + i] = r[k + i] - lead * b[i]
    return fqx_trim(q), fqx_trim(r[:db])


def fqx_monic(a: Sequence[FqElem]) -> FqPoly:
    a = fqx_trim(a)
    if not a:
        return a
    inv = a[-1].inverse()
    return tuple(x * inv for x in a)


def fqx_gcd(a: Sequence[FqElem], b: Sequence[FqElem], modulus: GFpPoly) -> FqPoly:
    a, b = fqx_trim(a), fqx_trim(b)
    while b:
        a, b = b, fqx_divmod(a, b, modulus)[1]
    return fqx_monic(a)


def fqx_derivative(a: Sequence[FqElem]) -> FqPoly:
    """Dérivée formelle (les multiples de p s'annulent)"""
    return fqx_trim([a[i].scale(i) for i in range(1, len(a))])


def fqx_pow_mod(a: Sequence[FqElem], e: int, m: Sequence[FqElem], modulus: GFpPoly) -> FqPoly:
    result: FqPoly = (FqElem.embed(modulus, 1),)
    base = fqx_divmod(a, m, modulus)[1]
    while e:
        if e & 1:
            result = fqx_divmod(fqx_mul(result, base, modulus), m, modulus)[1]
        e >>= 1
        if e:
            base = fqx_divmod(fqx_mul(base, base, modulus), m, modulus)[1]
    return fqx_divmod(result, m, modulus)[1]


def fqx_is_separable(a: Sequence[FqElem], modulus: GFpPoly) -> bool:
    """Séparable ⇔ pgcd(R, R′) constant"""
    a = fqx_trim(a)
    if len(a) <= 2:
        return True
    d = fqx_derivative(a)
    if not d:
        return False
    return len(fqx_gcd(a, d, modulus)) == 1


def fqx_factor_degrees(a: Sequence[FqElem], modulus: GFpPoly) -> List[int]:
    """
    Degrés des facteurs irréductibles d'un polynôme séparable sur GF(q)

    Args:
        a: Polynôme séparable à coefficients dans GF(p)[x]/(φ̄)
        modulus: φ̄

    Returns:
        Liste triée des degrés, avec répétition
    """
    f = fqx_monic(a)
    if len(f) <= 1:
        return []
    q = modulus.p ** modulus.degree
    x: FqPoly = (FqElem.embed(modulus, 0), FqElem.embed(modulus, 1))
    one: FqPoly = (FqElem.embed(modulus, 1),)
    degrees: List[int] = []
    i, g = 1, x
    while 2 * i <= len(f) - 1:
        g = fqx_pow_mod(g, q, f, modulus)
        h = fqx_gcd(f, fqx_sub(g, x, modulus), modulus)
        if h != one:
            degrees.extend([i] * ((len(h) - 1) // i))
            f = fqx_monic(fqx_divmod(f, h, modulus)[0])
            g = fqx_divmod(g, f, modulus)[1]
        i += 1
    if len(f) > 1:
        degrees.append(len(f) - 1)
    return sorted(degrees)
