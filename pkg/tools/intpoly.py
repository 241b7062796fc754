"""
Arithmétique exacte des polynômes unitaires à coefficients entiers

Représentation dense, coefficients du plus bas degré au plus haut. Les
listes brutes (préfixe zz_) portent leur coefficient dominant ; le type
MonicIntPoly le garde implicite, égal à 1.
"""
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from tools.errors import CoefficientBlowup


# ===== LISTES DENSES SUR ℤ =====

def zz_trim(a: Sequence[int]) -> List[int]:
    """Supprime les zéros de tête (le polynôme nul devient [])"""
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def zz_degree(a: Sequence[int]) -> int:
    """Degré d'une liste normalisée (-1 pour le polynôme nul)"""
    return len(a) - 1


def zz_add(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return zz_trim(out)


def zz_sub(a: Sequence[int], b: Sequence[int]) -> List[int]:
    return zz_add(a, [-x for x in b])


def zz_scale(a: Sequence[int], k: int) -> List[int]:
    return zz_trim([x * k for x in a])


def zz_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Produit naïf ; les coefficients nuls de a sont sautés"""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return zz_trim(out)


def zz_divmod_monic(a: Sequence[int], m: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    Division euclidienne par un diviseur unitaire

    Args:
        a: Dividende
        m: Diviseur, coefficient dominant égal à 1

    Returns:
        Couple (quotient, reste)
    """
    if not m or m[-1] != 1:
        raise ValueError("le diviseur doit être unitaire")
    r = zz_trim(a)
    dm = zz_degree(m)
    if zz_degree(r) < dm:
        return [], r
    q = [0] * (zz_degree(r) - dm + 1)
    for k in range(zz_degree(r) - dm, -1, -1):
        lead = r[k + dm] if k + dm < len(r) else 0
        if lead:
            q[k] = lead
            for i in range(dm + 1):
                r[k + i] -= lead * m[i]
    return zz_trim(q), zz_trim(r[:dm])


def zz_derivative(a: Sequence[int]) -> List[int]:
    return zz_trim([i * a[i] for i in range(1, len(a))])


def zz_eval(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def zz_content(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
    return g


def zz_prem(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Pseudo-reste lc(b)^(deg a - deg b + 1)·a mod b"""
    r = zz_trim(a)
    db = zz_degree(b)
    lc = b[-1]
    e = zz_degree(r) - db + 1
    while r and zz_degree(r) >= db:
        k = zz_degree(r) - db
        top = r[-1]
        r = [x * lc for x in r]
        for i in range(db + 1):
            r[i + k] -= top * b[i]
        r = zz_trim(r)
        e -= 1
    return zz_scale(r, lc ** max(e, 0))


def zz_resultant(a: Sequence[int], b: Sequence[int]) -> int:
    """
    Résultant par la suite des sous-résultants (Cohen, algorithme 3.3.7)

    Args:
        a: Premier polynôme
        b: Second polynôme

    Returns:
        Res(a, b), exact
    """
    A, B = zz_trim(a), zz_trim(b)
    if not A or not B:
        return 0
    sign = 1
    if zz_degree(A) < zz_degree(B):
        A, B = B, A
        if zz_degree(A) % 2 and zz_degree(B) % 2:
            sign = -1
    ca, cb = zz_content(A), zz_content(B)
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    t = ca ** zz_degree(B) * cb ** zz_degree(A)
    g = h = 1
    while zz_degree(B) > 0:
        da, db = zz_degree(A), zz_degree(B)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = zz_prem(A, B)
        A = B
        if not r:
            return 0
        divisor = g * h ** delta
        B = [x // divisor for x in r]
        g = A[-1]
        h = h if delta == 0 else g ** delta // h ** (delta - 1)
    da = zz_degree(A)
    h = B[-1] ** da // h ** (da - 1)
    return sign * t * h


def int_valuation(n: int, p: int) -> Optional[int]:
    """Valuation p-adique d'un entier (None pour 0, c'est-à-dire +∞)"""
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def poly_valuation(a: Sequence[int], p: int) -> Optional[int]:
    """Minimum des valuations des coefficients (None pour le polynôme nul)"""
    vals = [int_valuation(x, p) for x in a if x]
    return min(vals) if vals else None


# ===== TYPES =====

@dataclass(frozen=True)
class MonicIntPoly:
    """Polynôme unitaire ; coeffs exclut le coefficient dominant 1"""
    coeffs: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @classmethod
    def identity(cls) -> "MonicIntPoly":
        return cls((0,))

    @classmethod
    def from_dense(cls, dense: Iterable[int]) -> "MonicIntPoly":
        d = zz_trim(dense)
        if not d or d[-1] != 1:
            raise ValueError(f"polynôme non unitaire : {d}")
        return cls(tuple(d[:-1]))

    def dense(self) -> List[int]:
        """Liste complète, coefficient dominant inclus"""
        return list(self.coeffs) + [1]

    def __call__(self, x: int) -> int:
        return zz_eval(self.dense(), x)

    def max_bits(self) -> int:
        return max((abs(c).bit_length() for c in self.coeffs), default=0)

    def __str__(self) -> str:
        return format_poly(self.dense())


@dataclass(frozen=True)
class Dyadic:
    """Rationnel dyadique num / 2^exp2, toujours sous forme canonique"""
    num: int
    exp2: int = 0

    def __post_init__(self):
        if self.exp2 < 0:
            raise ValueError("exp2 doit être positif ou nul")
        num, exp2 = self.num, self.exp2
        if num == 0:
            exp2 = 0
        else:
            shift = min(exp2, (num & -num).bit_length() - 1)
            num >>= shift
            exp2 -= shift
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'exp2', exp2)

    @classmethod
    def of(cls, value: "int | Dyadic") -> "Dyadic":
        return value if isinstance(value, Dyadic) else cls(value, 0)

    def __add__(self, other: "int | Dyadic") -> "Dyadic":
        o = Dyadic.of(other)
        e = max(self.exp2, o.exp2)
        return Dyadic((self.num << (e - self.exp2)) + (o.num << (e - o.exp2)), e)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp2)

    def __sub__(self, other: "int | Dyadic") -> "Dyadic":
        return self + (-Dyadic.of(other))

    def __mul__(self, other: "int | Dyadic") -> "Dyadic":
        o = Dyadic.of(other)
        return Dyadic(self.num * o.num, self.exp2 + o.exp2)

    __rmul__ = __mul__

    @property
    def is_integer(self) -> bool:
        return self.exp2 == 0

    def odd_part(self) -> int:
        """Partie impaire signée du numérateur (0 reste 0)"""
        n = self.num
        if n == 0:
            return 0
        return n >> ((n & -n).bit_length() - 1)

    def bits(self) -> int:
        return max(abs(self.num).bit_length(), self.exp2)

    def __str__(self) -> str:
        if self.exp2 == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp2}"


@dataclass(frozen=True)
class QuadParams:
    """Paramètres (b, c) de f(x) = x² + bx + c"""
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.c

    @property
    def poly(self) -> MonicIntPoly:
        return MonicIntPoly((self.c, self.b))

    @property
    def critical_point(self) -> Dyadic:
        return Dyadic(-self.b, 1)

    def apply(self, t: Dyadic) -> Dyadic:
        """f(t) = t² + bt + c sur les dyadiques"""
        return t * t + t * self.b + self.c

    def is_reducible(self) -> bool:
        d = self.disc
        return d >= 0 and math.isqrt(d) ** 2 == d

    def __str__(self) -> str:
        return f"(b={self.b}, c={self.c})"


# ===== OPÉRATIONS =====

def compose(f: MonicIntPoly, g: MonicIntPoly) -> MonicIntPoly:
    """
    Composition f(g(x)) par la méthode de Horner

    Args:
        f: Polynôme extérieur
        g: Polynôme intérieur

    Returns:
        f∘g, unitaire de degré deg f · deg g
    """
    gd = g.dense()
    acc: List[int] = [1]
    for c in reversed(f.coeffs):
        acc = zz_add(zz_mul(acc, gd), [c])
    return MonicIntPoly.from_dense(acc)


def shift(f: MonicIntPoly, a: int) -> MonicIntPoly:
    """f(x + a)"""
    return compose(f, MonicIntPoly((a,)))


def iterate(q: QuadParams, n: int, max_bits: int = 1_000_000) -> MonicIntPoly:
    """
    Calcule fⁿ par fⁿ = (fⁿ⁻¹)² + b·fⁿ⁻¹ + c

    Args:
        q: Paramètres de f
        n: Nombre d'itérations (0 donne l'identité)
        max_bits: Taille maximale d'un coefficient

    Returns:
        fⁿ, de degré 2ⁿ

    Raises:
        CoefficientBlowup: si un coefficient dépasse max_bits bits
    """
    if n < 0:
        raise ValueError("n doit être positif ou nul")
    cur = MonicIntPoly.identity().dense()
    for _ in range(n):
        cur = zz_add(zz_add(zz_mul(cur, cur), zz_scale(cur, q.b)), [q.c])
        bits = max(abs(x).bit_length() for x in cur)
        if bits > max_bits:
            raise CoefficientBlowup(bits, max_bits)
    return MonicIntPoly.from_dense(cur)


def discriminant(f: MonicIntPoly) -> int:
    """Disc(f) = (−1)^{d(d−1)/2}·Res(f, f′)"""
    d = f.degree
    if d < 1:
        raise ValueError("degré au moins 1 requis")
    dense = f.dense()
    res = zz_resultant(dense, zz_derivative(dense))
    return -res if (d * (d - 1) // 2) % 2 else res


def eval_dyadic(f: MonicIntPoly, t: Dyadic) -> Dyadic:
    """Évaluation exacte de f en un dyadique, sur dénominateur commun"""
    k, d = t.exp2, f.degree
    acc = 1
    for j, a in enumerate(reversed(f.coeffs), start=1):
        acc = acc * t.num + (a << (k * j))
    return Dyadic(acc, k * d)


def format_poly(dense: Sequence[int], var: str = "x") -> str:
    """Rendu lisible, degré décroissant : x^4 - 4x^2 + 2"""
    terms = []
    for i in range(len(dense) - 1, -1, -1):
        c = dense[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"
