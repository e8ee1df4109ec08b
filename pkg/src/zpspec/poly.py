"""Univariate polynomials over Z, F_p and Z_p (fixed precision).

All three types store coefficients lowest degree first and are immutable.
Canonical form drops trailing zeros, so ``coeffs == ()`` is the zero
polynomial and ``degree`` is -1 for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product

from . import fpx
from .errors import (
    DomainMismatchError,
    ParseError,
    PrecisionError,
    PrimeMismatchError,
    SizeError,
    ZpError,
)
from .padic import PadicInt, check_prime, embed, vp_int

VAR = "T"
ENUMERATION_CAP = 10**6


def _trim(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def render(coeffs, var: str = VAR) -> str:
    """Descending powers, ``*`` between coefficient and variable: ``2*T^2-13``."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(out)

    def __str__(self) -> str:
        return render(self.coeffs)


@dataclass(frozen=True)
class FpPoly:
    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _trim(int(c) % p for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def _k(self):
        return fpx.kernel(self.p)

    def _check(self, other: FpPoly):
        if not isinstance(other, FpPoly):
            raise DomainMismatchError(f"expected a polynomial over F_{self.p}")
        if other.p != self.p:
            raise PrimeMismatchError(f"F_{self.p} vs F_{other.p}")

    def __call__(self, x: int) -> int:
        if not isinstance(x, int) or isinstance(x, bool):
            raise DomainMismatchError(f"F_{self.p} polynomial evaluated at {x!r}")
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, [k * c for k, c in enumerate(self.coeffs)][1:])

    def __add__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return FpPoly(self.p, (x + y for x, y in zip(a, b)))

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other: FpPoly) -> FpPoly:
        return self + (-other)

    def __mul__(self, other: FpPoly) -> FpPoly:
        self._check(other)
        return FpPoly(self.p, self._k().mul(list(self.coeffs), list(other.coeffs), self.p))

    def __pow__(self, e: int) -> FpPoly:
        out = FpPoly(self.p, [1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: FpPoly) -> tuple[FpPoly, FpPoly]:
        self._check(other)
        q, r = self._k().divmod_(list(self.coeffs), list(other.coeffs), self.p)
        return FpPoly(self.p, q), FpPoly(self.p, r)

    def __floordiv__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[1]

    def monic(self) -> FpPoly:
        return FpPoly(self.p, self._k().monic(list(self.coeffs), self.p))

    def powmod(self, e: int, m: FpPoly) -> FpPoly:
        self._check(m)
        return FpPoly(self.p, self._k().powmod(list(self.coeffs), e, list(m.coeffs), self.p))

    def roots(self) -> list[int]:
        if self.is_zero():
            raise ZpError("every element is a root of the zero polynomial")
        return self._k().roots(list(self.coeffs), self.p)

    def lift(self) -> IntPoly:
        """Coefficients as integers in [0, p)."""
        return IntPoly(self.coeffs)

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __str__(self) -> str:
        return render(self.coeffs)


@dataclass(frozen=True)
class ZpPoly:
    p: int
    prec: int
    coeffs: tuple[PadicInt, ...]

    def __init__(self, p: int, prec: int, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if c.p != p or c.prec != prec:
                raise PrimeMismatchError("coefficients must share p and precision")
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "prec", prec)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_int_poly(cls, f: IntPoly, p: int, prec: int) -> ZpPoly:
        return cls(p, prec, [embed(c, p, prec) for c in f.coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, a: PadicInt | int) -> PadicInt:
        if isinstance(a, int) and not isinstance(a, bool):
            a = embed(a, self.p, self.prec)
        if not isinstance(a, PadicInt):
            raise DomainMismatchError(f"Z_{self.p} polynomial evaluated at {a!r}")
        if a.p != self.p:
            raise PrimeMismatchError(f"Z_{self.p} polynomial evaluated at a {a.p}-adic value")
        prec = min(a.prec, self.prec)
        m = self.p**prec
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a.residue + c.residue) % m
        return PadicInt(self.p, prec, acc)

    def derivative(self) -> ZpPoly:
        return ZpPoly(self.p, self.prec, [c * k for k, c in enumerate(self.coeffs)][1:])

    def residues(self) -> IntPoly:
        return IntPoly(c.residue for c in self.coeffs)

    def __str__(self) -> str:
        return f"{render(tuple(c.residue for c in self.coeffs))} (O({self.p}^{self.prec}))"


# -- parsing ------------------------------------------------------------------


class _Parser:
    """poly := term (("+"|"-") term)* ; term := coef? ("*"? "T" ("^" uint)?)?"""

    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def uint(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an unsigned integer", start)
        return int(self.src[start : self.pos])

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        coef = None
        if ch.isdigit():
            coef = self.uint()
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                ch = self.peek()
                if ch != VAR:
                    raise ParseError(f"expected {VAR!r} after '*'", self.pos)
        if ch == VAR:
            self.pos += 1
            k = 1
            if self.peek() == "^":
                self.pos += 1
                k = self.uint()
            return (1 if coef is None else coef), k
        if ch.isalpha():
            raise ParseError(f"unknown variable {ch!r}; only {VAR} is allowed", self.pos)
        if coef is None:
            raise ParseError("expected a term", self.pos)
        return coef, 0

    def parse(self) -> IntPoly:
        acc: dict[int, int] = {}
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        while True:
            c, k = self.term()
            acc[k] = acc.get(k, 0) + sign * c
            ch = self.peek()
            if ch == "":
                break
            if ch not in "+-":
                raise ParseError(f"unexpected character {ch!r}", self.pos)
            sign = 1 if ch == "+" else -1
            self.pos += 1
        deg = max(acc)
        return IntPoly(acc.get(k, 0) for k in range(deg + 1))


def parse_poly(src: str) -> IntPoly:
    """Parse ``T^3 - 2*T + 5`` style input into an :class:`IntPoly`."""
    return _Parser(src).parse()


def as_int_poly(f) -> IntPoly:
    if isinstance(f, IntPoly):
        return f
    if isinstance(f, str):
        return parse_poly(f)
    return IntPoly(f)


# -- reduction, primitivity, Eisenstein ---------------------------------------


def reduce_mod_p(f: IntPoly, p: int) -> FpPoly:
    return FpPoly(p, f.coeffs)


def is_primitive(f: ZpPoly) -> bool:
    if f.is_zero():
        raise ZpError("the zero polynomial is not primitive or imprimitive")
    return any(c.is_unit() for c in f.coeffs)


def eisenstein(f: ZpPoly) -> bool:
    """Valuation form of Eisenstein's criterion over Z_p.

    True means ``f`` is irreducible over Q_p; False is inconclusive.
    Middle coefficients that are zero at the working precision are fine
    (their valuation is at least 1 either way); only the constant term can
    be undecidable, when it is zero at precision 1.
    """
    if f.degree < 1:
        raise ZpError("Eisenstein needs a polynomial of degree >= 1")
    lead, a0 = f.coeffs[-1], f.coeffs[0]
    if not lead.is_unit():
        return False
    if any(c.is_unit() for c in f.coeffs[:-1]):
        return False
    if a0.is_zero():
        if f.prec < 2:
            raise PrecisionError("constant term is 0 mod p; increase precision to decide v(a_0)")
        return False
    return a0.valuation() == 1


def eisenstein_int(f: IntPoly, p: int) -> bool:
    """Eisenstein for an integer polynomial, at a precision that keeps every coefficient."""
    check_prime(p)
    prec = 2 + max(vp_int(c, p) for c in f.coeffs if c)
    return eisenstein(ZpPoly.from_int_poly(f, p, prec))


# -- F_p[T]: gcd, irreducibility, factorization --------------------------------


def fp_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    f._check(g)
    return FpPoly(f.p, f._k().gcd(list(f.coeffs), list(g.coeffs), f.p))


def _prime_divisors(n: int) -> list[int]:
    out, q = [], 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def fp_is_irreducible(f: FpPoly) -> bool:
    """Rabin's test: T^(p^d) = T mod f and gcd(T^(p^(d/q)) - T, f) = 1 for primes q | d."""
    d = f.degree
    if d < 1:
        raise ZpError("irreducibility is undefined for constants")
    if d == 1:
        return True
    p = f.p
    f = f.monic()
    t = FpPoly(p, [0, 1])
    if t.powmod(p**d, f) != t % f:
        return False
    for q in _prime_divisors(d):
        h = t.powmod(p ** (d // q), f) - t
        if fp_gcd(f, h).degree != 0:
            return False
    return True


@dataclass(frozen=True)
class FpFactorization:
    p: int
    unit: int
    factors: tuple[tuple[FpPoly, int], ...]

    def expand(self) -> FpPoly:
        out = FpPoly(self.p, [self.unit])
        for g, m in self.factors:
            out = out * g**m
        return out

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __str__(self) -> str:
        parts = [] if self.unit == 1 else [str(self.unit)]
        for g, m in self.factors:
            s = f"({g})" if sum(1 for c in g.coeffs if c) > 1 else str(g)
            parts.append(s if m == 1 else f"{s}^{m}")
        return "*".join(parts) or "1"


def _pth_root(f: FpPoly) -> FpPoly:
    # f is a polynomial in T^p; coefficients are their own p-th roots in F_p
    return FpPoly(f.p, f.coeffs[:: f.p])


def _squarefree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Squarefree decomposition of a monic polynomial in characteristic p."""
    p = f.p
    out: list[tuple[FpPoly, int]] = []
    one = FpPoly(p, [1])
    fp_ = f.derivative()
    if fp_.is_zero():
        return [(g, m * p) for g, m in _squarefree(_pth_root(f))]
    c = fp_gcd(f, fp_)
    w = f // c
    i = 1
    while w != one:
        y = fp_gcd(w, c)
        z = w // y
        if z != one:
            out.append((z, i))
        i += 1
        w, c = y, c // y
    if c != one:
        out.extend((g, m * p) for g, m in _squarefree(_pth_root(c)))
    return out


def _distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a squarefree monic ``f`` into products of same-degree irreducibles."""
    p = f.p
    t = FpPoly(p, [0, 1])
    out = []
    h = t
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, f)
        g = fp_gcd(f, h - t)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _split_equal_degree(g: FpPoly, d: int) -> list[FpPoly]:
    if g.degree == d:
        return [g]
    if d == 1:
        return [FpPoly(g.p, [-r, 1]) for r in g.roots()]
    found = []
    for h in enumerate_irreducibles(g.p, d, exact=True):
        if (g % h).is_zero():
            found.append(h)
            g = g // h
            if g.degree == d:
                found.append(g)
                break
    return found


def fp_factor(f: FpPoly) -> FpFactorization:
    """Complete deterministic factorization over F_p.

    Squarefree decomposition, then distinct-degree splitting, then roots for
    the linear part and trial division by the enumerated irreducibles of each
    higher degree.
    """
    if f.is_zero():
        raise ZpError("cannot factor the zero polynomial")
    unit = f.leading
    mult: dict[tuple[int, ...], int] = {}
    polys: dict[tuple[int, ...], FpPoly] = {}
    if f.degree > 0:
        for part, m in _squarefree(f.monic()):
            for g, d in _distinct_degree(part):
                for h in _split_equal_degree(g, d):
                    mult[h.coeffs] = mult.get(h.coeffs, 0) + m
                    polys[h.coeffs] = h
    factors = sorted(((polys[k], m) for k, m in mult.items()), key=lambda fm: fm[0].sort_key())
    return FpFactorization(f.p, unit, tuple(factors))


def monic_polys(p: int, d: int):
    """All monic polynomials of exact degree ``d`` over F_p, lexicographic."""
    for tail in product(range(p), repeat=d):
        yield FpPoly(p, tail + (1,))


def enumerate_irreducibles(p: int, d: int, *, exact: bool = False, cap: int = ENUMERATION_CAP) -> list[FpPoly]:
    """Monic irreducibles over F_p of degree <= d (or == d with ``exact``)."""
    check_prime(p)
    if d < 1:
        raise ZpError("degree bound must be >= 1")
    if p**d > cap:
        raise SizeError(f"{p}^{d} candidates exceed the enumeration cap {cap}")
    degrees = [d] if exact else range(1, d + 1)
    out = []
    for k in degrees:
        batch = [g for g in monic_polys(p, k) if fp_is_irreducible(g)]
        out.extend(sorted(batch, key=FpPoly.sort_key))
    return out


def necklace_count(p: int, d: int) -> int:
    """Number of monic irreducibles of degree d over F_p (Moebius formula)."""

    def mobius(n: int) -> int:
        ps = _prime_divisors(n)
        m = 1
        for q in ps:
            if (n // q) % q == 0:
                return 0
            m = -m
        return m

    total = sum(mobius(d // e) * p**e for e in range(1, d + 1) if d % e == 0)
    return total // d


# -- exact resultants over Z ---------------------------------------------------


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n):
            if m[r][i]:
                k = m[r][i] / m[i][i]
                for c in range(i, n):
                    m[r][c] -= k * m[i][c]
    return det


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Sylvester-matrix determinant, computed exactly."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f.leading**n
    if n == 0:
        return g.leading**m
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in fc] + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + [Fraction(c) for c in gc] + [Fraction(0)] * (size - n - 1 - i))
    return int(_det(rows))


def discriminant(f: IntPoly) -> int:
    """disc(f) = (-1)^(n(n-1)/2) res(f, f') / a_n."""
    n = f.degree
    if n < 1:
        raise ZpError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, f.leading)
    assert rem == 0
    return q


def rational_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd over Q with positive leading coefficient."""
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        while len(a) >= len(b) and a:
            k = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[i + shift] -= k * c
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if not a:
        return IntPoly()
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in a), 1)
    ints = IntPoly(int(c * den) for c in a)
    cont = ints.content()
    h = IntPoly(c // cont for c in ints.coeffs)
    return -h if h.leading < 0 else h


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(f: IntPoly) -> list[Fraction]:
    """All rational roots of a nonzero f, ascending, by the rational root test."""
    if f.degree < 1:
        return []
    coeffs = list(f.coeffs)
    out = []
    if coeffs[0] == 0:
        out.append(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    g = IntPoly(coeffs)
    if g.degree >= 1:
        for num in _divisors(g.coeffs[0]):
            for den in _divisors(g.leading):
                if math.gcd(num, den) != 1:
                    continue
                out.extend(r for r in (Fraction(num, den), Fraction(-num, den)) if g(r) == 0)
    return sorted(out)
