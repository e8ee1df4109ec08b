"""Fixed-precision p-adic integers and numbers.

A :class:`PadicInt` is a residue modulo ``p**prec``: the ``prec`` known
p-adic digits of an element of Z_p.  The coherent sequence of truncations
``(x mod p, x mod p**2, ...)`` is recovered on demand, it is never stored.

Valuations are plain ints, with :data:`INF` standing for the valuation of
zero.  Absolute values are exact :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import (
    NotInvertibleError,
    NotPrimeError,
    PrecisionError,
    PrimeMismatchError,
)

INF = math.inf
Valuation = Union[int, float]

# deterministic Miller-Rabin witnesses, valid below 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


@lru_cache(maxsize=1024)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n >= _MR_LIMIT:
        raise NotPrimeError(f"primality of {n} cannot be decided deterministically")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    """Return ``p`` unchanged, or raise :class:`NotPrimeError`."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise NotPrimeError(f"prime must be an integer, got {p!r}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    return p


def vp_int(x: int, p: int) -> Valuation:
    """Exponent of ``p`` in ``x``; ``INF`` for zero."""
    if x == 0:
        return INF
    x = abs(x)
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def vp_rat(num: int, den: int, p: int) -> Valuation:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if num == 0:
        return INF
    return vp_int(num, p) - vp_int(den, p)


def vp(x: int | Fraction, p: int) -> Valuation:
    x = Fraction(x)
    return vp_rat(x.numerator, x.denominator, p)


def abs_p(v: Valuation, p: int) -> Fraction:
    """|x|_p = p**(-v) as an exact rational; 0 for v = INF."""
    if v == INF:
        return Fraction(0)
    return Fraction(1, p**v) if v >= 0 else Fraction(p ** (-v))


@dataclass(frozen=True)
class PadicInt:
    """An element of Z_p known modulo ``p**prec``."""

    p: int
    prec: int
    residue: int

    def __post_init__(self):
        if self.prec < 1:
            raise PrecisionError(f"precision must be >= 1, got {self.prec}")
        if not 0 <= self.residue < self.p**self.prec:
            raise ValueError("residue out of range; use embed_int")

    @property
    def modulus(self) -> int:
        return self.p**self.prec

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> PadicInt:
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise PrimeMismatchError(f"cannot combine {self.p}-adic and {other.p}-adic values")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return embed(other, self.p, self.prec)
        return NotImplemented

    def _combine(self, other, op) -> PadicInt:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prec = min(self.prec, other.prec)
        m = self.p**prec
        return PadicInt(self.p, prec, op(self.residue, other.residue) % m)

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._combine(other, lambda a, b: a * b)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._combine(other, lambda a, b: b - a)

    def __neg__(self) -> PadicInt:
        return PadicInt(self.p, self.prec, -self.residue % self.modulus)

    def __pow__(self, e: int) -> PadicInt:
        if e < 0:
            return self.inverse() ** (-e)
        return PadicInt(self.p, self.prec, pow(self.residue, e, self.modulus))

    # -- valuation and units ---------------------------------------------

    def is_zero(self) -> bool:
        """True when the element is 0 to the known precision."""
        return self.residue == 0

    def valuation(self) -> int:
        if self.residue == 0:
            raise PrecisionError(
                f"valuation is >= {self.prec}, undetermined at precision {self.prec}"
            )
        return vp_int(self.residue, self.p)

    def valuation_bound(self) -> Valuation:
        """Exact valuation, or the lower bound ``prec`` for a zero residue."""
        return self.prec if self.residue == 0 else vp_int(self.residue, self.p)

    def is_unit(self) -> bool:
        return self.residue % self.p != 0

    def inverse(self) -> PadicInt:
        if not self.is_unit():
            raise NotInvertibleError("not invertible: positive valuation")
        return PadicInt(self.p, self.prec, pow(self.residue, -1, self.modulus))

    invert_unit = inverse

    def unit_decompose(self) -> tuple[int, PadicInt]:
        """Split ``a = p**n * t`` with ``t`` a unit known to ``prec - n`` digits."""
        if self.residue == 0:
            raise PrecisionError("zero residue: valuation indeterminate at this precision")
        n = vp_int(self.residue, self.p)
        return n, PadicInt(self.p, self.prec - n, self.residue // self.p**n)

    # -- truncation -------------------------------------------------------

    def truncate(self, n: int) -> int:
        """The ring map Z_p -> Z/p^n Z (n = 0 gives the zero ring)."""
        if n < 0:
            raise ValueError(f"truncation to {n} digits")
        if n > self.prec:
            raise PrecisionError(f"cannot truncate to {n} digits: only {self.prec} known")
        return self.residue % self.p**n

    def reduce_precision(self, n: int) -> PadicInt:
        return PadicInt(self.p, n, self.truncate(n))

    def lift_precision(self, n: int) -> PadicInt:
        """Same residue read at a higher precision (the residue is taken as exact)."""
        if n < self.prec:
            return self.reduce_precision(n)
        return PadicInt(self.p, n, self.residue)

    def truncation_sequence(self) -> list[int]:
        return [self.residue % self.p**k for k in range(1, self.prec + 1)]

    def digits(self) -> list[int]:
        """Base-p digits, least significant first."""
        out, r = [], self.residue
        for _ in range(self.prec):
            r, d = divmod(r, self.p)
            out.append(d)
        return out

    def __str__(self) -> str:
        ds = self.digits()
        body = "".join(map(str, ds)) if self.p <= 10 else "[" + ",".join(map(str, ds)) + "]"
        return f"...{body}_{self.p} (O({self.p}^{self.prec}))"


def embed_int(x: int, p: int, prec: int) -> PadicInt:
    """Image of an integer in Z_p, known to ``prec`` digits."""
    if prec < 1:
        raise PrecisionError(f"precision must be >= 1, got {prec}")
    return PadicInt(p, prec, x % p**prec)


def embed(x: int | Fraction, p: int, prec: int) -> PadicInt:
    """Embed an integer or a rational with p-free denominator into Z_p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotInvertibleError(f"{x} has negative {p}-adic valuation; not in Z_{p}")
    m = p**prec
    return embed_int(x.numerator * pow(x.denominator, -1, m), p, prec)


def render_sequence(seq: list[int]) -> str:
    return "(" + ", ".join(map(str, seq)) + ")"


@dataclass(frozen=True)
class PadicNum:
    """An element of Q_p: ``p**shift * unit``, or zero when ``unit`` is None.

    ``unit.prec`` is the relative precision.  Zero carries the absolute
    precision in ``shift`` (it is known to be ``O(p**shift)``).
    """

    p: int
    shift: int
    unit: PadicInt | None

    def __post_init__(self):
        if self.unit is not None and not self.unit.is_unit():
            raise ValueError("unit part must have valuation 0")

    @classmethod
    def from_padic_int(cls, a: PadicInt) -> PadicNum:
        if a.is_zero():
            return cls(a.p, a.prec, None)
        n, t = a.unit_decompose()
        return cls(a.p, n, t)

    @classmethod
    def from_rational(cls, x: int | Fraction, p: int, prec: int) -> PadicNum:
        """``prec`` is the relative precision of the unit part."""
        x = Fraction(x)
        if x == 0:
            return cls(p, prec, None)
        v = vp(x, p)
        u = x / Fraction(p) ** v
        return cls(p, v, embed(u, p, prec))

    def is_zero(self) -> bool:
        return self.unit is None

    def valuation(self) -> Valuation:
        return INF if self.unit is None else self.shift

    @property
    def abs_precision(self) -> int:
        return self.shift if self.unit is None else self.shift + self.unit.prec

    def __mul__(self, other: PadicNum) -> PadicNum:
        if self.unit is None or other.unit is None:
            return PadicNum(self.p, self.valuation_floor() + other.valuation_floor(), None)
        return PadicNum(self.p, self.shift + other.shift, self.unit * other.unit)

    def valuation_floor(self) -> int:
        return self.shift

    def inverse(self) -> PadicNum:
        if self.unit is None:
            raise ZeroDivisionError("zero has no inverse")
        return PadicNum(self.p, -self.shift, self.unit.inverse())

    def __truediv__(self, other: PadicNum) -> PadicNum:
        return self * other.inverse()

    def __neg__(self) -> PadicNum:
        return self if self.unit is None else PadicNum(self.p, self.shift, -self.unit)

    def __add__(self, other: PadicNum) -> PadicNum:
        if other.p != self.p:
            raise PrimeMismatchError("prime mismatch")
        p = self.p
        absprec = min(self.abs_precision, other.abs_precision)
        lo = min(self.shift, other.shift)

        def scaled(x: PadicNum) -> int:
            return 0 if x.unit is None else x.unit.residue * p ** (x.shift - lo)

        total = (scaled(self) + scaled(other)) % p ** (absprec - lo)
        if total == 0:
            return PadicNum(p, absprec, None)
        n = vp_int(total, p)
        rel = absprec - lo - n
        return PadicNum(p, lo + n, PadicInt(p, rel, (total // p**n) % p**rel))

    def __sub__(self, other: PadicNum) -> PadicNum:
        return self + (-other)

    def __str__(self) -> str:
        if self.unit is None:
            return f"O({self.p}^{self.shift})"
        return f"{self.p}^{self.shift} * {self.unit}"
