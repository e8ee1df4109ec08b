"""Points of Spec Z_p[T] and the fiber-by-fiber behavior of anchor polynomials.

Spec Z_p[T] lies over the two points of Spec Z_p.  Over (p) sit the primes
of F_p[T]; over (0) sit the primes of Q_p[T].  That gives four kinds of
points: (0), (p), (f) with f irreducible over Q_p, and (p, f) with f
irreducible mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import PrecisionError, UnsupportedIdealError, ZpError
from .hensel import DEFAULT_PRECISION, LiftedRoot, roots_in_zp
from .padic import PadicNum, check_prime, vp_int
from .poly import (
    rational_roots,
    FpPoly,
    IntPoly,
    discriminant,
    eisenstein_int,
    fp_factor,
    fp_is_irreducible,
    rational_gcd,
    reduce_mod_p,
)

# certificate names; stable, they appear in JSON output
DEGREE_ONE = "degree-1"
EISENSTEIN = "eisenstein"
NO_ROOT_DEG3 = "no-root-deg3"
DISC_NONSQUARE = "disc-nonsquare-deg2"
DISC_SQUARE = "disc-square-deg2"
ROOT_FOUND = "root"
REPEATED_FACTOR = "repeated-factor"
NO_RATIONAL_ROOT = "no-rational-root"
RATIONAL_ROOT = "rational-root"

IRREDUCIBLE = "irreducible"
REDUCIBLE = "reducible"
UNDECIDED = "undecided"


# -- squares in Q_p -------------------------------------------------------------


def is_square_unit_mod(u: int, p: int) -> bool:
    """Whether a p-adic unit with residue ``u`` is a square in Z_p."""
    if p == 2:
        return u % 8 == 1
    return pow(u % p, (p - 1) // 2, p) == 1


def qp_is_square(x: PadicNum) -> bool:
    """Even valuation and a square unit part (u = 1 mod 8 when p = 2)."""
    if x.is_zero():
        raise PrecisionError("zero at this precision: valuation indeterminate")
    p = x.p
    if p == 2 and x.unit.prec < 3:
        raise PrecisionError("need 3 digits of the unit part to decide squares in Q_2")
    return x.shift % 2 == 0 and is_square_unit_mod(x.unit.residue, p)


def rational_is_qp_square(q: int | Fraction, p: int) -> bool:
    return qp_is_square(PadicNum.from_rational(q, p, 3))


# -- irreducibility over Q_p ------------------------------------------------------


@dataclass(frozen=True)
class QpVerdict:
    status: str  # irreducible | reducible | undecided
    certificate: str | None = None
    witness: object = None

    @property
    def is_irreducible(self) -> bool:
        return self.status == IRREDUCIBLE


def _repeated_factor(f: IntPoly) -> IntPoly:
    return rational_gcd(f, f.derivative())


def qp_irreducible(f: IntPoly, p: int, precision: int = DEFAULT_PRECISION) -> QpVerdict:
    """Decide irreducibility over Q_p for degree <= 3, or by Eisenstein.

    ``f`` must be primitive at p.  Degree >= 4 without an Eisenstein
    certificate is ``undecided``.
    """
    check_prime(p)
    n = f.degree
    if n < 1:
        raise ZpError("irreducibility needs degree >= 1")
    if all(c % p == 0 for c in f.coeffs):
        raise ZpError(f"{f} is not primitive in Z_{p}[T]")
    if n == 1:
        return QpVerdict(IRREDUCIBLE, DEGREE_ONE)
    if eisenstein_int(f, p):
        return QpVerdict(IRREDUCIBLE, EISENSTEIN)
    if n > 3:
        return QpVerdict(UNDECIDED)
    disc = discriminant(f)
    if disc == 0:
        return QpVerdict(REDUCIBLE, REPEATED_FACTOR, _repeated_factor(f))
    if n == 2:
        if not rational_is_qp_square(disc, p):
            return QpVerdict(IRREDUCIBLE, DISC_NONSQUARE)
        roots = roots_in_zp(f, precision=precision, p=p) if f.leading % p else []
        return QpVerdict(REDUCIBLE, DISC_SQUARE, roots[0] if roots else disc)
    # cubic: roots of a unit-leading polynomial in Q_p are integral
    if f.leading % p == 0:
        return QpVerdict(UNDECIDED)
    roots = roots_in_zp(f, precision=precision, p=p)
    if roots:
        return QpVerdict(REDUCIBLE, ROOT_FOUND, roots[0])
    return QpVerdict(IRREDUCIBLE, NO_ROOT_DEG3)


def zp_irreducible(f: IntPoly, p: int) -> QpVerdict:
    """Gauss: irreducible in Z_p[T] iff primitive and irreducible in Q_p[T]."""
    if all(c % p == 0 for c in f.coeffs):
        return QpVerdict(REDUCIBLE, "not-primitive", f.content())
    return qp_irreducible(f, p)


# -- the four kinds of points -------------------------------------------------------


@dataclass(frozen=True)
class GenericPoint:
    """The zero ideal."""

    kind: str = field(default="generic", init=False)


@dataclass(frozen=True)
class SpecialFiberGeneric:
    """The ideal (p): generic point of the special fiber."""

    p: int
    kind: str = field(default="special-fiber-generic", init=False)


@dataclass(frozen=True)
class HorizontalPrime:
    """(f) with f irreducible over Q_p, carrying how that was certified."""

    f: IntPoly
    certificate: str
    kind: str = field(default="horizontal", init=False)


@dataclass(frozen=True)
class ClosedPoint:
    """(p, f) with f monic irreducible mod p."""

    p: int
    f: FpPoly
    kind: str = field(default="closed", init=False)


SpecPoint = Union[GenericPoint, SpecialFiberGeneric, HorizontalPrime, ClosedPoint]


@dataclass(frozen=True)
class FiniteField:
    order: int


@dataclass(frozen=True)
class LocalFieldExtension:
    degree: int


@dataclass(frozen=True)
class NonDomain:
    witness: object


@dataclass(frozen=True)
class FunctionFieldStyle:
    """Residue field of a generic point: Q_p(T) or F_p(T)."""

    name: str


@dataclass(frozen=True)
class Undetermined:
    reason: str


ResidueDescriptor = Union[FiniteField, LocalFieldExtension, NonDomain, FunctionFieldStyle, Undetermined]


@dataclass(frozen=True)
class Classification:
    point: SpecPoint | None  # None when the ideal is not prime or undecided
    residue: ResidueDescriptor
    status: str  # prime | not-prime | undecided


def classify_ideal(p: int, polys=(), include_p: bool = False) -> Classification:
    """Classify the ideal of Z_p[T] generated by ``polys`` (and p if asked).

    Supported shapes: (), (p), (f), (p, f).
    """
    check_prime(p)
    polys = list(polys)
    if len(polys) > 1:
        raise UnsupportedIdealError("only (), (p), (f) and (p, f) are supported")
    if not polys:
        if include_p:
            return Classification(SpecialFiberGeneric(p), FunctionFieldStyle(f"F_{p}(T)"), "prime")
        return Classification(GenericPoint(), FunctionFieldStyle(f"Q_{p}(T)"), "prime")
    f = polys[0]
    if f.is_zero():
        return classify_ideal(p, (), include_p)
    if include_p:
        g = reduce_mod_p(f, p)
        if g.is_zero():
            return classify_ideal(p, (), True)
        if g.degree == 0:
            raise UnsupportedIdealError(f"(p, {f}) is the unit ideal")
        if fp_is_irreducible(g):
            return Classification(ClosedPoint(p, g.monic()), FiniteField(p**g.degree), "prime")
        return Classification(None, NonDomain(fp_factor(g)), "not-prime")
    if f.degree == 0:
        if vp_int(f.leading, p) == 0:
            raise UnsupportedIdealError(f"({f}) is the unit ideal")
        raise UnsupportedIdealError("(p^k) is not among the supported shapes")
    if all(c % p == 0 for c in f.coeffs):
        return Classification(None, NonDomain(f"content {f.content()}"), "not-prime")
    verdict = qp_irreducible(f, p)
    if verdict.status == IRREDUCIBLE:
        return Classification(HorizontalPrime(f, verdict.certificate), LocalFieldExtension(f.degree), "prime")
    if verdict.status == REDUCIBLE:
        return Classification(None, NonDomain(verdict.witness), "not-prime")
    return Classification(None, Undetermined("no Q_p-irreducibility certificate for this degree"), UNDECIDED)


# -- per-fiber behavior -----------------------------------------------------------------


@dataclass(frozen=True)
class FactorHit:
    """One irreducible factor of the anchor mod p (a closed point it passes)."""

    factor: FpPoly
    multiplicity: int

    @property
    def root(self) -> int | None:
        return (-self.factor.coeffs[0]) % self.factor.p if self.factor.degree == 1 else None


@dataclass(frozen=True)
class Blip:
    residue_order: int
    factor: FpPoly
    kind: str = field(default="blip", init=False)


@dataclass(frozen=True)
class Split:
    hits: tuple[FactorHit, ...]
    kind: str = field(default="split", init=False)


@dataclass(frozen=True)
class Tangent:
    hits: tuple[FactorHit, ...]
    witness: FpPoly | None  # the anchor mod p; None when it vanishes identically
    contained: bool = False
    kind: str = field(default="tangent", init=False)

    @property
    def repeated(self) -> tuple[FactorHit, ...]:
        return tuple(h for h in self.hits if h.multiplicity >= 2)


@dataclass(frozen=True)
class GenericVerdict:
    verdict: QpVerdict
    field_name: str
    kind: str = field(default="generic", init=False)


Verdict = Union[Blip, Split, Tangent, GenericVerdict]


@dataclass(frozen=True)
class FiberBehavior:
    anchor: IntPoly
    fiber: int | None  # None for the generic fiber
    verdict: Verdict
    degree_drop: tuple[int, int] | None = None  # (deg f, deg f mod p) when it drops


def fiber_behavior(f: IntPoly, p: int) -> FiberBehavior:
    """How the anchor meets the special fiber A^1_{F_p}."""
    check_prime(p)
    if f.degree < 1:
        raise ZpError("anchor must be nonconstant")
    g = reduce_mod_p(f, p)
    drop = (f.degree, g.degree) if g.degree != f.degree else None
    if g.is_zero():
        return FiberBehavior(f, p, Tangent((), None, contained=True), drop)
    fac = fp_factor(g)
    hits = tuple(FactorHit(h, m) for h, m in fac.factors)
    if any(h.multiplicity >= 2 for h in hits):
        verdict: Verdict = Tangent(hits, g)
    elif len(hits) == 1 and hits[0].factor.degree >= 2:
        verdict = Blip(p ** hits[0].factor.degree, hits[0].factor)
    else:
        verdict = Split(hits)
    return FiberBehavior(f, p, verdict, drop)


def q_irreducible(f: IntPoly) -> QpVerdict:
    """Irreducibility over Q: rational root test up to degree 3, then Eisenstein."""
    n = f.degree
    if n < 1:
        raise ZpError("irreducibility needs degree >= 1")
    if n == 1:
        return QpVerdict(IRREDUCIBLE, DEGREE_ONE)
    cont = f.content()
    g = IntPoly(c // cont for c in f.coeffs)
    for q in _prime_factors(abs(g.coeffs[0])):
        if eisenstein_int(g, q):
            return QpVerdict(IRREDUCIBLE, EISENSTEIN, q)
    if n > 3:
        return QpVerdict(UNDECIDED)
    root = _rational_root(g)
    if root is not None:
        return QpVerdict(REDUCIBLE, RATIONAL_ROOT, root)
    return QpVerdict(IRREDUCIBLE, NO_RATIONAL_ROOT)


def _prime_factors(n: int) -> list[int]:
    out, q = [], 2
    while n > 1 and q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def _rational_root(f: IntPoly) -> Fraction | None:
    roots = rational_roots(f)
    return roots[0] if roots else None


@dataclass(frozen=True)
class FiberReport:
    anchor: IntPoly
    space: tuple  # ("Zp", p) or ("Z", (p1, p2, ...))
    rows: tuple[FiberBehavior, ...]
    generic_row: FiberBehavior


def zp_fiber_report(f: IntPoly, p: int) -> FiberReport:
    """The two fibers of Spec Z_p[T] -> Spec Z_p for one anchor."""
    row = fiber_behavior(f, p)
    # p is a unit of Q_p, so the generic fiber only sees f up to its p-content
    k = vp_int(f.content(), p)
    g = IntPoly(c // p**k for c in f.coeffs)
    generic = FiberBehavior(f, None, GenericVerdict(qp_irreducible(g, p), f"Q_{p}"))
    return FiberReport(f, ("Zp", p), (row,), generic)


def z_fiber_report(f: IntPoly, primes) -> FiberReport:
    primes = tuple(check_prime(q) for q in primes)
    rows = tuple(fiber_behavior(f, q) for q in primes)
    generic = FiberBehavior(f, None, GenericVerdict(q_irreducible(f), "Q"))
    return FiberReport(f, ("Z", primes), rows, generic)


# -- JSON ------------------------------------------------------------------------------


def _hit_json(h: FactorHit) -> dict:
    out = {"factor": str(h.factor), "multiplicity": h.multiplicity}
    if h.root is not None:
        out["root"] = h.root
    return out


def verdict_json(v: Verdict) -> dict:
    if isinstance(v, Blip):
        return {"kind": "blip", "residue_order": v.residue_order}
    if isinstance(v, Split):
        return {"kind": "split", "points": [_hit_json(h) for h in v.hits]}
    if isinstance(v, Tangent):
        if v.contained:
            return {"kind": "tangent", "contained_in_fiber": True}
        return {
            "kind": "tangent",
            "witness": str(v.witness),
            "points": [_hit_json(h) for h in v.hits],
        }
    raise TypeError(f"not a fiber verdict: {v!r}")


def qp_verdict_json(v: QpVerdict) -> dict:
    out: dict = {"verdict": v.status}
    if v.certificate is not None:
        out["certificate"] = v.certificate
    w = v.witness
    if isinstance(w, LiftedRoot):
        out["witness"] = {"root": w.alpha.residue, "precision": w.alpha.prec}
    elif isinstance(w, IntPoly):
        out["witness"] = {"factor": str(w)}
    elif isinstance(w, Fraction):
        out["witness"] = {"root": str(w)}
    elif isinstance(w, int):
        out["witness"] = {"value": w}
    return out


def report_json(report: FiberReport) -> dict:
    kind, data = report.space
    space = {"kind": "Zp", "p": data} if kind == "Zp" else {"kind": "Z", "primes": list(data)}
    rows = []
    for r in report.rows:
        row = {"fiber": r.fiber, "verdict": verdict_json(r.verdict)}
        if r.degree_drop is not None:
            row["degree_drop"] = {"from": r.degree_drop[0], "to": r.degree_drop[1]}
        rows.append(row)
    return {
        "anchor": str(report.anchor),
        "space": space,
        "rows": rows,
        "generic": qp_verdict_json(report.generic_row.verdict.verdict),
    }
