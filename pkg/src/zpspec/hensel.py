"""Hensel lifting of roots in Z_p by Newton iteration.

A seed ``a`` is certified when ``v(f(a)) > 2 v(f'(a))``; the iteration
``a <- a - f(a)/f'(a)`` then converges to the unique root ``alpha`` with
``v(alpha - a) > v(f'(a))``.  The division is exact in Z_p because
``v(f(a)) > v(f'(a))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisError, PrecisionError, ZpError
from .padic import INF, PadicInt, Valuation, embed, embed_int, vp_int
from .poly import IntPoly, ZpPoly, discriminant, rational_gcd, rational_roots

DEFAULT_PRECISION = 50
MAX_SEARCH_DEPTH = 6


@dataclass(frozen=True)
class HenselCertificate:
    seed: PadicInt
    v_f: Valuation
    v_fprime: int
    strong_ok: bool
    weak_ok: bool
    exact: bool = False  # f(seed) is 0 at the working precision


@dataclass(frozen=True)
class LiftedRoot:
    alpha: PadicInt
    distance_valuation: Valuation
    fprime_valuation: int
    certificate: HenselCertificate | None = None
    certified: bool = True
    steps: tuple[Valuation, ...] = field(default=(), compare=False)


def _as_int_poly(f) -> IntPoly:
    if isinstance(f, IntPoly):
        return f
    if isinstance(f, ZpPoly):
        return f.residues()
    raise ZpError(f"expected a polynomial, got {type(f).__name__}")


def certify(
    f: ZpPoly | IntPoly,
    a: PadicInt | int,
    p: int | None = None,
    prec: int = DEFAULT_PRECISION,
) -> HenselCertificate:
    """Exact valuations of f(a) and f'(a) and the two Hensel flags.

    The seed's residue is read as an exact element; valuations are taken at
    the polynomial's coefficient precision (``prec`` for an IntPoly).
    """
    if isinstance(f, ZpPoly):
        prec = f.prec
        p = f.p if p is None else p
    if isinstance(a, PadicInt):
        p = a.p
        seed = a
    elif p is None:
        raise ZpError("an integer seed needs an explicit prime")
    else:
        seed = embed_int(a, p, prec)
    if isinstance(f, ZpPoly) and f.p != p:
        raise ZpError(f"seed is {p}-adic but the polynomial is over Z_{f.p}")
    g = _as_int_poly(f)
    m = p**prec
    x = seed.residue
    fa = g(x) % m
    dfa = g.derivative()(x) % m
    if dfa == 0:
        raise PrecisionError(f"f'(a) is 0 mod {p}^{prec}; increase precision")
    e = vp_int(dfa, p)
    if fa == 0:
        if 2 * e >= prec:
            raise PrecisionError(f"f(a) is 0 mod {p}^{prec} but 2*v(f'(a)) >= {prec}; increase precision")
        return HenselCertificate(seed, INF, e, True, e == 0, exact=True)
    v = vp_int(fa, p)
    return HenselCertificate(seed, v, e, v > 2 * e, v >= 1 and e == 0)


def lift(f: ZpPoly | IntPoly, a: PadicInt | int, target_precision: int = DEFAULT_PRECISION, p: int | None = None) -> LiftedRoot:
    """Newton-lift a certified seed to a root known to ``target_precision`` digits."""
    cert = certify(f, a, p, prec=max(DEFAULT_PRECISION, target_precision))
    if not cert.strong_ok:
        raise HypothesisError(
            f"|f(a)|_p < |f'(a)|_p^2 fails: v(f(a))={cert.v_f}, v(f'(a))={cert.v_fprime}", cert
        )
    p = cert.seed.p
    e = cert.v_fprime
    g = _as_int_poly(f)
    dg = g.derivative()
    work = target_precision + e
    if isinstance(f, ZpPoly) and f.prec < work:
        raise PrecisionError(
            f"coefficients known to {f.prec} digits; lifting to {target_precision} needs {work}"
        )
    m = p**work
    x = cert.seed.residue
    steps: list[Valuation] = []
    while True:
        fx = g(x) % m
        if fx == 0:
            steps.append(INF)
            break
        vf = vp_int(fx, p)
        steps.append(vf)
        dfx = dg(x) % m
        if vp_int(dfx, p) != e:
            raise ZpError("f'(a_k) lost its valuation; Newton iteration invariant broken")
        # exact division: f(x)/f'(x) = p^(vf-e) * (unit quotient)
        u_f = fx // p**vf
        u_d = dfx // p**e
        step = p ** (vf - e) * u_f * pow(u_d, -1, m) % m
        x = (x - step) % m
        if len(steps) > 4 * work + 8:
            raise PrecisionError("Newton iteration failed to converge")
    alpha = PadicInt(p, target_precision, x % p**target_precision)
    if g(alpha.residue) % p**target_precision != 0:
        raise ZpError("lifted value is not a root at the target precision")
    diff = (alpha.residue - cert.seed.residue) % p**target_precision
    dist = INF if diff == 0 else vp_int(diff, p)
    fpv = vp_int(dg(alpha.residue) % p**target_precision, p)
    if cert.v_f != INF and cert.v_f - e < target_precision and dist != cert.v_f - e:
        raise ZpError("|alpha - a|_p != |f(a)/f'(a)|_p")
    return LiftedRoot(alpha, dist, fpv, cert, True, tuple(steps))


def _roots_mod_tree(g: IntPoly, p: int, depth: int) -> list[int]:
    """Residues r in [0, p^depth) with g(r) = 0 mod p^depth, ascending."""
    level = [r for r in range(p) if g(r) % p == 0]
    for k in range(2, depth + 1):
        pk, step = p**k, p ** (k - 1)
        level = [r + j * step for r in level for j in range(p) if g(r + j * step) % pk == 0]
    return sorted(level)


def default_search_depth(f: IntPoly, p: int) -> int:
    d = discriminant(f) if f.degree >= 1 else 0
    v = vp_int(d, p)
    return MAX_SEARCH_DEPTH if v == INF else min(v + 1, MAX_SEARCH_DEPTH)


def roots_in_zp(
    f: ZpPoly | IntPoly,
    search_depth: int | None = None,
    precision: int = DEFAULT_PRECISION,
    p: int | None = None,
) -> list[LiftedRoot]:
    """All roots in Z_p reachable from certified seeds mod ``p**search_depth``.

    Rational multiple roots (f and f' both vanish) are returned with
    ``certified=False``; irrational multiple roots are not found.
    Order follows the seed residue.
    """
    if isinstance(f, ZpPoly):
        p = f.p
    if p is None:
        raise ZpError("an IntPoly needs an explicit prime")
    g = _as_int_poly(f)
    if g.degree < 1:
        raise ZpError("roots need a polynomial of degree >= 1")
    k = default_search_depth(g, p) if search_depth is None else search_depth
    found: list[LiftedRoot] = []
    seen: set[int] = set()
    multiple = None  # rational roots of gcd(f, f'), computed on demand
    for r in _roots_mod_tree(g, p, k):
        seed = embed_int(r, p, k)
        try:
            cert = certify(g, seed, prec=precision + k)
        except PrecisionError:
            cert = None
        if cert is not None and cert.strong_ok:
            target = precision
            if isinstance(f, ZpPoly):
                target = min(precision, f.prec - cert.v_fprime)
            root = lift(g, seed, target, p)
        else:
            # only an exact multiple root can sit on an uncertified seed
            if multiple is None:
                h = rational_gcd(g, g.derivative())
                multiple = [q for q in rational_roots(h) if q.denominator % p]
            hits = [q for q in multiple if (q.numerator - r * q.denominator) % p**k == 0]
            if not hits:
                continue
            alpha = embed(hits[0], p, precision)
            root = LiftedRoot(alpha, INF, INF, cert, False)
        if root.alpha.residue not in seen:
            seen.add(root.alpha.residue)
            found.append(root)
    return found
