"""Command-line front end.

Analysis commands print one JSON document (compact, fixed key order,
newline-terminated).  ``draw`` writes SVG or TikZ to ``--out`` (``-`` is
stdout).  Exit status: 0 on success (an "undecided" verdict is an answer),
1 on a domain error with an error document on stdout, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .diagram import RenderOptions, plan_global_diagram, plan_zp_diagram, render
from .errors import NotPrimeError, ParseError, ZpError
from .hensel import DEFAULT_PRECISION, LiftedRoot, lift, roots_in_zp
from .padic import INF, abs_p, check_prime, embed_int, render_sequence, vp
from .poly import fp_factor, fp_is_irreducible, parse_poly, reduce_mod_p
from .spectrum import (
    qp_irreducible,
    qp_verdict_json,
    report_json,
    z_fiber_report,
    zp_fiber_report,
    zp_irreducible,
)


def _prime(text: str) -> int:
    try:
        return check_prime(int(text))
    except (ValueError, NotPrimeError) as exc:
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime") from exc


def _primes(text: str) -> list[int]:
    return [_prime(t) for t in text.split(",") if t.strip()]


def _space(text: str):
    if text == "zp":
        return ("zp", None)
    if text.startswith("z:"):
        return ("z", _primes(text[2:]))
    raise argparse.ArgumentTypeError("space must be 'zp' or 'z:<p1>,<p2>,...'")


def _val(v) -> int | str:
    return "inf" if v == INF else v


def _dump(doc: dict, out) -> None:
    out.write(json.dumps(doc, separators=(",", ":"), ensure_ascii=False) + "\n")


def _root_json(r: LiftedRoot) -> dict:
    doc: dict = {
        "alpha": r.alpha.residue,
        "precision": r.alpha.prec,
        "certified": r.certified,
        "distance_valuation": _val(r.distance_valuation),
        "fprime_valuation": _val(r.fprime_valuation),
    }
    if r.certificate is not None:
        c = r.certificate
        doc["certificate"] = {
            "seed": c.seed.residue,
            "v_f": _val(c.v_f),
            "v_fprime": c.v_fprime,
            "strong_ok": c.strong_ok,
            "weak_ok": c.weak_ok,
            "exact": c.exact,
        }
    return doc


def cmd_vp(args) -> dict:
    q = Fraction(args.rational)
    v = vp(q, args.p)
    return {"input": str(q), "p": args.p, "valuation": _val(v), "abs": str(abs_p(v, args.p))}


def cmd_embed(args) -> dict:
    a = embed_int(args.int, args.p, args.depth)
    seq = a.truncation_sequence()
    return {
        "x": args.int,
        "p": args.p,
        "depth": args.depth,
        "sequence": seq,
        "rendered": render_sequence(seq),
        "digits": str(a),
    }


def cmd_lift(args) -> dict:
    f = parse_poly(args.poly)
    r = lift(f, args.seed, args.prec, p=args.p)
    m = args.p**args.prec
    doc = {"poly": str(f), "p": args.p, **_root_json(r)}
    doc["checks"] = {
        "root": f(r.alpha.residue) % m == 0,
        "congruent_to_seed": (r.alpha.residue - args.seed) % args.p == 0,
    }
    return doc


def cmd_roots(args) -> dict:
    f = parse_poly(args.poly)
    roots = roots_in_zp(f, args.depth, args.prec, p=args.p)
    return {"poly": str(f), "p": args.p, "roots": [_root_json(r) for r in roots]}


def cmd_irred(args) -> dict:
    f = parse_poly(args.poly)
    if args.over == "fp":
        g = reduce_mod_p(f, args.p)
        if g.degree < 1:
            raise ZpError(f"{f} is constant mod {args.p}")
        irr = fp_is_irreducible(g)
        return {"verdict": "irreducible" if irr else "reducible", "factorization": str(fp_factor(g))}
    verdict = zp_irreducible(f, args.p) if args.over == "zp" else qp_irreducible(f, args.p)
    return qp_verdict_json(verdict)


def cmd_classify(args) -> dict:
    f = parse_poly(args.poly)
    kind, primes = args.space
    if kind == "zp":
        if args.p is None:
            raise ZpError("--space zp needs --p")
        return report_json(zp_fiber_report(f, args.p))
    return report_json(z_fiber_report(f, primes))


def cmd_draw(args) -> str:
    anchors = [parse_poly(s) for s in args.anchors.split(",") if s.strip()] if args.anchors else []
    if args.primes:
        spec = plan_global_diagram(args.primes, anchors, args.budget)
    elif args.p is not None:
        spec = plan_zp_diagram(args.p, anchors, args.budget)
    else:
        raise ZpError("draw needs --p or --primes")
    return render(spec, RenderOptions(format=args.format))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zpspec", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    d = argparse.ArgumentDefaultsHelpFormatter

    s = sub.add_parser("vp", help="p-adic valuation and absolute value of a rational", formatter_class=d)
    s.add_argument("rational", help="integer or a/b")
    s.add_argument("--p", type=_prime, required=True)
    s.set_defaults(func=cmd_vp)

    s = sub.add_parser("embed", help="truncation sequence of an integer in Z_p", formatter_class=d)
    s.add_argument("int", type=int)
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--depth", type=int, default=5, help="number of p-adic digits")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("lift", help="Hensel-lift a seed to a root in Z_p", formatter_class=d)
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--prec", type=int, default=DEFAULT_PRECISION, help="p-adic digits of the result")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("roots", help="all roots in Z_p reachable by Hensel lifting", formatter_class=d)
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--depth", type=int, default=None, help="seed depth; default v_p(disc)+1, capped")
    s.add_argument("--prec", type=int, default=DEFAULT_PRECISION, help="p-adic digits of the result")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("irred", help="irreducibility over F_p, Z_p or Q_p", formatter_class=d)
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_prime, required=True)
    s.add_argument("--over", choices=("fp", "zp", "qp"), default="qp", help="coefficient ring")
    s.set_defaults(func=cmd_irred)

    s = sub.add_parser("classify", help="fiber report of an anchor polynomial", formatter_class=d)
    s.add_argument("--poly", required=True)
    s.add_argument("--p", type=_prime)
    s.add_argument("--space", type=_space, default=("zp", None), help="zp or z:<p1>,<p2>,...")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("draw", help="draw Spec Z_p[T] or Spec Z[T]", formatter_class=d)
    s.add_argument("--anchors", default="", help="comma-separated polynomials")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=_prime)
    g.add_argument("--primes", type=_primes)
    s.add_argument("--format", choices=("svg", "tikz"), default="svg", help="output format")
    s.add_argument("--budget", type=int, default=7, help="labelled closed points per fiber")
    s.add_argument("--out", default="-", help="output path; - for stdout")
    s.set_defaults(func=cmd_draw)
    return ap


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except ParseError as exc:
        _dump({"error": "parse", "message": str(exc), "position": exc.position}, stdout)
        return 1
    except (ZpError, ZeroDivisionError) as exc:
        _dump({"error": type(exc).__name__, "message": str(exc)}, stdout)
        return 1
    if isinstance(result, str):
        if args.out == "-":
            stdout.write(result)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(result)
        return 0
    _dump(result, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
