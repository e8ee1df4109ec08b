"""p-adic arithmetic, Hensel lifting, irreducibility tests and pictures of Spec Z_p[T]."""

__version__ = "0.1.0"

from .errors import ZpError  # noqa: E402
from .fpx import BACKEND  # noqa: E402
from .padic import INF, PadicInt, PadicNum, abs_p, embed, embed_int, vp, vp_int, vp_rat  # noqa: E402
from .poly import FpPoly, IntPoly, ZpPoly, parse_poly  # noqa: E402

__all__ = [
    "BACKEND",
    "INF",
    "FpPoly",
    "IntPoly",
    "PadicInt",
    "PadicNum",
    "ZpError",
    "ZpPoly",
    "abs_p",
    "embed",
    "embed_int",
    "parse_poly",
    "vp",
    "vp_int",
    "vp_rat",
]
