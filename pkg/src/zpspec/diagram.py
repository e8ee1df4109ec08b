"""Declarative drawings of Spec Z_p[T] and Spec Z[T], rendered to SVG or TikZ.

Planning turns fiber reports into a :class:`DiagramSpec` in abstract
coordinates: fiber ``i`` sits at ``x = i``, the generic axis at the right,
and heights run from 0 (the (T) line) to 1 (the fuzzy generic point of the
fiber).  Rendering scales those units by :class:`RenderOptions`.

Conventions:

* ``dot``: a rational closed point (p, T+k), or a simple crossing of an anchor;
* ``blip``: big open circle, the anchor stays irreducible mod p;
* ``tangent``: the anchor meets the fiber with multiplicity >= 2;
* ``fuzzy``: generic points (0), (p) and (f).
"""

from __future__ import annotations

import json
import re
from dataclasses import asdict, dataclass
from math import hypot
from xml.sax.saxutils import escape

from .errors import ZpError
from .poly import FpPoly, IntPoly
from .spectrum import (
    UNDECIDED,
    Blip,
    FiberBehavior,
    FiberReport,
    Split,
    Tangent,
    fiber_behavior,
    q_irreducible,
    zp_fiber_report,
)

STYLES = ("dot", "blip", "tangent", "fuzzy")
AXIS = -1  # fiber index of the generic axis

LINEAR_BAND = 0.7
ELLIPSIS_BAND = 0.1
UPPER_BAND = 0.82
AXIS_GAP = 2.5


@dataclass(frozen=True)
class Fiber:
    label: str
    x: float
    prime: int


@dataclass(frozen=True)
class Contact:
    fiber: int  # index into DiagramSpec.fibers, or AXIS
    y: float
    style: str
    anchor: str | None = None  # None for structural markers
    role: str = "crossing"  # crossing | double-contact | closed-point | axis | fiber-generic | horizontal-generic


@dataclass(frozen=True)
class Segment:
    start: tuple[float, float]
    end: tuple[float, float]
    pair: bool = False  # two branches leaving a tangency


@dataclass(frozen=True)
class Curve:
    anchor: str
    segments: tuple[Segment, ...]
    certified: bool = True
    base: bool = False  # the (T) line along the bottom


@dataclass(frozen=True)
class Label:
    text: str
    x: float
    y: float
    placement: str


@dataclass(frozen=True)
class DiagramSpec:
    title: str
    fibers: tuple[Fiber, ...]
    generic_axis: tuple[str, float] | None
    curves: tuple[Curve, ...] = ()
    contacts: tuple[Contact, ...] = ()
    labels: tuple[Label, ...] = ()
    ellipsis_x: float | None = None

    @property
    def vertical_lines(self) -> tuple[float, ...]:
        return tuple(f.x for f in self.fibers)

    def validate(self) -> None:
        n = len(self.fibers)
        for c in self.contacts:
            if c.style not in STYLES:
                raise ZpError(f"unknown contact style {c.style!r}")
            if c.fiber == AXIS:
                if self.generic_axis is None:
                    raise ZpError("contact on the generic axis, but the diagram has none")
            elif not 0 <= c.fiber < n:
                raise ZpError(f"contact references missing fiber {c.fiber}")
            if c.style == "fuzzy" and c.role not in ("axis", "fiber-generic", "horizontal-generic"):
                raise ZpError("fuzzy style is reserved for generic points")

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"


@dataclass(frozen=True)
class RenderOptions:
    format: str = "svg"
    fiber_spacing: float = 120.0  # px per x unit
    fiber_height: float = 300.0  # px per y unit
    amplitude: float = 18.0  # px of wobble between fibers
    font_size: float = 11.0
    margin: float = 70.0
    tikz_scale: float = 0.02  # cm per px


# -- planning ---------------------------------------------------------------------------


def linear_slot(k: int, p: int, budget: int) -> float:
    """Height of (p, T+k): evenly spaced for k < budget, squeezed above that."""
    n = min(p, budget)
    if k < n:
        return LINEAR_BAND * k / n
    return LINEAR_BAND + ELLIPSIS_BAND * (k - n + 1) / (p - n + 1)


def _upper_slot(j: int) -> float:
    return UPPER_BAND + 0.05 * (j % 3)


def _point_label(p: int | str, g: FpPoly) -> str:
    return f"({p}, {g})"


class _Planner:
    def __init__(self, title: str, primes, budget: int, closed_point_markers: bool):
        self.title = title
        self.primes = list(primes)
        self.budget = budget
        self.fibers = tuple(Fiber(f"({q})", float(i), q) for i, q in enumerate(self.primes))
        self.axis_x = (len(self.primes) - 1 if self.primes else 0) + AXIS_GAP
        self.contacts: list[Contact] = []
        self.labels: list[Label] = []
        self.label_texts: set[str] = set()
        self.curves: list[Curve] = []
        self.upper: dict[tuple[int, tuple], float] = {}
        for i, q in enumerate(self.primes):
            self._mark(i, 1.0, "fuzzy", None, "fiber-generic", f"({q})", "above left")
            ks = range(min(q, budget)) if closed_point_markers else [0]
            for k in ks:
                g = FpPoly(q, [k, 1])
                self._mark(i, linear_slot(k, q, budget), "dot", None, "closed-point", _point_label(q, g), "right")
        self._mark(AXIS, 1.0, "fuzzy", None, "axis", "(0)", "above right")
        self._mark(AXIS, 0.0, "fuzzy", None, "axis", "(T)", "below right")

    def _x(self, fiber: int) -> float:
        return self.axis_x if fiber == AXIS else self.fibers[fiber].x

    def _mark(self, fiber, y, style, anchor, role, text, placement):
        self.contacts.append(Contact(fiber, y, style, anchor, role))
        if text is not None and text not in self.label_texts:
            self.label_texts.add(text)
            self.labels.append(Label(text, self._x(fiber), y, placement))

    def _slot(self, i: int, q: int, g: FpPoly) -> float:
        if g.degree == 1:
            return linear_slot(g.coeffs[0], q, self.budget)
        key = (i, g.coeffs)
        if key not in self.upper:
            used = sum(1 for (fi, _) in self.upper if fi == i)
            self.upper[key] = _upper_slot(used)
        return self.upper[key]

    def _labelled(self, q, g: FpPoly, k_ok: bool) -> str | None:
        if g.degree == 1 and not k_ok:
            return None
        return _point_label(q, g)

    def add_anchor(self, f: IntPoly, rows: list[FiberBehavior], certified: bool, end_y: float):
        name = str(f)
        is_t = f.coeffs == (0, 1)
        points: list[tuple[float, float, bool]] = []  # x, y, starts a tangent pair
        for i, row in enumerate(rows):
            q = self.primes[i]
            v = row.verdict
            x = self.fibers[i].x
            if isinstance(v, Blip):
                y = self._slot(i, q, v.factor)
                self._mark(i, y, "blip", name, "crossing", _point_label(q, v.factor), "right")
                points.append((x, y, False))
            elif isinstance(v, (Split, Tangent)):
                if isinstance(v, Tangent) and v.contained:
                    self._mark(i, 0.5, "tangent", name, "double-contact", None, "right")
                    points.append((x, 0.5, False))
                    continue
                here = []
                for h in v.hits:
                    y = self._slot(i, q, h.factor)
                    k_ok = h.factor.degree > 1 or h.factor.coeffs[0] < min(q, self.budget)
                    text = self._labelled(q, h.factor, k_ok)
                    if h.multiplicity >= 2:
                        at_base = h.factor.coeffs == (0, 1)
                        role = "double-contact" if at_base else "crossing"
                        self._mark(i, y, "tangent", name, role, text, "left")
                        here.append((x, y, not at_base))
                    else:
                        self._mark(i, y, "dot", name, "crossing", text, "right")
                        here.append((x, y, False))
                points.extend(sorted(here, key=lambda t: t[1]))
        if not is_t:
            self._mark(AXIS, end_y, "fuzzy", name, "horizontal-generic", f"({name})", "right")
        points.append((self.axis_x, end_y, False))
        segs = []
        for a, b in zip(points, points[1:]):
            segs.append(Segment((a[0], a[1]), (b[0], b[1]), a[2]))
        self.curves.append(Curve(name, tuple(segs), certified, base=is_t))

    def base_line(self):
        left = (self.fibers[0].x - 0.4) if self.fibers else self.axis_x - 1
        self.curves.insert(0, Curve("T", (Segment((left, 0.0), (self.axis_x + 0.3, 0.0)),), True, base=True))

    def spec(self, ellipsis_x=None) -> DiagramSpec:
        return DiagramSpec(
            self.title,
            self.fibers,
            ("A^1_Q" if ellipsis_x is not None else "A^1_Qp", self.axis_x),
            tuple(self.curves),
            tuple(self.contacts),
            tuple(self.labels),
            ellipsis_x,
        )


def _end_heights(anchors: list[IntPoly]) -> list[float]:
    others = [f for f in anchors if f.coeffs != (0, 1)]
    out, j = [], 0
    for f in anchors:
        if f.coeffs == (0, 1):
            out.append(0.0)
        else:
            j += 1
            out.append(0.25 + 0.55 * j / (len(others) + 1))
    return out


def plan_zp_diagram(p: int, anchors, budget: int = 7, reports: list[FiberReport] | None = None) -> DiagramSpec:
    """Spec Z_p[T]: one special fiber, the generic axis, one curve per anchor."""
    anchors = list(anchors)
    if reports is None:
        reports = [zp_fiber_report(f, p) for f in anchors]
    reports = [(r.rows[0], r.generic_row.verdict.verdict.status != UNDECIDED) for r in reports]
    pl = _Planner(f"Spec Z_{p}[T]", [p], budget, closed_point_markers=False)
    pl.base_line()
    for f, (row, certified), y in zip(anchors, reports, _end_heights(anchors)):
        if f.coeffs == (0, 1):
            pl.add_anchor(f, [row], certified, 0.0)
            pl.curves.pop()  # drawn as the base line
            continue
        pl.add_anchor(f, [row], certified, y)
    return pl.spec()


def plan_global_diagram(primes, anchors, closed_point_budget: int = 7) -> DiagramSpec:
    """Spec Z[T]: a vertical fiber per prime with labelled points (p, T+k)."""
    anchors = list(anchors)
    pl = _Planner("Spec Z[T]", primes, closed_point_budget, closed_point_markers=True)
    pl.base_line()
    for f, y in zip(anchors, _end_heights(anchors)):
        rows = [fiber_behavior(f, q) for q in pl.primes]
        certified = q_irreducible(f).status != UNDECIDED
        pl.add_anchor(f, rows, certified, y)
        if f.coeffs == (0, 1):
            pl.curves.pop()
    last = pl.fibers[-1].x if pl.fibers else 0.0
    return pl.spec(ellipsis_x=last + 0.6)


# -- rendering --------------------------------------------------------------------------


def _n(v: float) -> str:
    s = f"{v:.2f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


class _Frame:
    def __init__(self, spec: DiagramSpec, opts: RenderOptions):
        self.o = opts
        xs = [f.x for f in spec.fibers] + ([spec.generic_axis[1]] if spec.generic_axis else [0.0])
        self.x0 = min(xs) - 0.5
        self.x1 = max(xs) + 0.5
        self.width = (self.x1 - self.x0) * opts.fiber_spacing + 2 * opts.margin
        self.height = opts.fiber_height + 2 * opts.margin

    def pt(self, x: float, y: float) -> tuple[float, float]:
        o = self.o
        return (
            o.margin + (x - self.x0) * o.fiber_spacing,
            o.margin + (1.0 - y) * o.fiber_height,
        )


def _cubics(seg: Segment, frame: _Frame, wobble: int) -> list[tuple]:
    """Control polygons (p0, c1, c2, p1) in device coordinates."""
    (x0, y0), (x1, y1) = frame.pt(*seg.start), frame.pt(*seg.end)
    amp = frame.o.amplitude
    dx = x1 - x0
    if abs(dx) < 1e-9:
        s = frame.o.fiber_spacing * 0.3
        return [((x0, y0), (x0 + s, y0), (x1 + s, y1), (x1, y1))]
    c1 = (x0 + dx / 3, y0)
    if seg.pair:
        return [
            ((x0, y0), c1, (x1 - dx / 3, y1 - amp), (x1, y1)),
            ((x0, y0), c1, (x1 - dx / 3, y1 + amp), (x1, y1)),
        ]
    return [((x0, y0), (x0 + dx / 3, y0 - wobble * amp), (x1 - dx / 3, y1 + wobble * amp), (x1, y1))]


def _path_d(cubic) -> str:
    (a, b, c, d) = cubic
    return f"M{_n(a[0])},{_n(a[1])} C{_n(b[0])},{_n(b[1])} {_n(c[0])},{_n(c[1])} {_n(d[0])},{_n(d[1])}"


def _fuzzy_strokes(cx: float, cy: float) -> list[str]:
    # fixed scribble cluster: three short offset arcs
    out = []
    for dx, dy, r in ((-3, -2, 6), (2, 1, 7), (0, 3, 5)):
        out.append(
            f"M{_n(cx + dx - r)},{_n(cy + dy)} q{_n(r)},{_n(-r)} {_n(2 * r)},0 q{_n(-r)},{_n(r)} {_n(-2 * r)},0"
        )
    return out


SVG_STYLE = (
    ".fiber,.axis{stroke:#000;stroke-width:1.5}"
    ".ellipsis{stroke:#000;stroke-width:1;stroke-dasharray:2 4}"
    ".curve{fill:none;stroke:#000;stroke-width:1.2}"
    ".curve.uncertified{stroke-dasharray:6 3}"
    ".contact.dot{fill:#000}"
    ".contact.blip{fill:#fff;stroke:#000;stroke-width:1.5}"
    ".contact.tangent{fill:#000;stroke:#000}"
    ".contact.fuzzy path{fill:none;stroke:#888;stroke-width:1}"
    "text{font-family:serif}"
)


def render_svg(spec: DiagramSpec, opts: RenderOptions) -> str:
    spec.validate()
    fr = _Frame(spec, opts)
    w, h = _n(fr.width), _n(fr.height)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">',
        f"<title>{escape(spec.title)}</title>",
        f"<style>{SVG_STYLE}</style>",
        '<g id="fibers">',
    ]
    for f in spec.fibers:
        (x, y0), (_, y1) = fr.pt(f.x, 0.0), fr.pt(f.x, 1.0)
        out.append(f'<line class="fiber" data-prime="{f.prime}" x1="{_n(x)}" y1="{_n(y0)}" x2="{_n(x)}" y2="{_n(y1)}"/>')
    if spec.ellipsis_x is not None:
        (x, y0), (_, y1) = fr.pt(spec.ellipsis_x, 0.0), fr.pt(spec.ellipsis_x, 1.0)
        out.append(f'<line class="ellipsis" x1="{_n(x)}" y1="{_n(y0)}" x2="{_n(x)}" y2="{_n(y1)}"/>')
    out.append("</g>")
    if spec.generic_axis is not None:
        (x, y0), (_, y1) = fr.pt(spec.generic_axis[1], 0.0), fr.pt(spec.generic_axis[1], 1.0)
        out.append(
            f'<line class="axis" data-label="{escape(spec.generic_axis[0])}" '
            f'x1="{_n(x)}" y1="{_n(y0)}" x2="{_n(x)}" y2="{_n(y1)}"/>'
        )
    out.append('<g id="curves">')
    for curve in spec.curves:
        cls = "curve" + (" base" if curve.base else "") + ("" if curve.certified else " uncertified")
        anchor = escape(curve.anchor)
        for j, seg in enumerate(curve.segments):
            cubics = _cubics(seg, fr, 1 if j % 2 == 0 else -1)
            if seg.pair:
                out.append(f'<g class="tangent-pair" data-anchor="{anchor}">')
                out.extend(f'<path class="{cls} branch" d="{_path_d(c)}"/>' for c in cubics)
                out.append("</g>")
            else:
                out.extend(f'<path class="{cls}" data-anchor="{anchor}" d="{_path_d(c)}"/>' for c in cubics)
    out.append("</g>")
    out.append('<g id="contacts">')
    for c in spec.contacts:
        x, y = fr.pt(fr_x(spec, c), c.y)
        attrs = f'data-role="{c.role}"' + (f' data-anchor="{escape(c.anchor)}"' if c.anchor else "")
        if c.style == "fuzzy":
            strokes = "".join(f'<path d="{d}"/>' for d in _fuzzy_strokes(x, y))
            out.append(f'<g class="contact fuzzy" {attrs}>{strokes}</g>')
        elif c.style == "blip":
            out.append(f'<circle class="contact blip" {attrs} cx="{_n(x)}" cy="{_n(y)}" r="7"/>')
        elif c.style == "tangent":
            out.append(f'<circle class="contact tangent" {attrs} cx="{_n(x)}" cy="{_n(y)}" r="3.5"/>')
        else:
            out.append(f'<circle class="contact dot" {attrs} cx="{_n(x)}" cy="{_n(y)}" r="2.5"/>')
    out.append("</g>")
    out.append(f'<g id="labels" font-size="{_n(opts.font_size)}">')
    for lab in spec.labels:
        x, y = fr.pt(lab.x, lab.y)
        dx, dy, anchor = _placement(lab.placement)
        out.append(
            f'<text x="{_n(x + dx)}" y="{_n(y + dy)}" text-anchor="{anchor}" '
            f'data-placement="{lab.placement}">{escape(lab.text)}</text>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def fr_x(spec: DiagramSpec, c: Contact) -> float:
    return spec.generic_axis[1] if c.fiber == AXIS else spec.fibers[c.fiber].x


def _placement(hint: str) -> tuple[float, float, str]:
    return {
        "above left": (-6, -8, "end"),
        "above right": (6, -8, "start"),
        "below right": (6, 14, "start"),
        "left": (-8, 4, "end"),
        "right": (8, 4, "start"),
    }.get(hint, (8, 4, "start"))


TIKZ_PREAMBLE = r"""% zpspec diagram; needs \usepackage{tikz}
\tikzset{
  dot/.style={circle, fill, inner sep=1.2pt},
  big dot/.style={circle, draw, thick, fill=white, inner sep=3pt},
  tangent dot/.style={circle, draw, fill, inner sep=1.8pt},
  fuzzy/.style={circle, draw=gray, densely dotted, fill=gray!25, inner sep=3pt},
  uncertified/.style={dashed},
}
"""

_TIKZ_NODE = {"dot": "dot", "blip": "big dot", "tangent": "tangent dot", "fuzzy": "fuzzy"}
_TIKZ_LABEL = {"above left": "above left", "above right": "above right", "below right": "below right", "left": "left", "right": "right"}


def _tex(text: str) -> str:
    return "$" + re.sub(r"\^(\d+)", r"^{\1}", text) + "$"


def render_tikz(spec: DiagramSpec, opts: RenderOptions) -> str:
    spec.validate()
    fr = _Frame(spec, opts)
    s = opts.tikz_scale

    def c(x: float, y: float) -> str:
        px, py = fr.pt(x, y)
        return f"({_n(px * s)},{_n((fr.height - py) * s)})"

    def cd(pt) -> str:
        return f"({_n(pt[0] * s)},{_n((fr.height - pt[1]) * s)})"

    out = [TIKZ_PREAMBLE.rstrip("\n"), r"\begin{tikzpicture}[font=\tiny]"]
    out.append(f"% {spec.title}")
    for f in spec.fibers:
        out.append(rf"\draw[thick] {c(f.x, 0.0)} -- {c(f.x, 1.0)};")
    if spec.ellipsis_x is not None:
        out.append(rf"\draw[dotted] {c(spec.ellipsis_x, 0.0)} -- {c(spec.ellipsis_x, 1.0)};")
    if spec.generic_axis is not None:
        ax = spec.generic_axis[1]
        out.append(rf"\draw[thick] {c(ax, 0.0)} -- {c(ax, 1.0)};")
    for curve in spec.curves:
        style = "thick" + ("" if curve.certified else ", uncertified")
        for j, seg in enumerate(curve.segments):
            for a, b, cc, d in _cubics(seg, fr, 1 if j % 2 == 0 else -1):
                out.append(rf"\draw[{style}] {cd(a)} .. controls {cd(b)} and {cd(cc)} .. {cd(d)};")
    labels = {(lab.x, lab.y): lab for lab in spec.labels}
    for ct in spec.contacts:
        x = fr_x(spec, ct)
        lab = labels.pop((x, ct.y), None)
        extra = ""
        if lab is not None:
            extra = f", label={{{_TIKZ_LABEL.get(lab.placement, 'right')}:{{{_tex(lab.text)}}}}}"
        out.append(rf"\path {c(x, ct.y)} node[{_TIKZ_NODE[ct.style]}{extra}] {{}};")
    for lab in labels.values():
        out.append(rf"\path {c(lab.x, lab.y)} node[{_TIKZ_LABEL.get(lab.placement, 'right')}] {{{_tex(lab.text)}}};")
    out.append(r"\end{tikzpicture}")
    return "\n".join(out) + "\n"


def render(spec: DiagramSpec, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    if opts.format == "svg":
        return render_svg(spec, opts)
    if opts.format == "tikz":
        return render_tikz(spec, opts)
    raise ZpError(f"unknown format {opts.format!r}")


def label_anchor_points(spec: DiagramSpec, opts: RenderOptions | None = None) -> list[tuple[float, float]]:
    fr = _Frame(spec, opts or RenderOptions())
    return [fr.pt(lab.x, lab.y) for lab in spec.labels]


def min_label_distance(spec: DiagramSpec, opts: RenderOptions | None = None) -> float:
    pts = label_anchor_points(spec, opts)
    best = float("inf")
    for i, a in enumerate(pts):
        for b in pts[i + 1 :]:
            best = min(best, hypot(a[0] - b[0], a[1] - b[1]))
    return best


def empty_spec() -> DiagramSpec:
    return DiagramSpec("empty", (), None)
