"""Deterministic SVG rendering of exact configurations.

All geometry stays rational until the final coordinate emission: conics are
sampled through their rational parametrization, lines are clipped against
the viewport exactly, and only the emitted attribute values are floats.
Identical input yields byte-identical SVG.  The five classical figure
configurations shipped with the package are built here as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .conic import Conic, find_rational_point, polar, rational_parametrize, tangents_from
from .errors import EmptyViewport, UnknownReference
from .numbers import INF
from .projective import LINE_AT_INFINITY, PLine, PPoint, join, meet
from .synthetic import InscribedQuadrangle

Viewport = tuple[Fraction, Fraction, Fraction, Fraction]  # xmin, ymin, xmax, ymax

_CONIC_STYLE = 'fill="none" stroke="#000000" stroke-width="1.6"'
_LINE_STYLE = 'stroke="#606060" stroke-width="1"'
_ACCENT_STYLE = 'stroke="#aa2222" stroke-width="1.4"'
_POINT_STYLE = 'fill="#aa2222"'
_TEXT_STYLE = 'font-family="serif" font-size="13"'


@dataclass(frozen=True)
class Drawable:
    kind: str  # "conic" | "line" | "accent-line" | "point"
    obj: object
    label: str = ""


def _fmt(x: float) -> str:
    # shortest round-trip repr: deterministic, and precise enough that the
    # emitted coordinates keep exact incidences to well under 1e-9 relative
    return repr(float(x))


class _Frame:
    def __init__(self, viewport: Viewport, width: int):
        xmin, ymin, xmax, ymax = (Fraction(v) for v in viewport)
        if xmax <= xmin or ymax <= ymin:
            raise EmptyViewport(f"viewport {viewport} has no area")
        self.xmin, self.ymin, self.xmax, self.ymax = xmin, ymin, xmax, ymax
        self.scale = Fraction(width) / (xmax - xmin)
        self.width = width
        self.height = float((ymax - ymin) * self.scale)

    def to_svg(self, x: Fraction, y: Fraction) -> tuple[float, float]:
        return (
            float((x - self.xmin) * self.scale),
            float((self.ymax - y) * self.scale),
        )

    def contains(self, x: Fraction, y: Fraction, margin: int = 0) -> bool:
        mx = (self.xmax - self.xmin) * margin
        my = (self.ymax - self.ymin) * margin
        return (
            self.xmin - mx <= x <= self.xmax + mx
            and self.ymin - my <= y <= self.ymax + my
        )


def _affine(p: PPoint) -> tuple[Fraction, Fraction] | None:
    x, y, z = p.coords
    if z == 0:
        return None
    return (Fraction(x, z), Fraction(y, z))


def _clip_line(l: PLine, frame: _Frame) -> tuple | None:
    """Exact clip of a projective line against the viewport rectangle."""
    if l == LINE_AT_INFINITY:
        return None
    borders = (
        PLine(1, 0, -frame.xmin),
        PLine(1, 0, -frame.xmax),
        PLine(0, 1, -frame.ymin),
        PLine(0, 1, -frame.ymax),
    )
    hits = []
    for b in borders:
        if b == l:
            continue
        pt = meet(l, b)
        aff = _affine(pt)
        if aff is not None and frame.contains(*aff) and aff not in hits:
            hits.append(aff)
    if len(hits) < 2:
        return None
    hits.sort()
    return (hits[0], hits[-1])


def _conic_samples(c: Conic, frame: "_Frame") -> list[tuple[Fraction, Fraction] | None]:
    """Affine sample points around the whole conic, None marking breaks.

    A fixed parameter sweep (dense in the chord-slope parameter, wrapping
    through the slope at infinity) is refined adaptively: between any two
    consecutive samples whose chord sags more than a fraction of a pixel,
    the parameter interval is bisected, exactly.
    """
    base = find_rational_point(c)
    if base is None:
        raise UnknownReference("cannot render a conic without a rational point")
    par = rational_parametrize(c, base)
    params: list = [Fraction(k, 4) for k in range(-4 * 24, 4 * 24 + 1)]
    params += [Fraction(96, k) for k in range(-23, 24) if k != 0]
    params = sorted(set(params))
    tol = float(frame.xmax - frame.xmin) / frame.width * 0.75  # world units per 3/4 px
    out: list[tuple[Fraction, Fraction] | None] = []
    prev_t = None
    prev_pt = None
    for t in params:
        pt = _affine(par.point(t))
        if prev_t is not None:
            out.extend(_refine(par, prev_t, t, prev_pt, pt, frame, tol, depth=6))
        out.append(pt)
        prev_t, prev_pt = t, pt
    out.append(_affine(par.point(INF)))  # the wrap point of the sweep
    out.append(out[0])  # close the loop
    return out


def _refine(par, t1, t2, p1, p2, frame, tol, depth):
    """Extra samples strictly between t1 and t2 where the chord is too flat."""
    if depth == 0 or p1 is None or p2 is None:
        return []
    if not (frame.contains(*p1, margin=2) or frame.contains(*p2, margin=2)):
        return []
    tm = (t1 + t2) / 2
    pm = _affine(par.point(tm))
    if pm is None:
        return [None]
    sag = _point_segment_distance(pm, p1, p2)
    if sag <= tol:
        return []
    left = _refine(par, t1, tm, p1, pm, frame, tol, depth - 1)
    right = _refine(par, tm, t2, pm, p2, frame, tol, depth - 1)
    return left + [pm] + right


def _point_segment_distance(p, a, b) -> float:
    px, py = float(p[0]), float(p[1])
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    dx, dy = bx - ax, by - ay
    length2 = dx * dx + dy * dy
    if length2 == 0:
        return ((px - ax) ** 2 + (py - ay) ** 2) ** 0.5
    t = max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / length2))
    qx, qy = ax + t * dx, ay + t * dy
    return ((px - qx) ** 2 + (py - qy) ** 2) ** 0.5


def _polyline_runs(samples, frame: _Frame) -> list[list[tuple[float, float]]]:
    runs: list[list[tuple[float, float]]] = []
    current: list[tuple[float, float]] = []
    for s in samples:
        ok = s is not None and frame.contains(*s, margin=2)
        if ok:
            current.append(frame.to_svg(*s))
        elif current:
            if len(current) >= 2:
                runs.append(current)
            current = []
    if len(current) >= 2:
        runs.append(current)
    return runs


def render_svg(drawables, viewport: Viewport, width: int = 640) -> str:
    """Render labeled exact objects to a deterministic SVG document."""
    frame = _Frame(viewport, width)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{frame.width}" '
        f'height="{_fmt(frame.height)}" viewBox="0 0 {frame.width} {_fmt(frame.height)}">',
        f'<rect width="{frame.width}" height="{_fmt(frame.height)}" fill="#ffffff"/>',
    ]
    labels = []
    for d in drawables:
        if d.kind == "conic":
            for run in _polyline_runs(_conic_samples(d.obj, frame), frame):
                pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in run)
                parts.append(f'<polyline {_CONIC_STYLE} points="{pts}"/>')
        elif d.kind in ("line", "accent-line"):
            seg = _clip_line(d.obj, frame)
            if seg is None:
                continue
            (x1, y1), (x2, y2) = (frame.to_svg(*seg[0]), frame.to_svg(*seg[1]))
            style = _ACCENT_STYLE if d.kind == "accent-line" else _LINE_STYLE
            parts.append(
                f'<line {style} x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
            )
        elif d.kind == "point":
            aff = _affine(d.obj)
            if aff is None or not frame.contains(*aff):
                continue
            cx, cy = frame.to_svg(*aff)
            parts.append(f'<circle {_POINT_STYLE} cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2.5"/>')
            if d.label:
                labels.append((cx, cy, d.label))
        else:
            raise ValueError(f"unknown drawable kind {d.kind!r}")
    for cx, cy, label in labels:
        parts.append(
            f'<text {_TEXT_STYLE} x="{_fmt(cx + 5.0)}" y="{_fmt(cy - 5.0)}">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# ---------------------------------------------------------------------------
# The classical figure configurations
# ---------------------------------------------------------------------------

def _worked_quadrangle() -> InscribedQuadrangle:
    circle = Conic.unit_circle()
    return InscribedQuadrangle(
        circle,
        PPoint(1, 0, 1),
        PPoint(-1, 0, 1),
        PPoint(Fraction(3, 5), Fraction(4, 5), 1),
        PPoint(Fraction(5, 13), Fraction(12, 13), 1),
    )


def _fig_quadrangle_harmonic():
    """Quadrangle, diagonal triangle and the harmonic range F, X, G, Y."""
    quad = _worked_quadrangle()
    b, c, d, e = quad.bornes
    f, n, g = quad.diagonal_points()
    fg = join(f, g)
    x = meet(fg, join(n, c))
    y = meet(fg, join(n, b))
    drawables = [Drawable("conic", quad.conic)]
    drawables += [Drawable("line", l) for couple in quad.bornale_couples for l in couple]
    drawables.append(Drawable("accent-line", join(g, n)))
    drawables.append(Drawable("line", fg))
    for p, name in ((b, "B"), (c, "C"), (d, "D"), (e, "E"), (f, "F"), (n, "N"), (g, "G"), (x, "X"), (y, "Y")):
        drawables.append(Drawable("point", p, name))
    return drawables, (Fraction(-2), Fraction(-3, 2), Fraction(3), Fraction(3, 2))


def _fig_involutions_on_ordonnee():
    """The chain of involutions on a line through F."""
    quad = _worked_quadrangle()
    b, c, d, e = quad.bornes
    f, n, g = quad.diagonal_points()
    gn = join(g, n)
    delta = join(f, PPoint(0, 1, 1))
    i = meet(delta, join(d, c))
    h = meet(delta, gn)
    k = meet(delta, join(e, b))
    q = meet(delta, join(d, b))
    p = meet(delta, join(e, c))
    o = meet(join(b, c), gn)
    lpt = PPoint(0, 1, 1)
    m = PPoint(Fraction(4, 5), Fraction(3, 5), 1)
    drawables = [Drawable("conic", quad.conic)]
    drawables += [Drawable("line", l) for couple in quad.bornale_couples for l in couple]
    drawables.append(Drawable("accent-line", gn))
    drawables.append(Drawable("accent-line", delta))
    for pt, name in (
        (b, "B"), (c, "C"), (d, "D"), (e, "E"), (f, "F"), (n, "N"), (g, "G"),
        (i, "I"), (h, "H"), (k, "K"), (q, "Q"), (p, "P"), (o, "O"), (lpt, "L"), (m, "M"),
    ):
        drawables.append(Drawable("point", pt, name))
    return drawables, (Fraction(-2), Fraction(-3, 2), Fraction(3), Fraction(3, 2))


def _fig_pole_construction():
    """The pole of a line as the meet of two traversales."""
    circle = Conic.unit_circle()
    tau = PLine(2, 0, -1)
    n = PPoint(Fraction(1, 2), Fraction(3, 4), 1)
    g = PPoint(Fraction(1, 2), 1, 1)
    mu = polar(circle, n)
    nu = polar(circle, g)
    f = meet(mu, nu)
    drawables = [
        Drawable("conic", circle),
        Drawable("accent-line", tau),
        Drawable("line", mu),
        Drawable("line", nu),
        Drawable("point", n, "N"),
        Drawable("point", g, "G"),
        Drawable("point", f, "F"),
    ]
    return drawables, (Fraction(-2), Fraction(-3, 2), Fraction(3), Fraction(3, 2))


def _fig_tangents():
    """Tangents from an exterior point; the traversale joins the contacts."""
    circle = Conic.unit_circle()
    f = PPoint(Fraction(5, 3), 0, 1)
    pairs = tangents_from(circle, f)
    drawables = [Drawable("conic", circle), Drawable("accent-line", polar(circle, f))]
    names = iter(("S", "R"))
    for line, contact in pairs:
        drawables.append(Drawable("line", line))
        drawables.append(Drawable("point", contact, next(names)))
    drawables.append(Drawable("point", f, "F"))
    return drawables, (Fraction(-3, 2), Fraction(-3, 2), Fraction(5, 2), Fraction(3, 2))


def _fig_polarity_involution():
    """Couples of the polarity involution on a traversale, drawn from a conic point."""
    circle = Conic.unit_circle()
    f = PPoint(2, 0, 1)
    tau = polar(circle, f)
    a = PPoint(0, 1, 1)
    b = PPoint(1, 0, 1)
    c = PPoint(-1, 0, 1)
    d = PPoint(Fraction(3, 5), Fraction(4, 5), 1)
    e = PPoint(Fraction(5, 13), Fraction(12, 13), 1)
    g1 = meet(join(a, b), tau)
    n1 = meet(join(a, c), tau)
    g2 = meet(join(a, d), tau)
    n2 = meet(join(a, e), tau)
    drawables = [
        Drawable("conic", circle),
        Drawable("accent-line", tau),
        Drawable("line", join(b, c)),
        Drawable("line", join(d, e)),
        Drawable("line", join(a, b)),
        Drawable("line", join(a, c)),
        Drawable("line", join(a, d)),
        Drawable("line", join(a, e)),
        Drawable("point", a, "A"),
        Drawable("point", f, "F"),
        Drawable("point", b, "B"),
        Drawable("point", c, "C"),
        Drawable("point", d, "D"),
        Drawable("point", e, "E"),
        Drawable("point", g1, "G"),
        Drawable("point", n1, "N"),
        Drawable("point", g2, "G'"),
        Drawable("point", n2, "N'"),
    ]
    return drawables, (Fraction(-2), Fraction(-3, 2), Fraction(3), Fraction(2))


FIGURES = {
    "fig8": _fig_quadrangle_harmonic,
    "fig10": _fig_involutions_on_ordonnee,
    "fig13": _fig_pole_construction,
    "fig14": _fig_tangents,
    "fig16": _fig_polarity_involution,
}


def build_figure(name: str) -> tuple[list[Drawable], Viewport]:
    try:
        builder = FIGURES[name]
    except KeyError:
        raise UnknownReference(
            f"unknown figure {name!r}; available: {', '.join(sorted(FIGURES))}"
        ) from None
    return builder()


def render_figure(name: str, viewport: Viewport | None = None, width: int = 640) -> str:
    drawables, default_viewport = build_figure(name)
    return render_svg(drawables, viewport or default_viewport, width)
