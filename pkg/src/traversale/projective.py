"""Exact projective plane over the rationals.

Points and lines are homogeneous triples of rationals, stored in primitive
integer form (coprime entries, first nonzero entry positive) so that equality
up to scale is plain tuple equality and hashing is free.  Points with third
coordinate zero are the points at infinity; the line ``[0, 0, 1]`` is the
default line at infinity.  Everything here is an immutable value and every
operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    ConjugateUndefined,
    DegenerateQuadruple,
    NotOnLine,
    SingularMatrix,
)
from .linalg import adjugate, cross, det3, dot, mat_mul, mat_vec, primitive, primitive_mat3, solve2, transpose
from .numbers import INF, ExtRat, Pair, format_rational, from_pair, pair_cross, parse_rational, to_pair


class PPoint:
    """A point of the projective plane, equal up to nonzero scale."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        try:
            object.__setattr__(self, "coords", primitive((x, y, z)))
        except ValueError:
            raise CoincidentPoints("(0, 0, 0) is not a projective point") from None

    def __setattr__(self, name, value):
        raise AttributeError("PPoint is immutable")

    def __eq__(self, other):
        return isinstance(other, PPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(("PPoint", self.coords))

    def __repr__(self):
        return f"PPoint{self.coords}"

    def __str__(self):
        x, y, z = self.canonical()
        return f"({format_rational(x)}, {format_rational(y)}, {format_rational(z)})"

    def canonical(self) -> tuple[Fraction, Fraction, Fraction]:
        """Representative scaled so the first nonzero coordinate is 1."""
        for c in self.coords:
            if c != 0:
                return tuple(Fraction(v, c) for v in self.coords)
        raise AssertionError("unreachable: zero point")

    @property
    def is_infinite(self) -> bool:
        return self.coords[2] == 0

    def affine(self) -> tuple[Fraction, Fraction]:
        """Affine (x, y) in the chart z = 1; raises for points at infinity."""
        x, y, z = self.coords
        if z == 0:
            raise ValueError(f"{self} is at infinity")
        return (Fraction(x, z), Fraction(y, z))

    def on(self, line: "PLine") -> bool:
        return dot(self.coords, line.coeffs) == 0

    @classmethod
    def affine_point(cls, x, y) -> "PPoint":
        return cls(Fraction(x), Fraction(y), 1)

    @classmethod
    def parse(cls, text: str) -> "PPoint":
        """Inverse of str(): ``(x, y, z)`` with rational entries."""
        inner = text.strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ValueError(f"point literal must look like (x, y, z): {text!r}")
        parts = inner[1:-1].split(",")
        if len(parts) != 3:
            raise ValueError(f"point literal needs three coordinates: {text!r}")
        return cls(*(parse_rational(p) for p in parts))


class PLine:
    """A line ux + vy + wz = 0, equal up to nonzero scale."""

    __slots__ = ("coeffs",)

    def __init__(self, u, v, w):
        try:
            object.__setattr__(self, "coeffs", primitive((u, v, w)))
        except ValueError:
            raise CoincidentLines("[0, 0, 0] is not a line") from None

    def __setattr__(self, name, value):
        raise AttributeError("PLine is immutable")

    def __eq__(self, other):
        return isinstance(other, PLine) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PLine", self.coeffs))

    def __repr__(self):
        return f"PLine{self.coeffs}"

    def __str__(self):
        u, v, w = self.canonical()
        return f"[{format_rational(u)}, {format_rational(v)}, {format_rational(w)}]"

    def canonical(self) -> tuple[Fraction, Fraction, Fraction]:
        for c in self.coeffs:
            if c != 0:
                return tuple(Fraction(v, c) for v in self.coeffs)
        raise AssertionError("unreachable: zero line")

    def contains(self, point: PPoint) -> bool:
        return dot(self.coeffs, point.coords) == 0

    @classmethod
    def parse(cls, text: str) -> "PLine":
        inner = text.strip()
        if not (inner.startswith("[") and inner.endswith("]")):
            raise ValueError(f"line literal must look like [u, v, w]: {text!r}")
        parts = inner[1:-1].split(",")
        if len(parts) != 3:
            raise ValueError(f"line literal needs three coefficients: {text!r}")
        return cls(*(parse_rational(p) for p in parts))


LINE_AT_INFINITY = PLine(0, 0, 1)


def join(p: PPoint, q: PPoint) -> PLine:
    """The unique line through two distinct points."""
    if p == q:
        raise CoincidentPoints(f"join needs distinct points, got {p} twice")
    return PLine(*cross(p.coords, q.coords))


def meet(l: PLine, m: PLine) -> PPoint:
    """The unique common point of two distinct lines (possibly at infinity)."""
    if l == m:
        raise CoincidentLines(f"meet needs distinct lines, got {l} twice")
    return PPoint(*cross(l.coeffs, m.coeffs))


def collinear(*points: PPoint) -> bool:
    """True when all the points lie on one line (trivially true for < 3)."""
    if len(points) < 3:
        return True
    base = None
    for i in range(1, len(points)):
        c = cross(points[0].coords, points[i].coords)
        if any(c):
            base = c
            break
    if base is None:
        return True
    return all(dot(base, p.coords) == 0 for p in points)


def concurrent(*lines: PLine) -> bool:
    if len(lines) < 3:
        return True
    return all(
        det3((lines[0].coeffs, lines[1].coeffs, l.coeffs)) == 0 for l in lines[2:]
    )


class LineChart:
    """A projective coordinate on a line.

    The chart is fixed by three pairwise distinct reference points on the
    line: ``origin`` gets coordinate 0, ``unit`` coordinate 1 and
    ``infinity_point`` the value INF.  Internally the points of the line are
    written s*O + t*I against representatives chosen so unit = O + I; the
    chart coordinate is t/s, kept as a homogeneous pair for totality.
    """

    __slots__ = ("line", "origin", "unit", "infinity_point", "_rep_o", "_rep_i", "_rows")

    def __init__(self, line: PLine, origin: PPoint, unit: PPoint, infinity_point: PPoint):
        refs = (origin, unit, infinity_point)
        if len({origin, unit, infinity_point}) != 3:
            raise ValueError("chart reference points must be pairwise distinct")
        for p in refs:
            if not line.contains(p):
                raise NotOnLine(f"chart reference {p} is not on {line}")
        o, i, u = origin.coords, infinity_point.coords, unit.coords
        rows = _independent_rows(o, i)
        lam_mu = solve2(
            (o[rows[0]], o[rows[1]]), (i[rows[0]], i[rows[1]]), (u[rows[0]], u[rows[1]])
        )
        assert lam_mu is not None, "collinear references always decompose"
        lam, mu = lam_mu
        object.__setattr__(self, "line", line)
        object.__setattr__(self, "origin", origin)
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "infinity_point", infinity_point)
        object.__setattr__(self, "_rep_o", tuple(lam * c for c in o))
        object.__setattr__(self, "_rep_i", tuple(mu * c for c in i))
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("LineChart is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LineChart)
            and self.line == other.line
            and self.origin == other.origin
            and self.unit == other.unit
            and self.infinity_point == other.infinity_point
        )

    def __hash__(self):
        return hash(("LineChart", self.line, self.origin, self.unit, self.infinity_point))

    def __repr__(self):
        return f"LineChart(line={self.line}, origin={self.origin}, unit={self.unit}, inf={self.infinity_point})"

    def pair_of(self, point: PPoint) -> Pair:
        """Homogeneous chart pair (num, den), coordinate = num/den."""
        if not self.line.contains(point):
            raise NotOnLine(f"{point} is not on {self.line}")
        r0, r1 = self._rows
        o, i, p = self._rep_o, self._rep_i, point.coords
        st = solve2((o[r0], o[r1]), (i[r0], i[r1]), (p[r0], p[r1]))
        assert st is not None
        s, t = st
        return (t, s)

    def coordinate(self, point: PPoint) -> ExtRat:
        return from_pair(self.pair_of(point))

    def point_from_pair(self, pair: Pair) -> PPoint:
        num, den = pair
        if num == 0 and den == 0:
            raise ValueError("zero pair")
        coords = tuple(den * o + num * i for o, i in zip(self._rep_o, self._rep_i))
        return PPoint(*coords)

    def point_at(self, t: ExtRat) -> PPoint:
        return self.point_from_pair(to_pair(t))


def _independent_rows(a, b) -> tuple[int, int]:
    """Two coordinate indices where the 3x2 matrix [a b] has full rank."""
    for r0 in range(3):
        for r1 in range(r0 + 1, 3):
            if a[r0] * b[r1] - a[r1] * b[r0] != 0:
                return (r0, r1)
    raise ValueError("proportional representatives")


def canonical_chart(line: PLine) -> LineChart:
    """A deterministic chart giving the everyday coordinate on the line.

    Non-vertical affine lines are charted by x, vertical ones by y, and the
    line at infinity by the slope y/x; the chart's infinity point is always
    the line's own point at infinity.
    """
    u, v, w = line.coeffs
    if line == LINE_AT_INFINITY:
        return LineChart(line, PPoint(1, 0, 0), PPoint(1, 1, 0), PPoint(0, 1, 0))
    if v != 0:
        origin = PPoint(0, Fraction(-w, v), 1)
        unit = PPoint(1, Fraction(-(w + u), v), 1)
        return LineChart(line, origin, unit, PPoint(v, -u, 0))
    origin = PPoint(Fraction(-w, u), 0, 1)
    unit = PPoint(Fraction(-w, u), 1, 1)
    return LineChart(line, origin, unit, PPoint(0, 1, 0))


def cross_ratio(a: PPoint, b: PPoint, c: PPoint, d: PPoint, chart: LineChart) -> ExtRat:
    """(a, b; c, d) = ((a-c)(b-d)) / ((a-d)(b-c)) in chart coordinates.

    Extended projectively through the chart's homogeneous pairs, so any of
    the points may sit at the chart's infinity.  The value is independent of
    the chart chosen on the same line.  Requires a, b, c pairwise distinct;
    d is free (d = c gives 1, d = b gives INF, d = a gives 0).
    """
    pa, pb, pc, pd = (chart.pair_of(p) for p in (a, b, c, d))
    if pair_cross(pa, pb) == 0 or pair_cross(pa, pc) == 0 or pair_cross(pb, pc) == 0:
        raise DegenerateQuadruple("cross-ratio needs a, b, c pairwise distinct")
    num = pair_cross(pa, pc) * pair_cross(pb, pd)
    den = pair_cross(pa, pd) * pair_cross(pb, pc)
    if den == 0:
        return INF
    return num / den


def harmonic_conjugate(c: PPoint, a: PPoint, b: PPoint, chart: LineChart) -> PPoint:
    """The point d with (a, b; c, d) = -1; involutive in c <-> d."""
    pa, pb, pc = (chart.pair_of(p) for p in (a, b, c))
    if pair_cross(pa, pb) == 0:
        raise ConjugateUndefined("base points of the harmonic pair coincide")
    if pair_cross(pa, pc) == 0 or pair_cross(pb, pc) == 0:
        raise ConjugateUndefined(f"{c} is a base point of the pair")
    ac = pair_cross(pa, pc)
    bc = pair_cross(pb, pc)
    d = (ac * pb[0] + bc * pa[0], ac * pb[1] + bc * pa[1])
    return chart.point_from_pair(d)


class Homography:
    """An invertible projective map, stored as a primitive integer matrix.

    Acts on points by the matrix and on lines by the inverse transpose
    (realized with the adjugate so everything stays integral).
    """

    __slots__ = ("matrix",)

    def __init__(self, rows):
        m = primitive_mat3(rows)
        if det3(m) == 0:
            raise SingularMatrix(f"matrix {m} is singular")
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("Homography is immutable")

    def __eq__(self, other):
        return isinstance(other, Homography) and self.matrix == other.matrix

    def __hash__(self):
        return hash(("Homography", self.matrix))

    def __repr__(self):
        return f"Homography{self.matrix}"

    def apply(self, p: PPoint) -> PPoint:
        return PPoint(*mat_vec(self.matrix, p.coords))

    def apply_line(self, l: PLine) -> PLine:
        return PLine(*mat_vec(transpose(adjugate(self.matrix)), l.coeffs))

    def inverse(self) -> "Homography":
        return Homography(adjugate(self.matrix))

    def compose(self, other: "Homography") -> "Homography":
        """self after other: (self.compose(other))(p) = self(other(p))."""
        return Homography(mat_mul(self.matrix, other.matrix))

    @classmethod
    def identity(cls) -> "Homography":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    @classmethod
    def scaling(cls, sx, sy) -> "Homography":
        return cls(((Fraction(sx), 0, 0), (0, Fraction(sy), 0), (0, 0, 1)))


def apply_homography(h: Homography, obj):
    """Apply h to a PPoint or (by the dual action) to a PLine."""
    if isinstance(obj, PPoint):
        return h.apply(obj)
    if isinstance(obj, PLine):
        return h.apply_line(obj)
    raise TypeError(f"cannot apply a homography to {type(obj).__name__}")
