"""Conics as classes of rational quadratic forms.

A conic is a symmetric 3x3 matrix up to scale; its zero set in the projective
plane is the curve.  The polar of a point, the pole of a line, tangency,
classification by exact Sylvester inertia, the polarity involution induced on
every non-tangent line, affine features (center, asymptotes, the
ellipse/hyperbola/parabola trichotomy) and transport under homographies are
all computed without ever leaving the rationals.  When an intersection exists
over the reals but not over Q the operation says so exactly
(IrrationalIntersection with the offending discriminant) instead of
approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    BasePointNotOnConic,
    CoincidentPoints,
    DegenerateConic,
    DegeneratePointSet,
    InteriorPoint,
    IrrationalIntersection,
    LineOnConic,
    TangentLine,
    TotallyIsotropicPoint,
    ZeroForm,
)
from .involution import InvolutionOnLine, involution_from_action
from .linalg import adjugate, det3, dot, mat_mul, mat_vec, nullspace, primitive, transpose
from .numbers import ExtRat, is_square, small_extended, small_rationals, sqrt_exact
from .projective import (
    LINE_AT_INFINITY,
    Homography,
    PLine,
    PPoint,
    canonical_chart,
    join,
    meet,
)


class Conic:
    """A conic, i.e. a nonzero symmetric rational 3x3 form up to scale.

    ``q(v) = v^T M v`` and the associated symmetric bilinear form
    ``phi(v, w) = v^T M w`` are exposed through :meth:`evaluate` and
    :meth:`bilinear`; only their zero-or-sign pattern is meaningful since the
    matrix is stored up to scale.  A conic may carry a ``witness`` point,
    a known rational point on the curve used to seed rational secant
    searches; it is a cache, ignored by equality and hashing.
    """

    __slots__ = ("matrix", "witness")

    def __init__(self, rows, witness: PPoint | None = None):
        flat = [Fraction(x) for row in rows for x in row]
        if len(flat) != 9:
            raise ValueError("conic needs a 3x3 matrix")
        if all(x == 0 for x in flat):
            raise ZeroForm("the zero form defines no conic")
        m = (tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9]))
        for i in range(3):
            for j in range(i + 1, 3):
                if m[i][j] != m[j][i]:
                    raise ValueError(f"conic matrix must be symmetric, got {m}")
        p = primitive(flat)
        mat = (tuple(p[0:3]), tuple(p[3:6]), tuple(p[6:9]))
        if witness is not None and dot(mat_vec(mat, witness.coords), witness.coords) != 0:
            raise BasePointNotOnConic(f"witness {witness} is not on the conic")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "witness", witness)

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    def __eq__(self, other):
        return isinstance(other, Conic) and self.matrix == other.matrix

    def __hash__(self):
        return hash(("Conic", self.matrix))

    def __repr__(self):
        return f"Conic{self.matrix}"

    def __str__(self):
        return " ".join(str(c) for c in self.coefficients())

    def evaluate(self, p: PPoint) -> int:
        """q(p) on the stored representative; only sign and zero matter."""
        return dot(mat_vec(self.matrix, p.coords), p.coords)

    def bilinear(self, p: PPoint, q: PPoint) -> int:
        return dot(mat_vec(self.matrix, p.coords), q.coords)

    def contains(self, p: PPoint) -> bool:
        return self.evaluate(p) == 0

    @property
    def is_nondegenerate(self) -> bool:
        return det3(self.matrix) != 0

    def coefficients(self) -> tuple[int, ...]:
        """(a, b, c, d, e, f) with a x^2 + b y^2 + c z^2 + d xy + e xz + f yz = 0."""
        m = self.matrix
        raw = (m[0][0], m[1][1], m[2][2], 2 * m[0][1], 2 * m[0][2], 2 * m[1][2])
        return tuple(int(x) for x in primitive(raw))

    def with_witness(self, witness: PPoint) -> "Conic":
        return Conic(self.matrix, witness=witness)

    @classmethod
    def from_coefficients(cls, a, b, c, d, e, f, witness: PPoint | None = None) -> "Conic":
        a, b, c, d, e, f = (Fraction(x) for x in (a, b, c, d, e, f))
        rows = (
            (2 * a, d, e),
            (d, 2 * b, f),
            (e, f, 2 * c),
        )
        return cls(rows, witness=witness)

    @classmethod
    def unit_circle(cls) -> "Conic":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, -1)), witness=PPoint(-1, 0, 1))


class ConicClass(Enum):
    NONDEGENERATE_REAL = "nondegenerate-real"
    EMPTY = "empty"
    DEGENERATE_TWO_LINES = "two-lines"
    DEGENERATE_DOUBLE_LINE = "double-line"


class AffineKind(Enum):
    ELLIPSE = "ellipse"
    HYPERBOLA = "hyperbola"
    PARABOLA = "parabola"


@dataclass(frozen=True)
class Classification:
    kind: ConicClass
    signature: tuple[int, int]
    rank: int
    point_double: PPoint | None = None
    double_line: PLine | None = None


@dataclass(frozen=True)
class AffineFeatures:
    kind: AffineKind
    center: PPoint
    points_at_infinity: tuple[PPoint, ...]
    asymptotes: tuple[PLine, ...] | None


def conic_from_five_points(p1: PPoint, p2: PPoint, p3: PPoint, p4: PPoint, p5: PPoint) -> Conic:
    """The conic through five points, unique when they are in general position.

    Solved as the nullspace of the 5x6 coefficient system; a solution space
    of dimension above one (four collinear points, repeats) raises
    DegeneratePointSet.
    """
    pts = (p1, p2, p3, p4, p5)
    rows = []
    for p in pts:
        x, y, z = p.coords
        rows.append([Fraction(v) for v in (x * x, y * y, z * z, x * y, x * z, y * z)])
    basis = nullspace(rows, 6)
    if len(basis) != 1:
        raise DegeneratePointSet(f"the five points admit a {len(basis)}-dimensional family of conics")
    a, b, c, d, e, f = basis[0]
    return Conic.from_coefficients(a, b, c, d, e, f, witness=p1)


def polar(c: Conic, m: PPoint) -> PLine:
    """The polar line of m: coefficient triple M*m.

    If m lies on the conic this is the tangent at m.  The only excluded
    points are those annihilated by the form (the point double of a
    degenerate conic).
    """
    coeffs = mat_vec(c.matrix, m.coords)
    if all(x == 0 for x in coeffs):
        raise TotallyIsotropicPoint(f"{m} annihilates the form; no polar")
    return PLine(*coeffs)


def pole(c: Conic, l: PLine) -> PPoint:
    """The point whose polar is l; needs a rank-3 form."""
    if not c.is_nondegenerate:
        raise DegenerateConic("pole needs a nondegenerate conic")
    return PPoint(*mat_vec(adjugate(c.matrix), l.coeffs))


def tangent_at(c: Conic, p: PPoint) -> PLine:
    """Tangent line at a point of the conic (the polar, specialised)."""
    if not c.contains(p):
        raise BasePointNotOnConic(f"{p} is not on the conic")
    return polar(c, p)


def is_tangent_line(c: Conic, l: PLine) -> bool:
    return l.contains(pole(c, l))


def _line_points(l: PLine):
    """Two independent integer representatives of points on l."""
    coeffs = l.coeffs
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    candidates = []
    for e in basis:
        v = (
            coeffs[1] * e[2] - coeffs[2] * e[1],
            coeffs[2] * e[0] - coeffs[0] * e[2],
            coeffs[0] * e[1] - coeffs[1] * e[0],
        )
        if any(v):
            candidates.append(v)
    p0 = candidates[0]
    for v in candidates[1:]:
        if any(
            p0[i] * v[j] - p0[j] * v[i] != 0
            for i in range(3)
            for j in range(i + 1, 3)
        ):
            return p0, v
    raise AssertionError("a line always carries two independent points")


def line_intersect(c: Conic, l: PLine) -> tuple[PPoint, ...]:
    """Exact intersection of a conic and a line: zero, one, or two points.

    A multiplicity-two contact is returned as a single point.  When the
    restricted quadratic has a positive non-square discriminant the real
    intersections exist but are irrational: IrrationalIntersection is raised
    carrying that discriminant, never an approximation.
    """
    p0, p1 = _line_points(l)
    m = c.matrix
    alpha = dot(mat_vec(m, p1), p1)
    beta = 2 * dot(mat_vec(m, p0), p1)
    gamma = dot(mat_vec(m, p0), p0)
    if alpha == 0 and beta == 0 and gamma == 0:
        raise LineOnConic(f"{l} is a component of the conic")
    points: list[PPoint]
    if alpha == 0:
        if beta == 0:
            points = [PPoint(*p1)]  # double root at p1: tangency
        else:
            second = tuple(beta * a - gamma * b for a, b in zip(p0, p1))
            points = [PPoint(*p1), PPoint(*second)]
    else:
        disc = beta * beta - 4 * alpha * gamma
        if disc < 0:
            points = []
        elif disc == 0:
            points = [PPoint(*(2 * alpha * a - beta * b for a, b in zip(p0, p1)))]
        else:
            if not is_square(Fraction(disc)):
                raise IrrationalIntersection(Fraction(disc))
            root = int(sqrt_exact(Fraction(disc)))
            points = [
                PPoint(*(2 * alpha * a + (-beta + root) * b for a, b in zip(p0, p1))),
                PPoint(*(2 * alpha * a + (-beta - root) * b for a, b in zip(p0, p1))),
            ]
    points.sort(key=lambda p: p.coords)
    return tuple(points)


def polarity_involution_on_line(c: Conic, l: PLine) -> InvolutionOnLine:
    """The involution m -> polar(m) /\\ l induced by the conic on l.

    Hyperbolic with the conic/line intersections as fixed points on a secant
    line, elliptic on a line missing the conic; on a tangent line the map
    degenerates and TangentLine is raised instead.  The chart is the
    canonical chart of l.
    """
    if not c.is_nondegenerate:
        raise DegenerateConic("the polarity involution needs a nondegenerate conic")
    if is_tangent_line(c, l):
        raise TangentLine(f"{l} is tangent; the polarity involution degenerates")
    chart = canonical_chart(l)

    def action(p: PPoint) -> PPoint:
        return meet(polar(c, p), l)

    return involution_from_action(chart, action)


def tangents_from(c: Conic, f: PPoint) -> tuple[tuple[PLine, PPoint], ...]:
    """Tangent lines through f with their contact points.

    The contacts are the intersections of polar(f) with the conic.  A point
    on the conic yields its single tangent as a one-element result; an
    interior point (polar missing the conic) raises InteriorPoint, and
    irrational contacts propagate IrrationalIntersection.
    """
    if not c.is_nondegenerate:
        raise DegenerateConic("tangents_from needs a nondegenerate conic")
    if c.contains(f):
        return ((polar(c, f), f),)
    tau = polar(c, f)
    contacts = line_intersect(c, tau)
    if not contacts:
        raise InteriorPoint(f"{f} is interior: {tau} misses the conic")
    return tuple((join(f, p), p) for p in contacts)


def _inertia(mat) -> tuple[int, int]:
    """Exact Sylvester inertia by rational symmetric congruence reduction."""
    a = [[Fraction(mat[i][j]) for j in range(3)] for i in range(3)]
    active = [0, 1, 2]
    npos = nneg = 0
    while active:
        pivot = next((k for k in active if a[k][k] != 0), None)
        if pivot is None:
            off = next(
                ((i, j) for i in active for j in active if i < j and a[i][j] != 0),
                None,
            )
            if off is None:
                break  # remaining block is zero
            i, j = off
            # adding row/col j into row/col i turns a[i][i] into 2*a[i][j]
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            pivot = i
        d = a[pivot][pivot]
        if d > 0:
            npos += 1
        else:
            nneg += 1
        active.remove(pivot)
        col = {i: a[i][pivot] for i in active}
        for i in active:
            for j in active:
                a[i][j] -= col[i] * col[j] / d
    return npos, nneg


def classify(c: Conic) -> Classification:
    """Rank and inertia of the form, computed exactly, plus the class.

    Signature is normalized to (larger, smaller) since the form is only
    defined up to a global sign.  Rank 2 reports the point double (the
    totally isotropic direction); with inertia (1,1) the two lines are real,
    with (2,0) they are a conjugate pair and only the point double is real.
    Rank 1 reports the (real) double line.
    """
    npos, nneg = _inertia(c.matrix)
    rank = npos + nneg
    signature = (max(npos, nneg), min(npos, nneg))
    if rank == 3:
        kind = ConicClass.EMPTY if signature == (3, 0) else ConicClass.NONDEGENERATE_REAL
        return Classification(kind, signature, rank)
    if rank == 2:
        rows = [[Fraction(x) for x in row] for row in c.matrix]
        kernel = nullspace(rows, 3)
        assert len(kernel) == 1
        double = PPoint(*kernel[0])
        return Classification(ConicClass.DEGENERATE_TWO_LINES, signature, rank, point_double=double)
    row = next(r for r in c.matrix if any(r))
    return Classification(
        ConicClass.DEGENERATE_DOUBLE_LINE, signature, rank, double_line=PLine(*row)
    )


def affine_features(c: Conic, infinity: PLine = LINE_AT_INFINITY) -> AffineFeatures:
    """Center, affine kind and asymptotes relative to a chosen infinity line.

    The center is the pole of the infinity line; the kind is decided by how
    the conic meets that line (0 points: ellipse, 1: parabola, 2: hyperbola).
    A hyperbola's asymptotes are the tangents at its two infinite points and
    pass through the center.  Irrational infinite points still decide the
    kind (only the discriminant's sign is needed) but the asymptotes are
    withheld.
    """
    if not c.is_nondegenerate:
        raise DegenerateConic("affine features need a nondegenerate conic")
    center = pole(c, infinity)
    try:
        pts = line_intersect(c, infinity)
    except IrrationalIntersection:
        return AffineFeatures(AffineKind.HYPERBOLA, center, (), None)
    if len(pts) == 0:
        return AffineFeatures(AffineKind.ELLIPSE, center, (), None)
    if len(pts) == 1:
        return AffineFeatures(AffineKind.PARABOLA, center, pts, None)
    asymptotes = tuple(tangent_at(c, p) for p in pts)
    return AffineFeatures(AffineKind.HYPERBOLA, center, pts, asymptotes)


def transform(c: Conic, h: Homography) -> Conic:
    """Image conic under a homography: the form H^-T M H^-1 up to scale.

    Membership and all incidence-flavoured structure (polars, poles, the
    polarity involutions) move along with it.
    """
    hinv = adjugate(h.matrix)
    rows = mat_mul(mat_mul(transpose(hinv), c.matrix), hinv)
    witness = h.apply(c.witness) if c.witness is not None else None
    return Conic(rows, witness=witness)


class RationalParametrization:
    """All rational points of a conic from one of them, by the chord trick.

    The parameter t names the direction of the chord through ``base`` (the
    canonical chart of a fixed reference line not through the base), and the
    value is the chord's second intersection, always rational by Vieta.  The
    tangent direction at the base maps back to the base point itself; away
    from it the map is injective.
    """

    __slots__ = ("conic", "base", "_chart")

    def __init__(self, conic: Conic, base: PPoint):
        if not conic.is_nondegenerate:
            raise DegenerateConic("rational parametrization needs a nondegenerate conic")
        if not conic.contains(base):
            raise BasePointNotOnConic(f"{base} is not on the conic")
        ref = next(
            l
            for l in (LINE_AT_INFINITY, PLine(1, 0, 0), PLine(0, 1, 0))
            if not l.contains(base)
        )
        object.__setattr__(self, "conic", conic)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "_chart", canonical_chart(ref))

    def __setattr__(self, name, value):
        raise AttributeError("RationalParametrization is immutable")

    def direction(self, t: ExtRat) -> PPoint:
        return self._chart.point_at(t)

    def point(self, t: ExtRat) -> PPoint:
        d = self._chart.point_at(t)
        return second_intersection(self.conic, self.base, d)

    def points(self, params) -> list[PPoint]:
        return [self.point(t) for t in params]


def second_intersection(c: Conic, base: PPoint, other: PPoint) -> PPoint:
    """Second meeting of the conic with the line joining base to other.

    ``base`` must be on the conic and ``other`` distinct from it.  If the
    line is tangent at base the second intersection is base itself; if
    ``other`` is also on the conic it is returned directly.  Rational by
    construction (Vieta), never raises IrrationalIntersection.
    """
    if not c.contains(base):
        raise BasePointNotOnConic(f"{base} is not on the conic")
    if base == other:
        raise CoincidentPoints(f"direction point equals the base {base}")
    qd = c.evaluate(other)
    if qd == 0:
        return other
    phi = c.bilinear(base, other)
    if phi == 0:
        return base
    coords = tuple(qd * b - 2 * phi * d for b, d in zip(base.coords, other.coords))
    return PPoint(*coords)


def rational_parametrize(c: Conic, base: PPoint) -> RationalParametrization:
    return RationalParametrization(c, base)


def find_rational_point(c: Conic, budget: int = 120) -> PPoint | None:
    """Bounded deterministic search for a rational point on the conic.

    Checks the carried witness first, then sweeps small-height vertical,
    horizontal and through-origin lines, testing each restricted
    discriminant exactly.  Returns None when the budget is exhausted; this
    is a search, not a decision procedure.
    """
    if c.witness is not None and c.contains(c.witness):
        return c.witness
    tried = 0
    for r in small_rationals():
        for l in (
            PLine(1, 0, -r),  # x = r
            PLine(0, 1, -r),  # y = r
            PLine(Fraction(r), -1, 0),  # y = r x
        ):
            tried += 1
            if tried > budget:
                return None
            try:
                pts = line_intersect(c, l)
            except (IrrationalIntersection, LineOnConic):
                continue
            if pts:
                return pts[0]
    return None


def secant_slopes(c: Conic, f: PPoint):
    """Deterministic sweep of directions, yielding rational chords through f.

    Yields (line, (p1, p2)) for every swept direction whose chord through f
    meets the conic in two distinct rational points.  The directions run
    over a reference line not through f, so every line of the pencil at f
    appears exactly once.
    """
    ref = next(
        l
        for l in (LINE_AT_INFINITY, PLine(1, 0, 0), PLine(0, 1, 0))
        if not l.contains(f)
    )
    chart = canonical_chart(ref)
    for t in small_extended():
        l = join(f, chart.point_at(t))
        try:
            pts = line_intersect(c, l)
        except (IrrationalIntersection, LineOnConic):
            continue
        if len(pts) == 2:
            yield l, pts
