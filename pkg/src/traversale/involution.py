"""Involutions on a projective line, Desargues style and homographic style.

An involution is carried by a trace-zero invertible 2x2 matrix acting on the
homogeneous chart pairs of a :class:`~traversale.projective.LineChart`; that
is the modern "involutive homography" view.  The classical characterisations
are implemented independently alongside it: the three rectangle-ratio
identities on signed segment products together with the interleaving clause
(:func:`desargues_condition_check`), and the equal-products arbre form with
its souche (:func:`arbre_check`).  The equivalence of the three views is a
theorem, and the test suite treats it as one rather than assuming it.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .errors import CenterOnLine, InfiniteNode, InvalidSouche, UnderdeterminedInvolution
from .linalg import det2, mat2_vec, primitive_mat2
from .numbers import (
    INF,
    ExtRat,
    Pair,
    format_extended,
    from_pair,
    is_square,
    pair_cross,
    parse_extended,
    sqrt_exact,
    to_pair,
)
from .projective import LineChart, PPoint, join, meet


class PointPair:
    """An unordered couple of nodes on a line, in chart coordinates.

    A repeated coordinate is allowed and represents a fixed node (a "noeud
    moyen double").  Coordinates may be INF.
    """

    __slots__ = ("first", "second")

    def __init__(self, first: ExtRat, second: ExtRat):
        a, b = sorted((_as_ext(first), _as_ext(second)), key=_ext_key)
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    def __setattr__(self, name, value):
        raise AttributeError("PointPair is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PointPair)
            and self.first == other.first
            and self.second == other.second
        )

    def __hash__(self):
        return hash(("PointPair", self.first, self.second))

    def __repr__(self):
        return f"PointPair({self.first!r}, {self.second!r})"

    def __str__(self):
        return "{" + format_extended(self.first) + ", " + format_extended(self.second) + "}"

    @property
    def is_degenerate(self) -> bool:
        return self.first == self.second

    def as_pairs(self) -> tuple[Pair, Pair]:
        return (to_pair(self.first), to_pair(self.second))

    @classmethod
    def parse(cls, text: str) -> "PointPair":
        inner = text.strip()
        if not (inner.startswith("{") and inner.endswith("}")):
            raise ValueError(f"pair literal must look like {{t1, t2}}: {text!r}")
        parts = inner[1:-1].split(",")
        if len(parts) != 2:
            raise ValueError(f"pair literal needs two coordinates: {text!r}")
        return cls(parse_extended(parts[0]), parse_extended(parts[1]))


def _as_ext(v) -> ExtRat:
    return v if v is INF else Fraction(v)


def _ext_key(v: ExtRat):
    return (1, Fraction(0)) if v is INF else (0, v)


class InvolutionKind(Enum):
    HYPERBOLIC = "hyperbolic"
    HYPERBOLIC_IRRATIONAL = "hyperbolic-irrational"
    ELLIPTIC = "elliptic"


class InvolutionOnLine:
    """An involutive homography of a line, in a fixed chart.

    The matrix is primitive integer, has trace zero (the matrix form of
    being equal to its own inverse) and nonzero determinant; a nilpotent
    "involution" is rejected, matching the classical position that there is
    no parabolic involution.
    """

    __slots__ = ("chart", "matrix")

    def __init__(self, chart: LineChart, matrix):
        m = primitive_mat2(matrix)
        if m[0][0] + m[1][1] != 0:
            raise UnderdeterminedInvolution(f"matrix {m} is not involutive (trace != 0)")
        if det2(m) == 0:
            raise UnderdeterminedInvolution(f"matrix {m} is degenerate, not an involution")
        object.__setattr__(self, "chart", chart)
        object.__setattr__(self, "matrix", m)

    def __setattr__(self, name, value):
        raise AttributeError("InvolutionOnLine is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, InvolutionOnLine)
            and self.chart == other.chart
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(("InvolutionOnLine", self.chart, self.matrix))

    def __repr__(self):
        return f"InvolutionOnLine(matrix={self.matrix}, line={self.chart.line})"

    def __str__(self):
        (a, b), (c, d) = self.matrix
        return f"[[{a}, {b}], [{c}, {d}]] on {self.chart.line}"

    def apply_pair(self, pair: Pair) -> Pair:
        return mat2_vec(self.matrix, pair)

    def apply(self, t: ExtRat) -> ExtRat:
        return from_pair(self.apply_pair(to_pair(t)))

    def apply_point(self, p: PPoint) -> PPoint:
        return self.chart.point_from_pair(self.apply_pair(self.chart.pair_of(p)))


def involution_from_two_pairs(p1: PointPair, p2: PointPair, chart: LineChart) -> InvolutionOnLine:
    """The unique involution exchanging both given couples.

    Each unordered couple imposes one linear condition on the trace-zero
    matrix [[a, b], [c, -a]]; the two conditions are crossed to get the
    solution.  Raises UnderdeterminedInvolution when the couples share too
    many nodes to determine a unique invertible involution.
    """
    rows = [_pair_row(p) for p in (p1, p2)]
    a = rows[0][1] * rows[1][2] - rows[0][2] * rows[1][1]
    b = rows[0][2] * rows[1][0] - rows[0][0] * rows[1][2]
    c = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if a == 0 and b == 0 and c == 0:
        raise UnderdeterminedInvolution(f"{p1} and {p2} impose dependent conditions")
    return InvolutionOnLine(chart, ((a, b), (c, -a)))


def _pair_row(p: PointPair) -> tuple[Fraction, Fraction, Fraction]:
    (x, y), (x2, y2) = p.as_pairs()
    return (x * y2 + x2 * y, y * y2, -x * x2)


def contains_pair(inv: InvolutionOnLine, p: PointPair) -> bool:
    """Does the involution exchange the two nodes of the couple (exactly)?"""
    u, v = p.as_pairs()
    return pair_cross(inv.apply_pair(u), v) == 0


def classify_and_fixed_points(
    inv: InvolutionOnLine,
) -> tuple[InvolutionKind, tuple[ExtRat, ExtRat] | None]:
    """Kind of the involution, with both fixed points when they are rational.

    Fixed points solve c*t^2 - 2a*t - b = 0 for matrix [[a, b], [c, -a]];
    the discriminant has the sign of -det, so a negative determinant means
    two real fixed points and a positive one means none.  A positive
    non-square discriminant is reported as HYPERBOLIC_IRRATIONAL and the
    fixed points are not materialized (no algebraic extension here).
    """
    (a, b), (c, _) = inv.matrix
    if c == 0:
        # infinity is fixed; the finite fixed point solves 2a*t + b = 0
        return (InvolutionKind.HYPERBOLIC, tuple(sorted((Fraction(-b, 2 * a), INF), key=_ext_key)))
    disc = Fraction(a * a + b * c)
    if disc < 0:
        return (InvolutionKind.ELLIPTIC, None)
    if not is_square(disc):
        return (InvolutionKind.HYPERBOLIC_IRRATIONAL, None)
    s = sqrt_exact(disc)
    t1 = Fraction(a + s, c)
    t2 = Fraction(a - s, c)
    return (InvolutionKind.HYPERBOLIC, tuple(sorted((t1, t2))))


# ---------------------------------------------------------------------------
# Desargues' own characterisations
# ---------------------------------------------------------------------------

def _finite(values) -> list[Fraction]:
    out = []
    for v in values:
        if v is INF:
            raise InfiniteNode("segment products need finite coordinates; use the homographic route")
        out.append(Fraction(v))
    return out


def _strictly_between(x: Fraction, a: Fraction, b: Fraction) -> bool:
    lo, hi = (a, b) if a <= b else (b, a)
    return lo < x < hi


def interleaved(p: PointPair, q: PointPair) -> bool:
    """Are two finite couples meles (interleaved on the line)?

    Exactly one endpoint of one couple falls strictly between the endpoints
    of the other.  For four distinct finite nodes this is symmetric and
    agrees with separation on the projective circle.
    """
    a, b = _finite((p.first, p.second))
    c, d = _finite((q.first, q.second))
    in_p = sum(1 for x in (c, d) if _strictly_between(x, a, b))
    in_q = sum(1 for x in (a, b) if _strictly_between(x, c, d))
    return in_p == 1 or in_q == 1


def desargues_condition_check(
    pairs: tuple[PointPair, PointPair, PointPair] | list[PointPair],
) -> bool:
    """The rectangle-ratio test for three couples to be in involution.

    With couples B,H; C,G; D,F the three ratio identities

        GD.GF / CD.CF = GB.GH / CB.CH
        FC.FG / DC.DG = FB.FH / DB.DH
        HC.HG / BC.BG = HD.HF / BD.BF

    are evaluated on signed segment products (cross-multiplied, so vanishing
    denominators need no special case), and all the couples must be pairwise
    meles or pairwise demeles.  Two coincidence rules keep the test in exact
    agreement with homographic membership, where the products alone go
    blind: two different couples sharing a node can never be exchanged by
    one involution, and neither can three distinct fixed nodes.  Raises
    InfiniteNode on any infinite coordinate; the homographic membership test
    covers those.
    """
    p_bh, p_cg, p_df = pairs
    bigb, h = _finite((p_bh.first, p_bh.second))
    c, g = _finite((p_cg.first, p_cg.second))
    d, f = _finite((p_df.first, p_df.second))

    for i in range(3):
        for j in range(i + 1, 3):
            if pairs[i] != pairs[j]:
                shared = {pairs[i].first, pairs[i].second} & {pairs[j].first, pairs[j].second}
                if shared:
                    return False
    if (
        p_bh.is_degenerate
        and p_cg.is_degenerate
        and p_df.is_degenerate
        and len({p_bh, p_cg, p_df}) == 3
    ):
        return False  # an involution has at most two fixed nodes

    def q_bh(x):
        return (x - bigb) * (x - h)

    def q_cg(x):
        return (x - c) * (x - g)

    def q_df(x):
        return (x - d) * (x - f)

    identities = (
        q_df(g) * q_bh(c) == q_bh(g) * q_df(c),
        q_cg(f) * q_bh(d) == q_bh(f) * q_cg(d),
        q_cg(h) * q_df(bigb) == q_df(h) * q_cg(bigb),
    )
    if not all(identities):
        return False
    statuses = {
        interleaved(pairs[i], pairs[j])
        for i in range(3)
        for j in range(i + 1, 3)
        if pairs[i] != pairs[j]
    }
    return len(statuses) <= 1


def in_single_involution(pairs, chart: LineChart) -> bool:
    """Homographic membership: do the couples belong to one involution?

    Decides it for any three couples, including the degenerate layouts
    where no two of them pin the involution down (then a whole family
    exists and the answer is yes) or where some two are outright
    incompatible (no).
    """
    for i, j in ((0, 1), (0, 2), (1, 2)):
        try:
            inv = involution_from_two_pairs(pairs[i], pairs[j], chart)
        except UnderdeterminedInvolution:
            continue
        return all(contains_pair(inv, p) for p in pairs)
    rows = [_pair_row(p) for p in pairs]
    return all(
        rows[i][a] * rows[j][b] - rows[i][b] * rows[j][a] == 0
        for i, j in ((0, 1), (0, 2), (1, 2))
        for a in range(3)
        for b in range(a + 1, 3)
    )


def arbre_check(souche: ExtRat, pairs, *, return_product: bool = False):
    """The arbre test: equal signed products from the souche.

    A souche A and couples B,H; C,G; D,F form an arbre when the signed
    products (A-B)(A-H), (A-C)(A-G), (A-D)(A-F) agree exactly and A has the
    same engaged/disengaged situation against every couple.  Equal signed
    products force equal signs, so the engagement clause is checked
    explicitly only to mirror the classical statement.
    """
    a = _finite((souche,))[0]
    products = []
    for p in pairs:
        x, y = _finite((p.first, p.second))
        if a == x or a == y:
            raise InvalidSouche(f"souche {a} coincides with a node of {p}")
        products.append((a - x) * (a - y))
    equal = products[0] == products[1] == products[2]
    engaged = {prod < 0 for prod in products}
    ok = equal and len(engaged) == 1
    if return_product:
        return (ok, products[0] if ok else None)
    return ok


def souche_of(inv: InvolutionOnLine) -> ExtRat:
    """The souche of the involution: the node coupled with infinity."""
    return inv.apply(INF)


# ---------------------------------------------------------------------------
# Ramee: involutions are invariant under perspectivities
# ---------------------------------------------------------------------------

def mobius_from_three(src: tuple[Pair, Pair, Pair], dst: tuple[Pair, Pair, Pair]):
    """The 2x2 matrix sending three distinct pairs to three distinct pairs."""
    s0, s1, s2 = src
    d0, d1, d2 = dst
    al = pair_cross(s2, s1)
    be = pair_cross(s0, s2)
    ga = pair_cross(d2, d1)
    de = pair_cross(d0, d2)
    if al == 0 or be == 0 or ga == 0 or de == 0:
        raise ValueError("mobius_from_three needs pairwise distinct pairs")
    # columns: d0 * (ga / al), d1 * (de / be), rescaled by al * be
    c0 = (d0[0] * ga * be, d0[1] * ga * be)
    c1 = (d1[0] * de * al, d1[1] * de * al)
    sinv = ((s1[1], -s1[0]), (-s0[1], s0[0]))  # adjugate of [s0 s1]
    m = ((c0[0], c1[0]), (c0[1], c1[1]))
    return (
        (
            m[0][0] * sinv[0][0] + m[0][1] * sinv[1][0],
            m[0][0] * sinv[0][1] + m[0][1] * sinv[1][1],
        ),
        (
            m[1][0] * sinv[0][0] + m[1][1] * sinv[1][0],
            m[1][0] * sinv[0][1] + m[1][1] * sinv[1][1],
        ),
    )


def _chart_transfer_matrix(source: LineChart, map_point, target: LineChart):
    """Matrix of a projective point map in chart coordinates."""
    refs = (Fraction(0), Fraction(1), INF)
    src_pairs = tuple(to_pair(t) for t in refs)
    dst_pairs = tuple(
        target.pair_of(map_point(source.point_at(t))) for t in refs
    )
    return mobius_from_three(src_pairs, dst_pairs)


def perspectivity(source: LineChart, center: PPoint, target: LineChart):
    """The chart matrix of projection from `center`, source line to target."""
    if source.line.contains(center) or target.line.contains(center):
        raise CenterOnLine(f"center {center} lies on one of the lines")

    def map_point(p: PPoint) -> PPoint:
        return meet(join(center, p), target.line)

    return _chart_transfer_matrix(source, map_point, target)


def ramee_project(inv: InvolutionOnLine, center: PPoint, target: LineChart) -> InvolutionOnLine:
    """Transport an involution to another line by central projection.

    The perspectivity from `center` carries every couple of the involution
    to a couple of the result, and the kind (hyperbolic/elliptic) is
    preserved; this is the ramee theorem.
    """
    t = perspectivity(inv.chart, center, target)
    tadj = ((t[1][1], -t[0][1]), (-t[1][0], t[0][0]))
    m = inv.matrix
    rows = (
        (
            t[0][0] * m[0][0] + t[0][1] * m[1][0],
            t[0][0] * m[0][1] + t[0][1] * m[1][1],
        ),
        (
            t[1][0] * m[0][0] + t[1][1] * m[1][0],
            t[1][0] * m[0][1] + t[1][1] * m[1][1],
        ),
    )
    conjugated = (
        (
            rows[0][0] * tadj[0][0] + rows[0][1] * tadj[1][0],
            rows[0][0] * tadj[0][1] + rows[0][1] * tadj[1][1],
        ),
        (
            rows[1][0] * tadj[0][0] + rows[1][1] * tadj[1][0],
            rows[1][0] * tadj[0][1] + rows[1][1] * tadj[1][1],
        ),
    )
    return InvolutionOnLine(target, conjugated)


def involution_from_action(chart: LineChart, action) -> InvolutionOnLine:
    """Build the involution matrix of an involutive point map on a line.

    `action` maps points of the chart's line to points of the same line; it
    is sampled at the three chart reference points.  The constructor rejects
    the result if the sampled map is not involutive.
    """
    m = _chart_transfer_matrix(chart, action, chart)
    return InvolutionOnLine(chart, m)
