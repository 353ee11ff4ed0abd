"""Projective core: incidence, cross-ratio, harmonic conjugates, homographies.

Expected values are frozen from an independent cross-product / determinant
oracle written out here in the tests.
"""

import random
from fractions import Fraction

import pytest

from traversale import (
    INF,
    CoincidentLines,
    CoincidentPoints,
    ConjugateUndefined,
    DegenerateQuadruple,
    Homography,
    LineChart,
    NotOnLine,
    PLine,
    PPoint,
    SingularMatrix,
    apply_homography,
    canonical_chart,
    cross_ratio,
    harmonic_conjugate,
    join,
    meet,
)


def _cross(a, b):
    # the oracle: raw cross product of homogeneous triples
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def test_join_matches_cross_product_oracle():
    p, q = PPoint(1, 0, 1), PPoint(0, 1, 1)
    assert join(p, q) == PLine(*_cross((1, 0, 1), (0, 1, 1)))
    assert join(p, q) == PLine(1, 1, -1)


def test_join_of_two_infinite_points_is_line_at_infinity():
    assert join(PPoint(1, 0, 0), PPoint(0, 1, 0)) == PLine(0, 0, 1)


def test_join_coincident_points_raises():
    with pytest.raises(CoincidentPoints):
        join(PPoint(1, 0, 1), PPoint(2, 0, 2))


def test_meet_matches_cross_product_oracle():
    l, m = PLine(1, 1, -1), PLine(1, -1, 0)
    assert meet(l, m) == PPoint(*_cross((1, 1, -1), (1, -1, 0)))
    assert meet(l, m) == PPoint(Fraction(1, 2), Fraction(1, 2), 1)


def test_parallel_lines_meet_at_infinity():
    assert meet(PLine(1, 1, -1), PLine(1, 1, 1)) == PPoint(1, -1, 0)


def test_meet_coincident_lines_raises():
    with pytest.raises(CoincidentLines):
        meet(PLine(1, 0, 0), PLine(2, 0, 0))


def test_meet_of_join_against_another_line_through_p():
    p, q = PPoint(2, 3, 1), PPoint(-1, 4, 1)
    through_p = join(p, PPoint(0, 0, 1))
    assert meet(join(p, q), through_p) == p


def test_join_meet_duality():
    # coefficients of join(p,q) equal coordinates of meet(p*,q*) after swap
    p, q = (2, 3, 5), (7, -1, 4)
    line = join(PPoint(*p), PPoint(*q))
    point = meet(PLine(*p), PLine(*q))
    assert line.coeffs == point.coords


def test_canonical_equality_is_a_congruence():
    assert PPoint(2, 4, 6) == PPoint(1, 2, 3) == PPoint(Fraction(1, 3), Fraction(2, 3), 1)
    assert PPoint(-1, -2, -3) == PPoint(1, 2, 3)
    assert hash(PPoint(2, 4, 6)) == hash(PPoint(1, 2, 3))
    assert PLine(2, 0, -1) == PLine(-4, 0, 2)


def test_zero_triple_rejected():
    with pytest.raises(CoincidentPoints):
        PPoint(0, 0, 0)
    with pytest.raises(CoincidentLines):
        PLine(0, 0, 0)


def test_point_and_line_text_round_trip():
    p = PPoint(Fraction(2, 3), -5, 1)
    assert PPoint.parse(str(p)) == p
    l = PLine(Fraction(1, 7), 0, -2)
    assert PLine.parse(str(l)) == l
    assert str(PPoint(2, 0, 1)) == "(1, 0, 1/2)"


def test_cross_ratio_harmonic_example(x_axis_chart):
    # oracle: ((a-c)(b-d)) / ((a-d)(b-c)) = ((-3)(1/2)) / ((-3/2)(-1)) = -1
    pts = [x_axis_chart.point_at(Fraction(t)) for t in (-1, 1, 2, Fraction(1, 2))]
    assert cross_ratio(*pts, x_axis_chart) == -1


def test_cross_ratio_normalization(x_axis_chart):
    # under the fixed convention ((a-c)(b-d))/((a-d)(b-c)), the b = infinity
    # factors cancel and (0, inf; 1, t) = (0-1)/(0-t) = 1/t
    a = x_axis_chart.point_at(Fraction(0))
    b = x_axis_chart.point_at(INF)
    c = x_axis_chart.point_at(Fraction(1))
    for t in (Fraction(5, 3), Fraction(-7, 2), Fraction(4)):
        d = x_axis_chart.point_at(t)
        assert cross_ratio(a, b, c, d, x_axis_chart) == 1 / t


def test_cross_ratio_degenerate_quadruple(x_axis_chart):
    a = x_axis_chart.point_at(Fraction(1))
    b = x_axis_chart.point_at(Fraction(2))
    with pytest.raises(DegenerateQuadruple):
        cross_ratio(a, b, a, b, x_axis_chart)


def test_cross_ratio_requires_incidence(x_axis_chart):
    off = PPoint(0, 1, 1)
    a, b, c = (x_axis_chart.point_at(Fraction(t)) for t in (0, 1, 2))
    with pytest.raises(NotOnLine):
        cross_ratio(a, b, c, off, x_axis_chart)


def test_cross_ratio_invariant_under_chart_change_and_homography():
    rng = random.Random(11)
    line = PLine(0, 1, 0)
    chart = canonical_chart(line)
    for _ in range(50):
        ts = set()
        while len(ts) < 4:
            ts.add(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        a, b, c, d = (chart.point_at(t) for t in ts)
        value = cross_ratio(a, b, c, d, chart)
        # a different chart on the same line
        other = LineChart(line, chart.point_at(Fraction(5)), chart.point_at(Fraction(-2)), chart.point_at(Fraction(1, 3)))
        assert cross_ratio(a, b, c, d, other) == value
        # a random homography moves the whole configuration
        while True:
            rows = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
            try:
                h = Homography(rows)
                break
            except (SingularMatrix, ValueError):
                continue
        img_line = h.apply_line(line)
        img_chart = canonical_chart(img_line)
        imgs = [h.apply(p) for p in (a, b, c, d)]
        assert cross_ratio(*imgs, img_chart) == value


def test_harmonic_conjugate_midpoint_goes_to_infinity(x_axis_chart):
    a = x_axis_chart.point_at(Fraction(-1))
    b = x_axis_chart.point_at(Fraction(1))
    conj = harmonic_conjugate(x_axis_chart.point_at(Fraction(0)), a, b, x_axis_chart)
    assert x_axis_chart.coordinate(conj) is INF


def test_harmonic_conjugate_solves_cross_ratio(x_axis_chart):
    a = x_axis_chart.point_at(Fraction(-1))
    b = x_axis_chart.point_at(Fraction(1))
    c = x_axis_chart.point_at(Fraction(2))
    d = harmonic_conjugate(c, a, b, x_axis_chart)
    assert x_axis_chart.coordinate(d) == Fraction(1, 2)
    assert cross_ratio(a, b, c, d, x_axis_chart) == -1


def test_harmonic_conjugate_is_involutive(x_axis_chart):
    rng = random.Random(3)
    a = x_axis_chart.point_at(Fraction(-3, 2))
    b = x_axis_chart.point_at(Fraction(7, 3))
    for _ in range(30):
        t = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
        c = x_axis_chart.point_at(t)
        if c in (a, b):
            continue
        d = harmonic_conjugate(c, a, b, x_axis_chart)
        assert harmonic_conjugate(d, a, b, x_axis_chart) == c


def test_harmonic_conjugate_of_base_point_rejected(x_axis_chart):
    a = x_axis_chart.point_at(Fraction(-1))
    b = x_axis_chart.point_at(Fraction(1))
    with pytest.raises(ConjugateUndefined):
        harmonic_conjugate(a, a, b, x_axis_chart)


def test_homography_identity_and_scaling():
    assert Homography.identity().apply(PPoint(2, 0, 1)) == PPoint(2, 0, 1)
    assert Homography.scaling(2, 1).apply(PPoint(1, 0, 1)) == PPoint(2, 0, 1)


def test_homography_singular_rejected():
    with pytest.raises(SingularMatrix):
        Homography(((1, 0, 0), (0, 1, 0), (1, 1, 0)))


def test_homography_preserves_incidence():
    h = Homography(((1, 2, 0), (0, 1, -1), (3, 0, 1)))
    p, q = PPoint(1, 4, 1), PPoint(-2, 5, 3)
    l = join(p, q)
    assert h.apply_line(l) == join(h.apply(p), h.apply(q))
    assert apply_homography(h, l).contains(apply_homography(h, p))


def test_homography_inverse_round_trip():
    h = Homography(((1, 2, 0), (0, 1, -1), (3, 0, 1)))
    p = PPoint(Fraction(5, 7), -2, 1)
    assert h.inverse().apply(h.apply(p)) == p
    assert h.compose(h.inverse()) == Homography.identity()


def test_chart_reference_points():
    chart = canonical_chart(PLine(5, 0, -3))  # the vertical line x = 3/5
    assert chart.coordinate(PPoint(Fraction(3, 5), 0, 1)) == 0
    assert chart.coordinate(PPoint(Fraction(3, 5), Fraction(-8, 5), 1)) == Fraction(-8, 5)
    assert chart.coordinate(PPoint(0, 1, 0)) is INF
    assert chart.point_at(Fraction(2, 5)) == PPoint(Fraction(3, 5), Fraction(2, 5), 1)


def test_chart_requires_distinct_collinear_references():
    line = PLine(0, 1, 0)
    with pytest.raises(NotOnLine):
        LineChart(line, PPoint(0, 0, 1), PPoint(1, 1, 1), PPoint(1, 0, 0))
    with pytest.raises(ValueError):
        LineChart(line, PPoint(0, 0, 1), PPoint(0, 0, 1), PPoint(1, 0, 0))
