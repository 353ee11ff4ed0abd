"""Involutions: the homographic view against Desargues' own conditions."""

import random
from fractions import Fraction

import pytest

from traversale import (
    INF,
    CenterOnLine,
    InfiniteNode,
    InvalidSouche,
    InvolutionKind,
    InvolutionOnLine,
    PLine,
    PPoint,
    PointPair,
    UnderdeterminedInvolution,
    arbre_check,
    canonical_chart,
    classify_and_fixed_points,
    contains_pair,
    cross_ratio,
    desargues_condition_check,
    interleaved,
    involution_from_two_pairs,
    ramee_project,
    souche_of,
)
from traversale.involution import in_single_involution


def F(*args):
    return Fraction(*args)


def harmonic_conjugate_oracle(t, a, b):
    # conjugate of t with respect to {a, b}: ((a+b)t - 2ab) / (2t - (a+b))
    return ((a + b) * t - 2 * a * b) / (2 * t - (a + b))


def test_pair_is_unordered_and_parses():
    assert PointPair(F(1), F(2)) == PointPair(F(2), F(1))
    assert hash(PointPair(F(1), F(2))) == hash(PointPair(F(2), F(1)))
    p = PointPair.parse("{3/5, inf}")
    assert p.first == F(3, 5) and p.second is INF
    assert PointPair.parse(str(p)) == p


def test_from_two_pairs_swap_pair_and_fixed_pair(x_axis_chart):
    # {0, inf} and {1, -1} force t -> -1/t (solving the 2x2 system by hand:
    # the first couple kills the diagonal, the second gives b = -c)
    inv = involution_from_two_pairs(PointPair(F(0), INF), PointPair(F(1), F(-1)), x_axis_chart)
    assert inv.apply(F(2)) == F(-1, 2)
    assert inv.apply(F(0)) is INF
    kind, fixed = classify_and_fixed_points(inv)
    assert kind == InvolutionKind.ELLIPTIC and fixed is None


def test_from_two_pairs_product_involution(x_axis_chart):
    inv = involution_from_two_pairs(
        PointPair(F(2, 5), F(-8, 5)), PointPair(F(8, 5), F(-2, 5)), x_axis_chart
    )
    # x * x' = -16/25 exactly
    for t in (F(2, 5), F(8, 5), F(4, 5), F(1), F(-3, 7)):
        assert t * inv.apply(t) == F(-16, 25)
    assert contains_pair(inv, PointPair(F(4, 5), F(-4, 5)))
    assert contains_pair(inv, PointPair(F(0), INF))
    assert not contains_pair(inv, PointPair(F(1), F(2)))


def test_from_two_degenerate_pairs_is_harmonic_conjugation(x_axis_chart):
    inv = involution_from_two_pairs(
        PointPair(F(2), F(2)), PointPair(F(1, 2), F(1, 2)), x_axis_chart
    )
    kind, fixed = classify_and_fixed_points(inv)
    assert kind == InvolutionKind.HYPERBOLIC
    assert fixed == (F(1, 2), F(2))
    for t in (F(-1), F(1), F(3), F(5, 7)):
        assert inv.apply(t) == harmonic_conjugate_oracle(t, F(2), F(1, 2))


def test_from_two_pairs_underdetermined(x_axis_chart):
    shared = PointPair(F(0), F(1))
    with pytest.raises(UnderdeterminedInvolution):
        involution_from_two_pairs(shared, shared, x_axis_chart)
    with pytest.raises(UnderdeterminedInvolution):
        involution_from_two_pairs(PointPair(F(0), F(1)), PointPair(F(0), F(2)), x_axis_chart)


def test_no_parabolic_involution(x_axis_chart):
    # trace zero but nilpotent: not an involution
    with pytest.raises(UnderdeterminedInvolution):
        InvolutionOnLine(x_axis_chart, ((0, 0), (1, 0)))
    with pytest.raises(UnderdeterminedInvolution):
        InvolutionOnLine(x_axis_chart, ((1, 1), (1, 1)))


def test_involutivity_randomized(x_axis_chart):
    rng = random.Random(5)
    built = 0
    while built < 40:
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        if a * a + b * c == 0:
            continue
        inv = InvolutionOnLine(x_axis_chart, ((a, b), (c, -a)))
        built += 1
        for _ in range(5):
            t = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
            assert inv.apply(inv.apply(t)) == t


def test_classification_reciprocal_map(x_axis_chart):
    inv = involution_from_two_pairs(PointPair(F(2), F(1, 2)), PointPair(F(3), F(1, 3)), x_axis_chart)
    # x -> 1/x
    kind, fixed = classify_and_fixed_points(inv)
    assert kind == InvolutionKind.HYPERBOLIC and fixed == (F(-1), F(1))
    assert souche_of(inv) == 0


def test_classification_irrational_fixed_points(x_axis_chart):
    # x -> 2/x has fixed points +-sqrt(2), real but not rational
    inv = InvolutionOnLine(x_axis_chart, ((0, 2), (1, 0)))
    kind, fixed = classify_and_fixed_points(inv)
    assert kind == InvolutionKind.HYPERBOLIC_IRRATIONAL and fixed is None


def test_classification_infinity_fixed(x_axis_chart):
    # x -> -x + 3 fixes infinity and 3/2
    inv = InvolutionOnLine(x_axis_chart, ((1, -3), (0, -1)))
    kind, fixed = classify_and_fixed_points(inv)
    assert kind == InvolutionKind.HYPERBOLIC
    assert fixed == (F(3, 2), INF)


def test_desargues_condition_explicit_triple():
    pairs = [PointPair(F(2), F(1, 2)), PointPair(F(3), F(1, 3)), PointPair(F(4), F(1, 4))]
    assert desargues_condition_check(pairs)
    # first identity, both sides must be exactly 1/9
    g, c = F(1, 3), F(3)
    left = ((F(4) - g) * (F(1, 4) - g)) / ((F(4) - c) * (F(1, 4) - c))
    right = ((F(2) - g) * (F(1, 2) - g)) / ((F(2) - c) * (F(1, 2) - c))
    assert left == right == F(1, 9)


def test_desargues_condition_fails_off_involution():
    pairs = [PointPair(F(2), F(1, 2)), PointPair(F(3), F(1, 3)), PointPair(F(4), F(1, 5))]
    assert not desargues_condition_check(pairs)


def test_desargues_condition_refuses_infinity():
    pairs = [PointPair(F(0), INF), PointPair(F(1), F(-1)), PointPair(F(2), F(-2))]
    with pytest.raises(InfiniteNode):
        desargues_condition_check(pairs)


def test_interleaving():
    assert interleaved(PointPair(F(-1), F(1)), PointPair(F(0), F(2)))
    assert not interleaved(PointPair(F(1, 2), F(2)), PointPair(F(1, 3), F(3)))


def test_arbre_explicit():
    pairs = [PointPair(F(2), F(1, 2)), PointPair(F(3), F(1, 3)), PointPair(F(4), F(1, 4))]
    ok, product = arbre_check(F(0), pairs, return_product=True)
    assert ok and product == 1
    # souche at 1: (1-2)(1-1/2) = -1/2 while (1-3)(1-1/3) = -4/3
    assert not arbre_check(F(1), pairs)
    with pytest.raises(InvalidSouche):
        arbre_check(F(2), pairs)


def test_equivalence_rectangle_vs_homographic(x_axis_chart):
    """Desargues' conditions agree with membership, coincidences included."""
    rng = random.Random(17)
    checked = 0
    for _ in range(800):
        vals = [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(6)]
        if rng.random() < 0.3:
            i, j = rng.randrange(6), rng.randrange(6)
            vals[i] = vals[j]
        pairs = [PointPair(vals[0], vals[1]), PointPair(vals[2], vals[3]), PointPair(vals[4], vals[5])]
        assert desargues_condition_check(pairs) == in_single_involution(pairs, x_axis_chart)
        checked += 1
    assert checked == 800


def test_agregativite(x_axis_chart):
    rng = random.Random(23)
    done = 0
    while done < 50:
        a, b, c = (rng.randint(-6, 6) for _ in range(3))
        if a * a + b * c == 0:
            continue
        inv = InvolutionOnLine(x_axis_chart, ((a, b), (c, -a)))
        ts = []
        while len(ts) < 3:
            t = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            img = inv.apply(t)
            if img is INF or any(t in (p.first, p.second) or img in (p.first, p.second) for p in ts):
                continue
            ts.append(PointPair(t, img))
        i12 = involution_from_two_pairs(ts[0], ts[1], x_axis_chart)
        i13 = involution_from_two_pairs(ts[0], ts[2], x_axis_chart)
        assert i12 == i13 == inv
        done += 1


def test_harmonic_bridge(x_axis_chart):
    # {a,a}, {b,b}, {c,d} in one involution iff (a,b; c,d) = -1
    a, b, c = F(-1), F(1), F(2)
    d = harmonic_conjugate_oracle(c, a, b)
    assert d == F(1, 2)
    assert in_single_involution(
        [PointPair(a, a), PointPair(b, b), PointPair(c, d)], x_axis_chart
    )
    pts = [x_axis_chart.point_at(t) for t in (a, b, c, d)]
    assert cross_ratio(*pts, x_axis_chart) == -1
    assert not in_single_involution(
        [PointPair(a, a), PointPair(b, b), PointPair(c, F(3, 4))], x_axis_chart
    )


def test_midpoint_iff_partner_at_infinity(x_axis_chart):
    c, g = F(1), F(5)
    assert in_single_involution(
        [PointPair(F(3), INF), PointPair(c, c), PointPair(g, g)], x_axis_chart
    )
    assert not in_single_involution(
        [PointPair(F(2), INF), PointPair(c, c), PointPair(g, g)], x_axis_chart
    )


def test_ramee_projection_example(x_axis_chart):
    # x -> -x on the x-axis, projected from (0,1,1) onto y = -1, doubles: u = 2t
    inv = involution_from_two_pairs(PointPair(F(1), F(-1)), PointPair(F(2), F(-2)), x_axis_chart)
    assert inv.apply(F(3)) == F(-3)
    target = canonical_chart(PLine(0, 1, 1))
    projected = ramee_project(inv, PPoint(0, 1, 1), target)
    assert projected.apply(F(4)) == F(-4)
    # couples {1,-1}, {2,-2} land on {2,-2}, {4,-4}; the fixed nodes 0 and
    # infinity stay put
    for pair in (PointPair(F(2), F(-2)), PointPair(F(4), F(-4)), PointPair(F(0), F(0))):
        assert contains_pair(projected, pair)
    kind, fixed = classify_and_fixed_points(projected)
    assert kind == InvolutionKind.HYPERBOLIC and fixed == (F(0), INF)


def test_ramee_center_on_line_rejected(x_axis_chart):
    inv = involution_from_two_pairs(PointPair(F(1), F(-1)), PointPair(F(2), F(-2)), x_axis_chart)
    with pytest.raises(CenterOnLine):
        ramee_project(inv, PPoint(3, 0, 1), canonical_chart(PLine(0, 1, 1)))


def test_ramee_preserves_elliptic_kind(x_axis_chart):
    inv = involution_from_two_pairs(
        PointPair(F(2, 5), F(-8, 5)), PointPair(F(8, 5), F(-2, 5)), x_axis_chart
    )
    assert classify_and_fixed_points(inv)[0] == InvolutionKind.ELLIPTIC
    target = canonical_chart(PLine(1, 1, -4))
    projected = ramee_project(inv, PPoint(1, 2, 1), target)
    assert classify_and_fixed_points(projected)[0] == InvolutionKind.ELLIPTIC


def test_involution_text_form(x_axis_chart):
    inv = involution_from_two_pairs(PointPair(F(1), F(-1)), PointPair(F(2), F(-2)), x_axis_chart)
    assert str(inv) == "[[1, 0], [0, -1]] on [0, 1, 0]"
