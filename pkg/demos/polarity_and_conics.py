"""Polarity from the quadratic form: polars, poles, tangents, classification.

Run: python demos/polarity_and_conics.py
"""

from fractions import Fraction as F

from traversale import (
    Conic,
    LINE_AT_INFINITY,
    PLine,
    PPoint,
    affine_features,
    classify,
    classify_and_fixed_points,
    line_intersect,
    polar,
    polarity_involution_on_line,
    pole,
    rational_parametrize,
    tangents_from,
    transform,
    Homography,
    IrrationalIntersection,
)

circle = Conic.unit_circle()
print("the unit circle as a form:", circle, "(a b c d e f coefficients)")

print()
print("== polar and pole ==")
f = PPoint(2, 0, 1)
tau = polar(circle, f)
print(f"polar of {f} is {tau}  (the line x = 1/2)")
print(f"pole of {tau} is {pole(circle, tau)}")
print(f"pole of the line at infinity: {pole(circle, LINE_AT_INFINITY)}  (the center)")

print()
print("== a line meets a conic in 0, 1 or 2 rational points, or irrationally ==")
print("x-axis:", [str(p) for p in line_intersect(circle, PLine(0, 1, 0))])
print("x = 2:", line_intersect(circle, PLine(1, 0, -2)), " (misses the circle)")
print("x = 1:", [str(p) for p in line_intersect(circle, PLine(1, 0, -1))], " (tangent)")
try:
    line_intersect(circle, PLine(0, 2, -1))
except IrrationalIntersection as exc:
    print("y = 1/2: real but irrational, discriminant", exc.discriminant)

print()
print("== the polarity involution induced on a line ==")
secant = polarity_involution_on_line(circle, PLine(5, 0, -3))
print("on x = 3/5:", secant.matrix, "->", classify_and_fixed_points(secant))
ordinale = polarity_involution_on_line(circle, PLine(1, 0, -2))
print("on x = 2 (an ordinale):", ordinale.matrix, "-> t maps to", ordinale.apply(F(1)), "at t=1;",
      classify_and_fixed_points(ordinale)[0].value)

print()
print("== tangents from an exterior point ==")
for line, contact in tangents_from(circle, PPoint(F(5, 3), 0, 1)):
    print(f"tangent {line} touching at {contact}")

print()
print("== classification by exact inertia ==")
for rows, label in [
    (((1, 0, 0), (0, 1, 0), (0, 0, -1)), "x^2 + y^2 = z^2"),
    (((1, 0, 0), (0, 1, 0), (0, 0, 1)), "x^2 + y^2 + z^2 = 0"),
    (((1, 0, 0), (0, 0, 0), (0, 0, -1)), "x^2 = z^2"),
]:
    r = classify(Conic(rows))
    extras = f", point double {r.point_double}" if r.point_double else ""
    print(f"{label}: {r.kind.value}, signature {r.signature}{extras}")

print()
print("== affine features depend on the chart's line at infinity ==")
hyperbola = Conic(((1, 0, 0), (0, -1, 0), (0, 0, -1)))
feats = affine_features(hyperbola)
print("x^2 - y^2 = z^2:", feats.kind.value, "center", feats.center,
      "asymptotes", [str(a) for a in feats.asymptotes])
print("the circle seen with infinity at x = 1:", affine_features(circle, PLine(1, 0, -1)).kind.value)

print()
print("== rational points from one rational point ==")
par = rational_parametrize(circle, PPoint(-1, 0, 1))
print("chord slopes 1/2, 2/3, -3/4 give:", *(str(par.point(F(*t))) for t in ((1, 2), (2, 3), (-3, 4))))

print()
print("== polarity transports along homographies ==")
h = Homography(((2, 0, 1), (0, 1, 0), (0, 0, 1)))
moved = transform(circle, h)
m = PPoint(3, 1, 1)
print("h(polar(m)) == polar(h(m)):", h.apply_line(polar(circle, m)) == polar(moved, h.apply(m)))
