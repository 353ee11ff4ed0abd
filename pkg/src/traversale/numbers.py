"""Exact scalar arithmetic: rationals, the extended rational line, text forms.

The carrier field everywhere is ``fractions.Fraction`` (arbitrary-precision,
always in lowest terms, positive denominator).  A projective line needs one
extra value, the point at infinity, represented by the singleton :data:`INF`.
Extended rationals are handled as homogeneous integer pairs ``(num, den)``
with ``t = num/den`` and ``INF = (1, 0)`` whenever a computation must stay
total.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class _Infinity:
    """The single point at infinity of a projective line."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("traversale.INF")


INF = _Infinity()

# A coordinate on a projective line: a rational number or INF.
ExtRat = Fraction | _Infinity

# Homogeneous pair (num, den) for a point of the projective line.
Pair = tuple[Fraction, Fraction]

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into an exact Fraction.

    Raises ValueError on malformed input or a zero denominator, so scene
    parsing can report the offending token.
    """
    token = text.strip()
    if not _RAT_RE.match(token):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def parse_extended(text: str) -> ExtRat:
    """Parse a rational literal or ``"inf"``."""
    if text.strip() == "inf":
        return INF
    return parse_rational(text)


def format_rational(value: Fraction) -> str:
    """Render ``p/q`` in lowest terms, or plain ``p`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_extended(value: ExtRat) -> str:
    if value is INF:
        return "inf"
    return format_rational(value)


def to_pair(value: ExtRat) -> Pair:
    """Homogeneous pair of an extended rational; INF becomes (1, 0)."""
    if value is INF:
        return (Fraction(1), Fraction(0))
    return (Fraction(value), Fraction(1))


def from_pair(pair: Pair) -> ExtRat:
    num, den = pair
    if den == 0:
        if num == 0:
            raise ValueError("zero homogeneous pair")
        return INF
    return Fraction(num, den)


def pair_cross(p: Pair, q: Pair) -> Fraction:
    """Determinant |p q|; zero iff the pairs name the same point."""
    return p[0] * q[1] - p[1] * q[0]


def pairs_equal(p: Pair, q: Pair) -> bool:
    return pair_cross(p, q) == 0


def small_rationals():
    """Yield all rationals ordered by height max(|num|, den): 0, 1, -1, 2, ...

    Deterministic; used by the bounded searches (secant slopes, points on a
    line) so that repeated runs pick identical witnesses.
    """
    yield Fraction(0)
    height = 1
    while True:
        for num, den in _height_pairs(height):
            yield Fraction(num, den)
            yield Fraction(-num, den)
        height += 1


def _height_pairs(h: int):
    for q in range(1, h + 1):
        if math.gcd(h, q) == 1:
            yield (h, q)
    for p in range(1, h):
        if math.gcd(p, h) == 1:
            yield (p, h)


def small_extended():
    """Like small_rationals but with INF second, for direction sweeps."""
    yield Fraction(0)
    yield INF
    src = small_rationals()
    next(src)  # drop the duplicate 0
    yield from src


def is_square(value: Fraction) -> bool:
    """Exact test: is a nonnegative rational the square of a rational?"""
    if value < 0:
        return False
    num, den = value.numerator, value.denominator
    return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den


def sqrt_exact(value: Fraction) -> Fraction:
    """Exact square root of a rational square (caller checks is_square)."""
    return Fraction(math.isqrt(value.numerator), math.isqrt(value.denominator))
