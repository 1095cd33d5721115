"""Outward-rounded interval arithmetic, in two flavours.

Fast mode works on hardware floats and pads every elementary operation by one
ulp outward (two ulps for exp, whose libm error is not formally bounded to a
half ulp).  Rigorous mode works on Fraction endpoints: ring operations are
exact, exp is enclosed by an argument-reduced Taylor series with an explicit
Lagrange remainder, and endpoints are rounded outward to a fixed dyadic
precision after each step so denominators stay bounded.

Overflow in fast mode widens to an infinite endpoint rather than raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Dyadic precision (bits after the binary point) for rigorous endpoints.
# 96 bits leaves ample headroom over the 2^-52 relative-enclosure target
# even after repeated squarings in the exp argument reduction.
RIGOROUS_BITS = 96

_INF = math.inf


def _down(v: float) -> float:
    return v if v == -_INF else math.nextafter(v, -_INF)


def _up(v: float) -> float:
    return v if v == _INF else math.nextafter(v, _INF)


def _safe_exp(v: float) -> float:
    try:
        return math.exp(v)
    except OverflowError:
        return _INF


@dataclass(frozen=True)
class Interval:
    """Closed float interval [lo, hi] with lo <= hi."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi) or self.lo > self.hi:
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def mag(self) -> float:
        """Upper bound for |v| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0.0 or self.hi < 0.0

    def strictly_inside(self, other: Interval) -> bool:
        return other.lo < self.lo and self.hi < other.hi

    def intersect(self, other: Interval) -> Interval | None:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def hull(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    # -- arithmetic (outward rounded) --

    def __add__(self, other: Interval) -> Interval:
        lo = self.lo + other.lo
        hi = self.hi + other.hi
        # opposite infinities only appear after an overflow widened a bound
        if math.isnan(lo):
            lo = -_INF
        if math.isnan(hi):
            hi = _INF
        return Interval(_down(lo), _up(hi))

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: Interval) -> Interval:
        return self + (-other)

    def __mul__(self, other: Interval) -> Interval:
        products = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        products = [0.0 if math.isnan(p) else p for p in products]  # 0 * inf
        return Interval(_down(min(products)), _up(max(products)))

    def inverse(self) -> Interval:
        """1/interval; requires the interval to exclude zero."""
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return Interval(_down(1.0 / self.hi), _up(1.0 / self.lo))

    def __truediv__(self, other: Interval) -> Interval:
        return self * other.inverse()

    def pow_int(self, k: int) -> Interval:
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return Interval(1.0, 1.0)
        if k % 2 == 0 and self.contains_zero():
            return Interval(0.0, _up(self.mag**k))
        lo, hi = sorted((self.lo**k, self.hi**k))
        return Interval(_down(lo), _up(hi))

    def exp(self) -> Interval:
        return Interval(_down(_down(_safe_exp(self.lo))), _up(_up(_safe_exp(self.hi))))

    def scale(self, c: Fraction) -> Interval:
        return self * enclose_rational(c)


def point(v: float) -> Interval:
    return Interval(v, v)


def enclose_rational(c: Fraction | int) -> Interval:
    """Smallest float interval around an exact rational."""
    c = Fraction(c)
    f = float(c)
    if math.isinf(f):
        return Interval(-_INF, _INF) if c < 0 else Interval(f, f)
    if Fraction(f) == c:
        return Interval(f, f)
    return Interval(_down(f), _up(f))


@dataclass(frozen=True)
class Box:
    """Axis-aligned box: one interval per dimension."""

    intervals: tuple[Interval, ...]

    @classmethod
    def from_bounds(cls, bounds: Sequence[tuple[float, float]]) -> Box:
        return cls(tuple(Interval(float(lo), float(hi)) for lo, hi in bounds))

    @property
    def dimension(self) -> int:
        return len(self.intervals)

    def bounds(self) -> list[tuple[float, float]]:
        return [(iv.lo, iv.hi) for iv in self.intervals]

    def contains_box(self, other: Box) -> bool:
        return all(
            a.lo <= b.lo and b.hi <= a.hi
            for a, b in zip(self.intervals, other.intervals)
        )


# ---------------------------------------------------------------------------
# Rigorous (rational endpoint) arithmetic
# ---------------------------------------------------------------------------


def round_down(x: Fraction, bits: int = RIGOROUS_BITS) -> Fraction:
    scaled = x * (1 << bits)
    return Fraction(scaled.numerator // scaled.denominator, 1 << bits)


def round_up(x: Fraction, bits: int = RIGOROUS_BITS) -> Fraction:
    scaled = x * (1 << bits)
    return Fraction(-((-scaled.numerator) // scaled.denominator), 1 << bits)


class RatInterval:
    """Interval with exact rational endpoints, rounded outward to a dyadic grid."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Fraction, hi: Fraction, exact: bool = False):
        if lo > hi:
            raise ValueError("invalid rational interval")
        # Degenerate rational endpoints are kept exact so that, e.g., exact
        # zeros survive; everything else lands on the dyadic grid.
        if exact or lo == hi:
            self.lo, self.hi = lo, hi
        else:
            self.lo, self.hi = round_down(lo), round_up(hi)

    @classmethod
    def exact_point(cls, v: Fraction | int) -> RatInterval:
        v = Fraction(v)
        return cls(v, v, exact=True)

    def __add__(self, other: RatInterval) -> RatInterval:
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> RatInterval:
        return RatInterval(-self.hi, -self.lo, exact=True)

    def __sub__(self, other: RatInterval) -> RatInterval:
        return self + (-other)

    def __mul__(self, other: RatInterval) -> RatInterval:
        products = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return RatInterval(min(products), max(products))

    def pow_int(self, k: int) -> RatInterval:
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return RatInterval.exact_point(1)
        if k % 2 == 0 and self.lo <= 0 <= self.hi:
            m = max(-self.lo, self.hi)
            return RatInterval(Fraction(0), m**k)
        lo, hi = sorted((self.lo**k, self.hi**k))
        return RatInterval(lo, hi)

    def scale(self, c: Fraction) -> RatInterval:
        if c >= 0:
            return RatInterval(self.lo * c, self.hi * c)
        return RatInterval(self.hi * c, self.lo * c)

    def exp(self, bits: int = RIGOROUS_BITS) -> RatInterval:
        lo, _ = exp_bounds(self.lo, bits)
        _, hi = exp_bounds(self.hi, bits)
        return RatInterval(lo, hi)

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def to_float_interval(self) -> Interval:
        flo = float(self.lo)
        fhi = float(self.hi)
        if Fraction(flo) > self.lo:
            flo = _down(flo)
        if Fraction(fhi) < self.hi:
            fhi = _up(fhi)
        return Interval(flo, fhi)

    def __repr__(self) -> str:  # pragma: no cover - debug helper
        return f"RatInterval({float(self.lo)}, {float(self.hi)})"


def exp_bounds(q: Fraction, bits: int = RIGOROUS_BITS) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds for e^q with relative error below 2^-bits.

    Strategy: for q > 0 reduce the argument by halving until r = q / 2^k is at
    most 1/4, sum the Taylor series for e^r until the next term is below the
    target, bound the tail by term * 4/3 (geometric, since r <= 1/4), then
    square the enclosure k times.  Negative arguments go through the exact
    reciprocal.  All intermediate endpoints are rounded outward to the dyadic
    grid at a few guard bits beyond the target.
    """
    if q == 0:
        return Fraction(1), Fraction(1)
    if q < 0:
        lo, hi = exp_bounds(-q, bits)
        work = bits + 8
        return round_down(Fraction(1) / hi, work), round_up(Fraction(1) / lo, work)

    k = 0
    r = q
    quarter = Fraction(1, 4)
    while r > quarter:
        r /= 2
        k += 1

    work = bits + 2 * k + 16
    guard = work + 16
    target = Fraction(1, 1 << (work - 4))
    term_lo = term_hi = Fraction(1)
    lo_sum = hi_sum = Fraction(1)
    i = 0
    while term_hi > target:
        i += 1
        term_lo = round_down(term_lo * r / i, guard)
        term_hi = round_up(term_hi * r / i, guard)
        lo_sum = round_down(lo_sum + term_lo, guard)
        hi_sum = round_up(hi_sum + term_hi, guard)
    tail = round_up(term_hi * Fraction(4, 3), guard)
    lo = round_down(lo_sum, work)
    hi = round_up(hi_sum + tail, work)

    for _ in range(k):
        lo, hi = round_down(lo * lo, work), round_up(hi * hi, work)
    return lo, hi
