"""Interval arithmetic soundness, both float and rational backends."""

import math
import random
from fractions import Fraction

import pytest

from expalg.intervals import (
    Box,
    Interval,
    RatInterval,
    enclose_rational,
    exp_bounds,
    point,
    round_down,
    round_up,
)


def test_interval_basics():
    iv = Interval(1.0, 2.0)
    assert iv.contains(1.5) and not iv.contains(2.5)
    assert Interval(-1.0, 1.0).contains_zero()
    assert Interval(0.5, 1.0).excludes_zero()
    with pytest.raises(ValueError):
        Interval(2.0, 1.0)


def test_float_ops_enclose_exact_rational_results():
    rng = random.Random(41)
    for _ in range(300):
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 9))
        ia, ib = enclose_rational(a), enclose_rational(b)
        assert _contains_exact(ia + ib, a + b)
        assert _contains_exact(ia - ib, a - b)
        assert _contains_exact(ia * ib, a * b)
        k = rng.randint(0, 4)
        assert _contains_exact(ia.pow_int(k), a**k)


def _contains_exact(iv: Interval, value: Fraction) -> bool:
    return Fraction(iv.lo) <= value <= Fraction(iv.hi)


def test_exp_encloses_libm_neighbourhood():
    for x in [-10.0, -1.0, 0.0, 0.5, 1.0, 3.0]:
        iv = point(x).exp()
        assert iv.lo <= math.exp(x) <= iv.hi
        assert iv.hi - iv.lo <= 4 * math.ulp(math.exp(x))


def test_even_power_of_straddling_interval():
    iv = Interval(-2.0, 1.0).pow_int(2)
    assert iv.lo == 0.0 and iv.hi >= 4.0


def test_dyadic_rounding():
    x = Fraction(1, 3)
    assert round_down(x, 8) <= x <= round_up(x, 8)
    assert round_down(x, 8) == Fraction(85, 256)
    assert round_up(-x, 8) == Fraction(-85, 256)


def test_exp_bounds_tightness_and_soundness():
    cases = [
        Fraction(0),
        Fraction(1),
        Fraction(-1),
        Fraction(5, 2),
        Fraction(-7, 3),
        Fraction(1, 1000),
        Fraction(8),
    ]
    for q in cases:
        lo, hi = exp_bounds(q)
        assert lo <= hi
        approx = Fraction(math.exp(float(q)))
        # libm's value must sit within a couple of float ulps of the enclosure
        slack = Fraction(4 * math.ulp(math.exp(float(q))))
        assert lo - slack <= approx <= hi + slack
        assert hi - lo <= abs(hi) * Fraction(1, 2**52)
    assert exp_bounds(Fraction(0)) == (1, 1)


def test_rat_interval_ops_enclose():
    rng = random.Random(42)
    for _ in range(200):
        a = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        ia = RatInterval.exact_point(a)
        ib = RatInterval.exact_point(b)
        s = ia + ib
        assert s.lo <= a + b <= s.hi
        m = ia * ib
        assert m.lo <= a * b <= m.hi
        p2 = ia.pow_int(2)
        assert p2.lo <= a * a <= p2.hi


def test_rat_interval_exp_monotone():
    iv = RatInterval(Fraction(0), Fraction(1), exact=True).exp()
    assert iv.lo <= 1 <= iv.hi
    e = Fraction(math.e)
    assert iv.hi >= e - Fraction(1, 10**9)


def test_box_helpers():
    box = Box.from_bounds([(0.0, 1.0), (-1.0, 1.0)])
    assert box.dimension == 2
    inner = Box.from_bounds([(0.25, 0.5), (0.0, 0.5)])
    assert box.contains_box(inner)
    assert not inner.contains_box(box)
