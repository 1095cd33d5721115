"""Certified numerics: interval evaluation, root isolation, cells, transversality."""

import math
import random
from fractions import Fraction

import pytest

from expalg.epoly import EPoly
from expalg.errors import HypothesisViolation
from expalg.intervals import Box, Interval
from expalg.numeric import (
    RootCert,
    brute_force_sign_scan,
    check_transversality,
    default_root_domain,
    interval_eval,
    isolate_roots_1d,
    sample_zero_cells_2d,
    sign_at_rational,
)
from expalg.parsing import parse_epoly, parse_poly

from util import rand_poly


def test_interval_eval_worked_examples():
    f = parse_epoly("2*x1 + 1 - exp(x1)")
    iv = interval_eval(f, Box.from_bounds([(0.0, 0.0)]), mode="rigorous")
    assert iv.contains(0.0) and iv.width <= 1e-15

    iv = interval_eval(parse_epoly("exp(x1)"), Box.from_bounds([(0.0, 1.0)]))
    assert iv.lo <= 1.0 and iv.hi >= 2.7182818

    f13 = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    iv = interval_eval(f13, Box.from_bounds([(0.9, 1.1), (0.9, 1.1)]))
    assert iv.excludes_zero()
    center = f13.eval_float([1.0, 1.0])
    assert iv.contains(center)
    assert abs(center - (2 * math.e - 2)) < 1e-12


def test_interval_eval_encloses_point_values():
    rng = random.Random(51)
    for trial in range(1000):
        n = rng.choice([1, 2])
        f = EPoly.from_poly(rand_poly(rng, n))
        x = [rng.uniform(-2.0, 2.0) for _ in range(n)]
        value = f.eval_float(x)
        modes = ("fast", "rigorous") if trial < 200 else ("fast",)
        for mode in modes:
            iv = interval_eval(f, Box.from_bounds([(v, v) for v in x]), mode)
            pad = 1e-9 * max(1.0, abs(value))
            assert iv.lo - pad <= value <= iv.hi + pad


def test_interval_eval_overflow_widens_to_infinity():
    f = parse_epoly("exp(x1)")
    iv = interval_eval(f, Box.from_bounds([(0.0, 1000.0)]))
    assert iv.lo <= 1.0 and iv.hi == math.inf


def test_sign_at_rational():
    f = parse_epoly("2*x1 + 1 - exp(x1)")
    assert sign_at_rational(f, [Fraction(0)]) == 0
    assert sign_at_rational(f, [Fraction(1)]) > 0
    assert sign_at_rational(f, [Fraction(2)]) < 0
    assert sign_at_rational(f, [Fraction(5, 4)]) > 0
    assert sign_at_rational(f, [Fraction(63, 50)]) < 0


def test_isolate_roots_two_point_example():
    f = parse_epoly("2*x1 + 1 - exp(x1)")
    certs, leftovers = isolate_roots_1d(f, (-5.0, 5.0), 1e-9)
    assert len(certs) == 2 and not leftovers
    zero, star = certs
    assert zero.enclosure.lo == zero.enclosure.hi == 0.0
    assert zero.kind == "NewtonContraction" and zero.residual_bound == 0.0
    assert 1.25 <= star.enclosure.lo <= star.enclosure.hi <= 1.26
    assert star.enclosure.width <= 1e-9
    assert brute_force_sign_scan(f, (-5.0, 5.0)) == 2


def test_isolate_roots_simple_cases():
    certs, _ = isolate_roots_1d(parse_epoly("exp(x1) - 1"), (-2.0, 2.0), 1e-9)
    assert len(certs) == 1 and certs[0].enclosure.contains(0.0)
    certs, leftovers = isolate_roots_1d(parse_epoly("exp(x1) + 1"), (-10.0, 10.0), 1e-9)
    assert certs == [] and leftovers == []


def test_isolate_roots_reports_tangential_leftovers():
    # (e^x - 1)^2 touches zero at the origin with even multiplicity.
    f = parse_epoly("exp(x1)^2 - 2*exp(x1) + 1")
    certs, leftovers = isolate_roots_1d(f, (-1.0, 1.0), 1e-6)
    assert certs == []
    assert leftovers and any(r.enclosure.contains(0.0) for r in leftovers)
    assert all(r.kind == "UncertifiedTangential" for r in leftovers)


def test_isolate_roots_rejects_zero_function():
    zero = EPoly.zero(1)
    with pytest.raises(HypothesisViolation):
        isolate_roots_1d(zero, (-1.0, 1.0), 1e-9)


def test_root_completeness_against_scan():
    cases = [
        ("2*x1 + 1 - exp(x1)", (-5.0, 5.0)),
        ("exp(x1) - 1", (-2.0, 2.0)),
        ("x1^2 - 1", (-3.0, 3.0)),
        ("(x1 - 1)*exp(x1) + x1", (-4.0, 4.0)),
    ]
    for text, domain in cases:
        f = parse_epoly(text)
        certs, leftovers = isolate_roots_1d(f, domain, 1e-9)
        assert not leftovers, text
        assert brute_force_sign_scan(f, domain) == len(certs), text


def test_default_domain_covers_coefficients():
    f = parse_epoly("2*x1 + 1 - exp(x1)")
    lo, hi = default_root_domain(f)
    assert lo <= -8 and hi >= 8


def test_subdivision_monotonicity():
    f = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    box = Box.from_bounds([(-2.0, 2.0), (-2.0, 2.0)])
    shallow = sample_zero_cells_2d(f, box, 4)
    deep = sample_zero_cells_2d(f, box, 5)
    for cell in deep:
        assert any(parent.contains_box(cell) for parent in shallow)


def test_sample_cells_positive_function_is_empty():
    f = parse_epoly("exp(x1)*exp(x2)", ambient=2)
    assert sample_zero_cells_2d(f, Box.from_bounds([(0.0, 1.0), (0.0, 1.0)]), 3) == []


def test_sample_cells_cover_known_zero_points():
    f = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    box = Box.from_bounds([(-2.0, 2.0), (-2.0, 2.0)])
    cells = sample_zero_cells_2d(f, box, 6)
    # the axes are inside the union of retained cells
    for t in [-1.5, -0.5, 0.25, 1.75]:
        assert any(
            c.intervals[0].contains(t) and c.intervals[1].contains(0.0) for c in cells
        )
        assert any(
            c.intervals[0].contains(0.0) and c.intervals[1].contains(t) for c in cells
        )


def test_transversality_examples_and_scaling_invariance():
    p = parse_poly("2*x1 - u1 + 1")
    f = EPoly.from_poly(p)
    certs, _ = isolate_roots_1d(f, (-5.0, 5.0), 1e-9)
    star = next(c for c in certs if not c.enclosure.contains(0.0))
    rep = check_transversality(p, star, (), 1e-6)
    assert rep.verdict == "Transverse"
    assert rep.jacobian_rank_lower_bound == 2
    # margin is |2 - e^(x*)| = |1 - 2 x*|
    expected = abs(1 - 2 * star.enclosure.mid)
    assert abs(rep.tangency_margin - expected) < 1e-9
    scaled = check_transversality(p.scale(Fraction(7, 2)), star, (), 1e-6)
    assert scaled.verdict == "Transverse"

    zero = next(c for c in certs if c.enclosure.contains(0.0))
    with pytest.raises(HypothesisViolation):
        check_transversality(p, zero, (), 1e-6)


def test_transversality_precondition_on_synthetic_root():
    # u1 - x1 - 1 has its graph intersection exactly at x1 = 0.
    p = parse_poly("u1 - x1 - 1")
    fake = RootCert(Interval(-1e-12, 1e-12), "SignChange", 0.0)
    with pytest.raises(HypothesisViolation):
        check_transversality(p, fake, (), 1e-6)
