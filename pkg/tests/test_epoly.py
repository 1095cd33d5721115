"""Canonical exponential polynomials: expansion, ring laws, restriction."""

import random
from fractions import Fraction

import pytest

from expalg.epoly import EPoly
from expalg.errors import DimensionError, HyperplaneError
from expalg.hyperplanes import Hyperplane
from expalg.parsing import format_epoly, parse_epoly, parse_poly
from expalg.poly import Poly

from util import rand_poly


def test_expand_groups_by_u_exponents():
    f = EPoly.from_poly(parse_poly("x1*u2 + x2*u1 - x1 - x2"))
    spectra = {tuple(map(int, s)): a for s, a in f.terms.items()}
    assert spectra[(0, 1)] == parse_poly("x1", ambient=2)
    assert spectra[(1, 0)] == parse_poly("x2", ambient=2)
    assert spectra[(0, 0)] == parse_poly("-x1 - x2")


def test_expand_pure_polynomial_and_line():
    p = parse_poly("x1^2 - 3")
    f = EPoly.from_poly(p)
    assert f.spectra() == [(Fraction(0),)]
    assert next(iter(f.terms.values())) == p

    f = EPoly.from_poly(parse_poly("2*x1 - u1 + 1"))
    assert format_epoly(f) == "(2*x1 + 1) + (-1)*exp(x1)"


def test_arithmetic_examples():
    f = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    assert (f + (-f)).is_zero()
    square = parse_epoly("exp(x1)") * parse_epoly("exp(x1)")
    assert square == parse_epoly("exp(x1)^2")
    assert square.spectra() == [(Fraction(2),)]


def test_expansion_is_ring_homomorphism():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.choice([1, 2])
        p, q = rand_poly(rng, n), rand_poly(rng, n)
        assert EPoly.from_poly(p + q) == EPoly.from_poly(p) + EPoly.from_poly(q)
        assert EPoly.from_poly(p * q) == EPoly.from_poly(p) * EPoly.from_poly(q)


def test_expansion_is_faithful():
    rng = random.Random(12)
    for _ in range(60):
        p = rand_poly(rng, rng.choice([1, 2]))
        assert EPoly.from_poly(p).is_zero() == p.is_zero()


def test_derivative_examples():
    f = parse_epoly("2*x1 + 1 - exp(x1)")
    assert f.derivative(1) == parse_epoly("2 - exp(x1)")
    assert EPoly.zero(2).derivative(1).is_zero()
    g = parse_epoly("x1*exp(x2)")
    assert g.derivative(1) == parse_epoly("exp(x2)", ambient=2)


def test_derivative_linearity_and_leibniz():
    rng = random.Random(13)
    for _ in range(25):
        n = rng.choice([1, 2])
        f = EPoly.from_poly(rand_poly(rng, n))
        g = EPoly.from_poly(rand_poly(rng, n))
        i = rng.randint(1, n)
        assert (f + g).derivative(i) == f.derivative(i) + g.derivative(i)
        assert (f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i)


def test_derivative_matches_finite_differences():
    f = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    df = f.derivative(1)
    h = 1e-6
    rng = random.Random(14)
    for _ in range(20):
        x = [rng.uniform(-2, 2), rng.uniform(-2, 2)]
        fd = (f.eval_float([x[0] + h, x[1]]) - f.eval_float([x[0] - h, x[1]])) / (2 * h)
        exact = df.eval_float(x)
        assert abs(fd - exact) <= 1e-5 * max(1.0, abs(exact))


def test_restriction_worked_examples():
    f = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    assert f.restrict(Hyperplane((1, 0))).is_zero()
    assert f.restrict(Hyperplane((0, 1))).is_zero()
    diag = f.restrict(Hyperplane((1, -1)))
    assert diag == parse_epoly("2*x1*exp(x1) - 2*x1", ambient=1)

    umbrella = parse_poly(
        "(x1 + u1 - 1)*((2*x1 - u1 + 1)^2 + x2^2) + (2*x1 - u1 + 1)^3"
    )
    assert EPoly.from_poly(umbrella).restrict(Hyperplane((1, 0))).is_zero()


def test_restriction_introduces_rational_spectra():
    f = parse_epoly("exp(x1)", ambient=2)
    r = f.restrict(Hyperplane((2, -1)))
    # pivot is x1 (|2| > |-1|): spectrum 1 maps to 1 * 1/2 on the survivor.
    assert r.spectra() == [(Fraction(1, 2),)]


def test_restriction_is_ring_compatible():
    rng = random.Random(15)
    m = Hyperplane((1, -2))
    for _ in range(20):
        f = EPoly.from_poly(rand_poly(rng, 2))
        g = EPoly.from_poly(rand_poly(rng, 2))
        assert (f + g).restrict(m) == f.restrict(m) + g.restrict(m)
        assert (f * g).restrict(m) == f.restrict(m) * g.restrict(m)


def _embed_on_hyperplane(m: Hyperplane, xs: list[float]) -> list[float]:
    n = m.dimension
    normal = m.normal
    pivot = max(range(n), key=lambda j: (abs(normal[j]), -j))
    rest = [j for j in range(n) if j != pivot]
    full = [0.0] * n
    for value, j in zip(xs, rest):
        full[j] = value
    full[pivot] = -sum(normal[j] * full[j] for j in rest) / normal[pivot]
    return full


def test_restriction_agrees_numerically_with_embedding():
    rng = random.Random(16)
    hyperplanes = [Hyperplane((1, 0)), Hyperplane((1, -1)), Hyperplane((2, 3))]
    for _ in range(10):
        f = EPoly.from_poly(rand_poly(rng, 2))
        for m in hyperplanes:
            r = f.restrict(m)
            for _ in range(20):
                xs = [rng.uniform(-2, 2)]
                inside = f.eval_float(_embed_on_hyperplane(m, xs))
                restricted = r.eval_float(xs)
                scale = max(1.0, abs(inside), abs(restricted))
                assert abs(inside - restricted) <= 1e-9 * scale


def test_identically_zero_evaluates_to_zero():
    rng = random.Random(17)
    p = rand_poly(rng, 2)
    z = EPoly.from_poly(p) - EPoly.from_poly(p)
    assert z.is_zero()
    f = parse_epoly("x1*exp(x2) + x2*exp(x1) - x1 - x2")
    r = f.restrict(Hyperplane((1, 0)))
    assert r.is_zero()
    for _ in range(100):
        x = [rng.uniform(-3, 3)]
        assert abs(r.eval_float(x)) <= 1e-9
    # exact rational evaluation through grouped values: empty exactly on zeros
    assert f.coefficient_groups([Fraction(1), Fraction(2)]) != {}
    assert f.coefficient_groups([Fraction(0), Fraction(2)]) == {}  # on the axis
    assert r.coefficient_groups([Fraction(1, 3)]) == {}


def test_u_variables_rejected_in_coefficients():
    with pytest.raises(ValueError):
        EPoly(1, {(Fraction(0),): Poly.u_var(1, 1)})


def test_restrict_dimension_checks():
    f = parse_epoly("exp(x1)")
    with pytest.raises(DimensionError):
        f.restrict(Hyperplane((1, 0)))
    with pytest.raises(HyperplaneError):
        Hyperplane((0, 0))
