"""Classification drivers and the irreducibility oracle."""

import random

import pytest

from expalg.classify import (
    _specialize_to_line,
    classify_codim1,
    classify_single_exp,
    irreducibility_oracle,
)
from expalg.errors import DriverError, HypothesisViolation
from expalg.factor import factor_dense
from expalg.parsing import format_poly, parse_poly


UMBRELLA = "(x1 + u1 - 1)*((2*x1 - u1 + 1)^2 + x2^2) + (2*x1 - u1 + 1)^3"


def test_oracle_linear_is_irreducible():
    v = irreducibility_oracle(parse_poly("2*x1 - u1 + 1"))
    assert v.status == "Irreducible"


def test_oracle_axes_polynomial_irreducible_with_recheckable_witness():
    p = parse_poly("x1*u2 + x2*u1 - x1 - x2")
    v = irreducibility_oracle(p)
    assert v.status == "Irreducible" and v.line is not None
    a, b = v.line
    image = _specialize_to_line(p, list(a), list(b))
    assert len(image) - 1 == p.total_degree()
    _, factors = factor_dense(image)
    nontrivial = [(f, m) for f, m in factors if len(f) > 1]
    assert len(nontrivial) == 1 and nontrivial[0][1] == 1


def test_oracle_difference_of_squares_reducible_with_exact_divisor():
    p = parse_poly("x1^2 - u1^2")
    v = irreducibility_oracle(p)
    assert v.status == "Reducible" and v.factor is not None
    from expalg.classify import _trial_divide

    quo = _trial_divide(p, v.factor)
    assert quo is not None and quo * v.factor == p


def test_oracle_detects_common_variable_and_powers():
    v = irreducibility_oracle(parse_poly("x1*u1 + x1^2"))
    assert v.status == "Reducible" and format_poly(v.factor) == "x1"
    square = parse_poly("x1^2 + 2*x1*u1 + u1^2")  # (x1 + u1)^2
    v = irreducibility_oracle(square)
    assert v.status == "Reducible" and v.factor * v.factor == square
    v = irreducibility_oracle(parse_poly("x1^2*u2"))
    assert v.status == "Reducible"


def test_oracle_rejects_constants():
    with pytest.raises(HypothesisViolation):
        irreducibility_oracle(parse_poly("5"))


def test_classify_axes_pair():
    rep = classify_codim1(parse_poly("x1*u2 + x2*u1 - x1 - x2"))
    assert rep.verdict == "HyperplaneComponents"
    assert [c.hyperplane.normal for c in rep.hyperplanes] == [(0, 1), (1, 0)]
    assert [c.hyperplane.normal for c in rep.rejected] == [(1, -1)]
    assert rep.conditionality == "ConditionalOnSchanuel"
    statuses = {h.name: h.status for h in rep.hypothesis_log}
    assert statuses["Z(p) irreducible"] == "verified"
    assert statuses["dim Z(f) = n-1"] == "supported"


def test_certified_hyperplanes_vanish_numerically_and_come_from_candidates():
    from expalg.epoly import EPoly
    from expalg.hyperplanes import candidate_hyperplanes
    from util import embed_on_hyperplane

    rng = random.Random(81)
    for text in ["x1*u2 + x2*u1 - x1 - x2", UMBRELLA, "x1*u1 - x1*u2"]:
        p = parse_poly(text, ambient=2)
        f = EPoly.from_poly(p)
        rep = classify_codim1(p)
        candidates = set(candidate_hyperplanes(p).hyperplanes)
        for cert in rep.hyperplanes:
            assert cert.hyperplane in candidates  # nothing outside the family
            assert f.restrict(cert.hyperplane).is_zero()
            for _ in range(50):
                xs = [rng.uniform(-3.0, 3.0)]
                point = embed_on_hyperplane(cert.hyperplane.normal, xs)
                if all(abs(v) <= 3.0 for v in point):
                    assert abs(f.eval_float(point)) <= 1e-9


def test_classify_two_point_line():
    rep = classify_codim1(parse_poly("2*x1 - u1 + 1"))
    assert rep.verdict == "IrreducibleSet"
    assert rep.conditionality == "Unconditional"
    assert rep.roots is not None and len(rep.roots) == 2
    assert rep.hyperplanes == []


def test_classify_umbrella_single_exponential():
    rep = classify_codim1(parse_poly(UMBRELLA))
    assert rep.verdict == "HyperplaneComponents"
    assert [c.hyperplane.normal for c in rep.hyperplanes] == [(1, 0)]
    assert rep.conditionality == "Unconditional"


def test_classify_asserted_flags_downgrade_conditionality():
    rep = classify_codim1(
        parse_poly("x1*u2 + x2*u1 - x1 - x2"),
        assume_irreducible=True,
        assume_codim1=True,
    )
    assert rep.conditionality == "ConditionalOnAssertedHypotheses"
    assert all(h.status == "asserted" for h in rep.hypothesis_log)
    # certificates themselves are unaffected
    assert [c.hyperplane.normal for c in rep.hyperplanes] == [(0, 1), (1, 0)]


def test_classify_degenerate_single_u_monomial():
    rep = classify_codim1(parse_poly("x1*u1"))
    assert rep.degenerate
    assert rep.verdict == "IrreducibleSet"
    assert rep.conditionality == "Unconditional"
    assert any("never vanishes" in note for note in rep.notes)

    rep = classify_codim1(parse_poly("u1"))
    assert rep.degenerate and rep.verdict == "Inconclusive"
    assert "empty" in rep.residual


def test_classify_purely_algebraic_input():
    rep = classify_codim1(parse_poly("x1 + x2"))
    assert rep.degenerate
    assert rep.verdict == "IrreducibleSet"
    assert rep.conditionality == "Unconditional"


def test_classify_certified_hyperplane_from_constructed_product():
    # (u1 - u2) * x1 vanishes on x1 = x2 after expansion.
    rep = classify_codim1(parse_poly("x1*u1 - x1*u2"))
    assert any(c.hyperplane.normal == (1, -1) for c in rep.hyperplanes)
    statuses = {h.name: h.status for h in rep.hypothesis_log}
    assert statuses["Z(p) irreducible"] == "failed"
    assert rep.conditionality == "ConditionalOnAssertedHypotheses"


def test_classify_rejects_zero_polynomial():
    with pytest.raises(HypothesisViolation):
        classify_codim1(parse_poly("0"))


def test_classify_reports_are_deterministic():
    a = classify_codim1(parse_poly("x1*u2 + x2*u1 - x1 - x2"), seed=0)
    b = classify_codim1(parse_poly("x1*u2 + x2*u1 - x1 - x2"), seed=0)
    assert a == b


def test_single_exp_shifted_circle_components():
    rep = classify_single_exp(parse_poly("x1^2 + (x2^2 + (u1 - 1)^2 - 1)^2"))
    assert rep.slice_identically_zero is False
    comps = [
        (format_poly(sc.factor), sc.multiplicity)
        for sc in rep.slice_components
        if sc.real_points
    ]
    assert sorted(comps) == [("x2 + 1", 2), ("x2 - 1", 2)]
    assert rep.hyperplanes == []
    assert rep.conditionality == "Unconditional"


def test_single_exp_umbrella_slice_vanishes():
    rep = classify_single_exp(parse_poly(UMBRELLA))
    assert rep.verdict == "HyperplaneComponents"
    assert [c.hyperplane.normal for c in rep.hyperplanes] == [(1, 0)]
    assert rep.slice_identically_zero is True


def test_single_exp_line_reports_roots():
    rep = classify_single_exp(parse_poly("2*x1 - u1 + 1"))
    assert rep.verdict == "IrreducibleSet"
    assert rep.roots is not None and len(rep.roots) == 2


def test_single_exp_rejects_multi_exponential_input():
    with pytest.raises(DriverError):
        classify_single_exp(parse_poly("x1*u2 + x2*u1 - x1 - x2"))
