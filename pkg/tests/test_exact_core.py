"""Polynomial kernel: construction, arithmetic, rendering, evaluation."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qboole import LAM, ONE, Q, VARIABLES, X, ZERO, MultiPoly, poly_add, poly_eval, poly_mul, poly_substitute

HALF = Fraction(1, 2)

# Bl_2 as a raw term map; used as the standing example all over this file.
BL2 = X**2 - X * LAM - X * Q + LAM * Q * HALF


class TestConstruction:
    def test_zero_and_const(self):
        assert MultiPoly.zero().is_zero()
        assert MultiPoly.const(0) == ZERO
        assert MultiPoly.const(Fraction(3, 4)).constant_value() == Fraction(3, 4)

    def test_variable(self):
        assert MultiPoly.variable("x") == X
        assert MultiPoly.variable("lambda") == LAM
        assert MultiPoly.variable("q") == Q

    def test_unknown_variable_rejected(self):
        with pytest.raises(ValueError, match="unknown variable"):
            MultiPoly.variable("y")

    def test_bad_exponent_triple_rejected(self):
        with pytest.raises(ValueError, match="bad exponent"):
            MultiPoly({(1, 2): 1})
        with pytest.raises(ValueError, match="bad exponent"):
            MultiPoly({(1, -1, 0): 1})

    def test_zero_coefficients_dropped(self):
        assert MultiPoly({(1, 0, 0): 0, (0, 0, 0): 2}) == MultiPoly.const(2)

    def test_variables_and_degrees(self):
        assert BL2.variables() == {"x", "lambda", "q"}
        assert BL2.degree("x") == 2
        assert BL2.degree("q") == 1
        assert BL2.total_degree() == 2
        assert ZERO.total_degree() == -1
        assert ZERO.degree("x") == -1

    def test_coefficient_extraction(self):
        assert BL2.coefficient("x", 2) == ONE
        assert BL2.coefficient("x", 1) == -(LAM + Q)
        assert BL2.coefficient("x", 0) == LAM * Q * HALF
        assert BL2.coefficient("q", 2) == ZERO

    def test_constant_value_requires_constant(self):
        with pytest.raises(ValueError, match="not constant"):
            X.constant_value()


class TestArithmetic:
    def test_sum_and_product(self):
        assert (X + LAM) * (X - LAM) == X**2 - LAM**2
        assert poly_add(X, LAM) == X + LAM
        assert poly_mul(X + 1, X - 1) == X**2 - 1

    def test_scalar_coercion_both_sides(self):
        assert 2 * X == X * 2
        assert 1 - X == -(X - 1)
        assert X + Fraction(1, 3) == Fraction(1, 3) + X

    def test_division_by_scalar(self):
        assert (X * 2) / 2 == X
        assert X / Fraction(1, 2) == 2 * X
        with pytest.raises(ZeroDivisionError):
            X / 0

    def test_division_by_polynomial_unsupported(self):
        with pytest.raises(TypeError):
            X / LAM  # type: ignore[operator]

    def test_power(self):
        assert (X + 1) ** 0 == ONE
        assert (X + 1) ** 2 == X**2 + 2 * X + 1
        assert (X - LAM) ** 3 == X**3 - 3 * X**2 * LAM + 3 * X * LAM**2 - LAM**3

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError, match="non-negative"):
            X ** (-1)


class TestRendering:
    def test_zero(self):
        assert str(ZERO) == "0"

    def test_simple_terms(self):
        assert str(X) == "x"
        assert str(-X) == "-x"
        assert str(MultiPoly.const(Fraction(-3, 4))) == "-3/4"
        assert str(X + 1) == "x + 1"

    def test_canonical_ordering_and_syntax(self):
        assert str(BL2) == "x^2 - x*lambda - x*q + 1/2*lambda*q"
        assert str(LAM * Q * HALF) == "1/2*lambda*q"
        assert str(X**3 + X * LAM * Q) == "x^3 + x*lambda*q"

    def test_graded_order_puts_higher_total_degree_first(self):
        assert str(LAM**2 + X) == "lambda^2 + x"

    def test_latex(self):
        assert (LAM * Q * HALF).to_latex() == "\\frac{1}{2} \\lambda q"
        assert (X**2).to_latex() == "x^{2}"
        assert ZERO.to_latex() == "0"
        assert (X - LAM).to_latex() == "x - \\lambda"

    def test_repr_round_trip_text(self):
        assert repr(X - 1) == "MultiPoly(x - 1)"


class TestEvaluate:
    def test_family_value_at_ones(self):
        # the degree-2 first-kind value collapses to -1/2 at x = lambda = q = 1
        assert BL2.evaluate({"x": 1, "lambda": 1, "q": 1}) == Fraction(-1, 2)

    def test_rational_point(self):
        p = X * LAM - Q
        at = {"x": Fraction(1, 2), "lambda": Fraction(2, 3), "q": Fraction(1, 6)}
        assert p.evaluate(at) == Fraction(1, 6)

    def test_missing_variable_named(self):
        with pytest.raises(ValueError, match="no value assigned for variable 'lambda'"):
            (X + LAM).evaluate({"x": 1})

    def test_extra_assignment_ignored(self):
        assert X.evaluate({"x": 5, "lambda": 7, "q": 9}) == 5

    def test_unknown_assignment_name_rejected(self):
        with pytest.raises(ValueError, match="unknown variable"):
            X.evaluate({"x": 1, "t": 2})

    def test_poly_eval_alias(self):
        assert poly_eval(Q**2, {"q": 3}) == 9


class TestSubstitute:
    def test_polynomial_substitution(self):
        assert (X**2).substitute("x", X + 1) == X**2 + 2 * X + 1
        assert (X * LAM).substitute("lambda", X) == X**2

    def test_absent_variable_unchanged(self):
        assert (X + 1).substitute("q", LAM) == X + 1

    def test_substitute_to_zero(self):
        assert (X + LAM).substitute("x", ZERO) == LAM

    def test_poly_substitute_alias(self):
        assert poly_substitute(X + Q, "q", ONE) == X + 1


# -- property-based checks -------------------------------------------------


def polys() -> st.SearchStrategy[MultiPoly]:
    exponents = st.tuples(
        st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)
    )
    coefficients = st.fractions(
        min_value=Fraction(-5), max_value=Fraction(5), max_denominator=12
    )
    return st.dictionaries(exponents, coefficients, max_size=8).map(MultiPoly)


def points() -> st.SearchStrategy[dict[str, Fraction]]:
    coordinate = st.fractions(
        min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
    )
    return st.fixed_dictionaries({name: coordinate for name in VARIABLES})


@settings(deadline=None)
@given(a=polys(), b=polys(), c=polys())
def test_ring_axioms(a: MultiPoly, b: MultiPoly, c: MultiPoly):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a + (-a) == ZERO


@settings(deadline=None)
@given(a=polys())
def test_canonical_form_idempotent(a: MultiPoly):
    rebuilt = MultiPoly(a.terms())
    assert rebuilt == a
    assert str(rebuilt) == str(a)
    assert hash(rebuilt) == hash(a)
    # no zero coefficients survive canonicalization
    assert all(coeff for coeff in a.terms().values())


@settings(deadline=None)
@given(a=polys(), b=polys(), at=points())
def test_evaluation_is_a_ring_homomorphism(a: MultiPoly, b: MultiPoly, at: dict[str, Fraction]):
    assert (a + b).evaluate(at) == a.evaluate(at) + b.evaluate(at)
    assert (a * b).evaluate(at) == a.evaluate(at) * b.evaluate(at)


@settings(deadline=None)
@given(a=polys(), b=polys(), at=points())
def test_substitution_commutes_with_evaluation(a: MultiPoly, b: MultiPoly, at: dict[str, Fraction]):
    composed = a.substitute("x", b)
    shifted = dict(at)
    shifted["x"] = b.evaluate(at)
    assert composed.evaluate(at) == a.evaluate(shifted)
