"""Exact scalar arithmetic, canonical form, parsing and evaluation."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieb.scalars import (
    Assumption,
    DivisionByZero,
    EvalSingular,
    ExpressionError,
    Polynomial,
    Scalar,
    covered_by_assumptions,
    parse_scalar,
)


def sc(text: str) -> Scalar:
    return parse_scalar(text)


# -- polynomial / scalar strategies for property tests -----------------------

_PARAMS = ("k1", "k2", "lambda")


@st.composite
def polynomials(draw) -> Polynomial:
    terms = draw(st.lists(
        st.tuples(
            st.lists(st.sampled_from(_PARAMS), max_size=3),
            st.integers(min_value=-9, max_value=9),
        ),
        max_size=5,
    ))
    total = Polynomial()
    for names, coeff in terms:
        mono = Polynomial.integer(coeff)
        for name in names:
            mono = mono * Polynomial.variable(name)
        total = total + mono
    return total


@st.composite
def scalars(draw) -> Scalar:
    num = draw(polynomials())
    den = draw(polynomials().filter(lambda p: not p.is_zero()))
    return Scalar(num, den)


# -- basic arithmetic ---------------------------------------------------------

def test_rational_addition():
    assert sc("1/2") + sc("1/3") == sc("5/6")


def test_parameter_cancellation():
    value = sc("k1") - sc("k1")
    assert value.is_zero()
    assert not value.num.terms


def test_family_entry_cross_multiplied_equality():
    entry = sc("(k9-k1)*(k5-k9)/(4*k3)")
    # equality must hold against the form with cleared denominator
    assert entry * sc("4*k3") == sc("(k9-k1)*(k5-k9)")
    assert str(entry) == "(-k1*k5 + k1*k9 + k5*k9 - k9^2)/(4*k3)"


def test_division_by_zero_scalar():
    with pytest.raises(DivisionByZero):
        sc("1") / (sc("k1") - sc("k1"))


def test_is_zero_ignores_certifying_assumptions():
    value = sc("k3*(k5-k5)/k3")
    assert value.is_zero([Assumption(Polynomial.variable("k3"))])
    assert value.is_zero()
    assert not sc("lambda*kappa").is_zero()


def test_canonical_form_idempotent():
    raw = Scalar(Polynomial.integer(2) * Polynomial.variable("k1"),
                 Polynomial.integer(-4))
    again = Scalar(raw.num, raw.den)
    assert raw.num == again.num and raw.den == again.den
    assert str(raw) == "(-k1)/(2)"
    assert raw == sc("-k1/2")


def test_denominator_sign_normalised():
    value = Scalar(Polynomial.variable("k1"), Polynomial.integer(-3))
    assert value.den.leading_coefficient() > 0


@given(a=scalars(), b=scalars(), c=scalars())
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + (b + c) == (a + b) + c
    assert a - a == Scalar.from_int(0)


@given(a=scalars(), b=scalars())
@settings(max_examples=60, deadline=None)
def test_cross_multiplication_equality(a, b):
    # a/bden == c/d iff ad - cb == 0; here: a == b iff their difference is zero
    assert (a == b) == (a - b).is_zero()


@given(a=scalars(), b=scalars())
@settings(max_examples=40, deadline=None)
def test_eval_is_multiplicative(a, b):
    point = {name: Fraction(idx + 2, 3) for idx, name in enumerate(_PARAMS)}
    try:
        lhs = (a * b).evaluate(point)
        rhs = a.evaluate(point) * b.evaluate(point)
    except EvalSingular:
        return
    assert lhs == rhs


def test_eval_examples():
    assert sc("2*lambda*kappa").evaluate({"lambda": Fraction(1, 2), "kappa": Fraction(3)}) == 3
    with pytest.raises(EvalSingular):
        sc("1/k3").evaluate({"k3": Fraction(0)})
    point = {"k1": Fraction(0), "k5": Fraction(1), "k9": Fraction(1), "k3": Fraction(7)}
    assert sc("(k9-k1)*(k5-k9)/(4*k3)").evaluate(point) == 0


def test_substitute_symbolic():
    bound = sc("k2 + k5").substitute({"k2": sc("-lambda*kappa"), "k5": sc("2*lambda*kappa")})
    assert bound == sc("lambda*kappa")
    with pytest.raises(DivisionByZero):
        sc("1/k3").substitute({"k3": Scalar.from_int(0)})


# -- the coefficient grammar ---------------------------------------------------

def test_parse_whitespace_insensitive():
    assert sc(" ( k9-k1 ) * ( k5\t- k9 ) / (4*k3)") == sc("(k9-k1)*(k5-k9)/(4*k3)")


def test_parse_powers_and_unary():
    assert sc("-k1^2") == -(sc("k1") * sc("k1"))
    assert sc("2^3") == sc("8")
    assert sc("+k1") == sc("k1")


def test_parse_rejects_unknown_parameter_when_restricted():
    with pytest.raises(ExpressionError):
        parse_scalar("k1 + zeta", allowed=("k1",))


def test_parse_error_positions():
    with pytest.raises(ExpressionError) as err:
        parse_scalar("k1 + ")
    assert err.value.pos == 5
    with pytest.raises(ExpressionError):
        parse_scalar("k1 ~ k2")
    with pytest.raises(ExpressionError):
        parse_scalar("(k1")
    with pytest.raises(ExpressionError):
        parse_scalar("k1 k2")


@given(a=scalars())
@settings(max_examples=60, deadline=None)
def test_print_parse_round_trip(a):
    assert parse_scalar(str(a)) == a


# -- assumptions ---------------------------------------------------------------

def test_assumption_rejects_zero():
    with pytest.raises(ValueError):
        Assumption(Polynomial())


def test_assumption_normalised():
    a = Assumption(Polynomial.integer(-4) * Polynomial.variable("k3"))
    assert str(a) == "k3 != 0"


def test_covered_by_assumptions():
    k3 = Assumption(Polynomial.variable("k3"))
    k7 = Assumption(Polynomial.variable("k7"))
    four_k3 = sc("4*k3").num
    assert covered_by_assumptions(four_k3, [k3]) == [k3]
    k7_sq = sc("16*k7^2").num
    assert covered_by_assumptions(k7_sq, [k7]) == [k7]
    assert covered_by_assumptions(sc("k3*k7").num, [k3, k7]) == [k3, k7]
    assert covered_by_assumptions(sc("k3 + 1").num, [k3]) is None
    assert covered_by_assumptions(sc("7").num, []) == []
