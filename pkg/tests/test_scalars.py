"""Property tests for the exact scalar types."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from celltower.scalars import (
    LaurentPoly,
    RationalFunction,
    ScalarDomain,
    evaluate_at,
    format_scalar,
)

coeffs = st.fractions(
    min_value=-20, max_value=20, max_denominator=6
)


@st.composite
def laurent(draw, param="q"):
    entries = draw(
        st.dictionaries(st.integers(min_value=-4, max_value=4), coeffs, max_size=4)
    )
    return LaurentPoly(param, entries)


@st.composite
def ratfun(draw, param="q"):
    num = draw(laurent(param))
    den = draw(laurent(param).filter(lambda p: not p.is_zero()))
    return RationalFunction(num, den)


@given(laurent(), laurent(), laurent())
def test_laurent_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.const("q", 0)


@given(laurent(), st.fractions(min_value=1, max_value=5, max_denominator=3))
def test_laurent_evaluation_is_a_homomorphism(a, point):
    b = LaurentPoly.gen("q") + LaurentPoly.const("q", 1)
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@settings(deadline=None)
@given(ratfun(), ratfun(), ratfun())
def test_rational_function_field_laws(a, b, c):
    zero = RationalFunction.const("q", 0)
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert a - a == zero
    if not b.is_zero():
        assert (a / b) * b == a


@given(ratfun())
def test_rational_function_inverse(a):
    one = RationalFunction.const("q", 1)
    if not a.is_zero():
        assert a * a.inverse() == one


@given(ratfun())
def test_normal_form_is_canonical(a):
    # Equal values hash equally: scale numerator and denominator together.
    two = LaurentPoly.const("q", 2)
    b = RationalFunction(a.num * two, a.den * two)
    assert a == b
    assert hash(a) == hash(b)


def test_domain_coercion_and_formatting():
    dom = ScalarDomain("q")
    q = RationalFunction.gen("q")
    assert dom(2) == q * q.inverse() + dom(1)
    assert format_scalar(dom(Fraction(3, 2))) == "3/2"
    assert format_scalar(q + dom(1)) == "q + 1"
    assert evaluate_at(q + dom(1), Fraction(3)) == 4
    assert evaluate_at(Fraction(5, 2), Fraction(3)) == Fraction(5, 2)


def test_pole_detection():
    q = RationalFunction.gen("q")
    one = RationalFunction.const("q", 1)
    f = one / (q - one)
    try:
        f.evaluate(Fraction(1))
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("expected a pole at 1")
