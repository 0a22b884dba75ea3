from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfheap.scalars import GF, QQ, FieldSpec, MixedFieldError, Scalar, scalar_arith

PRIMES = [2, 3, 5, 7, 11, 101]

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


def field_and_values(k):
    fields = st.sampled_from([QQ] + [GF(p) for p in PRIMES])

    def values(f):
        if f.is_rational:
            elems = rationals.map(lambda q: Scalar(f, q))
        else:
            elems = st.integers(0, f.p - 1).map(lambda r: Scalar(f, r))
        return st.tuples(*[elems] * k)

    return fields.flatmap(values)


def test_spec_examples():
    assert scalar_arith("add", Scalar.parse(QQ, "1/2"), Scalar.parse(QQ, "1/3")) == Scalar.parse(QQ, "5/6")
    assert scalar_arith("inv", Scalar(GF(7), 3)) == Scalar(GF(7), 5)
    half = scalar_arith("mul", Scalar.parse(QQ, "-2/4"), Scalar(QQ, -1))
    assert str(half) == "1/2"
    assert (half.numerator, half.denominator) == (1, 2)


def test_parse_and_format():
    f = GF(7)
    assert str(Scalar.parse(f, "-1")) == "6"
    assert str(Scalar.parse(f, "1/3")) == "5"
    assert str(Scalar.parse(QQ, "6/3")) == "2"
    assert str(Scalar.parse(QQ, "3/-6")) == "-1/2"
    for bad in ("1/0", "abc", "1.5", ""):
        with pytest.raises((ValueError, ZeroDivisionError)):
            Scalar.parse(QQ, bad)
    with pytest.raises(ZeroDivisionError):
        Scalar.parse(f, "1/7")


def test_field_parsing():
    assert FieldSpec.parse("Q") == QQ
    assert FieldSpec.parse("Fp:7") == GF(7)
    assert FieldSpec.parse("GF(5)") == GF(5)
    for bad in ("Fp:8", "Fp:1", "R"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_mixed_fields_rejected():
    with pytest.raises(MixedFieldError):
        Scalar(QQ, 1) + Scalar(GF(3), 1)
    with pytest.raises(MixedFieldError):
        scalar_arith("mul", Scalar(GF(5), 1), Scalar(GF(7), 1))


def test_zero_not_invertible():
    for f in (QQ, GF(5)):
        with pytest.raises(ZeroDivisionError):
            Scalar(f, 0).inverse()


@given(field_and_values(3))
def test_field_axioms(vals):
    a, b, c = vals
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a + (-a) == Scalar(a.field, 0)
    if not a.is_zero():
        assert a * a.inverse() == Scalar(a.field, 1)


@given(field_and_values(1))
def test_canonical_form_unique(vals):
    (a,) = vals
    # equality is componentwise on canonical raw values
    again = Scalar.parse(a.field, str(a))
    assert again == a and again.value == a.value and type(again.value) is type(a.value)
    if a.field.is_rational:
        q = Fraction(a.numerator, a.denominator)
        assert q.denominator > 0 and a.denominator == q.denominator
    else:
        assert 0 <= a.residue < a.field.p
