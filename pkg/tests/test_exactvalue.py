"""Tests for exact prime-power values."""

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import BasisMismatch, InvalidBasis, ShapeMismatch, ZeroValuePower
from src.exactvalue import (
    PrimeBasis, Value, make_value, max_value, value_approx, value_compare, value_mul, value_pow,
)
from src.models import Ordering
from tests.strategies import examples, prime_bases, rationals, values

B2 = PrimeBasis.of(2)
B23 = PrimeBasis.of(2, 3)


def test_prime_basis_validation():
    """Bases must be nonempty, strictly increasing and prime."""
    with pytest.raises(InvalidBasis):
        PrimeBasis(())
    with pytest.raises(InvalidBasis):
        PrimeBasis.of(3, 2)
    with pytest.raises(InvalidBasis):
        PrimeBasis.of(2, 4)
    assert len(PrimeBasis.of(2, 3, 5)) == 3


def test_make_value_shape():
    assert make_value(B23, ["1/2", 0]).exponents == (Fraction(1, 2), Fraction(0))
    with pytest.raises(ShapeMismatch):
        make_value(B23, [1])


def test_multiplication_and_powers():
    half = make_value(B2, [-1])
    assert value_mul(half, half) == make_value(B2, [-2])
    assert value_pow(make_value(B2, [-2]), Fraction(1, 2)) == half
    assert half * Value.zero(B2) == Value.zero(B2)
    assert (half / half).is_one


def test_zero_powers():
    zero = Value.zero(B2)
    assert zero ** 3 == zero
    with pytest.raises(ZeroValuePower):
        zero ** 0
    with pytest.raises(ZeroValuePower):
        zero.inverse()


def test_compare_exactly():
    """sqrt(2) < cbrt(3), and mixed-sign exponent vectors."""
    assert value_compare(make_value(B23, ["1/2", 0]), make_value(B23, [0, "1/3"])) is Ordering.LT
    assert value_compare(make_value(B23, [1, -1]), Value.one(B23)) is Ordering.LT
    assert value_compare(make_value(B23, [-1, 1]), Value.one(B23)) is Ordering.GT
    assert value_compare(Value.zero(B23), Value.one(B23)) is Ordering.LT
    assert value_compare(Value.zero(B23), Value.zero(B23)) is Ordering.EQ


def test_basis_mismatch():
    with pytest.raises(BasisMismatch):
        Value.one(B2) * Value.one(B23)


def test_approx():
    assert value_approx(make_value(B2, [-2]), 2) == "0.25"
    assert value_approx(Value.zero(B2), 6) == "0"
    assert make_value(B2, ["1/2"]).approx(5) == "1.4142"
    with pytest.raises(ValueError):
        Value.one(B2).approx(0)


def test_str():
    assert str(make_value(B23, ["1/2", -1])) == "2^(1/2)*3^-1"
    assert str(make_value(B2, [1])) == "2"
    assert str(Value.one(B2)) == "1"
    assert str(Value.zero(B2)) == "0"
    assert make_value(B2, [-2]).exponent_strings() == ["-2/1"]


def test_max_value():
    a, b = make_value(B2, [-1]), make_value(B2, [-3])
    assert max_value([b, a, Value.zero(B2)]) == a


@given(prime_bases.flatmap(lambda B: st.tuples(values(B), values(B))))
@examples(1000)
def test_compare_is_total_and_agrees_with_200_digits(pair):
    """Exactly one ordering holds, and it matches a 200-digit evaluation when the gap is visible."""
    a, b = pair
    assert [a < b, a == b, a > b].count(True) == 1
    with mpmath.workdps(200):
        gap = a.to_mpf() - b.to_mpf()
        visible = abs(gap) > mpmath.mpf('1e-50')
        expected = Ordering.GT if gap > 0 else Ordering.LT
    if visible:
        assert a.compare(b) is expected


@given(prime_bases.flatmap(lambda B: st.tuples(
    st.one_of(values(B), st.just(Value.zero(B))),
    st.one_of(values(B), st.just(Value.zero(B))),
    values(B),
)))
@examples(500)
def test_compare_is_invariant_under_scaling(triple):
    a, b, c = triple
    assert value_compare(a * c, b * c) is value_compare(a, b)


def _exponent_vectors(size):
    return st.lists(rationals(max_den=12, min_num=-12, max_num=12), min_size=size, max_size=size)


@given(prime_bases.flatmap(lambda B: st.tuples(st.just(B), _exponent_vectors(len(B)), _exponent_vectors(len(B)))))
@examples(1000)
def test_make_value_is_injective(case):
    """Equal values exactly when the exponent vectors agree."""
    B, e, f = case
    same = value_compare(make_value(B, e), make_value(B, f)) is Ordering.EQ
    assert same == (e == f)
    assert value_compare(make_value(B, e), make_value(B, e)) is Ordering.EQ


@given(prime_bases.flatmap(lambda B: st.tuples(values(B), values(B), rationals())))
@examples(200)
def test_group_laws(triple):
    a, b, q = triple
    assert a * b == b * a
    assert (a * b) / b == a
    assert (a * b) ** q == (a ** q) * (b ** q)


def test_approx_stays_in_plain_decimal():
    """Very large and very small values are not printed in scientific notation."""
    big = make_value(B2, [20]).approx(3)
    small = make_value(B2, [-20]).approx(3)
    assert 'e' not in big and 'e' not in small
    assert big.startswith("1050000")
    assert small.startswith("0.000000954")
