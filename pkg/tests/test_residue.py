"""Tests for the residue field presentation and the reduction map."""

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from src.errors import ValueExceedsOne, ZeroPolynomial
from src.exactvalue import PrimeBasis
from src.models import AbhyankarReport
from src.polyring import Poly, RatFn
from src.residue import (
    LaurentPoly, ResidueElement, ResidueField, abhyankar_check, residue_eq, residue_field_desc,
)
from src.valuation import mval_new
from tests.strategies import bounded_ratfns, examples, residue_elements, valuations

B2 = PrimeBasis.of(2)
B23 = PrimeBasis.of(2, 3)
x = Poly.variable(2, 0)
y = Poly.variable(2, 1)


@pytest.fixture
def field_a():
    return ResidueField(mval_new(2, B2, [[1, 1]]))


def Y(power=1):
    return ResidueElement.generator(1, 0, power)


def test_descriptions():
    assert residue_field_desc(mval_new(2, B2, [[1, 1]])).trdeg == 1
    assert residue_field_desc(mval_new(2, B23, [[1, 0], [0, 1]])).trdeg == 0
    three = residue_field_desc(mval_new(3, B2, [[1, 1, 2]]))
    assert three.trdeg == 2
    assert three.names == ('Y1', 'Y2')


def test_residue_examples(field_a):
    assert field_a.residue_of(RatFn(x + y, y)) == Y() + field_a.one()
    assert str(field_a.residue_of(RatFn(x + y, y))) == "Y1 + 1"
    assert field_a.residue_of(RatFn(x * y, x + y)).is_zero
    with pytest.raises(ValueExceedsOne):
        field_a.residue_of(RatFn(x, y * y))
    injective = ResidueField(mval_new(2, B23, [[1, 0], [0, 1]]))
    assert injective.residue_of(RatFn(x + y * y, x)) == injective.one()


def test_residue_of_symmetric_function(field_a):
    r = field_a.residue_of(RatFn(x * x + y * y, x * y))
    assert r == Y() + Y(-1)
    assert r.format(field_a.names) == "Y1 + Y1^-1"
    assert field_a.residue_of(RatFn((x + y) ** 2, x * y)) == Y() + ResidueElement.constant(1, 2) + Y(-1)


def test_anchor_choice(field_a):
    f = RatFn(x * x + 3 * y * y, x * x + x * y)
    default = field_a.residue_of(f)
    assert residue_eq(default, field_a.residue_of(f, anchor=(2, 0)))
    assert residue_eq(default, field_a.residue_of(f, anchor=(1, 1)))
    with pytest.raises(ValueError):
        field_a.residue_of(f, anchor=(0, 2))


def test_lift(field_a):
    assert field_a.lift(Y()) == RatFn(x, y)
    assert field_a.lift(Y() + Y(-1)) == RatFn(x * x + y * y, x * y)
    assert field_a.lift(field_a.zero()).is_zero
    assert field_a.generator_lift(0) == RatFn(x, y)
    assert field_a.generator_monomials() == (((1, 0), (0, 1)),)


def test_residue_eq():
    assert residue_eq(Y() / Y(), ResidueElement.constant(1, 1))
    assert not residue_eq(Y(), Y(-1))
    one = ResidueElement.constant(1, 1)
    assert residue_eq((Y(2) - one) / (Y() - one), Y() + one)


def test_residue_arithmetic():
    one = ResidueElement.constant(1, 1)
    assert Y() * Y(-1) == one
    assert Y() ** -2 == Y(-2)
    assert (Y() + one) - one == Y()
    with pytest.raises(ZeroPolynomial):
        Y() / ResidueElement.zero(1)
    assert LaurentPoly(1, {(1,): 2}) * 3 == LaurentPoly(1, {(1,): 6})


def test_abhyankar():
    assert abhyankar_check(mval_new(2, B2, [[1, 1]])) == AbhyankarReport(1, 1, 2, True)
    assert abhyankar_check(mval_new(2, B23, [[1, 0], [0, 1]])) == AbhyankarReport(2, 0, 2, True)
    assert abhyankar_check(mval_new(2, B2, [[0, 0]])) == AbhyankarReport(0, 2, 2, True)


def test_shifted_residue():
    """Residues are read in the translated coordinates."""
    v = mval_new(2, B2, [[1, 1]], shift=[1, 0])
    field = ResidueField(v)
    assert field.residue_of(RatFn(x - 1, y)) == Y()
    assert field.lift(Y()) == RatFn(x - 1, y)


@given(valuations(max_nvars=3))
@examples(500)
def test_trdeg_is_codimension_of_rank(v):
    field = ResidueField(v)
    assert field.trdeg == v.nvars - v.rational_rank()
    assert field.abhyankar_check().equality
    for b in field.kernel:
        assert v.exponent_value(b).is_one


@st.composite
def field_with_element(draw):
    v = draw(valuations(max_nvars=3))
    field = ResidueField(v)
    assume(field.trdeg > 0)
    return field, draw(residue_elements(field.trdeg))


@given(field_with_element())
@examples(500)
def test_lift_round_trip(case):
    field, e = case
    lifted = field.lift(e)
    if not e.is_zero:
        assert field.valuation.value(lifted).is_one
    assert residue_eq(field.residue_of(lifted), e)


@st.composite
def field_with_pair(draw):
    v = draw(valuations(max_nvars=3))
    return ResidueField(v), draw(bounded_ratfns(v)), draw(bounded_ratfns(v))


@given(field_with_pair())
@examples(500)
def test_residue_is_ring_homomorphism(case):
    field, f, g = case
    rf, rg = field.residue_of(f), field.residue_of(g)
    assert residue_eq(field.residue_of(f * g), rf * rg)
    total = f + g
    if field.valuation.value(total) <= field.valuation.value(Poly.one(total.nvars)):
        assert residue_eq(field.residue_of(total), rf + rg)


@given(field_with_pair())
@examples(200)
def test_residue_representation_independent(case):
    field, f, q = case
    assume(not q.is_zero)
    assert residue_eq(field.residue_of(RatFn(f.num * q.num, f.den * q.num)), field.residue_of(f))


@given(field_with_pair())
@examples(200)
def test_zero_residue_iff_value_below_one(case):
    field, f, _ = case
    below = field.valuation.value(f) < field.valuation.value(Poly.one(f.nvars))
    assert field.residue_of(f).is_zero == below


@given(field_with_pair())
@examples(200)
def test_anchor_independence(case):
    field, f, _ = case
    v = field.valuation
    assume(not f.is_zero and v.value(f).is_one)
    reference = field.residue_of(f)
    for anchor in v.top_form(f.den).exponents():
        assert residue_eq(field.residue_of(f, anchor=anchor), reference)
