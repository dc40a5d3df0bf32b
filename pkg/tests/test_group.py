"""Tests for finite monomial group actions and their residue actions."""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.errors import InfiniteGroup, MalformedPermutation, NotInvariant, NotInvariantFunction
from src.exactvalue import PrimeBasis
from src.group import (
    GroupElement, act, action_new, center_is_fixed, equivariance_check, induced_residue_action,
    invariant_gens_up_to_degree, is_invariant_function, is_invariant_valuation,
    quotient_residue_report, reynolds, rewrite_in_trace, trace_substitute,
)
from src.polyring import Poly, RatFn
from src.residue import ResidueElement, ResidueField, residue_eq
from src.valuation import mval_new
from tests.strategies import bounded_ratfns, examples, invariant_actions, polys

B2 = PrimeBasis.of(2)
B23 = PrimeBasis.of(2, 3)
x = Poly.variable(2, 0)
y = Poly.variable(2, 1)
Y1 = ResidueElement.generator(1, 0)


@pytest.fixture
def swap():
    return action_new(2, [([1, 0], [1, 1])])


@pytest.fixture
def flip():
    """x -> -x."""
    return action_new(2, [([0, 1], [-1, 1])])


@pytest.fixture
def example_a():
    return mval_new(2, B2, [[1, 1]])


def test_group_orders(swap, flip):
    assert swap.order == 2
    assert flip.order == 2
    assert swap.elements[0].is_identity
    assert action_new(2, []).order == 1
    assert action_new(3, [([1, 2, 0], [1, 1, 1]), ([1, 0, 2], [1, 1, 1])]).order == 6


def test_infinite_and_malformed():
    with pytest.raises(InfiniteGroup):
        action_new(1, [([0], [2])], max_order=50)
    with pytest.raises(MalformedPermutation):
        action_new(2, [([0, 0], [1, 1])])
    with pytest.raises(MalformedPermutation):
        action_new(2, [([1, 0], [1, 0])])
    with pytest.raises(MalformedPermutation):
        action_new(2, [([1, 0], [1])])


def test_act(swap):
    sigma = swap.elements[1]
    assert act(sigma, x * x * y) == x * y * y
    assert act(swap.elements[0], x + 3) == x + 3
    assert act(sigma, RatFn(x, y)) == RatFn(y, x)
    tau = GroupElement((1, 0), (Fraction(2), Fraction(1, 3)))
    assert act(tau, x) == 2 * y
    assert act(tau, act(tau.inverse(), x * y + 1)) == x * y + 1


def test_compose_matches_sequential_action():
    s = GroupElement((1, 2, 0), (Fraction(2), Fraction(1), Fraction(-1)))
    t = GroupElement((0, 2, 1), (Fraction(1), Fraction(3), Fraction(1, 2)))
    f = Poly(3, {(2, 1, 0): 1, (0, 1, 3): -2, (0, 0, 0): 5})
    assert s.compose(t).act(f) == s.act(t.act(f))
    assert s.compose(s.inverse()).is_identity


def test_invariant_valuation(swap, flip, example_a):
    assert is_invariant_valuation(swap, example_a)
    assert not is_invariant_valuation(swap, mval_new(2, B23, [[1, 0], [0, 1]]))
    assert is_invariant_valuation(flip, mval_new(2, B23, [[1, 0], [0, 1]]))
    assert center_is_fixed(swap, example_a)


def test_shifted_invariance(swap, flip):
    assert is_invariant_valuation(swap, mval_new(2, B2, [[1, 1]], shift=[1, 1]))
    assert not is_invariant_valuation(swap, mval_new(2, B2, [[1, 1]], shift=[1, 0]))
    assert not is_invariant_valuation(flip, mval_new(2, B2, [[1, 1]], shift=[1, 0]))
    assert not center_is_fixed(flip, mval_new(2, B2, [[1, 1]], shift=[1, 0]))


def test_reynolds(swap):
    assert reynolds(swap, x) == (x + y) * Fraction(1, 2)
    assert reynolds(swap, x * y) == x * y
    assert reynolds(swap, x * x) == (x * x + y * y) * Fraction(1, 2)
    assert reynolds(swap, RatFn(x, y)) == RatFn(x * x + y * y, 2 * x * y)


def test_invariant_generators(swap):
    assert invariant_gens_up_to_degree(swap, 2) == [x + y, x * x + y * y, x * y]
    assert invariant_gens_up_to_degree(action_new(3, []), 1) == [Poly.variable(3, j) for j in range(3)]
    sign = action_new(1, [([0], [-1])])
    assert invariant_gens_up_to_degree(sign, 2) == [Poly.monomial((2,))]
    with pytest.raises(ValueError):
        invariant_gens_up_to_degree(swap, 0)


def test_induced_action(swap, flip, example_a):
    induced = induced_residue_action(swap, example_a)
    assert induced.matrices == ([[1]], [[-1]])
    assert induced.constants == ((Fraction(1),), (Fraction(1),))
    assert residue_eq(induced.apply(1, Y1), Y1 ** -1)
    flipped = induced_residue_action(flip, example_a)
    assert flipped.matrices[1] == [[1]]
    assert flipped.constants[1] == (Fraction(-1),)
    assert residue_eq(flipped.image_of_generator(1, 0), -Y1)
    with pytest.raises(NotInvariant):
        induced_residue_action(swap, mval_new(2, B23, [[1, 0], [0, 1]]))


def test_equivariance(swap, example_a):
    field = ResidueField(example_a)
    assert equivariance_check(swap, example_a, field, RatFn(x * x + y * y, x * y))
    assert equivariance_check(swap, example_a, field, RatFn(x, y))
    trivial = action_new(2, [])
    assert equivariance_check(trivial, example_a, field, RatFn(x + y, y))


def test_quotient_report(swap, example_a):
    field = ResidueField(example_a)
    report = quotient_residue_report(
        swap, example_a, field,
        [RatFn(x * x + y * y, x * y), RatFn((x + y) ** 2, x * y)],
        ['x', 'y'],
    )
    assert report.certified
    first, second = report.entries
    assert first.residue == "Y1 + Y1^-1"
    assert first.in_trace == "t"
    assert second.residue == "Y1 + 2 + Y1^-1"
    assert second.in_trace == "t + 2"
    with pytest.raises(NotInvariantFunction):
        quotient_residue_report(swap, example_a, field, [RatFn(x * y, y * y)], ['x', 'y'])


def test_rewrite_in_trace(example_a):
    field = ResidueField(example_a)
    r = (Y1 ** 2 + ResidueElement.constant(1, 1) + Y1 ** -2) / (Y1 + Y1 ** -1)
    P, Q = rewrite_in_trace(field, r)
    assert residue_eq(trace_substitute(P, Q), r)
    with pytest.raises(NotInvariantFunction):
        rewrite_in_trace(field, Y1)


def _invariant_value_one_functions(G, v, degree):
    """Ratios of equal-value products of invariant generators."""
    gens = invariant_gens_up_to_degree(G, degree)
    products = []
    for k in (1, 2):
        for combo in combinations_with_replacement(range(len(gens)), k):
            f = Poly.one(v.nvars)
            for i in combo:
                f = f * gens[i]
            if f.degree() <= degree:
                products.append(f)
    for f in products:
        for g in products:
            if f != g and v.value(f) == v.value(g):
                yield RatFn(f, g)


def test_swap_residues_rewrite_in_trace(swap, example_a):
    """Every value-one invariant of degree at most 4 has a residue in Q(Y1 + 1/Y1)."""
    field = ResidueField(example_a)
    checked = 0
    for f in _invariant_value_one_functions(swap, example_a, 4):
        assert is_invariant_function(swap, f)
        r = field.residue_of(f)
        P, Q = rewrite_in_trace(field, r)
        assert residue_eq(trace_substitute(P, Q), r)
        checked += 1
    assert checked > 0


@given(invariant_actions().flatmap(lambda case: st.tuples(st.just(case), polys(case[1].nvars, max_degree=3))))
@examples(300)
def test_invariance_preserves_values(data):
    (G, v), f = data
    assert is_invariant_valuation(G, v)
    assert all(v.value(act(sigma, f)) == v.value(f) for sigma in G)


@given(invariant_actions().flatmap(lambda case: st.tuples(st.just(case), polys(case[1].nvars, max_degree=3))))
@examples(200)
def test_reynolds_is_idempotent_projection(data):
    (G, v), f = data
    image = reynolds(G, f)
    assert reynolds(G, image) == image
    assert all(act(sigma, image) == image for sigma in G)


@given(invariant_actions())
@examples(100)
def test_induced_action_is_homomorphism(case):
    G, v = case
    field = ResidueField(v)
    induced = induced_residue_action(G, v, field)
    gens = [field.generator(i) for i in range(field.trdeg)]
    for s in range(G.order):
        for t in range(G.order):
            st_index = induced.index(G.elements[s].compose(G.elements[t]))
            for e in gens:
                assert residue_eq(induced.apply(st_index, e), induced.apply(s, induced.apply(t, e)))


@given(invariant_actions().flatmap(lambda case: st.tuples(st.just(case), bounded_ratfns(case[1]))))
@examples(300)
def test_equivariance_holds(data):
    (G, v), f = data
    assert equivariance_check(G, v, ResidueField(v), f)
