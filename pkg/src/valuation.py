"""Monomial valuations on affine n-space over a trivially valued field.

A valuation is given by a weight matrix S over a prime basis: column j
prescribes |X_j| = prod(p_i ** -S[i][j]). The value of a polynomial is the
largest value of its monomials. With a shift a, the valuation is monomial
in the translated coordinates X_j - a_j instead.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple, Union

from src.errors import NoCenter, NvarsMismatch, ShapeMismatch, ZeroPolynomial
from src.exactvalue import PrimeBasis, Value, max_value
from src.lattice import LatticeBasis, hnf, hnf_rank, kernel_basis, rank
from src.models import CenterDesc, Ordering
from src.polyring import Poly, RatFn, shift_coordinates, shift_ratfn

Rational = Union[int, Fraction, str]


@dataclass(frozen=True)
class MonomialValuation:
    """Weights S (rows indexed by basis primes, columns by variables) and an optional shift."""

    nvars: int
    basis: PrimeBasis
    weights: Tuple[Tuple[Fraction, ...], ...]
    shift: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if len(self.weights) != len(self.basis):
            raise ShapeMismatch(f"weights have {len(self.weights)} rows, basis has {len(self.basis)} primes")
        for row in self.weights:
            if len(row) != self.nvars:
                raise ShapeMismatch(f"weight row of length {len(row)} for {self.nvars} variables")
        if self.shift is not None and len(self.shift) != self.nvars:
            raise ShapeMismatch(f"shift of length {len(self.shift)} for {self.nvars} variables")

    @property
    def is_shifted(self) -> bool:
        return self.shift is not None and any(self.shift)

    def exponent_value(self, exp: Sequence[int]) -> Value:
        """|X^I| for an integer (possibly negative) exponent vector I."""
        return Value(self.basis, tuple(
            -sum((w * e for w, e in zip(row, exp)), Fraction(0)) for row in self.weights
        ))

    def variable_value(self, j: int) -> Value:
        exp = [0] * self.nvars
        exp[j] = 1
        return self.exponent_value(exp)

    @property
    def has_center(self) -> bool:
        """True when every |X_j| <= 1."""
        one = Value.one(self.basis)
        return all(self.variable_value(j) <= one for j in range(self.nvars))

    def require_center(self):
        if not self.has_center:
            above = [j + 1 for j in range(self.nvars) if self.variable_value(j) > Value.one(self.basis)]
            raise NoCenter(f"coordinates {above} have value greater than one")

    def to_local(self, f: Poly) -> Poly:
        """Rewrite f in the valuation's coordinates X_j - a_j."""
        if f.nvars != self.nvars:
            raise NvarsMismatch(f"{f.nvars} variables, valuation has {self.nvars}")
        return shift_coordinates(f, self.shift) if self.is_shifted else f

    def from_local(self, f: Poly) -> Poly:
        """Inverse of to_local."""
        return shift_coordinates(f, [-a for a in self.shift]) if self.is_shifted else f

    def _local_value(self, g: Poly) -> Value:
        if g.is_zero:
            return Value.zero(self.basis)
        return max_value(self.exponent_value(exp) for exp in g.exponents())

    def value_of_poly(self, f: Poly) -> Value:
        """max over the terms of |X^I| (Zero for the zero polynomial)."""
        return self._local_value(self.to_local(f))

    def value_of_ratfn(self, f: Union[RatFn, Poly]) -> Value:
        f = RatFn.of(f)
        return self.value_of_poly(f.num) / self.value_of_poly(f.den)

    def value(self, f: Union[RatFn, Poly]) -> Value:
        if isinstance(f, Poly):
            return self.value_of_poly(f)
        return self.value_of_ratfn(f)

    def local_top_form(self, g: Poly) -> Poly:
        """Top form of a polynomial already in local coordinates."""
        if g.is_zero:
            raise ZeroPolynomial("top form of the zero polynomial")
        top = self._local_value(g)
        return g.restrict(exp for exp in g.exponents()
                          if self.exponent_value(exp).compare(top) is Ordering.EQ)

    def top_form(self, f: Poly) -> Poly:
        """Terms of f achieving |f|, written in the valuation's coordinates."""
        return self.local_top_form(self.to_local(f))

    def center(self) -> CenterDesc:
        self.require_center()
        one = Value.one(self.basis)
        below = tuple(j for j in range(self.nvars) if self.variable_value(j) < one)
        equal = tuple(j for j in range(self.nvars) if j not in below)
        return CenterDesc(ideal_vars=below, residue_field_vars=equal)

    def rational_rank(self) -> int:
        return rank(self.weights)

    def kernel(self) -> LatticeBasis:
        """Exponent vectors I with |X^I| = 1."""
        return kernel_basis(self.weights, self.nvars)

    def value_group(self) -> List[Value]:
        """Free basis of the group generated by |X_1|, ..., |X_n|."""
        scale = lcm(*(w.denominator for row in self.weights for w in row))
        columns = [[int(self.weights[i][j] * scale) for i in range(len(self.basis))]
                   for j in range(self.nvars)]
        H, _ = hnf(columns)
        return [Value(self.basis, tuple(Fraction(-e, scale) for e in row))
                for row in H[:hnf_rank(H)]]


def mval_new(nvars: int, basis: PrimeBasis, weights: Sequence[Sequence[Rational]],
             shift: Optional[Sequence[Rational]] = None) -> MonomialValuation:
    """Build a monomial valuation from rational weights."""
    return MonomialValuation(
        nvars=nvars,
        basis=basis,
        weights=tuple(tuple(Fraction(w) for w in row) for row in weights),
        shift=tuple(Fraction(a) for a in shift) if shift is not None else None,
    )


def value_of_ratfn(v: MonomialValuation, f: RatFn) -> Value:
    return v.value_of_ratfn(f)


def local_ratfn(v: MonomialValuation, f: RatFn) -> RatFn:
    """f rewritten in the valuation's coordinates."""
    return shift_ratfn(f, v.shift) if v.is_shifted else f
