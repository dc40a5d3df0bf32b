"""The residue field of a monomial valuation and the reduction map.

The exponent vectors of value one form a saturated lattice with canonical
basis B_1..B_s (s = n - rational rank). The residue field is the rational
function field k(Y_1..Y_s) with Y_i the class of X^{B_i}. A function of
value one reduces to a quotient of Laurent polynomials in the Y_i read off
from the top forms of its numerator and denominator.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from src.errors import InternalInvariantError, ValueExceedsOne, ZeroPolynomial
from src.expression import format_terms
from src.lattice import LatticeBasis, lattice_coords
from src.models import AbhyankarReport, Ordering
from src.polyring import Poly, RatFn
from src.valuation import MonomialValuation, local_ratfn

Exponent = Tuple[int, ...]


class LaurentPoly:
    """Element of Q[Y_1^+-1, ..., Y_s^+-1] as {integer exponent vector: coefficient}."""

    __slots__ = ('nvars', 'terms')

    def __init__(self, nvars: int, terms: Mapping[Exponent, Fraction] = None):
        self.nvars = nvars
        self.terms: Dict[Exponent, Fraction] = {
            tuple(e): Fraction(c) for e, c in (terms or {}).items() if c
        }

    @classmethod
    def constant(cls, nvars: int, c) -> 'LaurentPoly':
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> 'LaurentPoly':
        return cls(len(exp), {tuple(exp): c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in descending lexicographic order."""
        for exp in sorted(self.terms, reverse=True):
            yield exp, self.terms[exp]

    def __add__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.nvars, terms)

    def __neg__(self) -> 'LaurentPoly':
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: 'LaurentPoly') -> 'LaurentPoly':
        return self + (-other)

    def __mul__(self, other: Union['LaurentPoly', int, Fraction]) -> 'LaurentPoly':
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {dict(self.items())})"


@dataclass(frozen=True, eq=False)
class ResidueElement:
    """Quotient num/den of Laurent polynomials in Y_1..Y_s."""

    num: LaurentPoly
    den: LaurentPoly

    def __post_init__(self):
        if self.den.is_zero:
            raise ZeroPolynomial("zero denominator in residue field")

    @classmethod
    def zero(cls, nvars: int) -> 'ResidueElement':
        return cls(LaurentPoly(nvars), LaurentPoly.constant(nvars, 1))

    @classmethod
    def constant(cls, nvars: int, c) -> 'ResidueElement':
        return cls(LaurentPoly.constant(nvars, c), LaurentPoly.constant(nvars, 1))

    @classmethod
    def generator(cls, nvars: int, i: int, power: int = 1) -> 'ResidueElement':
        exp = [0] * nvars
        exp[i] = power
        return cls(LaurentPoly.monomial(exp), LaurentPoly.constant(nvars, 1))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: 'ResidueElement') -> 'ResidueElement':
        if self.den == other.den:
            return ResidueElement(self.num + other.num, self.den)
        return ResidueElement(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> 'ResidueElement':
        return ResidueElement(-self.num, self.den)

    def __sub__(self, other: 'ResidueElement') -> 'ResidueElement':
        return self + (-other)

    def __mul__(self, other: 'ResidueElement') -> 'ResidueElement':
        return ResidueElement(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: 'ResidueElement') -> 'ResidueElement':
        if other.is_zero:
            raise ZeroPolynomial("division by zero in residue field")
        return ResidueElement(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> 'ResidueElement':
        base = self if k >= 0 else ResidueElement.constant(self.nvars, 1) / self
        result = ResidueElement.constant(self.nvars, 1)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, ResidueElement):
            return NotImplemented
        return residue_eq(self, other)

    __hash__ = None

    def as_laurent(self) -> Optional[LaurentPoly]:
        """num/den as a single Laurent polynomial when den is a monomial."""
        if len(self.den.terms) != 1:
            return None
        (exp, c), = self.den.terms.items()
        inverse = LaurentPoly.monomial([-e for e in exp], 1 / c)
        return self.num * inverse

    def format(self, names: Sequence[str]) -> str:
        laurent = self.as_laurent()
        if laurent is not None:
            return format_laurent(laurent, names)
        return f"({format_laurent(self.num, names)})/({format_laurent(self.den, names)})"

    def __str__(self) -> str:
        return self.format([f"Y{i + 1}" for i in range(self.nvars)])


def residue_eq(a: ResidueElement, b: ResidueElement) -> bool:
    """Equality in k(Y) by cross-multiplication in the Laurent ring."""
    return a.num * b.den == b.num * a.den


def format_laurent(p: LaurentPoly, names: Sequence[str]) -> str:
    """Laurent polynomial with terms in descending lexicographic order."""
    return format_terms(p.items(), names)


class ResidueField:
    """Presentation k(Y_1..Y_s) of the residue field of a monomial valuation."""

    def __init__(self, valuation: MonomialValuation):
        self.valuation = valuation
        self.kernel: LatticeBasis = valuation.kernel()
        self.names = tuple(f"Y{i + 1}" for i in range(len(self.kernel)))

    @property
    def trdeg(self) -> int:
        return len(self.kernel)

    def zero(self) -> ResidueElement:
        return ResidueElement.zero(self.trdeg)

    def one(self) -> ResidueElement:
        return ResidueElement.constant(self.trdeg, 1)

    def generator(self, i: int) -> ResidueElement:
        return ResidueElement.generator(self.trdeg, i)

    def _laurent_of(self, top: Poly, anchor: Exponent) -> LaurentPoly:
        terms: Dict[Exponent, Fraction] = {}
        for exp, c in top.terms():
            diff = tuple(a - b for a, b in zip(exp, anchor))
            coords = lattice_coords(self.kernel, diff)
            if coords is None:
                raise InternalInvariantError(f"exponent difference {diff} is not in the value-one lattice")
            terms[coords] = terms.get(coords, 0) + c
        return LaurentPoly(self.trdeg, terms)

    def residue_of(self, f: Union[RatFn, Poly], anchor: Optional[Sequence[int]] = None) -> ResidueElement:
        """Reduction of f, which must have value at most one.

        anchor selects the exponent of the denominator's top form that
        normalizes the quotient; by default the lexicographically smallest.
        """
        v = self.valuation
        f = local_ratfn(v, RatFn.of(f))
        g_value = v._local_value(f.num)
        h_value = v._local_value(f.den)
        order = g_value.compare(h_value)
        if order is Ordering.GT:
            raise ValueExceedsOne(f"value {g_value / h_value} is greater than one")
        if order is Ordering.LT:
            return self.zero()
        g_top = v.local_top_form(f.num)
        h_top = v.local_top_form(f.den)
        if anchor is None:
            anchor = h_top.exponents()[0]
        elif tuple(anchor) not in h_top.exponents():
            raise ValueError(f"anchor {tuple(anchor)} is not a top exponent of the denominator")
        anchor = tuple(anchor)
        return ResidueElement(self._laurent_of(g_top, anchor), self._laurent_of(h_top, anchor))

    def _exponent(self, coords: Exponent) -> Exponent:
        return self.kernel.combine(coords)

    def lift(self, e: ResidueElement) -> RatFn:
        """A rational function of value one (zero for e = 0) whose residue is e."""
        n = self.valuation.nvars
        if e.is_zero:
            return RatFn(Poly.zero(n))
        num = [(self._exponent(c), a) for c, a in e.num.terms.items()]
        den = [(self._exponent(c), b) for c, b in e.den.terms.items()]
        low = [min(exp[j] for exp, _ in num + den) for j in range(n)]

        def build(terms) -> Poly:
            poly = Poly(n, {tuple(x - m for x, m in zip(exp, low)): c for exp, c in terms})
            return self.valuation.from_local(poly)

        return RatFn(build(num), build(den))

    def generator_lift(self, i: int) -> RatFn:
        """X^{B_i+} / X^{B_i-} in the original coordinates."""
        vector = self.kernel.vectors[i]
        positive = Poly.monomial([max(e, 0) for e in vector])
        negative = Poly.monomial([max(-e, 0) for e in vector])
        return RatFn(self.valuation.from_local(positive), self.valuation.from_local(negative))

    def generator_monomials(self) -> Tuple[Tuple[Exponent, Exponent], ...]:
        """(B_i+, B_i-) per generator, in the valuation's coordinates."""
        return tuple((tuple(max(e, 0) for e in b), tuple(max(-e, 0) for e in b))
                     for b in self.kernel.vectors)

    def abhyankar_check(self) -> AbhyankarReport:
        r = self.valuation.rational_rank()
        return AbhyankarReport(
            rational_rank=r,
            trdeg=self.trdeg,
            nvars=self.valuation.nvars,
            equality=r + self.trdeg == self.valuation.nvars,
        )


def residue_field_desc(v: MonomialValuation) -> ResidueField:
    return ResidueField(v)


def abhyankar_check(v: MonomialValuation) -> AbhyankarReport:
    return ResidueField(v).abhyankar_check()
