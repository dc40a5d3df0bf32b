"""Sparse multivariate polynomials and rational functions over the rationals."""

from fractions import Fraction
from math import comb
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from src.errors import NvarsMismatch, ShapeMismatch, ZeroPolynomial

Exponent = Tuple[int, ...]
Coefficient = Union[int, Fraction]


class Poly:
    """Element of Q[X_1, ..., X_n] stored as {exponent vector: coefficient}.

    Zero coefficients are never stored. Instances are immutable; every
    operation returns a new polynomial.
    """

    __slots__ = ('nvars', '_terms')

    def __init__(self, nvars: int, terms: Mapping[Exponent, Coefficient] = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: Dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ShapeMismatch(f"bad exponent {exp} for {nvars} variables")
            coeff = Fraction(coeff)
            if coeff:
                clean[exp] = coeff
        object.__setattr__(self, 'nvars', nvars)
        object.__setattr__(self, '_terms', clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> 'Poly':
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Coefficient) -> 'Poly':
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> 'Poly':
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, j: int) -> 'Poly':
        exp = [0] * nvars
        exp[j] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: Coefficient = 1) -> 'Poly':
        return cls(len(exp), {tuple(exp): coeff})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self._terms)

    def terms(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Terms in ascending lexicographic order of exponents."""
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def exponents(self) -> Tuple[Exponent, ...]:
        return tuple(sorted(self._terms))

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        return max((sum(exp) for exp in self._terms), default=-1)

    def _check(self, other: 'Poly'):
        if self.nvars != other.nvars:
            raise NvarsMismatch(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> 'Poly':
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            terms[exp] = terms.get(exp, 0) + coeff
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> 'Poly':
        return Poly(self.nvars, {exp: -c for exp, c in self._terms.items()})

    def __sub__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'Poly':
        return (-self) + other

    def __mul__(self, other) -> 'Poly':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                terms[exp] = terms.get(exp, 0) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Poly':
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {dict(self.terms())})"

    def map_terms(self, fn) -> 'Poly':
        """Sum of fn(exp, coeff) over the terms; fn returns a Poly."""
        result = Poly.zero(self.nvars)
        for exp, coeff in self._terms.items():
            result = result + fn(exp, coeff)
        return result

    def restrict(self, exponents) -> 'Poly':
        """Sub-polynomial made of the given exponents."""
        return Poly(self.nvars, {exp: self._terms[exp] for exp in exponents})


class RatFn:
    """Quotient num/den of polynomials, kept unreduced.

    Two rational functions are equal when num1*den2 == num2*den1.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: Poly, den: Poly = None):
        if den is None:
            den = Poly.one(num.nvars)
        if num.nvars != den.nvars:
            raise NvarsMismatch(f"{num.nvars} vs {den.nvars} variables")
        if den.is_zero:
            raise ZeroPolynomial("zero denominator")
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFn is immutable")

    @classmethod
    def of(cls, f: Union['RatFn', Poly]) -> 'RatFn':
        return f if isinstance(f, RatFn) else cls(f)

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _coerce(self, other) -> 'RatFn':
        if isinstance(other, RatFn):
            if other.nvars != self.nvars:
                raise NvarsMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, Poly):
            return RatFn(self.num._coerce(other))
        if isinstance(other, (int, Fraction)):
            return RatFn(Poly.constant(self.nvars, other))
        return NotImplemented

    def __add__(self, other) -> 'RatFn':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> 'RatFn':
        return RatFn(-self.num, self.den)

    def __sub__(self, other) -> 'RatFn':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other) -> 'RatFn':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'RatFn':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise ZeroPolynomial("division by zero")
        return RatFn(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (Poly, int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return ratfn_eq(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RatFn({self.num!r}, {self.den!r})"


def poly_arith(op: str, f: Poly, g: Poly) -> Poly:
    """Apply 'add', 'sub' or 'mul' to two polynomials."""
    f._check(g)
    if op == 'add':
        return f + g
    if op == 'sub':
        return f - g
    if op == 'mul':
        return f * g
    raise ValueError(f"unknown operation: {op}")


def ratfn_eq(a: RatFn, b: RatFn) -> bool:
    """Cross-multiplication test a.num*b.den == b.num*a.den."""
    if a.nvars != b.nvars:
        raise NvarsMismatch(f"{a.nvars} vs {b.nvars} variables")
    return a.num * b.den == b.num * a.den


def shift_coordinates(f: Poly, a: Sequence[Coefficient]) -> Poly:
    """Return g with g(T) = f(T + a)."""
    if len(a) != f.nvars:
        raise ShapeMismatch(f"shift of length {len(a)} for {f.nvars} variables")
    a = [Fraction(c) for c in a]
    if not any(a):
        return f
    n = f.nvars
    # (T_j + a_j)^k expanded once per (j, k)
    cache: Dict[Tuple[int, int], Poly] = {}

    def power(j: int, k: int) -> Poly:
        if (j, k) not in cache:
            terms = {}
            for i in range(k + 1):
                exp = [0] * n
                exp[j] = i
                terms[tuple(exp)] = comb(k, i) * a[j] ** (k - i)
            cache[(j, k)] = Poly(n, terms)
        return cache[(j, k)]

    def expand(exp: Exponent, coeff: Fraction) -> Poly:
        term = Poly.constant(n, coeff)
        for j, k in enumerate(exp):
            if k:
                term = term * power(j, k)
        return term

    return f.map_terms(expand)


def shift_ratfn(f: RatFn, a: Sequence[Coefficient]) -> RatFn:
    return RatFn(shift_coordinates(f.num, a), shift_coordinates(f.den, a))
