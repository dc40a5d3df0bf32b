"""Exact positive reals of the form prod(p_i ** q_i) with rational q_i.

Logarithms of distinct primes are linearly independent over the rationals,
so two such products are equal exactly when their exponent vectors agree,
and their order is decided by comparing two integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence, Tuple, Union

import mpmath
from sympy import isprime

from src.errors import BasisMismatch, InternalInvariantError, InvalidBasis, ShapeMismatch, ZeroValuePower
from src.models import Ordering

Rational = Union[int, Fraction, str]


@dataclass(frozen=True)
class PrimeBasis:
    """Ascending list of distinct primes."""

    primes: Tuple[int, ...]

    def __post_init__(self):
        if not self.primes:
            raise InvalidBasis("prime basis must be nonempty")
        for prev, cur in zip(self.primes, self.primes[1:]):
            if cur <= prev:
                raise InvalidBasis(f"primes must be strictly increasing: {self.primes}")
        for p in self.primes:
            if not isinstance(p, int) or not isprime(p):
                raise InvalidBasis(f"{p} is not prime")

    @classmethod
    def of(cls, *primes: int) -> 'PrimeBasis':
        return cls(tuple(int(p) for p in primes))

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class Value:
    """A valuation value: Zero (exponents is None) or prod(p_i ** exponents[i])."""

    basis: PrimeBasis
    exponents: Optional[Tuple[Fraction, ...]]

    @classmethod
    def zero(cls, basis: PrimeBasis) -> 'Value':
        return cls(basis, None)

    @classmethod
    def one(cls, basis: PrimeBasis) -> 'Value':
        return cls(basis, tuple(Fraction(0) for _ in basis.primes))

    @property
    def is_zero(self) -> bool:
        return self.exponents is None

    @property
    def is_one(self) -> bool:
        return self.exponents is not None and not any(self.exponents)

    def _check(self, other: 'Value'):
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis.primes} vs {other.basis.primes}")

    def __mul__(self, other: 'Value') -> 'Value':
        self._check(other)
        if self.is_zero or other.is_zero:
            return Value.zero(self.basis)
        return Value(self.basis, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: 'Value') -> 'Value':
        return self * other.inverse()

    def inverse(self) -> 'Value':
        return self ** -1

    def __pow__(self, q: Rational) -> 'Value':
        q = Fraction(q)
        if self.is_zero:
            if q <= 0:
                raise ZeroValuePower(f"zero value raised to {q}")
            return self
        return Value(self.basis, tuple(e * q for e in self.exponents))

    def compare(self, other: 'Value') -> Ordering:
        """Exact comparison of the two reals."""
        self._check(other)
        if self.is_zero or other.is_zero:
            if self.is_zero and other.is_zero:
                return Ordering.EQ
            return Ordering.LT if self.is_zero else Ordering.GT
        diff = [a - b for a, b in zip(self.exponents, other.exponents)]
        if not any(diff):
            return Ordering.EQ
        # Clear denominators, then compare prod over positive exponents
        # against prod over negative ones.
        scale = lcm(*(d.denominator for d in diff))
        left, right = 1, 1
        for p, d in zip(self.basis.primes, diff):
            e = int(d * scale)
            if e > 0:
                left *= p ** e
            elif e < 0:
                right *= p ** (-e)
        if left == right:
            raise InternalInvariantError("distinct exponent vectors gave equal products")
        return Ordering.GT if left > right else Ordering.LT

    def __lt__(self, other: 'Value') -> bool:
        return self.compare(other) is Ordering.LT

    def __le__(self, other: 'Value') -> bool:
        return self.compare(other) is not Ordering.GT

    def __gt__(self, other: 'Value') -> bool:
        return self.compare(other) is Ordering.GT

    def __ge__(self, other: 'Value') -> bool:
        return self.compare(other) is not Ordering.LT

    def to_mpf(self) -> mpmath.mpf:
        """High-precision real; honours the caller's mpmath working precision."""
        if self.is_zero:
            return mpmath.mpf(0)
        result = mpmath.mpf(1)
        for p, e in zip(self.basis.primes, self.exponents):
            if e:
                result *= mpmath.power(p, mpmath.mpf(e.numerator) / e.denominator)
        return result

    def approx(self, digits: int) -> str:
        """Decimal string with the given number of significant digits."""
        if digits < 1:
            raise ValueError("digits must be at least 1")
        if self.is_zero:
            return "0"
        with mpmath.workdps(digits + 20):
            return mpmath.nstr(self.to_mpf(), digits, strip_zeros=False,
                               min_fixed=-mpmath.inf, max_fixed=mpmath.inf)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        factors = []
        for p, e in zip(self.basis.primes, self.exponents):
            if e == 1:
                factors.append(str(p))
            elif e:
                factors.append(f"{p}^({e})" if e.denominator != 1 else f"{p}^{e}")
        return "*".join(factors) if factors else "1"

    def exponent_strings(self) -> Optional[list]:
        """Exponents as "p/q" strings for JSON output."""
        if self.is_zero:
            return None
        return [f"{e.numerator}/{e.denominator}" for e in self.exponents]


def make_value(basis: PrimeBasis, exponents: Sequence[Rational]) -> Value:
    """The nonzero value prod(p_i ** exponents[i])."""
    if len(exponents) != len(basis):
        raise ShapeMismatch(f"expected {len(basis)} exponents, got {len(exponents)}")
    return Value(basis, tuple(Fraction(e) for e in exponents))


def value_mul(a: Value, b: Value) -> Value:
    return a * b


def value_pow(a: Value, q: Rational) -> Value:
    return a ** q


def value_compare(a: Value, b: Value) -> Ordering:
    return a.compare(b)


def value_approx(a: Value, digits: int) -> str:
    return a.approx(digits)


def max_value(values) -> Value:
    """Largest of a nonempty iterable of values."""
    values = iter(values)
    best = next(values)
    for v in values:
        if v > best:
            best = v
    return best
