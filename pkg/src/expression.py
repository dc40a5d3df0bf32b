"""Parser and printer for polynomial and rational-function expressions.

Grammar (whitespace is ignored):

    ratfn  := expr ('/' expr)?
    expr   := '-'? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := rational | ident | '(' expr ')'
    rational := int ('/' nat)?      -- the '/' form only inside parentheses
    ident  := [A-Za-z][A-Za-z0-9_]*

At top level '/' always separates numerator from denominator, so "3/4*x"
is 3 / (4*x); the coefficient three quarters is written "(3/4)*x".
"""

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.errors import ParseError
from src.polyring import Poly, RatFn

IDENT = re.compile(r'[A-Za-z][A-Za-z0-9_]*')
_TOKEN = re.compile(r'\s*(?:(?P<int>[0-9]+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))')
MAX_DEPTH = 100


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    """(kind, text, offset) triples, closed by an 'end' token."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset)
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:

    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = tokenize(text)
        self.index = 0
        self.variables = list(variables)
        self.nvars = len(self.variables)
        self.depth = 0

    @property
    def current(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> Tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        kind, text, _ = self.current
        if kind == 'op' and text == op:
            self.index += 1
            return True
        return False

    def fail(self, message: Optional[str] = None):
        kind, text, offset = self.current
        if message is None:
            message = "unexpected end of input" if kind == 'end' else f"unexpected {text!r}"
        raise ParseError(message, offset)

    def ratfn(self) -> Union[Poly, RatFn]:
        num = self.expr()
        if self.accept('/'):
            start = self.current[2]
            den = self.expr()
            if self.current[0] != 'end':
                self.fail()
            if den.is_zero:
                raise ParseError("zero denominator", start)
            return RatFn(num, den)
        if self.current[0] != 'end':
            self.fail()
        return num

    def expr(self) -> Poly:
        negate = self.accept('-')
        result = self.term()
        if negate:
            result = -result
        while True:
            if self.accept('+'):
                result = result + self.term()
            elif self.accept('-'):
                result = result - self.term()
            else:
                return result

    def term(self) -> Poly:
        result = self.factor()
        while self.accept('*'):
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        base = self.atom()
        if self.accept('^'):
            kind, text, _ = self.current
            if kind != 'int':
                self.fail("exponent must be a nonnegative integer literal")
            self.advance()
            return base ** int(text)
        return base

    def atom(self) -> Poly:
        kind, text, offset = self.current
        if kind == 'int':
            self.advance()
            value = Fraction(int(text))
            if self.depth > 0 and self.accept('/'):
                kind, den, den_offset = self.current
                if kind != 'int':
                    self.fail("expected a natural number denominator")
                if int(den) == 0:
                    raise ParseError("zero denominator", den_offset)
                self.advance()
                value = value / int(den)
            return Poly.constant(self.nvars, value)
        if kind == 'ident':
            if text not in self.variables:
                raise ParseError(f"unknown identifier {text!r}", offset)
            self.advance()
            return Poly.variable(self.nvars, self.variables.index(text))
        if self.accept('('):
            if self.depth >= MAX_DEPTH:
                raise ParseError(f"parentheses nested deeper than {MAX_DEPTH}", offset)
            self.depth += 1
            inner = self.expr()
            self.depth -= 1
            if not self.accept(')'):
                self.fail("expected ')'")
            return inner
        self.fail()


def parse_expr(text: str, variables: Sequence[str]) -> Union[Poly, RatFn]:
    """Parse text into a Poly, or a RatFn when it has a top-level '/'."""
    return _Parser(text, variables).ratfn()


def format_monomial(exp: Sequence[int], names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, exp):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"


def format_terms(terms: Iterable[Tuple[Sequence[int], Fraction]], names: Sequence[str]) -> str:
    """Signed sum of coefficient*monomial terms, in the order given."""
    text = ""
    for exp, c in terms:
        mono = format_monomial(exp, names)
        magnitude = abs(c)
        if not mono:
            body = format_coefficient(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_coefficient(magnitude)}*{mono}"
        if not text:
            text = f"-{body}" if c < 0 else body
        else:
            text += f" {'-' if c < 0 else '+'} {body}"
    return text or "0"


def format_poly(f: Poly, names: Sequence[str]) -> str:
    """Terms in descending lexicographic order of exponents."""
    return format_terms(reversed(list(f.terms())), names)


def format_ratfn(f: Union[Poly, RatFn], names: Sequence[str]) -> str:
    if isinstance(f, Poly):
        return format_poly(f, names)
    if f.den == Poly.one(f.nvars):
        return format_poly(f.num, names)
    return f"({format_poly(f.num, names)})/({format_poly(f.den, names)})"


def format_expr(f: Union[Poly, RatFn], names: Sequence[str]) -> str:
    return format_ratfn(f, names)
