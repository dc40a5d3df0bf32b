"""Finite groups of scaled coordinate permutations acting on K(X).

An element (perm, scalars) sends X_j to scalars[j] * X_{perm[j]}. Such
actions keep monomial valuations monomial, and when the valuation is
invariant they permute the value-one exponent lattice, so they act on the
residue field by Y^c -> const * Y^{M c}.
"""

import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.config import Config
from src.errors import (
    InfiniteGroup, MalformedPermutation, NotInvariant, NotInvariantFunction, NvarsMismatch,
    ShapeMismatch,
)
from src.expression import format_expr, format_poly
from src.lattice import IntMatrix, lattice_coords, rank
from src.models import QuotientEntry, QuotientReport
from src.polyring import Poly, RatFn, ratfn_eq
from src.residue import LaurentPoly, ResidueElement, ResidueField, residue_eq
from src.valuation import MonomialValuation

Function = Union[Poly, RatFn]


@dataclass(frozen=True)
class GroupElement:
    """X_j -> scalars[j] * X_{perm[j]} (0-based perm)."""

    perm: Tuple[int, ...]
    scalars: Tuple[Fraction, ...]

    @classmethod
    def identity(cls, nvars: int) -> 'GroupElement':
        return cls(tuple(range(nvars)), tuple(Fraction(1) for _ in range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.perm)

    @property
    def is_identity(self) -> bool:
        return self == GroupElement.identity(self.nvars)

    def compose(self, other: 'GroupElement') -> 'GroupElement':
        """self after other: act(compose(s, t), f) == act(s, act(t, f))."""
        return GroupElement(
            tuple(self.perm[other.perm[j]] for j in range(self.nvars)),
            tuple(other.scalars[j] * self.scalars[other.perm[j]] for j in range(self.nvars)),
        )

    def inverse(self) -> 'GroupElement':
        perm = [0] * self.nvars
        scalars = [Fraction(0)] * self.nvars
        for j, k in enumerate(self.perm):
            perm[k] = j
            scalars[k] = 1 / self.scalars[j]
        return GroupElement(tuple(perm), tuple(scalars))

    def act_poly(self, f: Poly) -> Poly:
        if f.nvars != self.nvars:
            raise NvarsMismatch(f"{f.nvars} variables, group acts on {self.nvars}")
        terms: Dict[Tuple[int, ...], Fraction] = {}
        for exp, c in f.terms():
            image = [0] * self.nvars
            for j, e in enumerate(exp):
                image[self.perm[j]] += e
                c = c * self.scalars[j] ** e
            terms[tuple(image)] = terms.get(tuple(image), 0) + c
        return Poly(self.nvars, terms)

    def act(self, f: Function) -> Function:
        if isinstance(f, Poly):
            return self.act_poly(f)
        return RatFn(self.act_poly(f.num), self.act_poly(f.den))

    def describe(self) -> Dict[str, list]:
        return {
            'perm': [k + 1 for k in self.perm],
            'scalars': [f"{c.numerator}/{c.denominator}" for c in self.scalars],
        }


@dataclass(frozen=True)
class MonomialAction:
    """All elements of a finite group, identity first."""

    nvars: int
    elements: Tuple[GroupElement, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _element(nvars: int, perm: Sequence[int], scalars: Sequence) -> GroupElement:
    if len(perm) != nvars or sorted(perm) != list(range(nvars)):
        raise MalformedPermutation(f"{list(perm)} is not a permutation of {nvars} indices")
    if len(scalars) != nvars:
        raise MalformedPermutation(f"expected {nvars} scalars, got {len(scalars)}")
    scalars = tuple(Fraction(c) for c in scalars)
    if any(c == 0 for c in scalars):
        raise MalformedPermutation("scalars must be nonzero")
    return GroupElement(tuple(perm), scalars)


def action_new(nvars: int, generators: Sequence[Tuple[Sequence[int], Sequence]],
               max_order: Optional[int] = None) -> MonomialAction:
    """Close the generators (0-based perm, scalars) under composition."""
    max_order = max_order or Config.MAX_GROUP_ORDER
    gens = [_element(nvars, perm, scalars) for perm, scalars in generators]
    identity = GroupElement.identity(nvars)
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for element in frontier:
            for g in gens:
                product = g.compose(element)
                if product not in seen:
                    seen.add(product)
                    elements.append(product)
                    new.append(product)
                    if len(elements) > max_order:
                        raise InfiniteGroup(f"closure exceeds {max_order} elements")
        frontier = new
    if Config.VERBOSE:
        print(f"✓ Group closure has order {len(elements)}", file=sys.stderr)
    return MonomialAction(nvars, tuple(elements))


def act(sigma: GroupElement, f: Function) -> Function:
    return sigma.act(f)


def _fixes_shift(sigma: GroupElement, v: MonomialValuation) -> bool:
    if not v.is_shifted:
        return True
    a = v.shift
    return all(sigma.scalars[j] * a[sigma.perm[j]] == a[j] for j in range(v.nvars))


def is_invariant_valuation(G: MonomialAction, v: MonomialValuation) -> bool:
    """|sigma(X_j)| == |X_j| for every element and coordinate (and the shift point is fixed)."""
    if G.nvars != v.nvars:
        raise NvarsMismatch(f"group acts on {G.nvars} variables, valuation has {v.nvars}")
    values = [v.variable_value(j) for j in range(v.nvars)]
    for sigma in G:
        if not _fixes_shift(sigma, v):
            return False
        if any(values[sigma.perm[j]] != values[j] for j in range(v.nvars)):
            return False
    return True


def center_is_fixed(G: MonomialAction, v: MonomialValuation) -> bool:
    """Every element maps the center prime to itself and fixes the shift point."""
    ideal = set(v.center().ideal_vars)
    for sigma in G:
        if {sigma.perm[j] for j in ideal} != ideal or not _fixes_shift(sigma, v):
            return False
    return True


def reynolds(G: MonomialAction, f: Function) -> Function:
    """Average of f over the group."""
    total = None
    for sigma in G:
        image = sigma.act(f)
        total = image if total is None else total + image
    return total * Fraction(1, G.order)


def _leading(f: Poly) -> Fraction:
    return f.coefficient(f.exponents()[-1])


def invariant_gens_up_to_degree(G: MonomialAction, d: int) -> List[Poly]:
    """Linearly independent Reynolds images of the monomials of degree 1..d."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    n = G.nvars
    accepted: List[Poly] = []
    for degree in range(1, d + 1):
        for combo in combinations_with_replacement(range(n), degree):
            exp = [0] * n
            for j in combo:
                exp[j] += 1
            image = reynolds(G, Poly.monomial(exp))
            if image.is_zero:
                continue
            candidate = image * (1 / _leading(image))
            support = sorted({e for p in accepted + [candidate] for e in p.exponents()})
            rows = [[p.coefficient(e) for e in support] for p in accepted + [candidate]]
            if rank(rows) == len(rows):
                accepted.append(candidate)
    return accepted


@dataclass(frozen=True)
class InducedResidueAction:
    """Per group element: matrix M (column i = image of Y_i's exponent) and constants."""

    group: MonomialAction
    matrices: Tuple[IntMatrix, ...]
    constants: Tuple[Tuple[Fraction, ...], ...]

    def index(self, sigma: GroupElement) -> int:
        return self.group.elements.index(sigma)

    def _apply_laurent(self, k: int, p: LaurentPoly) -> LaurentPoly:
        M, consts = self.matrices[k], self.constants[k]
        terms: Dict[Tuple[int, ...], Fraction] = {}
        for exp, c in p.terms.items():
            image = tuple(sum(M[r][i] * exp[i] for i in range(len(exp))) for r in range(len(exp)))
            for i, e in enumerate(exp):
                c = c * consts[i] ** e
            terms[image] = terms.get(image, 0) + c
        return LaurentPoly(p.nvars, terms)

    def apply(self, sigma: Union[GroupElement, int], e: ResidueElement) -> ResidueElement:
        k = sigma if isinstance(sigma, int) else self.index(sigma)
        return ResidueElement(self._apply_laurent(k, e.num), self._apply_laurent(k, e.den))

    def image_of_generator(self, k: int, i: int) -> ResidueElement:
        return self.apply(k, ResidueElement.generator(len(self.constants[k]), i))


def induced_residue_action(G: MonomialAction, v: MonomialValuation,
                           field: Optional[ResidueField] = None) -> InducedResidueAction:
    """Action on k(Y): sigma(X^{B_i}) = (prod c_j^{B_ij}) X^{perm . B_i}."""
    if not is_invariant_valuation(G, v):
        raise NotInvariant("valuation is not invariant under the group")
    field = field or ResidueField(v)
    s = field.trdeg
    matrices, constants = [], []
    for sigma in G:
        columns, consts = [], []
        for b in field.kernel.vectors:
            image = [0] * v.nvars
            const = Fraction(1)
            for j, e in enumerate(b):
                image[sigma.perm[j]] += e
                const *= sigma.scalars[j] ** e
            coords = lattice_coords(field.kernel, image)
            if coords is None:
                raise NotInvariant(f"image {image} of a value-one exponent leaves the lattice")
            columns.append(coords)
            consts.append(const)
        matrices.append([[columns[i][r] for i in range(s)] for r in range(s)])
        constants.append(tuple(consts))
    return InducedResidueAction(G, tuple(matrices), tuple(constants))


def equivariance_check(G: MonomialAction, v: MonomialValuation, field: ResidueField, f: Function,
                       induced: Optional[InducedResidueAction] = None) -> bool:
    """residue(sigma f) == sigma(residue f) for every element."""
    induced = induced or induced_residue_action(G, v, field)
    base = field.residue_of(f)
    return all(
        residue_eq(field.residue_of(sigma.act(f)), induced.apply(k, base))
        for k, sigma in enumerate(G)
    )


def is_invariant_function(G: MonomialAction, f: Function) -> bool:
    f = RatFn.of(f)
    return all(ratfn_eq(RatFn.of(sigma.act(f)), f) for sigma in G)


def quotient_residue_report(G: MonomialAction, v: MonomialValuation, field: ResidueField,
                            invariants: Sequence[Function], names: Sequence[str]) -> QuotientReport:
    """Residues of invariant functions, each checked to be fixed by the induced action."""
    induced = induced_residue_action(G, v, field)
    report = QuotientReport()
    for f in invariants:
        if not is_invariant_function(G, f):
            raise NotInvariantFunction(f"{format_expr(f, names)} is not invariant")
        r = field.residue_of(f)
        fixed = all(residue_eq(induced.apply(k, r), r) for k in range(G.order))
        in_trace = None
        if field.trdeg == 1:
            try:
                P, Q = rewrite_in_trace(field, r)
                in_trace = format_expr(RatFn(P, Q), ['t'])
            except NotInvariantFunction:
                in_trace = None
        report.entries.append(QuotientEntry(
            expression=format_expr(f, names),
            residue=r.format(field.names),
            fixed=fixed,
            in_trace=in_trace,
        ))
    return report


def _flip(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(p.nvars, {tuple(-e for e in exp): c for exp, c in p.terms.items()})


def _trace_power_sums(k: int) -> List[Poly]:
    """u_j(t) with u_j(Y + 1/Y) == Y^j + Y^-j (u_0 = 2)."""
    t = Poly.variable(1, 0)
    sums = [Poly.constant(1, 2), t]
    while len(sums) <= k:
        sums.append(t * sums[-1] - sums[-2])
    return sums


def _palindromic_in_trace(p: LaurentPoly) -> Poly:
    coeffs = {exp[0]: c for exp, c in p.terms.items()}
    top = max((abs(j) for j in coeffs), default=0)
    sums = _trace_power_sums(top)
    result = Poly.constant(1, coeffs.get(0, 0))
    for j in range(1, top + 1):
        if coeffs.get(j, 0) != coeffs.get(-j, 0):
            raise NotInvariantFunction("residue is not fixed by Y1 -> 1/Y1")
        result = result + sums[j] * coeffs.get(j, Fraction(0))
    return result


def rewrite_in_trace(field: ResidueField, r: ResidueElement) -> Tuple[Poly, Poly]:
    """(P, Q) with r == P(t)/Q(t) for t = Y1 + 1/Y1."""
    if field.trdeg != 1:
        raise ShapeMismatch("rewriting in t needs a residue field with one generator")
    flipped_den = _flip(r.den)
    return _palindromic_in_trace(r.num * flipped_den), _palindromic_in_trace(r.den * flipped_den)


def trace_substitute(P: Poly, Q: Optional[Poly] = None) -> ResidueElement:
    """P(t)/Q(t) evaluated at t = Y1 + 1/Y1."""
    t = LaurentPoly(1, {(1,): 1, (-1,): 1})

    def evaluate(f: Poly) -> LaurentPoly:
        result = LaurentPoly(1)
        for (k,), c in f.terms():
            term = LaurentPoly.constant(1, c)
            for _ in range(k):
                term = term * t
            result = result + term
        return result

    den = evaluate(Q) if Q is not None else LaurentPoly.constant(1, 1)
    return ResidueElement(evaluate(P), den)


def describe_invariants(G: MonomialAction, d: int, names: Sequence[str]) -> List[str]:
    return [format_poly(f, names) for f in invariant_gens_up_to_degree(G, d)]
