"""Charts of blow-ups containing the center of a valuation.

A chart is the subalgebra of K(X) generated by finitely many rational
functions of value at most one. Blowing up along (g, h) and keeping the
affine piece that contains the center adjoins g/h. Adjoining X^{B+}/X^{B-}
for every value-one lattice generator B makes the residue field of the
center equal to the whole residue field of the valuation.
"""

import sys
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from src.config import Config
from src.errors import CenterNotInChart, InternalInvariantError, ValueExceedsOne, ZeroPolynomial
from src.exactvalue import Value
from src.models import AdjunctionKind
from src.polyring import Poly, RatFn
from src.residue import ResidueElement, ResidueField, residue_eq
from src.valuation import MonomialValuation


@dataclass(frozen=True)
class Provenance:
    """Origin of a chart generator: a base coordinate, or g/h from a blow-up."""

    kind: AdjunctionKind
    variable: Optional[int] = None
    numerator: Optional[Poly] = None
    denominator: Optional[Poly] = None


@dataclass(frozen=True)
class ChartCenter:
    """Generators split by value, and residues of the value-one generators."""

    below_one: Tuple[int, ...]
    equal_one: Tuple[int, ...]
    residue_gens: Tuple[ResidueElement, ...]


@dataclass(frozen=True)
class Chart:
    """Finitely generated subalgebra of K(X) inside the valuation ring."""

    valuation: MonomialValuation
    generators: Tuple[RatFn, ...]
    provenance: Tuple[Provenance, ...]

    def __len__(self) -> int:
        return len(self.generators)

    def values(self) -> Tuple[Value, ...]:
        return tuple(self.valuation.value_of_ratfn(g) for g in self.generators)

    def blowup_adjoin(self, g: Poly, h: Poly) -> 'Chart':
        """Adjoin g/h; the center must lie in this chart (|g| <= |h|)."""
        if h.is_zero:
            raise ZeroPolynomial("blow-up along (g, 0)")
        v = self.valuation
        g_value, h_value = v.value_of_poly(g), v.value_of_poly(h)
        if g_value > h_value:
            raise CenterNotInChart(f"|g| = {g_value} exceeds |h| = {h_value}")
        if Config.VERBOSE:
            print(f"  ✓ Adjoined generator {len(self.generators) + 1} of value {g_value / h_value}",
                  file=sys.stderr)
        return Chart(
            valuation=v,
            generators=self.generators + (RatFn(g, h),),
            provenance=self.provenance + (Provenance(AdjunctionKind.BLOWUP, numerator=g, denominator=h),),
        )

    def center(self, field: ResidueField) -> ChartCenter:
        """Center data; its residue field is generated by residue_gens."""
        one = Value.one(self.valuation.basis)
        below, equal, residues = [], [], []
        for i, (gen, value) in enumerate(zip(self.generators, self.values())):
            if value < one:
                below.append(i)
            else:
                equal.append(i)
                residues.append(field.residue_of(gen))
        return ChartCenter(tuple(below), tuple(equal), tuple(residues))


@dataclass(frozen=True)
class Certificate:
    """entries[i] is the index of the chart generator whose residue is Y_{i+1}."""

    entries: Tuple[int, ...]

    def verify(self, chart: Chart, field: ResidueField) -> bool:
        if len(self.entries) != field.trdeg:
            return False
        return all(
            residue_eq(field.residue_of(chart.generators[index]), field.generator(i))
            for i, index in enumerate(self.entries)
        )


def base_chart(v: MonomialValuation) -> Chart:
    """The model itself: generated by the coordinates X_j - a_j."""
    v.require_center()
    generators, provenance = [], []
    for j in range(v.nvars):
        coordinate = v.from_local(Poly.variable(v.nvars, j))
        generators.append(RatFn(coordinate))
        provenance.append(Provenance(AdjunctionKind.BASE_VARIABLE, variable=j))
    return Chart(v, tuple(generators), tuple(provenance))


def chart_center(v: MonomialValuation, chart: Chart, field: Optional[ResidueField] = None) -> ChartCenter:
    return chart.center(field or ResidueField(v))


def realize_residue_field(v: MonomialValuation, field: Optional[ResidueField] = None) -> Tuple[Chart, Certificate]:
    """Chart whose center has the full residue field, with a verified certificate."""
    field = field or ResidueField(v)
    chart = base_chart(v)
    if Config.VERBOSE:
        print(f"→ Realizing residue field of transcendence degree {field.trdeg}", file=sys.stderr)
    entries = []
    for i in range(field.trdeg):
        lifted = field.generator_lift(i)
        chart = chart.blowup_adjoin(lifted.num, lifted.den)
        entries.append(len(chart) - 1)
    certificate = Certificate(tuple(entries))
    if not certificate.verify(chart, field):
        raise InternalInvariantError("realization certificate failed to verify")
    return chart, certificate


def realize_elements(v: MonomialValuation, targets: Sequence[RatFn]) -> Chart:
    """Chart whose center's residue field contains the residue of every target."""
    chart = base_chart(v)
    one = Value.one(v.basis)
    for target in targets:
        target = RatFn.of(target)
        value = v.value_of_ratfn(target)
        if value > one:
            raise ValueExceedsOne(f"target has value {value}")
        chart = chart.blowup_adjoin(target.num, target.den)
    return chart

