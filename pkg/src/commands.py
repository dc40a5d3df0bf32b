"""Subcommand handlers shared by the CLI and the API server.

Every handler returns plain JSON-ready data; rationals are "p/q" strings
and all orders follow the session's variable order.
"""

import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.birational import Chart, realize_elements, realize_residue_field
from src.config import Config
from src.errors import SessionError, UsageError
from src.expression import format_expr
from src.group import (
    center_is_fixed, induced_residue_action, invariant_gens_up_to_degree, is_invariant_valuation,
    quotient_residue_report,
)
from src.polyring import Poly
from src.residue import ResidueField
from src.session import Session


def _fraction(c) -> str:
    return f"{c.numerator}/{c.denominator}"


class Context:
    """Per-run state: the session, its valuation and (lazily) its residue field."""

    def __init__(self, session: Session, expressions: Sequence[str], digits: int, degree: int):
        self.session = session
        self.names = session.variables
        self.expressions = list(expressions)
        self.digits = digits
        self.degree = degree
        self.valuation = session.valuation()
        self._field: Optional[ResidueField] = None

    @property
    def field(self) -> ResidueField:
        if self._field is None:
            self._field = ResidueField(self.valuation)
        return self._field

    def parsed(self):
        return [(text, self.session.parse(text)) for text in self.expressions]

    def require_expressions(self, subcommand: str):
        if not self.expressions:
            raise UsageError(f"{subcommand} needs at least one expression (-e)")

    def show(self, f) -> str:
        return format_expr(f, self.names)


def cmd_value(ctx: Context) -> List[Dict[str, Any]]:
    ctx.require_expressions('value')
    results = []
    for _, f in ctx.parsed():
        value = ctx.valuation.value(f)
        results.append({
            'expression': ctx.show(f),
            'value': str(value),
            'exponents': value.exponent_strings(),
            'approx': value.approx(ctx.digits),
        })
    return results


def cmd_residue(ctx: Context) -> List[Dict[str, Any]]:
    ctx.require_expressions('residue')
    return [
        {'expression': ctx.show(f), 'residue': ctx.field.residue_of(f).format(ctx.field.names)}
        for _, f in ctx.parsed()
    ]


def cmd_rank(ctx: Context) -> Dict[str, Any]:
    data = ctx.field.abhyankar_check().to_dict()
    data['value_group'] = [str(g) for g in ctx.valuation.value_group()]
    return data


def cmd_kernel(ctx: Context) -> Dict[str, Any]:
    field = ctx.field
    return {
        'trdeg': field.trdeg,
        'generators': [
            {'name': name, 'vector': list(vector), 'monomial': ctx.show(field.generator_lift(i))}
            for i, (name, vector) in enumerate(zip(field.names, field.kernel.vectors))
        ],
    }


def cmd_center(ctx: Context) -> Dict[str, Any]:
    v = ctx.valuation
    center = v.center()

    def coordinate(j: int) -> str:
        return ctx.show(v.from_local(Poly.variable(v.nvars, j)))

    return {
        'ideal': [coordinate(j) for j in center.ideal_vars],
        'residue_field': [coordinate(j) for j in center.residue_field_vars],
    }


def _chart_listing(ctx: Context, chart: Chart) -> List[Dict[str, Any]]:
    listing = []
    for i, (gen, value, origin) in enumerate(zip(chart.generators, chart.values(), chart.provenance)):
        listing.append({
            'index': i + 1,
            'generator': ctx.show(gen),
            'value': str(value),
            'provenance': origin.kind.value,
        })
    return listing


def cmd_realize(ctx: Context) -> Dict[str, Any]:
    chart, certificate = realize_residue_field(ctx.valuation, ctx.field)
    return {
        'chart': _chart_listing(ctx, chart),
        'certificate': [
            {'generator': ctx.field.names[i], 'chart_index': index + 1}
            for i, index in enumerate(certificate.entries)
        ],
        'verified': certificate.verify(chart, ctx.field),
    }


def cmd_adjoin(ctx: Context) -> Dict[str, Any]:
    ctx.require_expressions('adjoin')
    chart = realize_elements(ctx.valuation, [f for _, f in ctx.parsed()])
    center = chart.center(ctx.field)
    return {
        'chart': _chart_listing(ctx, chart),
        'residue_generators': [
            {'chart_index': index + 1, 'residue': r.format(ctx.field.names)}
            for index, r in zip(center.equal_one, center.residue_gens)
        ],
    }


def cmd_group_check(ctx: Context) -> Dict[str, Any]:
    G = ctx.session.action()
    if G is None:
        raise SessionError("session has no group")
    v = ctx.valuation
    invariant = is_invariant_valuation(G, v)
    data: Dict[str, Any] = {
        'order': G.order,
        'elements': [sigma.describe() for sigma in G],
        'invariant_valuation': invariant,
        'invariant_generators': [ctx.show(f) for f in invariant_gens_up_to_degree(G, ctx.degree)],
    }
    if v.has_center:
        data['center_fixed'] = center_is_fixed(G, v)
    if invariant:
        induced = induced_residue_action(G, v, ctx.field)
        data['induced'] = [
            {'matrix': matrix, 'constants': [_fraction(c) for c in constants]}
            for matrix, constants in zip(induced.matrices, induced.constants)
        ]
        if ctx.expressions:
            report = quotient_residue_report(G, v, ctx.field, [f for _, f in ctx.parsed()], ctx.names)
            data['quotient'] = report.to_dict()
    return data


def cmd_report(ctx: Context) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        'variables': list(ctx.names),
        'prime_basis': list(ctx.session.prime_basis),
        'rank': cmd_rank(ctx),
        'kernel': cmd_kernel(ctx),
    }
    if ctx.valuation.has_center:
        data['center'] = cmd_center(ctx)
        data['realize'] = cmd_realize(ctx)
    if ctx.session.group is not None:
        data['group'] = cmd_group_check(ctx)
    return data


SUBCOMMANDS: Dict[str, Callable[[Context], Any]] = {
    'value': cmd_value,
    'residue': cmd_residue,
    'rank': cmd_rank,
    'kernel': cmd_kernel,
    'center': cmd_center,
    'realize': cmd_realize,
    'adjoin': cmd_adjoin,
    'group-check': cmd_group_check,
    'report': cmd_report,
}


def run_session(session: Session, subcommand: str, expressions: Sequence[str] = (),
                digits: Optional[int] = None, degree: Optional[int] = None) -> Any:
    """Run one subcommand against a session and return its report data."""
    if subcommand not in SUBCOMMANDS:
        raise UsageError(f"unknown subcommand {subcommand!r}")
    digits = Config.DEFAULT_DIGITS if digits is None else digits
    degree = Config.INVARIANT_DEGREE if degree is None else degree
    if digits < 1:
        raise UsageError("--digits must be at least 1")
    if degree < 1:
        raise UsageError("--degree must be at least 1")
    if Config.VERBOSE:
        print(f"→ Running {subcommand} on {len(session.variables)} variables", file=sys.stderr)
    result = SUBCOMMANDS[subcommand](Context(session, expressions, digits, degree))
    if Config.VERBOSE:
        print(f"✓ {subcommand} done", file=sys.stderr)
    return result


def render_json(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def render_text(data: Any, indent: int = 0) -> str:
    """Indented key: value listing of report data."""
    pad = '  ' * indent
    lines = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value and not _is_flat(value):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(data, list):
        for i, item in enumerate(data):
            if isinstance(item, dict):
                lines.append(f"{pad}[{i + 1}]")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(data)}")
    return "\n".join(lines)


def _is_flat(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(item, (dict, list)) for item in value)


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if value is None:
        return '-'
    if isinstance(value, list):
        return '[' + ', '.join(_scalar(item) for item in value) + ']'
    return str(value)
