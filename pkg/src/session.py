"""Session files: variables, prime basis, weights, optional shift and group."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from src.errors import InvalidBasis, SessionError
from src.exactvalue import PrimeBasis
from src.expression import IDENT, parse_expr
from src.group import MonomialAction, action_new
from src.polyring import Poly, RatFn
from src.valuation import MonomialValuation, mval_new

REQUIRED_FIELDS = ('variables', 'prime_basis', 'weights')
OPTIONAL_FIELDS = ('shift', 'group')


def _rational(text: Any, where: str) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise SessionError(f"{where}: expected a rational string, got {text!r}")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise SessionError(f"{where}: {text!r} is not a rational number")


@dataclass
class Session:
    """A validated session; group permutations are stored 0-based."""

    variables: List[str]
    prime_basis: List[int]
    weights: List[List[Fraction]]
    shift: Optional[List[Fraction]] = None
    group: Optional[List[Dict[str, list]]] = field(default=None)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Session':
        if not isinstance(data, dict):
            raise SessionError("session must be a JSON object")
        missing = [name for name in REQUIRED_FIELDS if name not in data]
        if missing:
            raise SessionError(f"missing fields: {', '.join(missing)}")
        unknown = sorted(set(data) - set(REQUIRED_FIELDS) - set(OPTIONAL_FIELDS))
        if unknown:
            raise SessionError(f"unknown fields: {', '.join(unknown)}")

        variables = data['variables']
        if not isinstance(variables, list) or not variables:
            raise SessionError("variables must be a nonempty list")
        for name in variables:
            if not isinstance(name, str) or not IDENT.fullmatch(name):
                raise SessionError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise SessionError("variable names must be unique")
        n = len(variables)

        basis = data['prime_basis']
        if not isinstance(basis, list) or not all(isinstance(p, int) and not isinstance(p, bool) for p in basis):
            raise SessionError("prime_basis must be a list of integers")
        try:
            PrimeBasis(tuple(basis))
        except InvalidBasis as e:
            raise SessionError(f"prime_basis: {e}")

        rows = data['weights']
        if not isinstance(rows, list) or len(rows) != len(basis):
            raise SessionError(f"weights must have {len(basis)} rows, one per prime")
        weights = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise SessionError(f"weight row {i + 1} must have {n} entries")
            weights.append([_rational(w, f"weights[{i + 1}]") for w in row])

        shift = data.get('shift')
        if shift is not None:
            if not isinstance(shift, list) or len(shift) != n:
                raise SessionError(f"shift must have {n} entries")
            shift = [_rational(a, "shift") for a in shift]

        group = data.get('group')
        if group is not None:
            group = [cls._generator(g, n, k) for k, g in enumerate(group)] if isinstance(group, list) else None
            if group is None:
                raise SessionError("group must be a list of generators")

        return cls(list(variables), list(basis), weights, shift, group)

    @staticmethod
    def _generator(g: Any, n: int, k: int) -> Dict[str, list]:
        where = f"group[{k + 1}]"
        if not isinstance(g, dict) or set(g) != {'perm', 'scalars'}:
            raise SessionError(f"{where}: expected fields perm and scalars")
        perm, scalars = g['perm'], g['scalars']
        if not isinstance(perm, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in perm):
            raise SessionError(f"{where}: perm must be a list of 1-based indices")
        if not isinstance(scalars, list):
            raise SessionError(f"{where}: scalars must be a list")
        return {
            'perm': [i - 1 for i in perm],
            'scalars': [_rational(c, f"{where}.scalars") for c in scalars],
        }

    @classmethod
    def load(cls, path: Union[str, Path]) -> 'Session':
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except FileNotFoundError:
            raise SessionError(f"session file not found: {path}")
        except (json.JSONDecodeError, UnicodeDecodeError) as e:
            raise SessionError(f"invalid JSON in {path}: {e}")
        return cls.from_dict(data)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def valuation(self) -> MonomialValuation:
        return mval_new(self.nvars, PrimeBasis(tuple(self.prime_basis)), self.weights, self.shift)

    def action(self) -> Optional[MonomialAction]:
        if self.group is None:
            return None
        return action_new(self.nvars, [(g['perm'], g['scalars']) for g in self.group])

    def parse(self, text: str) -> Union[Poly, RatFn]:
        return parse_expr(text, self.variables)
