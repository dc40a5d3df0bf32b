"""Data models shared by the algebra modules and the reports."""

from dataclasses import dataclass, asdict, field
from typing import Optional, Dict, Any, Tuple, List
from enum import Enum


class Ordering(Enum):
    """Result of comparing two values."""
    LT = -1
    EQ = 0
    GT = 1


class AdjunctionKind(Enum):
    """How a chart generator entered the chart."""
    BASE_VARIABLE = "base"
    BLOWUP = "blowup"


@dataclass(frozen=True)
class CenterDesc:
    """Center of a valuation on affine space.

    The center prime is generated by the coordinates indexed by ideal_vars
    (translated by shift when present); its residue field is generated by
    the coordinates indexed by residue_field_vars.
    """

    ideal_vars: Tuple[int, ...]
    residue_field_vars: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {k: list(v) for k, v in asdict(self).items()}


@dataclass(frozen=True)
class AbhyankarReport:
    """Rational rank and transcendence degree against the dimension."""

    rational_rank: int
    trdeg: int
    nvars: int
    equality: bool

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return asdict(self)


@dataclass
class QuotientEntry:
    """One invariant function with its residue and fixed-point flag."""

    expression: str
    residue: str
    fixed: bool

    # Filled when the residue field has one generator and the residue
    # could be rewritten in t = Y1 + 1/Y1
    in_trace: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {k: v for k, v in asdict(self).items() if v is not None}


@dataclass
class QuotientReport:
    """Residues of invariant functions certified as elements of the fixed field."""

    entries: List[QuotientEntry] = field(default_factory=list)

    @property
    def certified(self) -> bool:
        return all(entry.fixed for entry in self.entries)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            'certified': self.certified,
            'entries': [entry.to_dict() for entry in self.entries],
        }
