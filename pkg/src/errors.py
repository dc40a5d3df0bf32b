"""Exceptions raised by monoval.

Domain errors derive from MonovalError (exit code 1 on the command line,
HTTP 422 from the API). Malformed input derives from UsageError (exit code 2,
HTTP 400).
"""


class MonovalError(Exception):
    """Base class for errors in the algebra itself."""


class BasisMismatch(MonovalError):
    """Two values live over different prime bases."""


class InvalidBasis(MonovalError):
    """Prime basis is empty, unsorted, or contains a non-prime."""


class ShapeMismatch(MonovalError):
    """A vector or matrix does not have the expected dimensions."""


class NvarsMismatch(MonovalError):
    """Polynomials in different numbers of variables were combined."""


class ZeroValuePower(MonovalError):
    """The zero value was raised to a non-positive power."""


class ZeroPolynomial(MonovalError):
    """An operation needing a nonzero polynomial received zero."""


class NoCenter(MonovalError):
    """Some coordinate has value greater than one, so the valuation has no center."""


class ValueExceedsOne(MonovalError):
    """A function of value greater than one lies outside the valuation ring."""


class CenterNotInChart(MonovalError):
    """The center of the valuation lies in the other chart of the blow-up."""


class InfiniteGroup(MonovalError):
    """Group closure exceeded the configured order bound."""


class MalformedPermutation(MonovalError):
    """A group generator is not a permutation, or has a zero scalar."""


class NotInvariant(MonovalError):
    """The valuation is not invariant under the group."""


class NotInvariantFunction(MonovalError):
    """A function expected to be group invariant is not."""


class InternalInvariantError(MonovalError):
    """An internal consistency check failed; this indicates a bug."""


class UsageError(Exception):
    """Base class for malformed input."""


class ParseError(UsageError):
    """Expression text does not match the grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class SessionError(UsageError):
    """Session file is missing fields or is inconsistent."""
