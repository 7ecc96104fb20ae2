"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so keep the split between user errors
(bad input), resource errors (budget) and invariant violations.
"""


class BraidrepError(Exception):
    """Base class for all library errors."""


class ValidationError(BraidrepError, ValueError):
    """Input is well formed but violates a precondition."""


class ParseError(ValidationError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class RingMismatchError(ValidationError):
    """Operands live over different variable sets."""


class SubstitutionError(ValidationError):
    """Substitution would need the inverse of a non-unit."""


class ShapeError(ValidationError):
    """Matrix or multi-index shapes are incompatible."""


class PurityError(ValidationError):
    """A pure braid was required."""


class ResourceError(BraidrepError):
    """A configured enumeration budget was exceeded."""


class InvariantViolation(BraidrepError):
    """Two routes that must agree did not. Always a bug."""
