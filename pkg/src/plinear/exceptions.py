"""Custom exceptions for p-linear scheme construction and evaluation."""


class PLinearError(Exception):
    """Base exception for all plinear errors."""
    pass


class RingMismatchError(PLinearError):
    """Raised when operands live in different coefficient rings or variable counts."""
    pass


class DegreeOverflowError(PLinearError):
    """Raised when a t-polynomial is too large to be sliced into base-p digits."""
    pass


class ArithmeticConsistencyError(PLinearError):
    """Raised when an exact division that must succeed leaves a remainder."""
    pass


class NotFullDimensionalError(PLinearError):
    """Raised when a Newton polytope has empty topological interior."""
    pass


class MinkowskiPropertyError(PLinearError):
    """Raised when a sampled point violates a mu + b*closure(mu) inside (a+b)*mu."""

    def __init__(self, message: str, x=None, y=None):
        super().__init__(message)
        self.x = x
        self.y = y


class SupportEscapeError(PLinearError):
    """Raised when a Cartier image leaves the region it is guaranteed to lie in."""
    pass


class DegreeEscapeError(PLinearError):
    """Raised when a Cartier image exceeds its t-degree bound."""
    pass


class PreconditionError(PLinearError):
    """Raised when inputs violate a documented precondition."""
    pass


class NumeratorSupportError(PreconditionError):
    """Raised when a numerator is not supported inside the admissible region."""
    pass


class BadConstantTermError(PreconditionError):
    """Raised when the denominator's constant term is divisible by p."""
    pass


class SchemeFormatError(PLinearError):
    """Raised when a scheme file is malformed or violates scheme invariants."""
    pass


class SchemeVersionError(SchemeFormatError):
    """Raised when a scheme file was written by an unsupported format version."""
    pass


class ModulusOverflowError(SchemeFormatError):
    """Raised when p^r does not fit the fixed-width residue format."""
    pass


class OracleCapExceededError(PLinearError):
    """Raised when a brute-force oracle is asked for more than its configured cap."""
    pass


class IndexArityError(PLinearError):
    """Raised when an index does not match the scheme kind or variable count."""
    pass


class ExpressionSyntaxError(PLinearError):
    """Raised when a polynomial expression cannot be parsed."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UndeclaredVariableError(ExpressionSyntaxError):
    """Raised when an expression uses a variable that was not declared."""
    pass
