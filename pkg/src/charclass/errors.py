"""Exception hierarchy shared by every charclass subpackage."""

from typing import Iterable, Optional, Sequence


class CharClassError(Exception):
    """Base class for all charclass errors."""


class ContractViolation(CharClassError, ValueError):
    """An operation was called outside its precondition."""


class CapExceededError(ContractViolation):
    """A degree above the presentation's cap was requested."""

    def __init__(self, degree: int, cap: int, what: str = "degree"):
        self.degree = degree
        self.cap = cap
        super().__init__(f"{what} {degree} exceeds the degree cap {cap}")


class DataRequiredError(CharClassError):
    """A computation needs a presentation file or table that is not available."""

    def __init__(self, message: str, hint: Optional[str] = None):
        self.hint = hint
        super().__init__(message if hint is None else f"{message} ({hint})")


class PresentationFileError(CharClassError):
    """A presentation file violates the schema or the generator inventory."""

    def __init__(self, message: str, location: str = "<file>"):
        self.location = location
        super().__init__(f"{location}: {message}")


class MorphismError(ContractViolation):
    """A generator-image table does not define an algebra morphism."""

    def __init__(self, message: str, violations: Sequence[str] = ()):
        self.violations = list(violations)
        super().__init__(message)


class UnderdeterminedBoundaryError(CharClassError):
    """The boundary table plus the projection formula do not determine d(x)."""

    def __init__(self, degree: int, monomials: Iterable[str]):
        self.degree = degree
        self.monomials = list(monomials)
        super().__init__(
            f"boundary underdetermined in degree {degree} at: {', '.join(self.monomials)}"
        )


class InconsistentBoundaryError(ContractViolation):
    """The boundary table contradicts the projection formula."""

    def __init__(self, degree: int, relation: str, value: str):
        self.degree = degree
        self.relation = relation
        self.value = value
        super().__init__(
            f"boundary table inconsistent in degree {degree}: {relation} vanishes in the complement "
            f"but its boundary is {value}"
        )


class NotMildlyDegeneratingError(ContractViolation):
    """A local triple is not mildly degenerating along t = 0."""

    def __init__(self, diagnosis: str):
        self.diagnosis = diagnosis
        super().__init__(diagnosis)
