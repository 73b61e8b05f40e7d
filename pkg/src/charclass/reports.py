"""Verification report models shared by the rings, gysin and primitive checks."""

from typing import Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class Failure(BaseModel):
    """One failed check, located by degree and sequence node."""

    check: str
    degree: Optional[int] = None
    node: Optional[str] = None
    message: str
    witness: Optional[str] = None


class VerificationReport(BaseModel):
    """Outcome of a verification run; empty ``failures`` means clean."""

    subject: str
    max_degree: int
    checks: list[str] = Field(default_factory=list)
    failures: list[Failure] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, failure: Failure) -> None:
        self.failures.append(failure)

    def merge(self, other: "VerificationReport") -> None:
        for check in other.checks:
            if check not in self.checks:
                self.checks.append(check)
        self.failures.extend(other.failures)
        self.skipped.extend(other.skipped)

    def first_failure_degree(self) -> Optional[int]:
        degrees = [f.degree for f in self.failures if f.degree is not None]
        return min(degrees) if degrees else None
