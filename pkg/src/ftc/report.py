"""Report-style validation results shared by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class Violation:
    axiom: str
    location: tuple
    message: str

    def __str__(self):
        return f"[{self.axiom}] at {self.location}: {self.message}"


@dataclass
class ValidationReport:
    violations: list

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.is_valid:
            return "valid"
        return "\n".join(str(v) for v in self.violations)
