"""Exception types shared across the toolkit."""


class FieldMismatchError(ValueError):
    """Raised when operands belong to different fields."""


class SplittingError(Exception):
    """A computation needed eigenvalues the field does not contain.

    Carries the obstructing irreducible polynomials (as strings) so the
    caller can pick a larger field, plus whatever partial result was
    completed before the obstruction.
    """

    def __init__(self, polynomials, partial=None, hint=None):
        self.polynomials = list(polynomials)
        self.partial = partial
        self.hint = hint
        msg = "field does not split: " + ", ".join(str(p) for p in self.polynomials)
        if hint:
            msg += f" (hint: {hint})"
        super().__init__(msg)


class UnsupportedFieldError(Exception):
    """Operation requires a finite field (or otherwise unsupported base)."""


class NonScalarActionError(Exception):
    """An element expected to act as a scalar on a module does not.

    Signals a broken precondition: the element is not central or the
    module is not simple.
    """


class RadicalUncertifiedError(Exception):
    """Radical computation could not certify semisimplicity of the quotient."""


class InfiniteGroupError(Exception):
    """A character group that must be finite has positive free rank."""
