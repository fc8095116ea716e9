"""Exception types shared across the package."""


class SkewcheckError(Exception):
    """Base class for all package errors."""


class CategoryValidationError(SkewcheckError):
    """A raw category table violates the category laws.

    Carries the full list of violations; each is a LawViolation whose kind is
    one of "UndefinedComposite", "NonAssociative", "BadIdentity".
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = ", ".join(str(v) for v in self.violations[:5])
        more = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"{len(self.violations)} category law violation(s): {lines}{more}")


class LawViolation:
    """One violated law with the morphism ids that witness it."""

    __slots__ = ("kind", "morphisms", "message")

    def __init__(self, kind, morphisms, message):
        self.kind = kind
        self.morphisms = tuple(int(m) for m in morphisms)
        self.message = message

    def __repr__(self):
        return f"{self.kind}{self.morphisms}: {self.message}"


class UnknownObject(SkewcheckError):
    pass


class ShapeMismatch(SkewcheckError):
    """A morphism family component has the wrong source or target."""


class NotAUnit(SkewcheckError):
    """Candidate fails at least one of the four unit axioms."""


class NotAnIsomorphism(SkewcheckError):
    pass


class PreconditionUnmet(SkewcheckError):
    """An operation's stated hypotheses do not hold; lists which ones failed."""

    def __init__(self, failed):
        self.failed = list(failed)
        super().__init__("unmet hypotheses: " + "; ".join(self.failed))


class PropositionViolated(SkewcheckError):
    """A statement that holds in every skew monoidal category failed.

    This can only mean a bug in the checker itself (or an input outside the
    theory's hypotheses), so it is raised loudly instead of being reported.
    """


class SearchBudgetExceeded(SkewcheckError):
    def __init__(self, message, partial_count=None):
        self.partial_count = partial_count
        super().__init__(message)


class CapExceeded(SkewcheckError):
    """A construction would exceed the category size caps."""


class ParseError(SkewcheckError):
    """An input document is malformed; message names the offending field."""
