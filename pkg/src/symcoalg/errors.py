class DimensionMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Malformed exchange document; ``where`` names the offending field/line."""

    def __init__(self, msg, where=None):
        self.where = where
        super().__init__(f"{where}: {msg}" if where else msg)


class InvalidStructure(ValueError):
    """Structure constants that violate an axiom."""

    def __init__(self, msg, violations=()):
        self.violations = list(violations)
        super().__init__(msg)


class NotAModuleMap(ValueError):
    pass


class SingularInput(ValueError):
    pass


class UncertifiedSearch(RuntimeError):
    """A nonsingularity search could neither find a witness nor exhaust its grid."""


class TheoremViolation(AssertionError):
    """An identity that the theory guarantees failed on a concrete instance."""
