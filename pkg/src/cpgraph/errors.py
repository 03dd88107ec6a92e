class CPGraphError(Exception):
    """Base class for package errors."""


class InvalidSpaceError(CPGraphError, ValueError):
    """Point count outside the supported range."""


class PreconditionError(CPGraphError, ValueError):
    pass


class MultiplicityError(CPGraphError, ValueError):
    """Blow-up multiplicity below 2."""


class CoverageError(CPGraphError, ValueError):
    """A coloring does not cover exactly the vertices of its graph."""


class ColoringFailure(CPGraphError):
    """The level-by-level greedy ran out of unused source colors."""

    def __init__(self, level: int, element, candidates) -> None:
        self.level = level
        self.element = element
        self.candidates = tuple(candidates)
        names = ", ".join(str(c) for c in self.candidates)
        super().__init__(
            f"no unused source for {element} on level {level}; exhausted: [{names}]"
        )


class ModelViolation(CPGraphError):
    """A blow-up isomorphism scatters the copies of one class."""


class ExtensionError(CPGraphError, ValueError):
    """Class multiplicities differ, so no extension exists."""


class SearchBudgetExceeded(CPGraphError):
    """Exhaustive search stopped before it could decide."""
