"""Exception types shared across the package."""


class SuperflatsError(Exception):
    """Base class for all package-specific errors."""


class SizeLimitError(SuperflatsError):
    """An input exceeds a configured size ceiling for exact computation."""


class ShapeError(SuperflatsError):
    """Matrix / index-set shapes are incompatible."""


class PreconditionError(SuperflatsError):
    """An operation's domain precondition is violated (named in the message)."""


class ParseError(SuperflatsError):
    """Malformed textual input (edge list, graph6, PEG format)."""


class AxiomError(SuperflatsError):
    """A point/line family violates one of the geometry axioms G1-G3."""

    def __init__(self, axiom: str, witness, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness
