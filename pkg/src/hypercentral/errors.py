"""Exception types raised by the engine."""

from __future__ import annotations


class RingError(Exception):
    """Base class for all engine errors."""


class ParseError(RingError, ValueError):
    pass


class AxiomViolation(RingError):
    """Raised when operation tables fail a ring law.

    ``violations`` lists every failed law in checking order, each paired with
    the lexicographically first witness for it.
    """

    def __init__(self, violations: list[tuple[str, tuple[int, ...]]]):
        self.violations = list(violations)
        self.axiom, self.witness = self.violations[0]
        laws = ", ".join(f"{a} at {w}" for a, w in self.violations)
        super().__init__(f"ring axioms violated: {laws}")


class UnityMismatch(RingError):
    def __init__(self, one: int, witness: int):
        self.one = one
        self.witness = witness
        super().__init__(f"claimed unity {one} fails on element {witness}")


class SizeCapExceeded(RingError):
    def __init__(self, size: int, cap: int, what: str = "ring"):
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds cap {cap}")


class UnsupportedOrder(RingError, ValueError):
    pass


class NotAnIdeal(RingError):
    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(message)


class NotIdempotent(RingError):
    pass


class NotCentral(RingError):
    def __init__(self, element: int, witness: int):
        self.element = element
        self.witness = witness
        super().__init__(f"element {element} does not commute with {witness}")


class EmptySet(RingError, ValueError):
    pass


class PreconditionViolated(RingError, ValueError):
    pass


class ConstructionNotARing(RingError):
    """The literal element set of a construction is not closed."""

    def __init__(self, message: str, witness: tuple = ()):
        self.witness = witness
        super().__init__(message)


class DegreeOverflow(RingError, ValueError):
    pass


class UnknownExample(RingError, KeyError):
    pass


class NotApplicable(RingError):
    """The operation needs structure (usually a unity) the ring lacks."""
