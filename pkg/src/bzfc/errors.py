"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: ParseError -> 2,
UnresolvedName -> 3, GuardError -> 4.
"""


class BZFCError(Exception):
    """Base class for all package-specific errors."""


class ParseError(BZFCError):
    """Raised on malformed input text.

    Carries the offset of the offending token and the set of token
    descriptions that would have been accepted there.
    """

    def __init__(self, message: str, position: int, expected: frozenset[str] = frozenset()):
        self.position = position
        self.expected = expected
        detail = f"{message} at position {position}"
        if expected:
            detail += " (expected " + ", ".join(sorted(expected)) + ")"
        super().__init__(detail)


class UnresolvedName(BZFCError):
    """A constant or variable in a formula has no binding."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unresolved name: {name!r}")


class GuardError(BZFCError):
    """Base class for violated size/precondition guards."""


class EmptyUniverse(GuardError):
    """A quantifier was evaluated over an empty universe."""

    def __init__(self):
        super().__init__("quantifier evaluated over an empty universe; declare one")


class NotPropositional(BZFCError):
    """Validity checking was asked about a non-propositional formula."""

    def __init__(self, what: str):
        super().__init__(f"validity checking needs a propositional formula; found {what}")


class DisjointnessViolation(BZFCError):
    """Two parts of a non-classical set share an element."""

    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} appears in more than one part")


class DomainError(BZFCError):
    """A function was applied to a set whose realm it does not cover."""

    def __init__(self, missing):
        self.missing = tuple(missing)
        listed = ", ".join(str(x) for x in self.missing)
        super().__init__(f"function does not cover realm elements: {listed}")


class NotInvertible(GuardError):
    """A para-real fails one of the three invertibility guards."""

    def __init__(self, guard: str):
        self.guard = guard
        super().__init__(f"not invertible: {guard}")


class PoolTooSmall(GuardError):
    """A pebble codomain is smaller than the realm to be counted."""


class GuardExceeded(GuardError):
    """A brute-force size guard was exceeded."""
