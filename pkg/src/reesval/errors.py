"""Exceptions shared by the library and the command-line front end."""

from __future__ import annotations


class InvalidInput(ValueError):
    """An argument violates an operation's contract (wrong ring, bad range, ...)."""


class ParseError(InvalidInput):
    """Base class for ideal/ring expression errors; carries a 1-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"col {position}: {message}")
        self.position = position


class IdealSyntaxError(ParseError):
    """The expression does not match the grammar."""


class UnknownVariableError(ParseError):
    def __init__(self, name: str, position: int):
        super().__init__(f"unknown variable {name!r}", position)
        self.name = name


class ZeroExponentError(ParseError):
    def __init__(self, position: int):
        super().__init__("exponent 0 is not allowed in a factor", position)


class EmptyIdealError(ParseError):
    def __init__(self, position: int = 1):
        super().__init__("ideal expression is empty", position)


class NotStabilized(RuntimeError):
    """The associated-prime chain did not reach the valuation centers in time.

    Either the cap is too small or something upstream is wrong; callers must
    treat this as an error, never as a silent pass.
    """

    def __init__(self, n_cap: int, chain):
        self.n_cap = n_cap
        self.chain = tuple(chain)
        super().__init__(
            f"associated primes of closure powers did not stabilize within n <= {n_cap}"
        )
