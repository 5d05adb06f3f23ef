"""Exception types raised throughout :mod:`fracnabla`."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument falls outside the domain of a special function or operator
    (a Gamma pole, an unsupported order, a grid that is too short)."""


class SingularSystemError(ArithmeticError):
    """A diagonal entry of a strip system vanishes.

    :attr:`t` is the first grid point at which the coefficient condition
    ``1 + a(t) != 0`` (or ``1 + a(t) + b(t) != 0``) fails.
    """

    def __init__(self, message: str, t: int | None = None) -> None:
        super().__init__(message)
        self.t = t


class ValidationError(ValueError):
    """A problem description is malformed or violates its invariants."""
