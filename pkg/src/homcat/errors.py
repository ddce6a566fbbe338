"""Shared exception types.

Checkers never raise on a *failed axiom* (failure is data, reported with
witnesses); exceptions are reserved for structural misuse and violated
preconditions.
"""

from __future__ import annotations


class HomcatError(Exception):
    pass


class StructuralError(HomcatError, ValueError):
    """Dimension mismatch or malformed structure data."""


class PreconditionError(HomcatError):
    """A documented precondition failed; carries the inner report if any."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class MorphismError(HomcatError):
    """A map failed validation; names the violated property and a witness."""

    def __init__(self, prop, witness=None):
        super().__init__(f"map is not a morphism: {prop} fails at {witness}")
        self.prop = prop
        self.witness = witness


class NoInverseError(HomcatError):
    """A convolution inverse does not exist; carries a failing basis pair."""

    def __init__(self, message, basis_pair=None):
        super().__init__(message)
        self.basis_pair = basis_pair


class DerivationError(HomcatError):
    """A solve-and-verify derivation had no (unique) solution."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual
