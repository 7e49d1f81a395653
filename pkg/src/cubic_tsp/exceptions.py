# -*- coding: utf-8 -*-

"""
Errors raised by the solver
"""


class RejectedInputError(ValueError):
    """
    A precondition of an operation is violated by its input.

    Parameters
    ----------
    message : str
        Description of the violation.
    certificate : object, optional
        Evidence for the violation, e.g. a CutSpec of weight < 3, a (vertex, degree) pair
        or a (line, column) position in a parsed file.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class OracleRefused(RejectedInputError):
    """The instance is larger than the vertex cap of the brute force oracle."""


class SolverError(RuntimeError):
    """An internal consistency check failed, which points to a violated upstream invariant."""
