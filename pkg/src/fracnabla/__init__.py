"""Numerical solutions of linear fractional nabla difference equations.

Equations are turned into lower triangular strip systems and solved by
forward substitution (:mod:`fracnabla.solver`); :mod:`fracnabla.verify`
checks the results against definition-level operators.
"""

from fracnabla.errors import DomainError, SingularSystemError, ValidationError
from fracnabla.grid import GridFunction
from fracnabla.solver import (
    ProblemSpec,
    Solution,
    eigen_caputo,
    eigen_rl,
    oscillation,
    relaxation,
    solve,
)
from fracnabla.specfun import monomial_weight_sequence, rising_factorial, taylor_monomial
from fracnabla.verify import direct_step_solve, residual

__all__ = [
    "DomainError",
    "GridFunction",
    "ProblemSpec",
    "SingularSystemError",
    "Solution",
    "ValidationError",
    "direct_step_solve",
    "eigen_caputo",
    "eigen_rl",
    "monomial_weight_sequence",
    "oscillation",
    "relaxation",
    "residual",
    "rising_factorial",
    "solve",
    "taylor_monomial",
]
