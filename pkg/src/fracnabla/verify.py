"""Independent checks of strip-matrix solutions.

Two routes that share nothing with :mod:`fracnabla.strip_matrix` apart from
the weight sequences of :mod:`fracnabla.specfun`:

* :func:`residual` plugs a solution back into the equation, evaluating the
  fractional differences with the definition-level operators of
  :mod:`fracnabla.nabla_ops`;
* :func:`direct_step_solve` marches forward in ``t``, isolating ``u(t)`` from
  the defining sums at every step.
"""

from __future__ import annotations

import dataclasses
import math
import time
from dataclasses import dataclass

import numpy as np

from fracnabla.errors import DomainError, SingularSystemError
from fracnabla.grid import GridFunction
from fracnabla.nabla_ops import caputo_difference, integer_nabla, rl_difference
from fracnabla.solver import ProblemSpec, Solution
from fracnabla.specfun import monomial_weight_sequence

__all__ = [
    "DEFAULT_TOL",
    "ResidualReport",
    "check",
    "direct_step_solve",
    "residual",
]

DEFAULT_TOL = 1.0e-9


@dataclass(frozen=True)
class ResidualReport:
    """Pointwise absolute residuals over the equation's domain."""

    t: np.ndarray
    abs_residual: np.ndarray
    domain_start: int

    @property
    def max_abs(self) -> float:
        return float(np.max(self.abs_residual)) if self.abs_residual.size else 0.0

    @property
    def per_point(self) -> list[tuple[int, float]]:
        return [(int(t), float(r)) for t, r in zip(self.t, self.abs_residual)]


def _difference(u: GridFunction, order: float, caputo: bool) -> GridFunction:
    if order == 1.0:
        return integer_nabla(u, 1)
    if caputo:
        return caputo_difference(u, order)
    return rl_difference(u, order)


def residual(problem: ProblemSpec, solution: Solution) -> ResidualReport:
    """Evaluate ``|LHS - RHS|`` of *problem*'s equation at *solution*."""
    u = solution.values
    if u.start != 0 or u.horizon != problem.horizon:
        raise DomainError(
            f"solution covers {u.start}..{u.horizon}, "
            f"problem needs 0..{problem.horizon}"
        )

    first, last = problem.first_t, problem.horizon
    order = problem.beta if problem.two_term else problem.alpha
    lhs = _difference(u, order, problem.caputo).window(first, last).copy()
    a = problem.coeff_a.window(first, last)
    if problem.two_term:
        lhs += a * _difference(u, problem.alpha, problem.caputo).window(first, last)
        lhs += problem.coeff_b.window(first, last) * u.window(first, last)
    else:
        lhs += a * u.window(first, last)

    res = np.abs(lhs - problem.forcing.window(first, last))
    return ResidualReport(t=np.arange(first, last + 1), abs_residual=res, domain_start=first)


def check(problem: ProblemSpec, solution: Solution) -> Solution:
    """Return *solution* with :attr:`~Solution.residual_max` filled in."""
    report = residual(problem, solution)
    return dataclasses.replace(solution, residual_max=report.max_abs)


def _caputo_shift(order: float, u: list[float], t: int) -> float:
    # sum_{k < ceil(order)} h_{k - order}(t - k + 1, 0) (nabla^k u)(k)
    total = 0.0
    for k in range(math.ceil(order)):
        h = monomial_weight_sequence(k - order, t - k + 1).at(t - k + 1)
        init = u[0] if k == 0 else u[1] - u[0]
        total += h * init
    return total


def _history(order: float, u: list[float], t: int) -> float:
    # the defining sum of the R-L difference at t, without the s = t term
    w = monomial_weight_sequence(-order - 1.0, t + 1)
    return sum(w.at(t - s + 1) * u[s] for s in range(t))


def direct_step_solve(problem: ProblemSpec) -> Solution:
    """Solve *problem* by marching the defining equation forward in ``t``.

    The head weight of every nabla difference is 1, so each step reads

    ``(1 + a(t) [+ b(t)]) u(t) = f(t) - (history) + (Caputo shifts)``.
    """
    start = time.perf_counter()
    p = problem
    u = list(p.initial_values)
    a = p.coeff_a.values
    b = p.coeff_b.values if p.two_term else None
    f = p.forcing.values

    for t in range(p.first_t, p.horizon + 1):
        if p.two_term:
            rhs = f[t] - _history(p.beta, u, t) - a[t] * _history(p.alpha, u, t)
            if p.caputo:
                rhs += _caputo_shift(p.beta, u, t) + a[t] * _caputo_shift(p.alpha, u, t)
            diag = 1.0 + a[t] + b[t]
        else:
            rhs = f[t] - _history(p.alpha, u, t)
            if p.caputo:
                rhs += _caputo_shift(p.alpha, u, t)
            diag = 1.0 + a[t]
        if diag == 0.0:
            raise SingularSystemError(f"cannot isolate u({t}): zero diagonal", t=t)
        u.append(rhs / diag)

    elapsed = time.perf_counter() - start
    return Solution(
        values=GridFunction(u),
        problem=p,
        solve_time=elapsed,
        meta={"method": "direct_step"},
    )
