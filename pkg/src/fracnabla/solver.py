"""Problem-level API for linear fractional nabla initial value problems.

A :class:`ProblemSpec` describes one of four equation families

* ``single_rl``:     ``(∇^α u)(t) + a(t) u(t) = f(t)``, ``t = 1..m``, ``u(0) = c``
* ``single_caputo``: the same with the Caputo difference
* ``two_rl``:        ``(∇^β u)(t) + a(t) (∇^α u)(t) + b(t) u(t) = f(t)``,
  ``t = 2..n``, ``u(0) = c``, ``u(1) = d``
* ``two_caputo``:    the same with Caputo differences

and :func:`solve` turns it into a strip system and forward-substitutes.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from fracnabla.errors import SingularSystemError, ValidationError
from fracnabla.grid import GridFunction, GridLike, tabulate
from fracnabla.specfun import monomial_weight_sequence
from fracnabla.strip_matrix import (
    assemble_single_caputo,
    assemble_single_rl,
    assemble_two_term_caputo,
    assemble_two_term_rl,
    forward_solve,
)

__all__ = [
    "KINDS",
    "ProblemSpec",
    "Solution",
    "eigen_caputo",
    "eigen_rl",
    "example_forcing",
    "oscillation",
    "relaxation",
    "solve",
]

KINDS = ("single_rl", "single_caputo", "two_rl", "two_caputo")


@dataclass(frozen=True)
class ProblemSpec:
    """Full description of one initial value problem.

    Coefficients and forcing may be given as scalars, sequences, callables of
    the integer grid point, or :class:`GridFunction` instances; they are
    tabulated on ``0..horizon`` at construction.
    """

    kind: str
    alpha: float
    coeff_a: GridLike
    forcing: GridLike
    initial_c: float
    horizon: int
    beta: Optional[float] = None
    coeff_b: Optional[GridLike] = None
    initial_d: Optional[float] = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValidationError(f"unknown problem kind {self.kind!r}")
        try:
            horizon = int(self.horizon)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"horizon must be an integer: {exc}") from exc
        if horizon != self.horizon:
            raise ValidationError(f"horizon must be an integer, got {self.horizon!r}")
        object.__setattr__(self, "horizon", horizon)

        alpha = float(self.alpha)
        object.__setattr__(self, "alpha", alpha)
        if not math.isfinite(float(self.initial_c)):
            raise ValidationError("initial value u(0) must be finite")
        object.__setattr__(self, "initial_c", float(self.initial_c))

        if self.two_term:
            if self.beta is None or self.initial_d is None:
                raise ValidationError(f"{self.kind} needs beta and u(1)")
            beta = float(self.beta)
            object.__setattr__(self, "beta", beta)
            object.__setattr__(self, "initial_d", float(self.initial_d))
            if not 0.0 < alpha < beta < 2.0:
                raise ValidationError(
                    f"orders must satisfy 0 < alpha < beta < 2, "
                    f"got alpha={alpha}, beta={beta}"
                )
            if horizon < 2:
                raise ValidationError(f"{self.kind} needs horizon >= 2, got {horizon}")
            if not math.isfinite(self.initial_d):
                raise ValidationError("initial value u(1) must be finite")
        else:
            if self.beta is not None or self.initial_d is not None:
                raise ValidationError(f"{self.kind} takes neither beta nor u(1)")
            if self.coeff_b is not None:
                raise ValidationError(f"{self.kind} takes no coefficient b")
            if not 0.0 < alpha <= 1.0:
                raise ValidationError(f"order must lie in (0, 1], got alpha={alpha}")
            if horizon < 1:
                raise ValidationError(f"{self.kind} needs horizon >= 1, got {horizon}")

        for attr in ("coeff_a", "forcing", "coeff_b"):
            value = getattr(self, attr)
            if value is None:
                if attr == "coeff_b" and self.two_term:
                    value = 0.0
                else:
                    continue
            try:
                object.__setattr__(self, attr, tabulate(value, horizon))
            except ValueError as exc:
                raise ValidationError(f"{attr}: {exc}") from exc

        shift = self.coeff_a.values.copy()
        if self.two_term:
            shift += self.coeff_b.values
        first = self.first_t
        bad = np.flatnonzero(1.0 + shift[first:] == 0.0)
        if bad.size:
            t = int(bad[0]) + first
            raise SingularSystemError(
                f"coefficient condition violated: diagonal vanishes at t={t}", t=t
            )

    @property
    def two_term(self) -> bool:
        return self.kind.startswith("two")

    @property
    def caputo(self) -> bool:
        return self.kind.endswith("caputo")

    @property
    def first_t(self) -> int:
        """First grid point at which the equation is imposed."""
        return 2 if self.two_term else 1

    @property
    def initial_values(self) -> list[float]:
        if self.two_term:
            return [self.initial_c, self.initial_d]
        return [self.initial_c]


@dataclass(frozen=True)
class Solution:
    """Solved grid values on ``0..horizon``, initial values included."""

    values: GridFunction
    problem: ProblemSpec
    solve_time: float = 0.0
    residual_max: Optional[float] = None
    meta: dict = field(default_factory=dict)


def _assemble(problem: ProblemSpec, paper_pq: bool):
    p = problem
    if p.kind == "single_rl":
        return assemble_single_rl(p.coeff_a, p.forcing, p.initial_c, p.alpha, p.horizon)
    if p.kind == "single_caputo":
        return assemble_single_caputo(
            p.coeff_a, p.forcing, p.initial_c, p.alpha, p.horizon
        )
    assemble = assemble_two_term_rl if p.kind == "two_rl" else assemble_two_term_caputo
    return assemble(
        p.coeff_a,
        p.coeff_b,
        p.forcing,
        p.initial_c,
        p.initial_d,
        p.alpha,
        p.beta,
        p.horizon,
        paper_pq=paper_pq,
    )


def solve(problem: ProblemSpec, *, paper_pq: bool = False) -> Solution:
    """Solve *problem* by the triangular strip-matrix method.

    ``paper_pq`` switches two-term problems to the alternative initial-value
    vectors described in :func:`~fracnabla.strip_matrix.assemble_two_term_rl`.
    """
    start = time.perf_counter()
    system = _assemble(problem, paper_pq)
    u = forward_solve(system)
    values = GridFunction(np.concatenate([problem.initial_values, u]))
    elapsed = time.perf_counter() - start
    return Solution(
        values=values,
        problem=problem,
        solve_time=elapsed,
        meta={"method": "strip_matrix", "paper_pq": paper_pq},
    )


def _check_lambda(lam: float) -> None:
    if not -1.0 < lam < 1.0:
        raise ValidationError(f"eigenvalue parameter must lie in (-1, 1), got {lam}")


def eigen_rl(alpha: float, lam: float, m: int) -> Solution:
    """``(∇^α u)(t) + λ u(t) = 0`` with ``u(0) = 1``.

    The result samples the discrete Mittag-Leffler type function
    ``ê_{α,α}(-λ, t^(α))`` on ``0..m``.
    """
    _check_lambda(lam)
    problem = ProblemSpec(
        kind="single_rl", alpha=alpha, coeff_a=lam, forcing=0.0, initial_c=1.0,
        horizon=m, name=f"eigen_rl(alpha={alpha}, lambda={lam})",
    )
    return solve(problem)


def eigen_caputo(alpha: float, lam: float, m: int) -> Solution:
    """Caputo version of :func:`eigen_rl`; samples ``ê_α(-λ, t^(α))``."""
    _check_lambda(lam)
    problem = ProblemSpec(
        kind="single_caputo", alpha=alpha, coeff_a=lam, forcing=0.0, initial_c=1.0,
        horizon=m, name=f"eigen_caputo(alpha={alpha}, lambda={lam})",
    )
    return solve(problem)


def relaxation(alpha: float, A: float, forcing: GridLike, c: float, m: int) -> Solution:
    """Fractional relaxation model ``(∇^α_* u)(t) + A u(t) = f(t)``, ``u(0) = c``."""
    problem = ProblemSpec(
        kind="single_caputo", alpha=alpha, coeff_a=A, forcing=forcing, initial_c=c,
        horizon=m, name=f"relaxation(alpha={alpha}, A={A})",
    )
    return solve(problem)


def oscillation(
    beta: float, B: float, forcing: GridLike, c: float, d: float, n: int
) -> Solution:
    """Fractional oscillation model ``(∇^β_* u)(t) + B u(t) = f(t)``, ``t = 2..n``.

    Routed through the two-term Caputo assembly with a zero middle
    coefficient, so the auxiliary order (``β/2``) has no influence.
    """
    problem = ProblemSpec(
        kind="two_caputo", alpha=beta / 2.0, beta=beta, coeff_a=0.0, coeff_b=B,
        forcing=forcing, initial_c=c, initial_d=d, horizon=n,
        name=f"oscillation(beta={beta}, B={B})",
    )
    return solve(problem)


def example_forcing(order: float):
    """Forcing ``f(t) = 2^-(t+1) - h_{-order}(t+1, 0)`` of the relaxation and
    oscillation examples, as a callable of ``t``."""

    def f(t: int) -> float:
        h = monomial_weight_sequence(-order, t + 1).values[t]
        return 2.0 ** -(t + 1) - h

    return f
