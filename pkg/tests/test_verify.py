import dataclasses

import numpy as np
import pytest

from fracnabla.errors import DomainError
from fracnabla.grid import GridFunction
from fracnabla.solver import ProblemSpec, solve
from fracnabla.verify import check, direct_step_solve, residual

from test_solver import random_problem

KINDS = ["single_rl", "single_caputo", "two_rl", "two_caputo"]


def corrupt(solution, t, delta):
    values = solution.values.values.copy()
    values[t] += delta
    return dataclasses.replace(solution, values=GridFunction(values))


@pytest.mark.parametrize(("kind", "expected"), [("single_rl", [1, 1 / 3, 7 / 36]), ("single_caputo", [1, 2 / 3, 5 / 9])])
def test_direct_step_hand_values(kind, expected):
    sol = direct_step_solve(ProblemSpec(kind, 0.5, 0.5, 0.0, 1.0, 2))
    assert sol.values.values.tolist() == pytest.approx(expected, abs=1e-15)


def test_direct_step_integer_order():
    sol = direct_step_solve(ProblemSpec("single_rl", 1.0, 0.0, 1.0, 0.0, 20))
    assert np.array_equal(sol.values.values, np.arange(21.0))


@pytest.mark.parametrize("kind", KINDS)
def test_residual_of_exact_small_solutions(kind, rng):
    p = random_problem(kind, rng, 3)
    assert residual(p, solve(p)).max_abs <= 1e-12


def test_residual_zero_problem():
    p = ProblemSpec("single_caputo", 0.5, 0.3, 0.0, 0.0, 10)
    report = residual(p, solve(p))
    assert report.max_abs == 0.0
    assert report.domain_start == 1
    assert [t for t, _ in report.per_point] == list(range(1, 11))


@pytest.mark.parametrize("kind", KINDS)
def test_residual_detects_corruption(kind, rng):
    p = random_problem(kind, rng, 12)
    sol = solve(p)
    for t in range(p.first_t, p.horizon + 1):
        assert residual(p, corrupt(sol, t, 1e-3)).max_abs > 1e-6


def test_residual_domain_mismatch():
    p = ProblemSpec("single_rl", 0.5, 0.3, 0.0, 1.0, 10)
    short = dataclasses.replace(solve(p), values=GridFunction(np.ones(5)))
    with pytest.raises(DomainError):
        residual(p, short)


def test_check_fills_residual():
    p = ProblemSpec("single_rl", 0.5, 0.3, 0.0, 1.0, 10)
    sol = solve(p)
    assert sol.residual_max is None
    assert check(p, sol).residual_max <= 1e-12


@pytest.mark.parametrize("kind", KINDS)
def test_oracle_equivalence(kind, rng):
    for _ in range(25):
        p = random_problem(kind, rng, int(rng.integers(2, 26)))
        matrix = solve(p).values.values
        direct = direct_step_solve(p).values.values
        assert np.max(np.abs(matrix - direct)) <= 1e-11 * max(1.0, np.max(np.abs(direct)))


def test_integer_order_beta_in_two_term():
    p = ProblemSpec("two_caputo", 0.4, 0.3, 1.0, 1.0, 15, beta=1.0, coeff_b=0.2, initial_d=2.0)
    sol = solve(p)
    assert residual(p, sol).max_abs <= 1e-12
    assert np.allclose(sol.values.values, direct_step_solve(p).values.values, rtol=1e-12)
