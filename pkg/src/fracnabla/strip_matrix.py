r"""Lower triangular strip systems for linear fractional nabla IVPs.

Each equation family reduces to :math:`L \tilde{u} = r` with :math:`L` lower
triangular. Below the diagonal, :math:`L` is either Toeplitz (single-term
equations) or a Toeplitz matrix plus a row-scaled Toeplitz matrix (two-term
equations):

.. math::

    L_{ij} = h_{-\beta-1}(i - j + 1, 0) + a_i\, h_{-\alpha-1}(i - j + 1, 0),
    \qquad L_{ii} = 1 + a_i + b_i.

:class:`StripSystem` stores only the two weight sequences and the per-row
coefficients; :func:`forward_solve` rebuilds rows on the fly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from fracnabla.errors import DomainError, SingularSystemError
from fracnabla.grid import GridLike, tabulate
from fracnabla.specfun import WeightSequence, monomial_weight_sequence

__all__ = [
    "StripSystem",
    "assemble_single_caputo",
    "assemble_single_rl",
    "assemble_two_term_caputo",
    "assemble_two_term_rl",
    "forward_solve",
    "two_term_caputo_forcing",
]

SINGULAR_RTOL = 1.0e-14


@dataclass(frozen=True)
class StripSystem:
    """Implicit lower triangular system ``L u = rhs``.

    Row ``i`` (0-based) is the equation at grid point ``first_t + i``. For
    ``j < i`` the matrix entry is ``primary.values[i - j] +
    row_coeff_a[i] * secondary.values[i - j]`` and the diagonal is
    ``1 + diag_shift[i]``.
    """

    primary: WeightSequence
    diag_shift: np.ndarray
    rhs: np.ndarray
    secondary: WeightSequence | None = None
    row_coeff_a: np.ndarray | None = None
    first_t: int = 1

    @property
    def size(self) -> int:
        return self.rhs.size

    @property
    def diagonal(self) -> np.ndarray:
        return 1.0 + self.diag_shift

    def entry(self, i: int, j: int) -> float:
        """Matrix entry ``L[i, j]`` with 0-based indices."""
        if j > i:
            return 0.0
        if i == j:
            return float(1.0 + self.diag_shift[i])
        value = self.primary.values[i - j]
        if self.secondary is not None:
            value += self.row_coeff_a[i] * self.secondary.values[i - j]
        return float(value)

    def to_dense(self) -> np.ndarray:
        """Materialize ``L``; meant for inspection and tests on small systems."""
        n = self.size
        return np.array([[self.entry(i, j) for j in range(n)] for i in range(n)])

    def check_nonsingular(self) -> None:
        diag = self.diagonal
        bad = np.abs(diag) < SINGULAR_RTOL * (1.0 + np.abs(self.diag_shift))
        if np.any(bad):
            i = int(np.flatnonzero(bad)[0])
            t = self.first_t + i
            raise SingularSystemError(
                f"singular strip system: diagonal entry vanishes at t={t}", t=t
            )


def _grid(u: GridLike, horizon: int, name: str) -> np.ndarray:
    try:
        return tabulate(u, horizon).values
    except ValueError as exc:
        raise DomainError(f"{name}: {exc}") from exc


def _check_single_order(alpha: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"single-term order must lie in (0, 1], got {alpha!r}")


def _check_two_term_orders(alpha: float, beta: float) -> None:
    if not 0.0 < alpha < beta < 2.0:
        raise DomainError(
            f"two-term orders must satisfy 0 < alpha < beta < 2, "
            f"got alpha={alpha!r}, beta={beta!r}"
        )


def _single_system(a: np.ndarray, rhs: np.ndarray, alpha: float, m: int) -> StripSystem:
    system = StripSystem(
        primary=monomial_weight_sequence(-alpha - 1.0, m + 1),
        diag_shift=a[1 : m + 1].copy(),
        rhs=rhs,
        first_t=1,
    )
    system.check_nonsingular()
    return system


def assemble_single_rl(
    a: GridLike, f: GridLike, c: float, alpha: float, m: int
) -> StripSystem:
    r"""System for :math:`(\nabla^\alpha_0 u)(t) + a(t) u(t) = f(t)`, ``t = 1..m``,
    with ``u(0) = c``; the right side is ``F - c B`` with
    :math:`B_t = h_{-\alpha-1}(t + 1, 0)`."""
    _check_single_order(alpha)
    if m < 1:
        raise DomainError(f"horizon must be at least 1, got {m}")
    a = _grid(a, m, "a")
    f = _grid(f, m, "f")

    w = monomial_weight_sequence(-alpha - 1.0, m + 1).values
    rhs = f[1:] - c * w[1 : m + 1]
    return _single_system(a, rhs, alpha, m)


def assemble_single_caputo(
    a: GridLike, f: GridLike, c: float, alpha: float, m: int
) -> StripSystem:
    r"""Caputo counterpart of :func:`assemble_single_rl`: same matrix, right
    side ``F + c C`` with :math:`C_t = h_{-\alpha}(t, 0)`."""
    _check_single_order(alpha)
    if m < 1:
        raise DomainError(f"horizon must be at least 1, got {m}")
    a = _grid(a, m, "a")
    f = _grid(f, m, "f")

    h = monomial_weight_sequence(-alpha, m).values
    rhs = f[1:] + c * h
    return _single_system(a, rhs, alpha, m)


def assemble_two_term_rl(
    a: GridLike,
    b: GridLike,
    f: GridLike,
    c: float,
    d: float,
    alpha: float,
    beta: float,
    n: int,
    *,
    paper_pq: bool = False,
) -> StripSystem:
    r"""System for the sequential two-term equation

    .. math::

        (\nabla^\beta_0 u)(t) + a(t) (\nabla^\alpha_0 u)(t) + b(t) u(t) = f(t),
        \qquad t = 2..n,

    with ``u(0) = c`` and ``u(1) = d``. The unknowns are ``u(2)..u(n)``.

    The contributions of the initial values are expanded from the defining
    sums, giving

    .. math::

        r_t = f(t) - c\,[h_{-\beta-1}(t+1) + a(t) h_{-\alpha-1}(t+1)]
                   - d\,[h_{-\beta-1}(t) + a(t) h_{-\alpha-1}(t)].

    With ``paper_pq=True`` the vectors ``P_t = h_{-alpha-1}(t+1, 0)`` and
    ``Q_t = a(t) h_{-alpha-1}(t+1, 0)`` are used instead. They leave a
    nonzero residual and exist only for comparison runs.
    """
    _check_two_term_orders(alpha, beta)
    if n < 2:
        raise DomainError(f"horizon must be at least 2, got {n}")
    a = _grid(a, n, "a")
    b = _grid(b, n, "b")
    f = _grid(f, n, "f")

    wb = monomial_weight_sequence(-beta - 1.0, n + 1).values
    wa = monomial_weight_sequence(-alpha - 1.0, n + 1).values
    t = np.arange(2, n + 1)
    at = a[2:]

    # 1-based h(k) lives at index k - 1
    if paper_pq:
        p = wa[t]
        q = at * wa[t]
    else:
        p = wb[t] + at * wa[t]
        q = wb[t - 1] + at * wa[t - 1]
    rhs = f[2:] - c * p - d * q

    system = StripSystem(
        primary=monomial_weight_sequence(-beta - 1.0, n),
        secondary=monomial_weight_sequence(-alpha - 1.0, n),
        row_coeff_a=at.copy(),
        diag_shift=at + b[2:],
        rhs=rhs,
        first_t=2,
    )
    system.check_nonsingular()
    return system


def two_term_caputo_forcing(
    a: GridLike, f: GridLike, c: float, d: float, alpha: float, beta: float, n: int
) -> np.ndarray:
    r"""Right side ``g`` on ``0..n`` of the Riemann-Liouville equation
    equivalent to the two-term Caputo equation.

    Moves the initial-value corrections of both Caputo differences to the
    right side:

    .. math::

        g(t) = f(t) + \sum_{k<N_\beta} h_{k-\beta}(t-k+1, 0) (\nabla^k u)(k)
                    + a(t) \sum_{k<N_\alpha} h_{k-\alpha}(t-k+1, 0) (\nabla^k u)(k),

    where :math:`(\nabla^0 u)(0) = c` and :math:`(\nabla^1 u)(1) = d - c`.
    Entries at ``t < 2`` are left equal to ``f``.
    """
    a = _grid(a, n, "a")
    g = _grid(f, n, "f").copy()
    init = (c, d - c)
    t = np.arange(2, n + 1)

    def correction(order: float) -> np.ndarray:
        total = np.zeros(t.size)
        for k in range(math.ceil(order)):
            h = monomial_weight_sequence(k - order, n + 1).values
            total += h[t - k] * init[k]
        return total

    g[2:] += correction(beta) + a[2:] * correction(alpha)
    return g


def assemble_two_term_caputo(
    a: GridLike,
    b: GridLike,
    f: GridLike,
    c: float,
    d: float,
    alpha: float,
    beta: float,
    n: int,
    *,
    paper_pq: bool = False,
) -> StripSystem:
    """Caputo two-term system: rewrite as a Riemann-Liouville equation with
    right side :func:`two_term_caputo_forcing` and assemble that."""
    _check_two_term_orders(alpha, beta)
    if n < 2:
        raise DomainError(f"horizon must be at least 2, got {n}")
    g = two_term_caputo_forcing(a, f, c, d, alpha, beta, n)
    return assemble_two_term_rl(a, b, g, c, d, alpha, beta, n, paper_pq=paper_pq)


def forward_solve(system: StripSystem) -> np.ndarray:
    """Solve ``L u = rhs`` by row-wise forward substitution.

    Rows are rebuilt from the weight sequences, so the cost is
    ``O(size**2)`` time and ``O(size)`` extra memory.
    """
    system.check_nonsingular()
    n = system.size
    diag = system.diagonal
    wp = system.primary.values
    ws = system.secondary.values if system.secondary is not None else None
    u = np.zeros(n)

    for i in range(n):
        acc = system.rhs[i]
        if i:
            # history u[i-1], ..., u[0] meets weights h(2), ..., h(i+1)
            hist = u[i - 1 :: -1]
            acc -= np.dot(wp[1 : i + 1], hist)
            if ws is not None:
                acc -= system.row_coeff_a[i] * np.dot(ws[1 : i + 1], hist)
        u[i] = acc / diag[i]

    return u

