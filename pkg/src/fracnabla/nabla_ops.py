r"""Definition-level fractional nabla sums and differences on ``0..m``.

Everything here is a direct transcription of the defining sums, with an
:math:`O(m^2)` cost over a full grid. The strip-matrix solver never calls into
this module, which makes it usable as an independent check.

For :math:`N - 1 < \alpha < N` and base point 0,

.. math::

    (\nabla^{-\alpha} u)(t) &= \sum_{s=0}^{t} h_{\alpha-1}(t - s + 1, 0)\, u(s), \\
    (\nabla^{\alpha} u)(t) &= \sum_{s=0}^{t} h_{-\alpha-1}(t - s + 1, 0)\, u(s),
        \quad t \ge N, \\
    (\nabla^{\alpha}_{*} u)(t) &= (\nabla^{\alpha} u)(t)
        - \sum_{k=0}^{N-1} h_{k-\alpha}(t - k + 1, 0)\, (\nabla^k u)(k).
"""

from __future__ import annotations

import math

import numpy as np

from fracnabla.errors import DomainError
from fracnabla.grid import GridFunction
from fracnabla.specfun import monomial_weight_sequence

__all__ = [
    "GridFunction",
    "caputo_difference",
    "caputo_initial_terms",
    "integer_nabla",
    "nabla_sum",
    "rl_difference",
]


def _as_grid(u: GridFunction | np.ndarray | list) -> GridFunction:
    if isinstance(u, GridFunction):
        if u.start != 0:
            raise DomainError(f"expected a grid starting at 0, got start={u.start}")
        return u
    return GridFunction(u)


def _convolve(weights: np.ndarray, u: np.ndarray, t: int) -> float:
    # sum_{s=0}^{t} w[t - s + 1] u(s), with w 1-based
    total = 0.0
    for s in range(t + 1):
        total += weights[t - s] * u[s]
    return total


def _check_fractional_order(alpha: float) -> int:
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"order must lie in (0, 2), got {alpha!r}")
    if float(alpha).is_integer():
        raise DomainError(
            f"order {alpha!r} is an integer; use integer_nabla instead"
        )
    return math.ceil(alpha)


def nabla_sum(u: GridFunction | np.ndarray | list, alpha: float) -> GridFunction:
    """Fractional nabla sum of order *alpha* based at 0, for ``t = 0..m``."""
    if not 0.0 < alpha < 2.0:
        raise DomainError(f"order must lie in (0, 2), got {alpha!r}")
    u = _as_grid(u)
    m = u.horizon
    w = monomial_weight_sequence(alpha - 1.0, m + 1).values
    return GridFunction([_convolve(w, u.values, t) for t in range(m + 1)])


def rl_difference(u: GridFunction | np.ndarray | list, alpha: float) -> GridFunction:
    """Riemann-Liouville nabla difference of non-integer order ``alpha in (0, 2)``.

    The result is defined for ``t = N..m`` with ``N = ceil(alpha)`` and is
    returned as a grid starting at ``N``.
    """
    n = _check_fractional_order(alpha)
    u = _as_grid(u)
    m = u.horizon
    if m < n:
        raise DomainError(f"need a grid up to at least t={n}, got horizon {m}")

    w = monomial_weight_sequence(-alpha - 1.0, m + 1).values
    return GridFunction([_convolve(w, u.values, t) for t in range(n, m + 1)], start=n)


def caputo_initial_terms(
    u: GridFunction | np.ndarray | list, alpha: float
) -> GridFunction:
    r"""The correction :math:`\sum_{k<N} h_{k-\alpha}(t-k+1, 0) (\nabla^k u)(k)`
    that separates the Caputo from the Riemann-Liouville difference, for
    ``t = N..m``."""
    n = _check_fractional_order(alpha)
    u = _as_grid(u)
    m = u.horizon
    if m < n:
        raise DomainError(f"need a grid up to at least t={n}, got horizon {m}")

    total = np.zeros(m - n + 1)
    t = np.arange(n, m + 1)
    for k in range(n):
        h = monomial_weight_sequence(k - alpha, m + 1).values
        init = integer_nabla(u, k)(k)
        # h_{k-alpha}(t - k + 1, 0) sits at 0-based index t - k
        total += h[t - k] * init

    return GridFunction(total, start=n)


def caputo_difference(
    u: GridFunction | np.ndarray | list, alpha: float
) -> GridFunction:
    """Caputo nabla difference of non-integer order ``alpha in (0, 2)``, for
    ``t = N..m``."""
    rl = rl_difference(u, alpha)
    init = caputo_initial_terms(u, alpha)
    return GridFunction(rl.values - init.values, start=rl.start)


def integer_nabla(u: GridFunction | np.ndarray | list, k: int) -> GridFunction:
    """Integer-order backward difference: identity for ``k = 0`` and
    ``u(t) - u(t - 1)`` on ``t = 1..m`` for ``k = 1``."""
    u = _as_grid(u)
    if k == 0:
        return u
    if k == 1:
        if u.horizon < 1:
            raise DomainError("first difference needs at least two grid points")
        return GridFunction(np.diff(u.values), start=1)
    raise DomainError(f"unsupported difference order k={k!r}")
