"""Real-valued functions on integer grids."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = ["GridFunction", "tabulate"]


@dataclass(frozen=True)
class GridFunction:
    """A function ``u`` sampled at ``t = start, start + 1, ..., horizon``.

    ``values[i]`` holds ``u(start + i)``. Most grids start at the origin;
    fractional differences of order in ``(N - 1, N)`` are only defined from
    ``t = N`` on and are returned with ``start = N`` instead of being padded.
    """

    values: np.ndarray
    start: int = 0

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64, copy=True).reshape(-1)
        if not np.all(np.isfinite(values)):
            bad = int(np.flatnonzero(~np.isfinite(values))[0]) + self.start
            raise ValueError(f"grid function is not finite at t={bad}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "start", int(self.start))

    @property
    def horizon(self) -> int:
        return self.start + self.values.size - 1

    @property
    def t(self) -> np.ndarray:
        """The grid points covered by :attr:`values`."""
        return np.arange(self.start, self.horizon + 1)

    def __len__(self) -> int:
        return self.values.size

    def __call__(self, t: int) -> float:
        i = t - self.start
        if not 0 <= i < self.values.size:
            raise IndexError(f"t={t} outside {self.start}..{self.horizon}")
        return float(self.values[i])

    def window(self, first: int, last: int) -> np.ndarray:
        """Values at ``t = first..last`` (inclusive)."""
        if first < self.start or last > self.horizon:
            raise IndexError(
                f"window {first}..{last} outside {self.start}..{self.horizon}"
            )
        return self.values[first - self.start : last - self.start + 1]


GridLike = Union[GridFunction, float, int, np.ndarray, list, Callable[[int], float]]


def tabulate(u: GridLike, horizon: int) -> GridFunction:
    """Coerce a scalar, sequence, callable or grid into a grid on ``0..horizon``.

    Callables are evaluated at each integer ``t``; sequences must have exactly
    ``horizon + 1`` entries (longer grids are truncated).
    """
    if isinstance(u, GridFunction):
        if u.start != 0 or u.horizon < horizon:
            raise ValueError(
                f"grid covers {u.start}..{u.horizon}, need 0..{horizon}"
            )
        if u.horizon == horizon:
            return u
        return GridFunction(u.values[: horizon + 1])
    if callable(u):
        return GridFunction([float(u(t)) for t in range(horizon + 1)])
    if np.isscalar(u):
        return GridFunction(np.full(horizon + 1, float(u)))

    values = np.asarray(u, dtype=np.float64).reshape(-1)
    if values.size < horizon + 1:
        raise ValueError(f"expected {horizon + 1} samples, got {values.size}")
    return GridFunction(values[: horizon + 1])
