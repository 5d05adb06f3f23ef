r"""Rising factorials, Taylor monomials and their integer-grid weight sequences.

The nabla operators in this package are all convolutions against Taylor
monomials :math:`h_\mu(k, 0)` sampled at :math:`k = 1, 2, \dots`. Those samples
are produced by the ratio recurrence

.. math::

    h_\mu(1, 0) = 1, \qquad h_\mu(k + 1, 0) = h_\mu(k, 0) \frac{k + \mu}{k},

which never touches :math:`\Gamma` and therefore degrades gracefully at integer
orders (e.g. :math:`\mu = -2` gives the first difference weights ``[1, -1, 0, ...]``).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from fracnabla.errors import DomainError

__all__ = [
    "WeightSequence",
    "gamma",
    "monomial_weight_sequence",
    "rising_factorial",
    "taylor_monomial",
]

# keeps math.gamma clear of overflow above 171 and of subnormals below -170
_GAMMA_DIRECT_LIMIT = 150.0


def _is_pole(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def _gamma_sign(x: float) -> float:
    if x > 0:
        return 1.0
    return -1.0 if math.floor(x) % 2 else 1.0


def gamma(x: float) -> float:
    """:math:`\\Gamma(x)`, raising :class:`DomainError` at the poles."""
    if _is_pole(x):
        raise DomainError(f"gamma has a pole at {x!r}")
    try:
        return math.gamma(x)
    except OverflowError as exc:
        raise DomainError(f"gamma({x!r}) overflows") from exc


def rising_factorial(t: float, alpha: float) -> float:
    r"""Evaluate :math:`t^{\overline{\alpha}} = \Gamma(t + \alpha) / \Gamma(t)`.

    By convention :math:`0^{\overline{\alpha}} = 0`. Arguments beyond the
    range of :func:`math.gamma` go through :func:`math.lgamma` with explicit
    sign bookkeeping.

    :raises DomainError: if *t* or *t + alpha* is a non-positive integer and
        *t* is not zero.
    """
    t = float(t)
    alpha = float(alpha)
    if t == 0.0:
        return 0.0

    s = t + alpha
    if _is_pole(t):
        raise DomainError(f"rising factorial undefined: t={t!r} is a Gamma pole")
    if _is_pole(s):
        raise DomainError(
            f"rising factorial undefined: t + alpha = {s!r} is a Gamma pole"
        )
    if alpha == 0.0:
        return 1.0

    if abs(t) < _GAMMA_DIRECT_LIMIT and abs(s) < _GAMMA_DIRECT_LIMIT:
        try:
            return math.gamma(s) / math.gamma(t)
        except OverflowError:
            pass

    sign = _gamma_sign(s) * _gamma_sign(t)
    return sign * math.exp(math.lgamma(s) - math.lgamma(t))


def taylor_monomial(mu: float, t: float, a: float = 0.0) -> float:
    r"""Evaluate :math:`h_\mu(t, a) = (t - a)^{\overline{\mu}} / \Gamma(\mu + 1)`.

    :raises DomainError: if *mu* is a negative integer or ``t - a`` lies
        outside the domain of :func:`rising_factorial`.
    """
    mu = float(mu)
    if mu < 0 and mu.is_integer():
        raise DomainError(f"Taylor monomial undefined for integer order mu={mu!r}")
    return rising_factorial(t - a, mu) / gamma(mu + 1.0)


@dataclass(frozen=True)
class WeightSequence:
    r"""Samples :math:`h_\mu(k, 0)` for :math:`k = 1, \dots, n`.

    The samples are stored 0-based, i.e. ``values[k - 1]`` holds
    :math:`h_\mu(k, 0)`; use :meth:`at` for the 1-based lookup that matches
    the mathematical indexing.
    """

    mu: float
    """Order of the Taylor monomial family."""
    values: np.ndarray
    """Read-only array of the samples."""

    @property
    def length(self) -> int:
        return self.values.size

    def __len__(self) -> int:
        return self.values.size

    def at(self, k: int) -> float:
        """Return :math:`h_\\mu(k, 0)` for ``1 <= k <= length``."""
        if not 1 <= k <= self.values.size:
            raise IndexError(f"weight index {k} outside 1..{self.values.size}")
        return float(self.values[k - 1])


_cache: dict[float, np.ndarray] = {}
_cache_lock = threading.Lock()


def _extend(head: np.ndarray, mu: float, count: int) -> np.ndarray:
    n = head.size
    if n == 0:
        head = np.ones(1)
        n = 1
    if count <= n:
        return head
    k = np.arange(n, count, dtype=np.float64)
    # seeding cumprod with the last value keeps extensions bit-identical to a
    # sequence generated in one go
    tail = np.cumprod(np.concatenate([head[-1:], (k + mu) / k]))[1:]
    # adding 0.0 turns the -0.0 past an integer-order cutoff into 0.0
    return np.concatenate([head, tail + 0.0])


def monomial_weight_sequence(mu: float, count: int) -> WeightSequence:
    r"""Generate :math:`h_\mu(k, 0)` for :math:`k = 1, \dots, count`.

    Sequences are cached per *mu* and grown in place when a longer one is
    requested, so every call with the same *mu* sees a prefix of the same
    floating point values.
    """
    mu = float(mu)
    count = int(count)
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    if count == 0:
        values = np.empty(0)
        values.flags.writeable = False
        return WeightSequence(mu=mu, values=values)

    with _cache_lock:
        values = _cache.get(mu, np.empty(0))
        if values.size < count:
            values = _extend(values, mu, count)
            values.flags.writeable = False
            _cache[mu] = values

    return WeightSequence(mu=mu, values=values[:count])
