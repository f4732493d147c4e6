"""Deterministic 1-D quadrature helpers.

Gauss-Legendre rules are exact for the smooth integrands used here once the
interval is split at the known kink locations, so every caller passes the
relevant kinks explicitly instead of relying on a high order.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

import numpy as np


@lru_cache(maxsize=32)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the ``order``-point Gauss-Legendre rule on [-1, 1]."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def integrate(fn: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
              order: int = 32, kinks: Iterable[float] = ()) -> float:
    """Integrate ``fn`` over [lo, hi], splitting at interior kink points.

    ``fn`` must accept an ndarray of abscissae and return values elementwise.
    """
    if hi <= lo:
        return 0.0
    edges = sorted({lo, hi, *(k for k in kinks if lo < k < hi)})
    nodes, weights = gauss_legendre(order)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (a + b), 0.5 * (b - a)
        total += half * float(np.dot(weights, fn(mid + half * nodes)))
    return total
