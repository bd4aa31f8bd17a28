"""Tensor quadrature rules on rectangles."""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Callable

import numpy as np

from .schemas import QuadRule

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def _reference_rule(rule: QuadRule, grid: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on `[-1, 1]`."""

    if rule is QuadRule.gauss_legendre:
        return np.polynomial.legendre.leggauss(grid)
    intervals = grid if grid % 2 == 0 else grid + 1
    nodes = np.linspace(-1.0, 1.0, intervals + 1)
    weights = np.ones(intervals + 1)
    weights[1:-1:2] = 4
    weights[2:-1:2] = 2
    return nodes, weights * (2.0 / intervals) / 3


def nodes(rule: QuadRule, grid: int, lo: float, hi: float) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature nodes and weights on `[lo, hi]`.

    Args:
        `rule` (QuadRule): Gauss-Legendre, or composite Simpson over an even number of intervals.
        `grid` (int): Nodes (Gauss-Legendre) or intervals (Simpson).
        `lo` (float): Left end.
        `hi` (float): Right end.

    Returns:
        `tuple[np.ndarray, np.ndarray]`: Nodes and weights.
    """

    ref_nodes, ref_weights = _reference_rule(QuadRule(rule), grid)
    half = (hi - lo) / 2
    return lo + half * (ref_nodes + 1), half * ref_weights


def integrate_1d(fn: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, grid: int, rule: QuadRule) -> float:
    points, weights = nodes(rule, grid, lo, hi)
    return float(np.dot(weights, fn(points)))


def tensor_grid(rule: QuadRule, grid: int, box: tuple[float, float, float, float]):
    """Flattened nodes `(s, t)` and product weights on `[a, b] x [c, d]`."""

    a, b, c, d = box
    s, ws = nodes(rule, grid, a, b)
    t, wt = nodes(rule, grid, c, d)
    ss, tt = np.meshgrid(s, t, indexing='ij')
    return ss.ravel(), tt.ravel(), np.outer(ws, wt).ravel()


def refined(compute: Callable[[int], np.ndarray], grid: int) -> tuple[np.ndarray, float]:
    """Runs `compute` at `grid` and `2 * grid`.

    Returns:
        `tuple[np.ndarray, float]`: The finer result and the largest change relative to its largest entry.
    """

    coarse = np.asarray(compute(grid))
    fine = np.asarray(compute(2 * grid))
    scale = float(np.max(np.abs(fine), initial=0.0)) or 1.0
    change = float(np.max(np.abs(fine - coarse), initial=0.0)) / scale
    logger.debug('quadrature refinement %d -> %d changed results by %.3e relative', grid, 2 * grid, change)
    return fine, change
