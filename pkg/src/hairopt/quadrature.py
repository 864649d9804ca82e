"""Deterministic 2-D quadrature on polar and rectangular domains.

Composite tensor-product Gauss-Legendre rules on uniform panels. The panel
count per dimension grows by one each refinement; the difference between
consecutive levels is the error estimate. There is no adaptivity, so the
same inputs always walk the same node sets and give bit-identical results.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NoConvergence
from .kernels import NODES, WEIGHTS

ABS_FLOOR = 1e-30
# multiples of eps * sum|f w| treated as pure round-off
ROUNDOFF_FACTOR = 64.0


@dataclass(frozen=True)
class QuadSpec:
    rel_tol: float = 1e-10
    max_refinements: int = 20

    def __post_init__(self):
        if not 0 < self.rel_tol < 1e-2:
            raise ValueError(f"rel_tol must lie in (0, 1e-2), got {self.rel_tol!r}")
        if self.max_refinements < 1:
            raise ValueError("max_refinements must be at least 1")


def refine(level: Callable[[int], tuple[float, float]], q: QuadSpec) -> float:
    """Drive ``level(n_panels) -> (value, abs_value)`` until converged.

    Converged means the change from the previous level is within
    ``rel_tol * |value|``, the absolute floor, or the round-off level
    implied by ``abs_value``.
    """
    prev, _ = level(1)
    for k in range(1, q.max_refinements + 1):
        cur, mag = level(k + 1)
        change = abs(cur - prev)
        tol = max(q.rel_tol * abs(cur), ABS_FLOOR, ROUNDOFF_FACTOR * np.finfo(float).eps * mag)
        if change <= tol:
            return cur
        prev = cur
    raise NoConvergence(
        f"no convergence after {q.max_refinements} refinements "
        f"(last change {change:.3e}, value {cur:.6e})"
    )


def _points(lo: float, hi: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    h = (hi - lo) / n
    t = 0.5 * (NODES + 1.0)
    pts = lo + h * (np.arange(n)[:, None] + t[None, :])
    wts = np.broadcast_to(0.5 * h * WEIGHTS, pts.shape)
    return pts.ravel(), wts.ravel()


def _tensor_level(f, a_lo, a_hi, b_lo, b_hi):
    def level(n):
        a, wa = _points(a_lo, a_hi, n)
        b, wb = _points(b_lo, b_hi, n)
        A, B = np.meshgrid(a, b, indexing="ij")
        vals = np.broadcast_to(np.asarray(f(A, B), dtype=float), A.shape)
        fw = vals * (wa[:, None] * wb[None, :])
        if not np.all(np.isfinite(fw)):
            raise ValueError("integrand is not finite on the domain")
        return float(fw.sum()), float(np.abs(fw).sum())

    return level


def integrate_polar(f, r_lo, r_hi, phi_lo, phi_hi, q: QuadSpec = QuadSpec()) -> float:
    """Integral of ``f(r, phi)`` over ``[r_lo, r_hi] x [phi_lo, phi_hi]``.

    No Jacobian is applied: pass ``f * r`` for an area integral. ``f`` is
    called with broadcast numpy arrays and may return a scalar.
    """
    if not (r_hi > r_lo >= 0):
        raise ValueError(f"need r_hi > r_lo >= 0, got [{r_lo}, {r_hi}]")
    if not phi_hi > phi_lo:
        raise ValueError(f"need phi_hi > phi_lo, got [{phi_lo}, {phi_hi}]")
    return refine(_tensor_level(f, r_lo, r_hi, phi_lo, phi_hi), q)


def integrate_rect(f, x_lo, x_hi, y_lo, y_hi, q: QuadSpec = QuadSpec()) -> float:
    """Integral of ``f(x, y)`` over ``[x_lo, x_hi] x [y_lo, y_hi]``."""
    if not (x_hi > x_lo and y_hi > y_lo):
        raise ValueError("empty rectangle")
    return refine(_tensor_level(f, x_lo, x_hi, y_lo, y_hi), q)
