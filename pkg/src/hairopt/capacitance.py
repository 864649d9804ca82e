"""Capacitance, sensitivity and ESS coefficient of one half-membrane electrode.

Parallel-plate approximation: each area element contributes
``eps0 dA / g`` with local gap ``g = d' + alpha * lever + a(u - shift)``.
For the circular membrane the lever is ``r sin(phi)`` and the plus electrode
covers ``phi in [0, pi]``; for the rectangle the lever is ``x``. A positive
tilt opens the plus electrode's gap, so its sensitivity is negative.

Sensitivity and kappa are quadratures of the analytically differentiated
integrand at ``alpha = 0``::

    dC/dalpha = -eps0 * integral(lever * dA / g**2)
    kappa     =  eps0 * integral(lever**2 * dA / g**3)   # (1/2) d2C/dalpha2
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import kernels
from .curvature import Approx, CurvatureModel
from .errors import GapCollapse, InvalidStep, ShapeMismatch
from .geometry import EPS0, Circular, ElectrodeLayout, MembraneSpec, Side, effective_gap
from .quadrature import QuadSpec, refine


class Method(enum.Enum):
    QUADRATURE = "quadrature"
    CLOSED_FORM_AS_PRINTED = "closed_form_as_printed"


@dataclass(frozen=True)
class SensorMetrics:
    C: float
    dC_dalpha: float
    kappa: float
    method: Method = Method.QUADRATURE


# (lever power, sin power, gap power) per quantity; polar adds one r for dA
_C, _S, _K = (0, 0, 1), (1, 1, 2), (2, 2, 3)


def _sign(layout: ElectrodeLayout) -> float:
    return 1.0 if layout.side is Side.PLUS else -1.0


def min_gap(spec: MembraneSpec, layout: ElectrodeLayout, curv: CurvatureModel,
            alpha: float) -> float:
    """Smallest local gap over the electrode at tilt ``alpha``."""
    dprime = effective_gap(spec)
    lo, hi = layout.r0, spec.extent
    shift = curv.shift_for(layout.r0)
    beta = _sign(layout) * alpha

    def gap(u: float) -> float:
        s = max(u - shift, 0.0)
        a = 0.0
        if curv.R_c is not None:
            if curv.approx is Approx.QUADRATIC:
                a = s * s / (2.0 * curv.R_c)
            else:
                q = s / curv.R_c
                a = s * q / (1.0 + math.sqrt(1.0 - q * q))
        return dprime + a + min(beta, 0.0) * u

    candidates = [lo, hi]
    if beta < 0 and curv.R_c is not None:
        # a'(s) = |beta| at the interior minimum
        if curv.approx is Approx.QUADRATIC:
            s_star = -beta * curv.R_c
        else:
            s_star = -beta * curv.R_c / math.sqrt(1.0 + beta * beta)
        candidates.append(min(max(shift + s_star, lo), hi))
    return min(gap(u) for u in candidates)


def _check(spec, layout, curv, alpha):
    layout.check(spec)
    curv.check_extent(spec.extent)
    g = min_gap(spec, layout, curv, alpha)
    if not g > 0:
        raise GapCollapse(
            f"gap closes (min {g:.3e} m) at alpha = {alpha:.3e} rad, r0 = {layout.r0:.3e} m",
            r0=layout.r0,
        )


def _moment(spec: MembraneSpec, layout: ElectrodeLayout, curv: CurvatureModel,
            alpha: float, powers: tuple[int, int, int], q: QuadSpec) -> float:
    """Integral of lever**p / g**m over the electrode area (no eps0)."""
    lever_pow, sin_pow, gap_pow = powers
    lo, hi = layout.r0, spec.extent
    if hi <= lo:
        return 0.0
    dprime = effective_gap(spec)
    beta = _sign(layout) * alpha
    exact = curv.approx is Approx.EXACT
    shift = curv.shift_for(layout.r0)
    nodes, weights = kernels.NODES, kernels.WEIGHTS

    if isinstance(spec.shape, Circular):
        def level(n):
            return kernels.polar_moment(
                nodes, weights, lo, hi, 0.0, math.pi, n, n,
                lever_pow + 1, sin_pow, gap_pow, dprime, beta, curv.inv_rc, exact, shift,
            )
        return refine(level, q)

    width = spec.shape.width

    # integrand is independent of y along the torsion axis
    def level(n):
        v, m = kernels.line_moment(
            nodes, weights, lo, hi, n, lever_pow, gap_pow,
            dprime, beta, curv.inv_rc, exact, shift,
        )
        return width * v, width * m
    return refine(level, q)


def capacitance(spec: MembraneSpec, layout: ElectrodeLayout = ElectrodeLayout(),
                curv: CurvatureModel = CurvatureModel(), alpha: float = 0.0,
                q: QuadSpec = QuadSpec()) -> float:
    """Capacitance of the electrode at tilt ``alpha`` [F]."""
    _check(spec, layout, curv, alpha)
    return EPS0 * _moment(spec, layout, curv, alpha, _C, q)


def sensitivity(spec: MembraneSpec, layout: ElectrodeLayout = ElectrodeLayout(),
                curv: CurvatureModel = CurvatureModel(), q: QuadSpec = QuadSpec()) -> float:
    """Signed dC/dalpha at zero tilt [F/rad]; negative for the plus electrode."""
    _check(spec, layout, curv, 0.0)
    return -_sign(layout) * EPS0 * _moment(spec, layout, curv, 0.0, _S, q)


def ess_coefficient(spec: MembraneSpec, layout: ElectrodeLayout = ElectrodeLayout(),
                    curv: CurvatureModel = CurvatureModel(), q: QuadSpec = QuadSpec()) -> float:
    """kappa = (1/2) d2C/dalpha2 at zero tilt [F/rad^2]."""
    _check(spec, layout, curv, 0.0)
    return EPS0 * _moment(spec, layout, curv, 0.0, _K, q)


def metrics(spec: MembraneSpec, layout: ElectrodeLayout = ElectrodeLayout(),
            curv: CurvatureModel = CurvatureModel(), q: QuadSpec = QuadSpec()) -> SensorMetrics:
    _check(spec, layout, curv, 0.0)
    return SensorMetrics(
        C=EPS0 * _moment(spec, layout, curv, 0.0, _C, q),
        dC_dalpha=-_sign(layout) * EPS0 * _moment(spec, layout, curv, 0.0, _S, q),
        kappa=EPS0 * _moment(spec, layout, curv, 0.0, _K, q),
    )


def differential_sensitivity(spec: MembraneSpec, r0: float = 0.0,
                             curv: CurvatureModel = CurvatureModel(),
                             q: QuadSpec = QuadSpec()) -> float:
    """dC/dalpha of the (minus - plus) electrode pair; twice one electrode by symmetry."""
    plus = sensitivity(spec, ElectrodeLayout(r0, Side.PLUS), curv, q)
    minus = sensitivity(spec, ElectrodeLayout(r0, Side.MINUS), curv, q)
    return minus - plus


def closed_form_flat(spec: MembraneSpec) -> SensorMetrics:
    """Flat full circular electrode, using the expressions as published.

    These carry an extra factor pi (sensitivity) and 4 (kappa) relative to
    the integrals they are derived from; the published comparison table was
    computed with them, so they are kept verbatim for reproducing it.
    ``C`` is the plain half-disc parallel-plate value.
    """
    if not isinstance(spec.shape, Circular):
        raise ShapeMismatch("printed closed forms exist only for circular membranes")
    R = spec.shape.R
    d = effective_gap(spec)
    return SensorMetrics(
        C=EPS0 * math.pi * R**2 / (2 * d),
        dC_dalpha=(2.0 / 3.0) * math.pi * EPS0 * R**3 / d**2,
        kappa=EPS0 * math.pi * R**4 / (2 * d**3),
        method=Method.CLOSED_FORM_AS_PRINTED,
    )


def fd_check(spec: MembraneSpec, layout: ElectrodeLayout = ElectrodeLayout(),
             curv: CurvatureModel = CurvatureModel(), h: float = 1e-4,
             q: QuadSpec = QuadSpec(rel_tol=1e-13)) -> tuple[float, float]:
    """Central-difference (dC/dalpha, kappa) from capacitance() alone."""
    if not h > 0:
        raise InvalidStep(f"finite-difference step must be positive, got {h!r}")
    c_minus = capacitance(spec, layout, curv, -h, q)
    c_zero = capacitance(spec, layout, curv, 0.0, q)
    c_plus = capacitance(spec, layout, curv, h, q)
    return (c_plus - c_minus) / (2 * h), 0.5 * (c_plus - 2 * c_zero + c_minus) / h**2
