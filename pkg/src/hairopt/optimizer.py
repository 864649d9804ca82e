"""Sweeps of the electrode-less length r0 and the flat/curved/reduced report."""
from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .capacitance import SensorMetrics, closed_form_flat, metrics
from .curvature import CurvatureModel
from .errors import GapCollapse, NotBracketed
from .geometry import UM, ElectrodeLayout, MembraneSpec, Side
from .quadrature import QuadSpec

INV_PHI = (math.sqrt(5) - 1) / 2


class Objective(enum.Enum):
    SENSITIVITY = "sensitivity"
    KAPPA = "kappa"

    def of(self, m: SensorMetrics) -> float:
        return abs(m.dC_dalpha) if self is Objective.SENSITIVITY else m.kappa


@dataclass(frozen=True)
class Grid:
    start: float
    stop: float
    step: float

    def points(self) -> np.ndarray:
        if not self.step > 0:
            raise ValueError("grid step must be positive")
        if self.stop < self.start:
            raise ValueError("grid stop must not precede start")
        n = int(math.floor((self.stop - self.start) / self.step + 1e-9))
        return self.start + self.step * np.arange(n + 1)


@dataclass(frozen=True)
class SweepSample:
    r0: float
    metrics: SensorMetrics

    @property
    def C0(self) -> float:
        return self.metrics.C


@dataclass(frozen=True)
class SweepCurve:
    samples: tuple[SweepSample, ...]
    argmax_sensitivity: float
    argmax_kappa: float

    @property
    def r0(self) -> np.ndarray:
        return np.array([s.r0 for s in self.samples])

    def values(self, objective: Objective) -> np.ndarray:
        return np.array([objective.of(s.metrics) for s in self.samples])

    @property
    def capacitance(self) -> np.ndarray:
        return np.array([s.metrics.C for s in self.samples])


def _grid_points(spec: MembraneSpec, grid) -> np.ndarray:
    pts = grid.points() if isinstance(grid, Grid) else np.asarray(grid, dtype=float)
    if pts.ndim != 1 or pts.size == 0:
        raise ValueError("sweep grid must be a non-empty 1-D sequence")
    if np.any(np.diff(pts) <= 0):
        raise ValueError("sweep grid must be strictly increasing")
    extent = spec.extent
    # tolerate float round-off at the upper end of a start/stop/step grid
    pts = np.where((pts > extent) & (pts - extent < 1e-9 * extent), extent, pts)
    if pts[0] < 0 or pts[-1] > extent:
        raise ValueError(f"sweep grid must lie within [0, {extent:.6g}] m")
    return pts


def default_grid(spec: MembraneSpec) -> Grid:
    return Grid(0.0, spec.extent, 1 * UM)


def sweep_r0(spec: MembraneSpec, curv: CurvatureModel, grid: Sequence[float] | Grid | None = None,
             side: Side = Side.PLUS, q: QuadSpec = QuadSpec(),
             workers: int | None = None) -> SweepCurve:
    """Metrics at every grid r0. ``workers > 1`` evaluates samples concurrently."""
    pts = _grid_points(spec, default_grid(spec) if grid is None else grid)

    def one(r0: float) -> SweepSample:
        try:
            return SweepSample(float(r0), metrics(spec, ElectrodeLayout(float(r0), side), curv, q))
        except GapCollapse as exc:
            raise GapCollapse(f"r0 = {r0 / UM:.6g} um: {exc}", r0=float(r0)) from exc

    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            samples = tuple(pool.map(one, pts))
    else:
        samples = tuple(one(r) for r in pts)

    # np.argmax keeps the first (smallest r0) of tied maxima
    s = np.array([Objective.SENSITIVITY.of(x.metrics) for x in samples])
    k = np.array([Objective.KAPPA.of(x.metrics) for x in samples])
    return SweepCurve(samples, samples[int(np.argmax(s))].r0, samples[int(np.argmax(k))].r0)


def golden_max(f, a: float, b: float, tol: float) -> tuple[float, float]:
    """Shrink ``[a, b]`` around the maximum of unimodal ``f`` to width <= tol."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return a, b


def refine_optimum(spec: MembraneSpec, curv: CurvatureModel, metric: Objective,
                   bracket: tuple[float, float], side: Side = Side.PLUS,
                   q: QuadSpec = QuadSpec(), tol: float = 0.1 * UM,
                   probe_step: float = 1 * UM) -> float:
    """Locate the interior maximum of ``metric`` over r0 in ``bracket``.

    The bracket is first probed at ``probe_step``; a maximum sitting on
    either end means there is no interior optimum.
    """
    lo, hi = map(float, bracket)
    if not hi > lo:
        raise ValueError("bracket must satisfy lo < hi")

    def f(r0: float) -> float:
        return metric.of(metrics(spec, ElectrodeLayout(r0, side), curv, q))

    n = max(int(math.ceil((hi - lo) / probe_step)), 2)
    probes = np.linspace(lo, hi, n + 1)
    vals = [f(float(r)) for r in probes]
    i = int(np.argmax(vals))
    if i == 0 or i == n:
        raise NotBracketed(
            f"{metric.value} is monotone on [{lo / UM:.4g}, {hi / UM:.4g}] um "
            f"(max at {probes[i] / UM:.4g} um)"
        )
    a, b = golden_max(f, float(probes[i - 1]), float(probes[i + 1]), tol)
    return 0.5 * (a + b)


@dataclass(frozen=True)
class ComparisonReport:
    flat: SensorMetrics
    curved: SensorMetrics
    reduced: SensorMetrics
    r0_opt: float
    objective: Objective
    printed_flat: SensorMetrics | None = None

    def ratio(self, num: str, den: str, field: str) -> float:
        top, bottom = getattr(getattr(self, num), field), getattr(getattr(self, den), field)
        return abs(top) / abs(bottom)

    def ratios(self) -> dict[str, float]:
        out = {}
        for field, name in (("dC_dalpha", "sensitivity"), ("kappa", "kappa"), ("C", "C")):
            out[f"{name}_curved_over_flat"] = self.ratio("curved", "flat", field)
            out[f"{name}_reduced_over_curved"] = self.ratio("reduced", "curved", field)
        return out

    def format_table(self) -> str:
        lines = [
            f"{'membrane':<24}{'|dC/dalpha| [F/rad]':>22}{'kappa [F/rad^2]':>20}{'C [F]':>18}",
        ]
        rows = [("flat (intended)", self.flat), ("curved", self.curved),
                (f"reduced (r0={self.r0_opt / UM:.1f} um)", self.reduced)]
        if self.printed_flat is not None:
            rows.append(("flat, printed formulas", self.printed_flat))
        for label, m in rows:
            lines.append(f"{label:<24}{abs(m.dC_dalpha):>22.3e}{m.kappa:>20.3e}{m.C:>18.3e}")
        r = self.ratios()
        lines.append("")
        lines.append(f"curved/flat:    sensitivity {r['sensitivity_curved_over_flat']:.3f}"
                     f"  kappa {r['kappa_curved_over_flat']:.4f}")
        lines.append(f"reduced/curved: sensitivity {r['sensitivity_reduced_over_curved']:.3f}"
                     f"  kappa {r['kappa_reduced_over_curved']:.3f}")
        return "\n".join(lines)


def comparison_report(spec: MembraneSpec, curv: CurvatureModel,
                      objective: Objective = Objective.SENSITIVITY,
                      q: QuadSpec = QuadSpec(), grid: Sequence[float] | Grid | None = None,
                      curve: SweepCurve | None = None) -> ComparisonReport:
    """Flat, curved and reduced-at-optimum rows; pass ``curve`` to reuse a sweep."""
    flat = metrics(spec, ElectrodeLayout(0.0), CurvatureModel.flat(), q)
    curved = metrics(spec, ElectrodeLayout(0.0), curv, q)
    if curve is None:
        curve = sweep_r0(spec, curv, grid, q=q)
    r_grid = curve.argmax_sensitivity if objective is Objective.SENSITIVITY else curve.argmax_kappa
    r0s = curve.r0
    i = int(np.searchsorted(r0s, r_grid))
    r_opt = r_grid
    if 0 < i < len(r0s) - 1:
        r_opt = refine_optimum(spec, curv, objective, (r0s[i - 1], r0s[i + 1]), q=q,
                               probe_step=r0s[i + 1] - r0s[i - 1])
    reduced = metrics(spec, ElectrodeLayout(r_opt), curv, q)
    printed = closed_form_flat(spec) if spec.is_circular else None
    return ComparisonReport(flat, curved, reduced, r_opt, objective, printed)
