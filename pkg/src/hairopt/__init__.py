"""Capacitive readout model and electrode optimization for artificial hair flow sensors."""
from .capacitance import (
    Method,
    SensorMetrics,
    capacitance,
    closed_form_flat,
    differential_sensitivity,
    ess_coefficient,
    fd_check,
    metrics,
    sensitivity,
)
from .curvature import Approx, CurvatureModel, calibrate_Rc, extra_gap
from .geometry import (
    EPS0,
    UM,
    Circular,
    ElectrodeLayout,
    MembraneSpec,
    Rectangular,
    Side,
    effective_gap,
)
from .kernels import BACKEND
from .optimizer import (
    ComparisonReport,
    Grid,
    Objective,
    SweepCurve,
    comparison_report,
    refine_optimum,
    sweep_r0,
)
from .quadrature import QuadSpec, integrate_polar, integrate_rect
from .tuning import (
    MechanicalParams,
    frequency_response,
    omega_eff,
    pull_in_voltage,
    s_eff,
)

__version__ = "0.1.0"
