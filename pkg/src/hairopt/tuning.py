"""Electrostatic spring softening and the torsional second-order response."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoSoftening, PastPullIn, ResonanceSingular


@dataclass(frozen=True)
class MechanicalParams:
    J: float  # kg m^2
    S0: float  # N m / rad
    R_damp: float = 0.0  # N m s / rad

    def __post_init__(self):
        if not (self.J > 0 and self.S0 > 0 and self.R_damp >= 0):
            raise ValueError("need J > 0, S0 > 0, R_damp >= 0")

    @property
    def omega0(self) -> float:
        return math.sqrt(self.S0 / self.J)


def s_eff(mech: MechanicalParams, kappa: float, U: float) -> float:
    """Softened torsional stiffness S0 - U^2 kappa; may be negative."""
    return mech.S0 - U * U * kappa


# S_eff within this fraction of S0 below zero is round-off at pull-in
PULL_IN_RTOL = 1e-12


def _softened(mech: MechanicalParams, kappa: float, U: float) -> float:
    stiffness = s_eff(mech, kappa, U)
    if stiffness < -PULL_IN_RTOL * mech.S0:
        raise PastPullIn(f"U = {U:g} V is beyond pull-in (S_eff = {stiffness:.3e})")
    return 0.0 if stiffness <= PULL_IN_RTOL * mech.S0 else stiffness


def omega_eff(mech: MechanicalParams, kappa: float, U: float) -> float:
    if _softened(mech, kappa, U) == 0.0:
        return 0.0
    return mech.omega0 * math.sqrt(1.0 - kappa / mech.S0 * U * U)


def omega_eff_direct(mech: MechanicalParams, kappa: float, U: float) -> float:
    """sqrt(S_eff / J); same value as :func:`omega_eff` by another route."""
    return math.sqrt(_softened(mech, kappa, U) / mech.J)


def pull_in_voltage(mech: MechanicalParams, kappa: float) -> float:
    if not kappa > 0:
        raise NoSoftening("kappa must be positive for a finite pull-in voltage")
    return math.sqrt(mech.S0 / kappa)


def frequency_response(mech: MechanicalParams, kappa: float, U: float, omega):
    """Tilt per unit torque, 1 / (S_eff - J w^2 + i R w) [rad/(N m)].

    Accepts scalar or array ``omega``; returns complex of matching shape.
    """
    stiffness = _softened(mech, kappa, U)
    w = np.asarray(omega, dtype=float)
    denom = stiffness - mech.J * w * w + 1j * mech.R_damp * w
    if np.any(np.abs(denom) <= 1e-12 * mech.S0):
        raise ResonanceSingular("undamped response evaluated at resonance")
    h = 1.0 / denom
    return complex(h) if h.ndim == 0 else h


def peak_frequency(mech: MechanicalParams, kappa: float, U: float) -> float:
    """Frequency of maximum |H|; zero when too heavily damped for a peak."""
    w2 = omega_eff(mech, kappa, U) ** 2 - mech.R_damp**2 / (2 * mech.J**2)
    return math.sqrt(w2) if w2 > 0 else 0.0
