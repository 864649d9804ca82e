"""Membrane geometry, dielectric stack and electrode layout.

All quantities are SI (metres, farads). Micrometre input is converted at the
config boundary, see :mod:`hairopt.config`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

EPS0 = 8.854187817e-12  # F/m

UM = 1e-6

DEFAULT_EPS_R = 7.5
# eps_r at which the printed flat-sensitivity closed form gives 9.50e-12 F/rad
CALIBRATED_EPS_R = 11.59


@dataclass(frozen=True)
class Circular:
    R: float = 85 * UM

    def __post_init__(self):
        if not self.R > 0:
            raise ValueError(f"radius must be positive, got {self.R!r}")

    @property
    def extent(self) -> float:
        return self.R


@dataclass(frozen=True)
class Rectangular:
    """Rectangular membrane tilting about an axis through its centre.

    ``half_length`` runs along the tilt direction (torsion axis to edge),
    ``width`` along the torsion axis.
    """

    half_length: float = 85 * UM
    width: float = 170 * UM

    def __post_init__(self):
        if not (self.half_length > 0 and self.width > 0):
            raise ValueError("rectangle dimensions must be positive")

    @property
    def extent(self) -> float:
        return self.half_length


Shape = Circular | Rectangular


@dataclass(frozen=True)
class MembraneSpec:
    shape: Shape = field(default_factory=Circular)
    gap_d: float = 1.0 * UM
    t1: float = 1.0 * UM
    t2: float = 0.1 * UM
    eps_r: float = DEFAULT_EPS_R

    def __post_init__(self):
        for name in ("gap_d", "t1", "t2"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")
        if not self.eps_r > 1:
            raise ValueError(f"eps_r must exceed 1, got {self.eps_r!r}")

    @property
    def extent(self) -> float:
        """Distance from the torsion axis to the membrane edge."""
        return self.shape.extent

    @property
    def is_circular(self) -> bool:
        return isinstance(self.shape, Circular)


class Side(enum.Enum):
    PLUS = "plus"  # phi in [0, pi], x > 0
    MINUS = "minus"


@dataclass(frozen=True)
class ElectrodeLayout:
    r0: float = 0.0
    side: Side = Side.PLUS

    def __post_init__(self):
        if not self.r0 >= 0:
            raise ValueError(f"r0 must be non-negative, got {self.r0!r}")

    def check(self, spec: MembraneSpec) -> None:
        if self.r0 > spec.extent:
            raise ValueError(
                f"r0 = {self.r0:.6g} m exceeds membrane extent {spec.extent:.6g} m"
            )


def effective_gap(spec: MembraneSpec) -> float:
    """Air gap plus the nitride layers scaled by 1/eps_r."""
    return spec.gap_d + (spec.t1 + spec.t2) / spec.eps_r
