"""Stress-induced sag of the membrane.

The sagged membrane is approximated by a circular arc of radius ``R_c``
touching the flat position at the hair base. With reduced electrodes the
sag is measured from the inner electrode edge, since the stressed chromium
starts there.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidMeasurement


class Approx(enum.Enum):
    EXACT = "exact"
    QUADRATIC = "quadratic"


@dataclass(frozen=True)
class CurvatureModel:
    """``R_c is None`` means a flat membrane."""

    R_c: float | None = None
    shift_to_electrode_edge: bool = True
    approx: Approx = Approx.EXACT

    def __post_init__(self):
        if self.R_c is not None and not self.R_c > 0:
            raise ValueError(f"R_c must be positive, got {self.R_c!r}")

    @classmethod
    def flat(cls) -> "CurvatureModel":
        return cls()

    @classmethod
    def curved(cls, R_c: float, shift_to_electrode_edge: bool = True,
               approx: Approx = Approx.EXACT) -> "CurvatureModel":
        return cls(R_c, shift_to_electrode_edge, approx)

    @classmethod
    def from_edge_lift(cls, edge_lift: float, extent: float, **kwargs) -> "CurvatureModel":
        return cls(calibrate_Rc(edge_lift, extent), **kwargs)

    @property
    def is_flat(self) -> bool:
        return self.R_c is None

    @property
    def inv_rc(self) -> float:
        return 0.0 if self.R_c is None else 1.0 / self.R_c

    def shift_for(self, r0: float) -> float:
        return r0 if self.shift_to_electrode_edge else 0.0

    def check_extent(self, extent: float) -> None:
        """Raise DomainError if the exact arc is undefined over ``[0, extent]``."""
        if self.R_c is not None and self.approx is Approx.EXACT and extent > self.R_c:
            raise DomainError(
                f"membrane extent {extent:.6g} m exceeds radius of curvature {self.R_c:.6g} m"
            )


def sag(s: float, R_c: float, approx: Approx = Approx.EXACT) -> float:
    """Extra gap of an arc of radius ``R_c`` at distance ``s`` from its apex."""
    if approx is Approx.QUADRATIC:
        return s * s / (2.0 * R_c)
    q = s / R_c
    if q > 1.0:
        raise DomainError(f"s = {s:.6g} m exceeds R_c = {R_c:.6g} m")
    # R_c (1 - sqrt(1 - q^2)) without the cancellation at small q
    return s * q / (1.0 + math.sqrt(1.0 - q * q))


def extra_gap(model: CurvatureModel, r: float, r0: float = 0.0) -> float:
    """Additional electrode-substrate separation at distance ``r`` from the axis."""
    if r < 0 or r0 < 0:
        raise ValueError("r and r0 must be non-negative")
    if model.R_c is None:
        return 0.0
    s = max(r - model.shift_for(r0), 0.0)
    return sag(s, model.R_c, model.approx)


def calibrate_Rc(edge_lift: float, extent: float) -> float:
    """Radius of the arc that rises ``edge_lift`` over ``extent``."""
    if not edge_lift > 0:
        raise InvalidMeasurement(f"edge lift must be positive, got {edge_lift!r}")
    if not edge_lift < extent:
        raise InvalidMeasurement(
            f"edge lift {edge_lift:.6g} m must be smaller than extent {extent:.6g} m"
        )
    return (extent * extent + edge_lift * edge_lift) / (2.0 * edge_lift)
