"""JSON run configuration.

Files carry lengths in micrometres, voltages in volts and mechanical
parameters in SI. The model keeps the file units so that serialising and
re-parsing is exact; the SI domain objects are built by the accessor
methods.
"""
from __future__ import annotations

import json
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .curvature import Approx, CurvatureModel, calibrate_Rc
from .errors import InvalidMeasurement, SchemaError, UnitError
from .geometry import (
    DEFAULT_EPS_R,
    UM,
    Circular,
    ElectrodeLayout,
    MembraneSpec,
    Rectangular,
    Side,
)
from .optimizer import Grid
from .quadrature import QuadSpec
from .tuning import MechanicalParams

SCHEMA_VERSION = 1

Length = Annotated[float, Field(gt=0)]


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class _Stack(_Strict):
    gap_um: Length = 1.0
    t1_um: Length = 1.0
    t2_um: Length = 0.1
    eps_r: Annotated[float, Field(gt=1)] = DEFAULT_EPS_R


class CircularMembrane(_Stack):
    shape: Literal["circular"] = "circular"
    R_um: Length = 85.0


class RectangularMembrane(_Stack):
    shape: Literal["rectangular"]
    half_length_um: Length = 85.0
    width_um: Length = 170.0


class CurvatureConfig(_Strict):
    edge_lift_um: Length | None = None
    R_c_um: Length | None = None
    approx: Approx = Approx.EXACT
    shift_to_electrode_edge: bool = True


class LayoutConfig(_Strict):
    r0_um: Annotated[float, Field(ge=0)] = 0.0
    side: Side = Side.PLUS


class SweepConfig(_Strict):
    start_um: Annotated[float, Field(ge=0)] = 0.0
    stop_um: Annotated[float, Field(ge=0)] | None = None  # None: membrane extent
    step_um: Length = 1.0


class TuningConfig(_Strict):
    J: Annotated[float, Field(gt=0)]
    S0: Annotated[float, Field(gt=0)]
    R_damp: Annotated[float, Field(ge=0)] = 0.0
    U_list: list[Annotated[float, Field(ge=0)]]


class QuadConfig(_Strict):
    rel_tol: Annotated[float, Field(gt=0, lt=1e-2)] = 1e-10
    max_refinements: Annotated[int, Field(ge=1)] = 20


Membrane = Annotated[Union[CircularMembrane, RectangularMembrane], Field(discriminator="shape")]


class RunConfig(_Strict):
    schema_version: Literal[1] = SCHEMA_VERSION
    membrane: Membrane = Field(default_factory=CircularMembrane)
    curvature: Literal["flat"] | CurvatureConfig = "flat"
    layout: LayoutConfig = Field(default_factory=LayoutConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    tuning: TuningConfig | None = None
    quad: QuadConfig = Field(default_factory=QuadConfig)

    @model_validator(mode="before")
    @classmethod
    def _default_shape(cls, data):
        m = data.get("membrane") if isinstance(data, dict) else None
        if isinstance(m, dict) and "shape" not in m:
            data = {**data, "membrane": {"shape": "circular", **m}}
        return data

    def membrane_spec(self) -> MembraneSpec:
        m = self.membrane
        if isinstance(m, CircularMembrane):
            shape = Circular(m.R_um * UM)
        else:
            shape = Rectangular(m.half_length_um * UM, m.width_um * UM)
        return MembraneSpec(shape, m.gap_um * UM, m.t1_um * UM, m.t2_um * UM, m.eps_r)

    def curvature_model(self) -> CurvatureModel:
        c = self.curvature
        if c == "flat":
            return CurvatureModel.flat()
        if c.R_c_um is not None:
            R_c = c.R_c_um * UM
        else:
            R_c = calibrate_Rc(c.edge_lift_um * UM, self.membrane_spec().extent)
        return CurvatureModel(R_c, c.shift_to_electrode_edge, c.approx)

    def electrode_layout(self) -> ElectrodeLayout:
        return ElectrodeLayout(self.layout.r0_um * UM, self.layout.side)

    def grid(self) -> Grid:
        s = self.sweep
        stop = self.membrane_spec().extent if s.stop_um is None else s.stop_um * UM
        return Grid(s.start_um * UM, stop, s.step_um * UM)

    def mechanical(self) -> MechanicalParams | None:
        t = self.tuning
        return None if t is None else MechanicalParams(t.J, t.S0, t.R_damp)

    def quad_spec(self) -> QuadSpec:
        return QuadSpec(self.quad.rel_tol, self.quad.max_refinements)


def _path(loc) -> str:
    # drop discriminator tags and union branch names pydantic inserts
    skip = {"circular", "rectangular", "CurvatureConfig", "literal['flat']"}
    return ".".join(str(p) for p in loc if str(p) not in skip)


def _semantic_checks(cfg: RunConfig) -> None:
    spec = cfg.membrane_spec()
    extent_um = spec.extent / UM
    c = cfg.curvature
    if c != "flat":
        if (c.edge_lift_um is None) == (c.R_c_um is None):
            raise SchemaError("curvature", "exactly one of edge_lift_um / R_c_um is required")
        if c.edge_lift_um is not None and not c.edge_lift_um < extent_um:
            raise UnitError("curvature.edge_lift_um", "edge lift must be smaller than the membrane extent")
        if c.R_c_um is not None and c.approx is Approx.EXACT and not c.R_c_um > extent_um:
            raise UnitError("curvature.R_c_um", "R_c must exceed the membrane extent")
    if cfg.layout.r0_um > extent_um:
        raise UnitError("layout.r0_um", "r0 exceeds the membrane extent")
    s = cfg.sweep
    stop = extent_um if s.stop_um is None else s.stop_um
    if stop < s.start_um:
        raise SchemaError("sweep", "stop_um precedes start_um")
    if stop > extent_um * (1 + 1e-12):
        raise UnitError("sweep.stop_um", "sweep extends past the membrane extent")


def parse_config(text: str | bytes) -> RunConfig:
    """Validate a JSON document into a :class:`RunConfig`."""
    try:
        raw = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SchemaError("", f"invalid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise SchemaError("", "top level must be an object")
    try:
        cfg = RunConfig.model_validate(raw)
    except ValidationError as exc:
        errs = exc.errors()
        # prefer the object branch of the "flat" | {...} curvature union
        err = next((e for e in errs if "literal['flat']" not in map(str, e["loc"])), errs[0])
        path = _path(err["loc"])
        if err["type"] in ("greater_than", "greater_than_equal") and path.endswith("_um"):
            raise UnitError(path, err["msg"]) from None
        raise SchemaError(path, err["msg"]) from None
    try:
        _semantic_checks(cfg)
    except InvalidMeasurement as exc:
        raise UnitError("curvature.edge_lift_um", str(exc)) from None
    return cfg


def serialize_config(cfg: RunConfig) -> str:
    return cfg.model_dump_json(indent=2, exclude_none=True)
