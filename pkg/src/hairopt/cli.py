"""``hairopt`` command line.

    hairopt metrics --config run.json [--out metrics.json]
    hairopt sweep   --config run.json [--out sweep.csv]
    hairopt report  --config run.json [--out report.json] [--objective kappa]
    hairopt tune    --config run.json [--out tune.csv]

Exit codes: 0 success, 2 configuration error, 3 computation error. Errors
are reported as a one-line JSON object on stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .capacitance import closed_form_flat, metrics
from .config import RunConfig, parse_config
from .errors import ComputationError, ConfigError, PastPullIn, SchemaError
from .geometry import UM
from .optimizer import Objective, comparison_report, sweep_r0
from .tuning import omega_eff, s_eff

EXIT_CONFIG = 2
EXIT_COMPUTE = 3


def _sig(x: float) -> float:
    """Round to 9 significant digits."""
    return float(f"{x:.8e}")


def _fmt(x: float) -> str:
    return f"{x:.8e}"


def _metrics_dict(m) -> dict:
    return {
        "C_F": _sig(m.C),
        "dCdalpha_F_per_rad": _sig(m.dC_dalpha),
        "kappa_F_per_rad2": _sig(m.kappa),
        "method": m.method.value,
    }


def cmd_metrics(cfg: RunConfig) -> str:
    spec, layout, curv = cfg.membrane_spec(), cfg.electrode_layout(), cfg.curvature_model()
    doc = {
        "schema_version": cfg.schema_version,
        "r0_um": layout.r0 / UM,
        "side": layout.side.value,
        "quadrature": _metrics_dict(metrics(spec, layout, curv, cfg.quad_spec())),
        "closed_form_as_printed": None,
    }
    if spec.is_circular and curv.is_flat and layout.r0 == 0:
        doc["closed_form_as_printed"] = _metrics_dict(closed_form_flat(spec))
    return json.dumps(doc, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_sweep(cfg: RunConfig, workers: int | None = None) -> str:
    curve = sweep_r0(cfg.membrane_spec(), cfg.curvature_model(), cfg.grid(),
                     side=cfg.layout.side, q=cfg.quad_spec(), workers=workers)
    rows = [
        (f"{s.r0 / UM:.6g}", _fmt(s.metrics.C), _fmt(abs(s.metrics.dC_dalpha)), _fmt(s.metrics.kappa))
        for s in curve.samples
    ]
    return _csv(("r0_um", "C_F", "dCdalpha_F_per_rad", "kappa_F_per_rad2"), rows)


def cmd_report(cfg: RunConfig, objective: Objective = Objective.SENSITIVITY) -> tuple[str, str]:
    """Return (JSON document, human-readable table)."""
    rep = comparison_report(cfg.membrane_spec(), cfg.curvature_model(), objective,
                            cfg.quad_spec(), grid=cfg.grid())
    rows = {"flat": rep.flat, "curved": rep.curved, "reduced": rep.reduced}
    doc = {
        "schema_version": cfg.schema_version,
        "objective": objective.value,
        "r0_opt_um": round(rep.r0_opt / UM, 6),
        "rows": {k: _metrics_dict(v) for k, v in rows.items()},
        "closed_form_flat_as_printed": None if rep.printed_flat is None else _metrics_dict(rep.printed_flat),
        "ratios": {k: _sig(v) for k, v in rep.ratios().items()},
    }
    return json.dumps(doc, indent=2) + "\n", rep.format_table() + "\n"


def cmd_tune(cfg: RunConfig) -> str:
    mech = cfg.mechanical()
    if mech is None:
        raise SchemaError("tuning", "tune requires a tuning section (J, S0, U_list)")
    kappa = metrics(cfg.membrane_spec(), cfg.electrode_layout(), cfg.curvature_model(),
                    cfg.quad_spec()).kappa
    rows = []
    for U in cfg.tuning.U_list:
        try:
            omega = _fmt(omega_eff(mech, kappa, U))
        except PastPullIn as exc:
            sys.stderr.write(f"hairopt: warning: {exc}\n")
            omega = ""
        rows.append((f"{U:.6g}", _fmt(s_eff(mech, kappa, U)), omega))
    return _csv(("U_V", "S_eff", "omega_eff_rad_s"), rows)


def _fail(kind: str, message: str, code: int, path: str | None = None) -> int:
    err = {"error": kind, "message": message}
    if path is not None:
        err["path"] = path
    sys.stderr.write(json.dumps(err) + "\n")
    return code


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hairopt", description=__doc__.split("\n\n")[0])
    p.add_argument("command", choices=("metrics", "sweep", "report", "tune"))
    p.add_argument("--config", required=True, help="JSON run configuration")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--objective", choices=[o.value for o in Objective], default="sensitivity",
                   help="optimum used for the reduced-electrode row of the report")
    p.add_argument("--workers", type=int, default=None, help="threads for sweep evaluation")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.config, "rb") as fh:
            cfg = parse_config(fh.read())
    except OSError as exc:
        return _fail("IOError", str(exc), EXIT_CONFIG)
    except ConfigError as exc:
        return _fail(type(exc).__name__, exc.reason, EXIT_CONFIG, exc.path)

    try:
        if args.command == "metrics":
            _write(cmd_metrics(cfg), args.out)
        elif args.command == "sweep":
            _write(cmd_sweep(cfg, args.workers), args.out)
        elif args.command == "report":
            doc, table = cmd_report(cfg, Objective(args.objective))
            _write(doc, args.out)
            # table goes wherever the JSON did not
            (sys.stderr if args.out is None else sys.stdout).write(table)
        else:
            _write(cmd_tune(cfg), args.out)
    except ConfigError as exc:
        return _fail(type(exc).__name__, exc.reason, EXIT_CONFIG, exc.path)
    except ComputationError as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_COMPUTE)
    except ValueError as exc:
        return _fail("ValueError", str(exc), EXIT_COMPUTE)
    return 0


if __name__ == "__main__":
    sys.exit(main())
