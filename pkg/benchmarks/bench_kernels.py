"""Compare the compiled and numpy kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times a single tilted-capacitance kernel call at several panel counts and a
full 86-point r0 sweep with each backend, and checks that both backends
agree.
"""
import argparse
import math
import time

from hairopt import UM, CurvatureModel, MembraneSpec, Rectangular, kernels, sweep_r0
from hairopt import _pykernels

try:
    from hairopt import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def use_backend(mod):
    kernels.polar_moment = mod.polar_moment
    kernels.line_moment = mod.line_moment


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    else:
        print("compiled kernels not built; timing the numpy fallback only")

    inv_rc = 1 / 1.2057e-3
    print(f"{'case':<34}" + "".join(f"{name:>14}" for name in backends) + f"{'speedup':>10}")
    for n in (2, 4, 8):
        row = []
        for mod in backends.values():
            t, _ = best_of(lambda: mod.polar_moment(
                kernels.NODES, kernels.WEIGHTS, 0.0, 85e-6, 0.0, math.pi, n, n,
                1, 0, 1, 1.1467e-6, 1e-3, inv_rc, True, 0.0), args.repeat)
            row.append(t)
        speed = f"{row[0] / row[-1]:>9.1f}x" if len(row) > 1 else ""
        print(f"{f'polar kernel, {n}x{n} panels':<34}" + "".join(f"{t * 1e6:>12.1f}us" for t in row) + speed)

    for label, spec in (("circular sweep, 86 r0", MembraneSpec()),
                        ("rectangular sweep, 86 r0", MembraneSpec(shape=Rectangular()))):
        curv = CurvatureModel.from_edge_lift(3 * UM, spec.extent)
        row, curves = [], []
        for mod in backends.values():
            use_backend(mod)
            t, c = best_of(lambda: sweep_r0(spec, curv), args.repeat)
            row.append(t)
            curves.append(c)
        speed = f"{row[0] / row[-1]:>9.1f}x" if len(row) > 1 else ""
        print(f"{label:<34}" + "".join(f"{t * 1e3:>12.2f}ms" for t in row) + speed)
        if len(curves) == 2:
            worst = max(abs(a.metrics.kappa / b.metrics.kappa - 1)
                        for a, b in zip(curves[0].samples, curves[1].samples) if b.metrics.kappa)
            print(f"{'':<34}max backend kappa difference {worst:.1e}")


if __name__ == "__main__":
    main()
