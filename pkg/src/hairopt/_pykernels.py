"""numpy implementation of the metric kernels (fallback for _ckernels).

Both kernels evaluate a composite tensor-product Gauss-Legendre rule on
uniform panels and return ``(sum, abs_sum)``; the absolute sum lets the
caller put a round-off floor under its convergence test.

Gap model shared by both::

    g = dprime + alpha * lever + a(max(u - shift, 0))
    a(s) = s**2 * k / (1 + sqrt(1 - (s*k)**2))   exact circle, k = 1/R_c
    a(s) = s**2 * k / 2                          quadratic

``k = 0`` is a flat membrane.
"""
import numpy as np


def _panel_points(lo, hi, n, nodes, weights):
    h = (hi - lo) / n
    t = 0.5 * (nodes + 1.0)
    pts = lo + h * (np.arange(n)[:, None] + t[None, :])
    wts = np.broadcast_to(0.5 * h * weights, (n, nodes.size))
    return pts.ravel(), wts.ravel()


def _sag(u, shift, inv_rc, exact):
    s = np.maximum(u - shift, 0.0)
    if exact:
        q = s * inv_rc
        return s * s * inv_rc / (1.0 + np.sqrt(1.0 - q * q))
    return 0.5 * s * s * inv_rc


def polar_moment(nodes, weights, r_lo, r_hi, phi_lo, phi_hi, n_r, n_phi,
                 r_pow, sin_pow, gap_pow, dprime, alpha, inv_rc, exact, shift):
    """Integrate r**r_pow sin(phi)**sin_pow / g**gap_pow dr dphi."""
    r, wr = _panel_points(r_lo, r_hi, n_r, nodes, weights)
    phi, wp = _panel_points(phi_lo, phi_hi, n_phi, nodes, weights)
    s = np.sin(phi)
    gap = dprime + _sag(r, shift, inv_rc, exact)[:, None] + alpha * r[:, None] * s[None, :]
    f = (r ** r_pow)[:, None] * (s ** sin_pow)[None, :] / gap ** gap_pow
    w = wr[:, None] * wp[None, :]
    fw = f * w
    return float(fw.sum()), float(np.abs(fw).sum())


def line_moment(nodes, weights, x_lo, x_hi, n_x, x_pow, gap_pow,
                dprime, alpha, inv_rc, exact, shift):
    """Integrate x**x_pow / g**gap_pow dx with lever arm x."""
    x, wx = _panel_points(x_lo, x_hi, n_x, nodes, weights)
    gap = dprime + alpha * x + _sag(x, shift, inv_rc, exact)
    fw = wx * x ** x_pow / gap ** gap_pow
    return float(fw.sum()), float(np.abs(fw).sum())
