"""Pure Python float kernels, the fallback behind `kernels`.

Batch evaluation is vectorized with numpy, so it stays usable without the
compiled extension.  The nested ternary refiners are faithful scalar
transcriptions of the compiled loops: same operation order, so the two
backends agree to rounding.
"""

import numpy as np


def _obj_poly(x, y, sx, sy, dx, dy):
    tot = 0.0
    for i in range(len(sx)):
        rx = x - sx[i]
        ry = y - sy[i]
        best = dx[0] * rx + dy[0] * ry
        for j in range(1, len(dx)):
            v = dx[j] * rx + dy[j] * ry
            if v > best:
                best = v
        tot += best
    return tot


def _obj_lp(x, y, sx, sy, p):
    tot = 0.0
    for i in range(len(sx)):
        rx = abs(x - sx[i])
        ry = abs(y - sy[i])
        tot += (rx**p + ry**p) ** (1.0 / p)
    return tot


def objective_batch_poly(px, py, sx, sy, dx, dy):
    """Distance sums at many points; the norm is max over dual vertices."""
    rx = px[:, None, None] - sx[None, :, None]
    ry = py[:, None, None] - sy[None, :, None]
    vals = rx * dx[None, None, :] + ry * dy[None, None, :]
    return vals.max(axis=2).sum(axis=1)


def objective_batch_lp(px, py, sx, sy, p):
    rx = np.abs(px[:, None] - sx[None, :])
    ry = np.abs(py[:, None] - sy[None, :])
    return ((rx**p + ry**p) ** (1.0 / p)).sum(axis=1)


def _min_over_y(x, ylo, yhi, iters, obj, args):
    a = ylo
    b = yhi
    for _ in range(iters):
        third = (b - a) / 3.0
        m1 = a + third
        m2 = b - third
        if obj(x, m1, *args) <= obj(x, m2, *args):
            b = m2
        else:
            a = m1
    y = (a + b) / 2.0
    return y, obj(x, y, *args)


def _refine(xlo, xhi, ylo, yhi, iters, obj, args):
    a = xlo
    b = xhi
    for _ in range(iters):
        third = (b - a) / 3.0
        m1 = a + third
        m2 = b - third
        _, f1 = _min_over_y(m1, ylo, yhi, iters, obj, args)
        _, f2 = _min_over_y(m2, ylo, yhi, iters, obj, args)
        if f1 <= f2:
            b = m2
        else:
            a = m1
    x = (a + b) / 2.0
    y, val = _min_over_y(x, ylo, yhi, iters, obj, args)
    return x, y, val


def refine_nested_ternary_poly(xlo, xhi, ylo, yhi, iters, sx, sy, dx, dy):
    """Global minimum of a convex distance sum by ternary-in-ternary search."""
    return _refine(xlo, xhi, ylo, yhi, iters, _obj_poly, (sx, sy, dx, dy))


def refine_nested_ternary_lp(xlo, xhi, ylo, yhi, iters, sx, sy, p):
    return _refine(xlo, xhi, ylo, yhi, iters, _obj_lp, (sx, sy, p))
