"""Generic numerics: sign scans with refinement, implicit-curve tracing,
and finite-difference validation of closed-form derivatives.

All routines are deterministic: grids are regular and traces are seeded
explicitly, so identical inputs produce identical reports.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import TraceFailure

__all__ = ["ScanReport", "Polyline", "sign_scan", "trace_implicit",
           "fd_check"]

GRAD_COLLAPSE_TOL = 1e-7


@dataclass
class ScanReport:
    """Outcome of a sign/definiteness scan over a rectangular grid."""

    target: str
    grid: tuple
    min_value: float
    argmin: tuple
    max_value: float
    argmax: tuple
    witnesses: list
    verdict: str
    samples: int
    failures: int
    wall_time: float


@dataclass
class Polyline:
    """An ordered polyline approximating an implicit curve f = 0."""

    points: np.ndarray
    closed: bool
    max_residual: float
    mean_residual: float
    gradient_collapse: bool = False
    collapse_point: tuple | None = None

    def __len__(self):
        return len(self.points)


def _eval_field(f, X, Y):
    """Evaluate f on coordinate arrays, vectorized when possible."""
    try:
        Z = np.asarray(f(X, Y), dtype=float)
        if Z.shape != X.shape:
            raise ValueError
        return Z
    except Exception:
        Z = np.empty(X.shape)
        flat = Z.ravel()
        xf, yf = X.ravel(), Y.ravel()
        for i in range(flat.size):
            try:
                flat[i] = f(xf[i], yf[i])
            except Exception:
                flat[i] = np.nan
        return Z


def _scalar(f):
    def g(x, y):
        v = f(np.asarray([x]), np.asarray([y]))
        return float(np.asarray(v).ravel()[0])
    return g


def sign_scan(f, region, grid=(400, 400), refine_depth=4, tol=1e-10,
              target="field", max_witnesses=64):
    """Scan a scalar field for sign changes on a rectangle.

    Cells whose corners disagree in sign are refined recursively; for each
    sign-change cell at the deepest level a witness with |f| < tol is
    produced by bisection along a corner-to-corner segment. Evaluation
    failures (NaN) are counted, not fatal.
    """
    t0 = time.perf_counter()
    x0, x1, y0, y1 = region
    nx, ny = grid
    if nx < 2 or ny < 2:
        raise ValueError("grid must be at least 2x2")
    xs = np.linspace(x0, x1, nx)
    ys = np.linspace(y0, y1, ny)
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    Z = _eval_field(f, X, Y)
    failures = int(np.count_nonzero(~np.isfinite(Z)))
    samples = Z.size

    finite = Z[np.isfinite(Z)]
    if finite.size == 0:
        raise TraceFailure("field evaluation failed everywhere")
    imin = np.unravel_index(np.nanargmin(Z), Z.shape)
    imax = np.unravel_index(np.nanargmax(Z), Z.shape)
    min_value, argmin = float(Z[imin]), (float(X[imin]), float(Y[imin]))
    max_value, argmax = float(Z[imax]), (float(X[imax]), float(Y[imax]))

    sgn = np.sign(Z)
    change = np.zeros((nx - 1, ny - 1), dtype=bool)
    for dx in (0, 1):
        for dy in (0, 1):
            corner = sgn[dx:nx - 1 + dx, dy:ny - 1 + dy]
            change |= corner != sgn[:nx - 1, :ny - 1]
    cells = list(zip(*np.nonzero(change)))

    witnesses = []

    def bisect_segment(ax, ay, bx, by, fa, fb):
        for _ in range(200):
            mx, my = 0.5 * (ax + bx), 0.5 * (ay + by)
            fm = _eval_field(f, np.asarray([[mx]]), np.asarray([[my]]))[0, 0]
            if not math.isfinite(fm):
                return None
            if abs(fm) < tol:
                return (mx, my, fm)
            if (fm > 0) == (fa > 0):
                ax, ay, fa = mx, my, fm
            else:
                bx, by, fb = mx, my, fm
        return None

    def refine(cx0, cx1, cy0, cy1, depth, nsub=4):
        """Recursively subdivide a sign-change cell; at the deepest level
        bisect between opposite-sign corners."""
        gx = np.linspace(cx0, cx1, nsub + 1)
        gy = np.linspace(cy0, cy1, nsub + 1)
        GX, GY = np.meshgrid(gx, gy, indexing="ij")
        GZ = _eval_field(f, GX, GY)
        gs = np.sign(GZ)
        for i in range(nsub):
            for j in range(nsub):
                if len(witnesses) >= max_witnesses:
                    return
                quad = gs[i:i + 2, j:j + 2]
                if np.all(quad == quad[0, 0]) or not np.all(
                        np.isfinite(GZ[i:i + 2, j:j + 2])):
                    continue
                if depth > 0:
                    refine(gx[i], gx[i + 1], gy[j], gy[j + 1], depth - 1,
                           nsub)
                else:
                    corners = [(GX[i + a, j + b], GY[i + a, j + b],
                                GZ[i + a, j + b])
                               for a in (0, 1) for b in (0, 1)]
                    pos = [cr for cr in corners if cr[2] > 0]
                    neg = [cr for cr in corners if cr[2] <= 0]
                    if pos and neg:
                        w = bisect_segment(pos[0][0], pos[0][1],
                                           neg[0][0], neg[0][1],
                                           pos[0][2], neg[0][2])
                        if w is not None:
                            witnesses.append(w)

    for i, j in cells:
        if len(witnesses) >= max_witnesses:
            break
        refine(xs[i], xs[i + 1], ys[j], ys[j + 1], refine_depth)

    verdict = "sign-change" if witnesses else (
        "positive" if min_value > 0 else
        "negative" if max_value < 0 else "indeterminate")
    return ScanReport(target, (nx, ny), min_value, argmin, max_value,
                      argmax, witnesses, verdict, samples, failures,
                      time.perf_counter() - t0)


def _num_grad(f, x, y, h=1e-6):
    gx = (f(x + h, y) - f(x - h, y)) / (2 * h)
    gy = (f(x, y + h) - f(x, y - h)) / (2 * h)
    return gx, gy


def trace_implicit(f, seed, step=1e-3, max_len=10.0, grad=None,
                   tol=1e-10, direction=None, stop=None):
    """Trace the implicit curve f = 0 by predictor-corrector.

    The predictor steps along the unit tangent (perpendicular to the
    gradient); the corrector projects back onto the curve by Newton
    iterations. Tracing terminates on closure (return near the seed),
    on exceeding ``max_len`` of arc length, on gradient collapse
    (||grad f|| < 1e-7, flagged), or when the optional ``stop`` predicate
    returns True at a vertex.

    ``direction`` (a 2-vector) orients the first step; subsequent steps
    keep a consistent orientation.
    """
    if grad is None:
        grad = lambda x, y: _num_grad(f, x, y)

    def project(x, y):
        for _ in range(20):
            v = f(x, y)
            if abs(v) < tol:
                return x, y, v
            gx, gy = grad(x, y)
            n2 = gx * gx + gy * gy
            if n2 < GRAD_COLLAPSE_TOL ** 2:
                return None
            x -= v * gx / n2
            y -= v * gy / n2
        v = f(x, y)
        if abs(v) < 100 * tol:
            return x, y, v
        return None

    start = project(*seed)
    if start is None:
        raise TraceFailure(f"could not project seed {seed} onto the curve")
    x, y, v = start
    pts = [(x, y)]
    residuals = [abs(v)]
    prev_t = np.asarray(direction, dtype=float) if direction is not None \
        else None
    collapse = False
    collapse_point = None
    closed = False
    arclen = 0.0
    nmax = max(16, int(max_len / step) + 4)

    for k in range(nmax):
        gx, gy = grad(x, y)
        gn = math.hypot(gx, gy)
        if gn < GRAD_COLLAPSE_TOL:
            collapse = True
            collapse_point = (x, y)
            break
        tx, ty = -gy / gn, gx / gn
        if prev_t is not None and tx * prev_t[0] + ty * prev_t[1] < 0:
            tx, ty = -tx, -ty
        prev_t = np.asarray([tx, ty])
        nxt = project(x + step * tx, y + step * ty)
        if nxt is None:
            # try a smaller predictor step before giving up
            nxt = project(x + 0.25 * step * tx, y + 0.25 * step * ty)
            if nxt is None:
                pl = _mk_polyline(pts, residuals, False, collapse,
                                  collapse_point)
                raise TraceFailure("Newton projection failed mid-trace",
                                   partial=pl)
        xn, yn, vn = nxt
        gxn, gyn = grad(xn, yn)
        if math.hypot(gxn, gyn) < GRAD_COLLAPSE_TOL:
            collapse = True
            collapse_point = (xn, yn)
            pts.append((xn, yn))
            residuals.append(abs(vn))
            break
        arclen += math.hypot(xn - x, yn - y)
        x, y = xn, yn
        pts.append((x, y))
        residuals.append(abs(vn))
        if stop is not None and stop(x, y):
            break
        if k > 4 and math.hypot(x - pts[0][0], y - pts[0][1]) < 0.75 * step:
            closed = True
            break
        if arclen >= max_len:
            break

    return _mk_polyline(pts, residuals, closed, collapse, collapse_point)


def _mk_polyline(pts, residuals, closed, collapse, collapse_point):
    return Polyline(np.asarray(pts, dtype=float), closed,
                    float(np.max(residuals)), float(np.mean(residuals)),
                    collapse, collapse_point)


# -- finite differences -----------------------------------------------------

_STENCILS = {
    1: ([(1, 0.5), (-1, -0.5)], 1),
    2: ([(1, 1.0), (0, -2.0), (-1, 1.0)], 2),
    3: ([(2, 0.5), (1, -1.0), (-1, 1.0), (-2, -0.5)], 3),
    4: ([(2, 1.0), (1, -4.0), (0, 6.0), (-1, -4.0), (-2, 1.0)], 4),
}


def fd_derivative(f, x, y, order_x, order_y, h):
    """Central finite-difference estimate of a mixed partial derivative
    of f(x, y), composing 1-D second-order stencils."""
    if order_x == 0 and order_y == 0:
        return f(x, y)
    if order_x > 0:
        offs, power = _STENCILS[order_x]
        return sum(w * fd_derivative(f, x + k * h, y, 0, order_y, h)
                   for k, w in offs) / h ** power
    offs, power = _STENCILS[order_y]
    return sum(w * f(x, y + k * h) for k, w in offs) / h ** power


def fd_check(f, derivs, points, h=1e-5, h4=1e-3, scale_floor=1e-8):
    """Compare claimed derivative evaluators against finite differences.

    Parameters
    ----------
    f : callable (x, y) -> value
    derivs : dict mapping (order_x, order_y) to a callable (x, y)
    points : iterable of (x, y) sample points interior to the domain
    h : step for orders 1-3; h4 : step for total order 4

    Returns a dict mapping each multi-index to its maximum scaled relative
    error over the sample points. The scale per point is |closed value|,
    floored by the largest closed value seen for that derivative (times
    scale_floor) so that incidental zeros of a derivative do not blow up
    the quotient.
    """
    points = list(points)
    table = {}
    for key, claimed in derivs.items():
        ox, oy = key
        step = h4 if ox + oy >= 4 else h
        exact = [claimed(x, y) for (x, y) in points]
        scale = max((abs(e) for e in exact), default=1.0)
        floor = max(scale * scale_floor, 1e-300)
        worst = 0.0
        for (x, y), e in zip(points, exact):
            approx = fd_derivative(f, x, y, ox, oy, step)
            worst = max(worst, abs(approx - e) / max(abs(e), floor))
        table[key] = worst
    return table
