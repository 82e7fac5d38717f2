"""Doubly-covered elliptic coordinates and the regularized Hamiltonian.

Positions are described by confocal elliptic coordinates (lambda, nu)
with cosh(lambda) = r1 + r2 and cos(nu) = r1 - r2 (Centered frame,
primaries at (-1/2, 0) and (1/2, 0), inter-focal distance 1), nu running
over a full circle so that the chart doubly covers the plane. The
regularized Hamiltonian at energy c is

    Q = 2 p_lam^2 - 2 cosh(lam) - c cosh(lam)^2
      + 2 p_nu^2 + 2 (1-2mu) cos(nu) + c cos(nu)^2,

whose zero set is the compactified energy hypersurface. This module
builds the orthogonal tangent frame of that zero set, evaluates the
tangential Hessian and its closed-form determinant, the sign-governing
polynomial A(x, y) in the substituted variables x = cosh(lam),
y = cos(nu), the admissible-domain bounds, the threshold ladder ending
in c0(mu), and a brute-force convexity oracle over sampled zero sets.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.optimize import brentq

from .errors import (EnergyAboveCritical, FocalDegeneracy,
                     RootIsolationFailure, SingularPoint)
from .model import (CartesianPhasePoint, Frame, HillComponent,
                    ProblemParams)
from .scan import ScanReport

__all__ = [
    "EllipticPoint",
    "HessFrameData",
    "EllipticDomain",
    "Definiteness",
    "Verdict",
    "Thresholds",
    "elliptic_to_cartesian",
    "cartesian_to_elliptic",
    "Q_value",
    "hess_frame",
    "frame_vectors",
    "tangential_hessian_det",
    "tangential_hessian_definiteness",
    "A_value",
    "domain_bounds",
    "roots_ab",
    "eta",
    "thresholds",
    "convexity_verdict",
    "sample_zero_set",
    "oracle_convexity",
]


class Definiteness(Enum):
    POS_DEF = "posdef"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"


class Verdict(Enum):
    CONVEX = "convex"
    NONCONVEX = "nonconvex"


@dataclass(frozen=True)
class EllipticPoint:
    """Phase point (lambda, nu, p_lambda, p_nu) on the double cover;
    positions are always in the Centered frame."""

    lam: float
    nu: float
    p_lam: float
    p_nu: float


@dataclass(frozen=True)
class HessFrameData:
    """Gradient entries and Hessian diagonal of Q at a point.

    x = Q_lam, y = Q_nu, z = Q_{p_lam}, w = Q_{p_nu}; a = Q_{lam lam},
    b = Q_{nu nu}; the momentum diagonal entries cc = d = 4 identically
    (the coefficient usually called c is renamed cc here because c is
    the energy).
    """

    x: float
    y: float
    z: float
    w: float
    a: float
    b: float
    cc: float = 4.0
    d: float = 4.0


@dataclass(frozen=True)
class EllipticDomain:
    """Admissible rectangle in the substituted variables x = cosh(lam),
    y = cos(nu) for one Hill component."""

    x_range: tuple
    y_range: tuple
    component: HillComponent


def elliptic_to_cartesian(lam, nu):
    """Centered-frame position of elliptic coordinates (lam, nu)."""
    lam = np.asarray(lam, dtype=float)
    nu = np.asarray(nu, dtype=float)
    q1 = 0.5 * np.cosh(lam) * np.cos(nu)
    q2 = 0.5 * np.sinh(lam) * np.sin(nu)
    if q1.ndim == 0:
        return float(q1), float(q2)
    return q1, q2


def _coords_from_position(q1, q2):
    """(lam, nu) on the canonical branch nu in [0, pi], q2 >= 0."""
    r1 = math.hypot(q1 + 0.5, q2)
    r2 = math.hypot(q1 - 0.5, q2)
    ch = r1 + r2
    lam = math.acosh(max(ch, 1.0))
    cn = min(1.0, max(-1.0, r1 - r2))
    nu = math.acos(cn)
    if q2 < 0:
        nu = 2.0 * math.pi - nu
    return lam, nu


def _jacobian(lam, nu):
    """d(q1, q2)/d(lam, nu); its determinant is (cosh^2 - cos^2)/4."""
    return 0.5 * np.array([
        [math.sinh(lam) * math.cos(nu), -math.cosh(lam) * math.sin(nu)],
        [math.cosh(lam) * math.sin(nu), math.sinh(lam) * math.cos(nu)],
    ])


def cartesian_to_elliptic(pt: CartesianPhasePoint):
    """Both preimages of a Centered-frame phase point under the double
    cover; momenta are the Jacobian-transpose pullback (p_lam d lam +
    p_nu d nu = p1 dq1 + p2 dq2).

    The second preimage is (lam, 2 pi - nu) with p_nu negated.
    """
    if pt.frame is not Frame.CENTERED:
        raise ValueError("cartesian_to_elliptic expects the Centered frame")
    q1, q2 = pt.q
    lam, nu = _coords_from_position(q1, q2)
    if lam < 1e-12:
        raise FocalDegeneracy(
            "momentum pullback is singular at a focus (lambda = 0)")
    J = _jacobian(lam, nu)
    p_lam, p_nu = J.T @ np.asarray(pt.p, dtype=float)
    first = EllipticPoint(lam, nu % (2 * math.pi), float(p_lam), float(p_nu))
    second = EllipticPoint(lam, (2 * math.pi - nu) % (2 * math.pi),
                           float(p_lam), -float(p_nu))
    return first, second


def elliptic_to_cartesian_phase(ep: EllipticPoint):
    """Centered-frame phase point of an elliptic phase point."""
    q1, q2 = elliptic_to_cartesian(ep.lam, ep.nu)
    J = _jacobian(ep.lam, ep.nu)
    detJ = J[0, 0] * J[1, 1] - J[0, 1] * J[1, 0]
    if abs(detJ) < 1e-15:
        raise FocalDegeneracy("momentum push-forward singular at a focus")
    p = np.linalg.solve(J.T, np.array([ep.p_lam, ep.p_nu]))
    return CartesianPhasePoint((q1, q2), (float(p[0]), float(p[1])),
                               Frame.CENTERED)


# -- Q and its derivatives ---------------------------------------------------

def Q_value(ep, params, c):
    """Regularized Hamiltonian Q_c; accepts an EllipticPoint or arrays
    (lam, nu, p_lam, p_nu) as a tuple."""
    lam, nu, pl, pn = _unpack(ep)
    m = 1.0 - 2.0 * params.mu
    ch, cn = np.cosh(lam), np.cos(nu)
    q = (2.0 * pl ** 2 - 2.0 * ch - c * ch ** 2
         + 2.0 * pn ** 2 + 2.0 * m * cn + c * cn ** 2)
    return float(q) if np.isscalar(q) or np.ndim(q) == 0 else q


def _unpack(ep):
    if isinstance(ep, EllipticPoint):
        return ep.lam, ep.nu, ep.p_lam, ep.p_nu
    return ep


def _frame_arrays(lam, nu, pl, pn, params, c):
    """Gradient entries and Hessian diagonal of Q, vectorized."""
    m = 1.0 - 2.0 * params.mu
    ch, sh = np.cosh(lam), np.sinh(lam)
    cn, sn = np.cos(nu), np.sin(nu)
    x = -2.0 * sh * (1.0 + c * ch)
    y = -2.0 * sn * (m + c * cn)
    z = 4.0 * pl
    w = 4.0 * pn
    a = -2.0 * (2.0 * c * ch ** 2 + ch - c)
    b = -2.0 * (2.0 * c * cn ** 2 + m * cn - c)
    return x, y, z, w, a, b


def hess_frame(ep, params, c, tol=1e-12):
    """Closed-form frame data of Q at a phase point.

    Raises SingularPoint when the gradient of Q vanishes (never happens
    on the zero set for c < c_J).
    """
    lam, nu, pl, pn = _unpack(ep)
    x, y, z, w, a, b = _frame_arrays(lam, nu, pl, pn, params, c)
    if x * x + y * y + z * z + w * w < tol:
        raise SingularPoint("gradient of Q vanishes at this point")
    return HessFrameData(float(x), float(y), float(z), float(w),
                         float(a), float(b))


def frame_vectors(h: HessFrameData):
    """The orthogonal tangent frame X, Y, Z built from the gradient
    entries (each is orthogonal to grad Q = (x, y, z, w))."""
    x, y, z, w = h.x, h.y, h.z, h.w
    X = np.array([-y, x, w, -z])
    Y = np.array([-z, -w, x, y])
    Z = np.array([-w, z, -y, x])
    return X, Y, Z


def _projected_hessian(h: HessFrameData):
    x, y, z, w, a, b, cc, d = h.x, h.y, h.z, h.w, h.a, h.b, h.cc, h.d
    m00 = a * y * y + b * x * x + cc * w * w + d * z * z
    m01 = (a - cc) * y * z + (d - b) * w * x
    m02 = (a - cc) * w * y + (b - d) * x * z
    m11 = a * z * z + b * w * w + cc * x * x + d * y * y
    m12 = (a - b) * w * z + (d - cc) * x * y
    m22 = a * w * w + b * z * z + cc * y * y + d * x * x
    return np.array([[m00, m01, m02],
                     [m01, m11, m12],
                     [m02, m12, m22]])


def tangential_hessian_det(ep, params, c):
    """Determinant of the Hessian of Q projected to the tangent frame,
    both as a numeric 3x3 determinant and by the closed-form product
    (x^2+y^2+z^2+w^2)^2 (b cc d x^2 + a cc d y^2 + a b d z^2 + a b cc w^2).

    Returns (numeric, closed_form).
    """
    h = hess_frame(ep, params, c)
    M = _projected_hessian(h)
    numeric = float(np.linalg.det(M))
    n2 = h.x ** 2 + h.y ** 2 + h.z ** 2 + h.w ** 2
    closed = n2 ** 2 * (h.b * h.cc * h.d * h.x ** 2
                        + h.a * h.cc * h.d * h.y ** 2
                        + h.a * h.b * h.d * h.z ** 2
                        + h.a * h.b * h.cc * h.w ** 2)
    return numeric, float(closed)


def tangential_hessian_definiteness(ep, params, c, tol=1e-9):
    """Classification of the projected Hessian by leading principal
    minors, with a tolerance relative to the matrix scale."""
    h = hess_frame(ep, params, c)
    M = _projected_hessian(h)
    scale = float(np.max(np.abs(M))) or 1.0
    m1 = M[0, 0]
    m2 = M[0, 0] * M[1, 1] - M[0, 1] ** 2
    m3 = float(np.linalg.det(M))
    eps1, eps2, eps3 = tol * scale, tol * scale ** 2, tol * scale ** 3
    if m1 > eps1 and m2 > eps2 and m3 > eps3:
        return Definiteness.POS_DEF
    if abs(m1) <= eps1 or abs(m2) <= eps2 or abs(m3) <= eps3:
        return Definiteness.DEGENERATE
    return Definiteness.INDEFINITE


# -- the function A and the domain -------------------------------------------

def A_value(x, y, params, c):
    """The sign-governing polynomial A in the substituted variables
    x = cosh(lam), y = cos(nu). On the zero set of Q, 32*A equals
    Q_ll Q_nn (Q_pl^2 + Q_pn^2) + 4 (Q_ll Q_nu^2 + Q_nn Q_lam^2)."""
    m = 1.0 - 2.0 * params.mu
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    gx = 2.0 * c * x ** 2 + x - c
    gy = 2.0 * c * y ** 2 + m * y - c
    a = ((c * x ** 2 + 2.0 * x - c * y ** 2 - 2.0 * m * y) * gx * gy
         - (1.0 - y ** 2) * (m + c * y) ** 2 * gx
         - (x ** 2 - 1.0) * (1.0 + c * x) ** 2 * gy)
    return float(a) if np.ndim(a) == 0 else a


def domain_bounds(params, c, component):
    """Closed-form admissible rectangle in (x, y) = (cosh lam, cos nu)
    for one component of the zero set; requires c <= c_J (the rectangle
    degenerates at equality)."""
    if c > params.c_jacobi:
        raise EnergyAboveCritical(
            f"c = {c} above critical Jacobi energy {params.c_jacobi}")
    component = HillComponent(component)
    m = 1.0 - 2.0 * params.mu
    rad_y = max(c * c + 2.0 * c + m * m, 0.0)
    sy = math.sqrt(rad_y)
    if component is HillComponent.EARTH:
        rad_x = max(c * c - 2.0 * m * c + 1.0, 0.0)
        x_hi = (-1.0 - math.sqrt(rad_x)) / c
        y_range = (-1.0, (-m + sy) / c)
    else:
        rad_x = max(c * c + 2.0 * m * c + 1.0, 0.0)
        x_hi = (-1.0 - math.sqrt(rad_x)) / c
        y_range = ((-m - sy) / c, 1.0)
    return EllipticDomain((1.0, x_hi), y_range, component)


def roots_ab(params, c):
    """The two real roots of f(y) = 2cy^2 + (1-2mu)y - c with
    -1 < a < 0 < b < 1 (for mu <= 1/2; general mu by the mass-swap
    symmetry)."""
    m = 1.0 - 2.0 * params.mu
    disc = math.sqrt(m * m + 8.0 * c * c)
    a = (-m + disc) / (4.0 * c)
    b = (-m - disc) / (4.0 * c)
    return a, b


def eta(c, mu):
    """The threshold quartic in the energy; its root in (c_E'', c_J) is
    c0(mu). Depends on mu only through m^2 = (1-2mu)^2."""
    m2 = (1.0 - 2.0 * mu) ** 2
    c = np.asarray(c, dtype=float)
    v = (c ** 4 + 2.0 * c ** 3 + 1.125 * m2 * c ** 2 + 0.25 * m2 * c
         + (5.0 / 256.0) * m2 * m2)
    return float(v) if np.ndim(v) == 0 else v


@dataclass(frozen=True)
class Thresholds:
    """The energy-threshold ladder: c_E and c_M solve the radical
    boundary equations, c_E_pp is the closed-form lower end of the c0
    bracket, and c0 is the convexity threshold for the heavier-primary
    component."""

    c_E: float
    c_M: float
    c_E_pp: float
    c0: float


def _c_e_pp(mu):
    return -1.0 - math.sqrt(-28.0 * mu * mu + 28.0 * mu + 9.0) / 4.0


def thresholds(params):
    """Compute the full threshold ladder for the given mass ratio.

    All members depend on mu only through m = |1 - 2 mu|, so the ladder
    is invariant under the mass swap mu <-> 1 - mu; the c_E/c_M labels
    refer to the mu <= 1/2 orientation. At mu = 1/2 every threshold
    collapses to c_J = -2.
    """
    mu = params.mu
    cj = params.c_jacobi
    m = abs(1.0 - 2.0 * mu)
    c_e_pp = _c_e_pp(mu)

    if m < 1e-12:
        # the whole ladder collapses to c_J with gaps of order m^2, far
        # below the resolvable bracket widths
        return Thresholds(cj, cj, c_e_pp, cj)

    sym = ProblemParams(0.5 - m / 2.0)  # mu <= 1/2 representative

    def y_plus(c):
        return (-m + math.sqrt(max(c * c + 2.0 * c + m * m, 0.0))) / c

    def y_minus(c):
        return (-m - math.sqrt(max(c * c + 2.0 * c + m * m, 0.0))) / c

    def phi(c):
        return y_plus(c) - roots_ab(sym, c)[0]

    def psi(c):
        return y_minus(c) - roots_ab(sym, c)[1]

    lo = cj * 50.0
    # phi < 0 far below, > 0 at c_J; psi the opposite orientation
    if not (phi(lo) < 0.0 < phi(cj)):
        raise RootIsolationFailure("no sign change bracketing c_E")
    if not (psi(lo) > 0.0 > psi(cj)):
        raise RootIsolationFailure("no sign change bracketing c_M")
    c_e = brentq(phi, lo, cj, xtol=1e-13)
    c_m = brentq(psi, lo, cj, xtol=1e-13)

    e_lo, e_hi = eta(c_e_pp, mu), eta(cj, mu)
    if not (e_lo > 0.0 > e_hi):
        raise RootIsolationFailure(
            "eta does not change sign on (c_E'', c_J)")
    # plain bisection to 1e-12; the interval is certified above
    a, b = c_e_pp, cj
    while b - a > 1e-12:
        mid = 0.5 * (a + b)
        if eta(mid, mu) > 0.0:
            a = mid
        else:
            b = mid
    c0 = 0.5 * (a + b)
    return Thresholds(c_e, c_m, c_e_pp, c0)


def convexity_verdict(params, c, component):
    """Theory verdict for one regularized Hill component.

    The component near the lighter primary bounds a convex region for
    every c < c_J; the component near the heavier primary does iff
    c < c0(mu). At mu = 1/2 both are always convex.
    """
    if c >= params.c_jacobi:
        raise EnergyAboveCritical(
            f"c = {c} is not below c_J = {params.c_jacobi}")
    component = HillComponent(component)
    mu = params.mu
    if mu == 0.5:
        return Verdict.CONVEX
    lighter = (HillComponent.MOON if mu < 0.5 else HillComponent.EARTH)
    if component is lighter:
        return Verdict.CONVEX
    c0 = thresholds(params).c0
    return Verdict.CONVEX if c < c0 else Verdict.NONCONVEX


# -- zero-set sampling and the convexity oracle ------------------------------

def _nu_interval(params, c, component):
    dom = domain_bounds(params, c, component)
    y_lo, y_hi = dom.y_range
    # nu = arccos(y) is decreasing: Earth nu in [arccos(y_hi), pi]
    return math.acos(min(1.0, max(-1.0, y_hi))), math.acos(
        min(1.0, max(-1.0, y_lo))), dom


def _zero_set_arrays(params, c, component, n_lam=100, n_nu=100, n_phi=16,
                     refine_boundary=True):
    """Flat arrays (lam, nu, p_lam, p_nu) sampling the zero set of Q.

    On shell, 2(p_lam^2 + p_nu^2) = R^2 with R^2 = 2 cosh(lam)
    + c cosh(lam)^2 - 2(1-2mu) cos(nu) - c cos(nu)^2; where R^2 >= 0 the
    momentum circle of radius sqrt(R^2/2) is sampled at n_phi angles.
    Only the canonical cover branch nu in [0, pi] is sampled: the deck
    transformation (nu, p_nu) -> (2 pi - nu, -p_nu) preserves Q and the
    projected-Hessian spectrum, and the full momentum circle already
    realizes both p_nu signs.
    """
    nu_lo, nu_hi, dom = _nu_interval(params, c, component)
    lam_max = math.acosh(dom.x_range[1])
    m = 1.0 - 2.0 * params.mu

    lam = np.linspace(0.0, lam_max, n_lam)
    nu = np.linspace(nu_lo, nu_hi, n_nu)
    L, N = np.meshgrid(lam, nu, indexing="ij")
    ch, cn = np.cosh(L), np.cos(N)
    R2 = 2.0 * ch + c * ch ** 2 - 2.0 * m * cn - c * cn ** 2

    phi = np.linspace(0.0, 2.0 * np.pi, n_phi, endpoint=False)
    ok = R2 >= 0.0
    Lf, Nf, R2f = L[ok], N[ok], R2[ok]
    s = np.sqrt(0.5 * R2f)
    lam_out = np.repeat(Lf, n_phi)
    nu_out = np.repeat(Nf, n_phi)
    pl_out = np.repeat(s, n_phi) * np.tile(np.cos(phi), Lf.size)
    pn_out = np.repeat(s, n_phi) * np.tile(np.sin(phi), Lf.size)

    if refine_boundary:
        # add R^2 = 0 boundary points (momentum zero) between grid
        # neighbors of opposite R^2 sign, bisected in nu
        extra_l, extra_n = [], []
        sign = R2 >= 0.0
        flip = sign[:, :-1] != sign[:, 1:]
        ii, jj = np.nonzero(flip)
        for i, j in zip(ii, jj):
            a, b = nu[j], nu[j + 1]
            la = lam[i]
            fa = (2.0 * math.cosh(la) + c * math.cosh(la) ** 2
                  - 2.0 * m * math.cos(a) - c * math.cos(a) ** 2)
            for _ in range(60):
                mid = 0.5 * (a + b)
                fm = (2.0 * math.cosh(la) + c * math.cosh(la) ** 2
                      - 2.0 * m * math.cos(mid) - c * math.cos(mid) ** 2)
                if (fm >= 0.0) == (fa >= 0.0):
                    a, fa = mid, fm
                else:
                    b = mid
            root = a if fa >= 0.0 else b
            extra_l.append(la)
            extra_n.append(root)
        if extra_l:
            lam_out = np.concatenate([lam_out, extra_l])
            nu_out = np.concatenate([nu_out, extra_n])
            pl_out = np.concatenate([pl_out, np.zeros(len(extra_l))])
            pn_out = np.concatenate([pn_out, np.zeros(len(extra_l))])

    return lam_out, nu_out, pl_out, pn_out


def sample_zero_set(params, c, component, n_lam=100, n_nu=100, n_phi=16):
    """Sample the zero set of Q_c over one Hill component.

    Returns a list of EllipticPoint, each satisfying |Q| < 1e-10 by
    construction; the R^2 = 0 rim is included with zero momentum.
    """
    if c >= params.c_jacobi:
        raise EnergyAboveCritical("sampling requires c < c_jacobi")
    lam, nu, pl, pn = _zero_set_arrays(params, c, component,
                                       n_lam, n_nu, n_phi)
    return [EllipticPoint(float(a), float(b), float(u), float(v))
            for a, b, u, v in zip(lam, nu, pl, pn)]


def _thread_count():
    raw = os.environ.get("EULER2C_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _min_eigvals(M, threads):
    if threads <= 1 or M.shape[0] < 4096:
        return np.linalg.eigvalsh(M)[:, 0]
    from concurrent.futures import ThreadPoolExecutor
    chunks = np.array_split(M, threads)
    with ThreadPoolExecutor(max_workers=threads) as ex:
        parts = list(ex.map(lambda m: np.linalg.eigvalsh(m)[:, 0], chunks))
    return np.concatenate(parts)


def oracle_convexity(params, c, component, grid=(100, 100, 16), tol=1e-9,
                     threads=None):
    """Brute-force convexity oracle: projected-Hessian definiteness over
    a sampled zero set.

    Reports the minimum smallest eigenvalue, its witness point, and a
    verdict ('posdef' everywhere vs 'indefinite' witness). Samples with
    a vanishing gradient are counted as failures, never aborting.
    """
    t0 = time.perf_counter()
    n_lam, n_nu, n_phi = grid
    lam, nu, pl, pn = _zero_set_arrays(params, c, component,
                                       n_lam, n_nu, n_phi)
    x, y, z, w, a, b = _frame_arrays(lam, nu, pl, pn, params, c)
    g2 = x * x + y * y + z * z + w * w
    good = g2 > 1e-12
    failures = int(np.count_nonzero(~good))

    cc = d = 4.0
    M = np.empty((lam.size, 3, 3))
    M[:, 0, 0] = a * y * y + b * x * x + cc * w * w + d * z * z
    M[:, 0, 1] = M[:, 1, 0] = (a - cc) * y * z + (d - b) * w * x
    M[:, 0, 2] = M[:, 2, 0] = (a - cc) * w * y + (b - d) * x * z
    M[:, 1, 1] = a * z * z + b * w * w + cc * x * x + d * y * y
    M[:, 1, 2] = M[:, 2, 1] = (a - b) * w * z + (d - cc) * x * y
    M[:, 2, 2] = a * w * w + b * z * z + cc * y * y + d * x * x

    threads = _thread_count() if threads is None else max(1, threads)
    ev = _min_eigvals(M[good], threads)
    scale = np.max(np.abs(M[good]), axis=(1, 2))
    rel = ev / np.maximum(scale, 1e-30)

    idx_good = np.nonzero(good)[0]
    i_min = int(idx_good[int(np.argmin(rel))])
    i_max = int(idx_good[int(np.argmax(rel))])
    min_rel = float(np.min(rel))
    witness_pt = (float(lam[i_min]), float(nu[i_min]),
                  float(pl[i_min]), float(pn[i_min]))
    witnesses = []
    if min_rel < -tol:
        verdict = "indefinite"
        witnesses.append(witness_pt)
    elif min_rel > tol:
        verdict = "posdef"
    else:
        verdict = "degenerate"
    return ScanReport(
        target=f"tangential-hessian mu={params.mu} c={c} "
               f"{HillComponent(component).value}",
        grid=grid,
        min_value=float(ev.min()), argmin=witness_pt,
        max_value=float(ev.max()),
        argmax=(float(lam[i_max]), float(nu[i_max]),
                float(pl[i_max]), float(pn[i_max])),
        witnesses=witnesses, verdict=verdict,
        samples=int(lam.size), failures=failures,
        wall_time=time.perf_counter() - t0)
