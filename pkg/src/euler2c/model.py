"""The unregularized two-fixed-centers problem.

Hamiltonian H(q, p) = |p|^2/2 - (1-mu)/|q - E| - mu/|q - M|, the unique
interior critical point (l, 0) of the effective potential U, the critical
Jacobi energy c_J = -1 - 2*sqrt(mu(1-mu)), Hill regions, and the frame
conventions shared by all other modules.

Two coordinate frames are used: Standard has the primaries at E = (0,0),
M = (1,0); Centered shifts them to (-1/2, 0) and (1/2, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import BoundaryAmbiguous, CollisionPoint, TraceFailure

__all__ = [
    "Frame",
    "HillComponent",
    "Membership",
    "ProblemParams",
    "CartesianPhasePoint",
    "potential_U",
    "grad_U",
    "hamiltonian_H",
    "lagrange_l",
    "jacobi_energy",
    "hill_membership",
    "hill_boundary",
]

_COLLISION_TOL = 1e-13


class Frame(Enum):
    STANDARD = "standard"   # E = (0, 0), M = (1, 0)
    CENTERED = "centered"   # E = (-1/2, 0), M = (1/2, 0)


class HillComponent(Enum):
    EARTH = "earth"
    MOON = "moon"


class Membership(Enum):
    EARTH = "earth"
    MOON = "moon"
    EXTERIOR = "exterior"


def lagrange_l(mu):
    """Abscissa of the unique critical point of U on the segment between
    the primaries (Standard frame).

    Continuous across mu = 1/2 where the generic formula degenerates.
    """
    if not 0.0 < mu < 1.0:
        raise ValueError(f"mu must lie in (0, 1), got {mu}")
    if mu == 0.5:
        return 0.5
    return (1.0 - mu - math.sqrt(mu * (1.0 - mu))) / (1.0 - 2.0 * mu)


def jacobi_energy(mu):
    """Critical Jacobi energy c_J = -1 - 2*sqrt(mu(1-mu))."""
    if not 0.0 < mu < 1.0:
        raise ValueError(f"mu must lie in (0, 1), got {mu}")
    return -1.0 - 2.0 * math.sqrt(mu * (1.0 - mu))


@dataclass(frozen=True)
class ProblemParams:
    """Mass ratio mu of the second (Moon) primary, with derived constants.

    l is the critical-point abscissa in the Standard frame and c_jacobi
    the critical Jacobi energy.
    """

    mu: float
    l: float = field(init=False)
    c_jacobi: float = field(init=False)

    def __post_init__(self):
        if not 0.0 < self.mu < 1.0:
            raise ValueError(f"mu must lie in (0, 1), got {self.mu}")
        object.__setattr__(self, "l", lagrange_l(self.mu))
        object.__setattr__(self, "c_jacobi", jacobi_energy(self.mu))

    def primaries(self, frame=Frame.STANDARD):
        """Positions of (Earth, Moon) in the requested frame."""
        if frame is Frame.STANDARD:
            return (0.0, 0.0), (1.0, 0.0)
        return (-0.5, 0.0), (0.5, 0.0)


@dataclass(frozen=True)
class CartesianPhasePoint:
    q: tuple
    p: tuple
    frame: Frame = Frame.STANDARD


def to_standard(q, frame):
    """Convert a position to the Standard frame."""
    if frame is Frame.STANDARD:
        return q
    return (np.asarray(q[0]) + 0.5, np.asarray(q[1]))


def to_centered(q, frame):
    """Convert a position to the Centered frame."""
    if frame is Frame.CENTERED:
        return q
    return (np.asarray(q[0]) - 0.5, np.asarray(q[1]))


def _distances(q, frame):
    q1, q2 = to_standard(q, frame)
    q1 = np.asarray(q1, dtype=float)
    q2 = np.asarray(q2, dtype=float)
    r1 = np.hypot(q1, q2)
    r2 = np.hypot(q1 - 1.0, q2)
    return r1, r2


def potential_U(q, params, frame=Frame.STANDARD):
    """Potential U(q) = -(1-mu)/|q - E| - mu/|q - M|; always negative.

    Accepts scalar pairs or numpy-array pairs.
    """
    r1, r2 = _distances(q, frame)
    if np.any(r1 < _COLLISION_TOL) or np.any(r2 < _COLLISION_TOL):
        raise CollisionPoint("position coincides with a primary")
    out = -(1.0 - params.mu) / r1 - params.mu / r2
    return float(out) if np.isscalar(out) or out.ndim == 0 else out


def grad_U(q, params, frame=Frame.STANDARD):
    """Gradient of U in Standard-frame components (frames differ by a
    translation, so the gradient is frame-independent)."""
    q1, q2 = to_standard(q, frame)
    q1 = np.asarray(q1, dtype=float)
    q2 = np.asarray(q2, dtype=float)
    r1 = np.hypot(q1, q2)
    r2 = np.hypot(q1 - 1.0, q2)
    if np.any(r1 < _COLLISION_TOL) or np.any(r2 < _COLLISION_TOL):
        raise CollisionPoint("position coincides with a primary")
    mu = params.mu
    g1 = (1.0 - mu) * q1 / r1 ** 3 + mu * (q1 - 1.0) / r2 ** 3
    g2 = (1.0 - mu) * q2 / r1 ** 3 + mu * q2 / r2 ** 3
    return g1, g2


def hamiltonian_H(pt: CartesianPhasePoint, params):
    """H(q, p) = |p|^2 / 2 + U(q)."""
    p1, p2 = pt.p
    return 0.5 * (p1 * p1 + p2 * p2) + potential_U(pt.q, params, pt.frame)


def _segment_inside_check(q_std, primary, params, c, nsamp=32):
    """Assert that the straight segment from q to its primary stays in
    the sublevel set {U <= c} (skipping the immediate neighborhood of
    the primary, where U -> -inf anyway)."""
    t = np.linspace(1e-6, 1.0, nsamp)
    q1 = primary[0] + t * (q_std[0] - primary[0])
    q2 = primary[1] + t * (q_std[1] - primary[1])
    u = potential_U((q1, q2), params, Frame.STANDARD)
    if np.any(u > c + 1e-9):
        raise AssertionError(
            "segment to primary exits the Hill sublevel set; "
            "component classification by sign of q1 - l is not valid here")


def hill_membership(q, params, c, frame=Frame.STANDARD, tol=1e-10,
                    check_segment=True):
    """Classify a position against the Hill region of energy c < c_J.

    Exterior iff U(q) > c; otherwise Earth if the Standard-frame q1 is
    below the critical abscissa l, Moon if above. Raises
    BoundaryAmbiguous when |U - c| < tol.
    """
    if c >= params.c_jacobi:
        raise ValueError("hill_membership requires c < c_jacobi")
    u = potential_U(q, params, frame)
    if abs(u - c) < tol:
        raise BoundaryAmbiguous(f"|U - c| = {abs(u - c):.3e} < tol")
    if u > c:
        return Membership.EXTERIOR
    q_std = to_standard(q, frame)
    earth, moon = params.primaries(Frame.STANDARD)
    if q_std[0] < params.l:
        if check_segment:
            _segment_inside_check(q_std, earth, params, c)
        return Membership.EARTH
    if check_segment:
        _segment_inside_check(q_std, moon, params, c)
    return Membership.MOON


def hill_boundary(params, c, component, n=256, tol=1e-10,
                  frame=Frame.STANDARD):
    """Sample n points of the Hill-region boundary {U = c} of one bounded
    component, ordered by polar angle around the component's primary.

    Each point is found by bisection along the ray from the primary,
    bracketing the first crossing of U = c; U < c is asserted strictly
    inside the bracket. Requires c <= c_J (at c = c_J the lobes touch at
    (l, 0), where the ray toward the other primary is excluded).
    """
    if c > params.c_jacobi:
        raise ValueError("hill_boundary requires c <= c_jacobi")
    if n < 8:
        raise ValueError("need n >= 8 boundary samples")
    component = HillComponent(component)
    earth, moon = params.primaries(Frame.STANDARD)
    origin = earth if component is HillComponent.EARTH else moon
    mass = 1.0 - params.mu if component is HillComponent.EARTH else params.mu

    theta = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    dx, dy = np.cos(theta), np.sin(theta)

    def u_at(t):
        return potential_U((origin[0] + t * dx, origin[1] + t * dy),
                           params, Frame.STANDARD)

    # Each lobe lies on its primary's side of the line q1 = l, on which
    # U >= c_J with equality only at (l, 0); capping the ray there keeps
    # the bracket on the first crossing even when the lobes touch.
    toward = dx > 0 if component is HillComponent.EARTH else dx < 0
    with np.errstate(divide="ignore"):
        t_cap = np.where(toward, (params.l - origin[0]) / dx, np.inf)

    # Kepler estimate of the lobe radius gives a safe inner radius.
    t_lo = np.full(n, min(0.25 * mass / (-c), 1e-3))
    if np.any(u_at(t_lo) >= c):
        t_lo = np.full(n, 1e-6)
    u_lo = u_at(t_lo)
    if np.any(u_lo >= c):
        raise TraceFailure("inner bracket point is not inside {U < c}")

    # expand outward until U >= c on every ray (first crossing bracket)
    t_hi = t_lo.copy()
    pending = np.ones(n, dtype=bool)
    for _ in range(400):
        t_try = np.where(pending, np.minimum(t_hi * 1.05, t_cap), t_hi)
        u_try = u_at(t_try)
        crossed = pending & ((u_try >= c) | (t_try >= t_cap))
        inside = pending & ~crossed
        t_lo = np.where(inside, t_try, t_lo)
        t_hi = np.where(pending, t_try, t_hi)
        pending &= ~crossed
        if not pending.any():
            break
    else:
        raise TraceFailure("could not bracket the Hill boundary crossing "
                           "on some ray")

    for _ in range(200):
        mid = 0.5 * (t_lo + t_hi)
        below = u_at(mid) < c
        t_lo = np.where(below, mid, t_lo)
        t_hi = np.where(below, t_hi, mid)
        if np.max(np.abs(u_at(0.5 * (t_lo + t_hi)) - c)) < tol:
            break
    t = 0.5 * (t_lo + t_hi)
    q1 = origin[0] + t * dx
    q2 = origin[1] + t * dy
    if np.max(np.abs(u_at(t) - c)) >= tol * 10:
        raise TraceFailure("bisection failed to reach the boundary tolerance")
    if frame is Frame.CENTERED:
        q1 = q1 - 0.5
    return np.column_stack([q1, q2])
