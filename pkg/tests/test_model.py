"""Hamiltonian, critical constants, Hill regions, frames."""

import math

import numpy as np
import pytest

from euler2c.errors import BoundaryAmbiguous, CollisionPoint
from euler2c.model import (
    CartesianPhasePoint,
    Frame,
    HillComponent,
    Membership,
    ProblemParams,
    grad_U,
    hamiltonian_H,
    hill_boundary,
    hill_membership,
    jacobi_energy,
    lagrange_l,
    potential_U,
    to_centered,
    to_standard,
)


class TestConstants:
    def test_l_equal_mass(self):
        assert lagrange_l(0.5) == 0.5

    def test_l_closed_form(self):
        mu = 0.3
        expect = (1 - mu - math.sqrt(mu * (1 - mu))) / (1 - 2 * mu)
        assert lagrange_l(mu) == pytest.approx(expect, rel=1e-15)
        assert lagrange_l(0.2) == pytest.approx(2.0 / 3.0, rel=1e-15)

    def test_l_mass_swap_symmetry(self):
        for mu in (0.1, 0.27, 0.49):
            assert lagrange_l(mu) + lagrange_l(1 - mu) == \
                pytest.approx(1.0, abs=1e-14)

    def test_l_continuous_at_half(self):
        assert lagrange_l(0.5 - 1e-7) == pytest.approx(0.5, abs=1e-6)

    def test_c_jacobi(self):
        assert jacobi_energy(0.5) == -2.0
        assert jacobi_energy(0.25) == pytest.approx(
            -1 - math.sqrt(3) / 2, rel=1e-15)

    def test_l_is_critical_point(self, p03):
        g1, g2 = grad_U((p03.l, 0.0), p03)
        assert abs(g1) < 1e-14 and abs(g2) < 1e-14

    def test_critical_value_is_c_jacobi(self, p03):
        assert potential_U((p03.l, 0.0), p03) == \
            pytest.approx(p03.c_jacobi, rel=1e-14)

    def test_invalid_mu(self):
        for mu in (0.0, 1.0, -0.1, 2.0):
            with pytest.raises(ValueError):
                ProblemParams(mu)


class TestPotential:
    def test_vectorized_matches_scalar(self, p03, rng):
        q1 = rng.uniform(-1, 2, 50)
        q2 = rng.uniform(0.1, 1, 50)
        u = potential_U((q1, q2), p03)
        for i in range(50):
            assert u[i] == potential_U((q1[i], q2[i]), p03)

    def test_collision_raises(self, p03):
        with pytest.raises(CollisionPoint):
            potential_U((0.0, 0.0), p03)
        with pytest.raises(CollisionPoint):
            potential_U((1.0, 0.0), p03)

    def test_gradient_fd(self, p03):
        h = 1e-7
        for q in ((0.3, 0.4), (1.2, -0.5), (-0.7, 0.2)):
            g1, g2 = grad_U(q, p03)
            f1 = (potential_U((q[0] + h, q[1]), p03)
                  - potential_U((q[0] - h, q[1]), p03)) / (2 * h)
            f2 = (potential_U((q[0], q[1] + h), p03)
                  - potential_U((q[0], q[1] - h), p03)) / (2 * h)
            assert g1 == pytest.approx(f1, rel=1e-6)
            assert g2 == pytest.approx(f2, rel=1e-6)

    def test_hamiltonian(self, p03):
        pt = CartesianPhasePoint((0.3, 0.4), (0.5, -0.2))
        expect = 0.5 * (0.25 + 0.04) + potential_U((0.3, 0.4), p03)
        assert hamiltonian_H(pt, p03) == pytest.approx(expect, rel=1e-15)

    def test_frames_shift(self, p03):
        u_std = potential_U((0.3, 0.4), p03, Frame.STANDARD)
        u_cen = potential_U((0.3 - 0.5, 0.4), p03, Frame.CENTERED)
        assert u_std == pytest.approx(u_cen, rel=1e-15)
        q = (0.3, 0.4)
        back = to_standard(to_centered(q, Frame.STANDARD), Frame.CENTERED)
        assert back[0] == pytest.approx(q[0]) and back[1] == q[1]


class TestHillRegions:
    def test_membership_basic(self, p03):
        c = p03.c_jacobi - 0.3
        assert hill_membership((0.05, 0.0), p03, c) is Membership.EARTH
        assert hill_membership((0.97, 0.0), p03, c) is Membership.MOON
        assert hill_membership((0.5, 1.5), p03, c) is Membership.EXTERIOR

    def test_membership_boundary_ambiguous(self, p03):
        c = p03.c_jacobi - 0.3
        pts = hill_boundary(p03, c, HillComponent.EARTH, n=8)
        with pytest.raises(BoundaryAmbiguous):
            hill_membership(tuple(pts[0]), p03, c)

    def test_membership_rejects_supercritical(self, p03):
        with pytest.raises(ValueError):
            hill_membership((0.1, 0.0), p03, p03.c_jacobi + 0.1)

    def test_boundary_residual(self, p03):
        c = p03.c_jacobi - 0.5
        for comp in HillComponent:
            pts = hill_boundary(p03, c, comp, n=128)
            u = potential_U((pts[:, 0], pts[:, 1]), p03)
            assert np.max(np.abs(u - c)) < 1e-9

    def test_boundary_components_separated(self, p03):
        c = p03.c_jacobi - 0.5
        earth = hill_boundary(p03, c, HillComponent.EARTH, n=64)
        moon = hill_boundary(p03, c, HillComponent.MOON, n=64)
        assert earth[:, 0].max() < p03.l < moon[:, 0].min()

    def test_boundary_at_critical_energy(self, p03):
        # lobes touch at (l, 0): the boundary is still resolvable
        pts = hill_boundary(p03, p03.c_jacobi, HillComponent.EARTH, n=64)
        u = potential_U((pts[:, 0], pts[:, 1]), p03)
        assert np.max(np.abs(u - p03.c_jacobi)) < 1e-9
        assert pts[:, 0].max() <= p03.l + 1e-12

    def test_boundary_rejects_supercritical(self, p03):
        with pytest.raises(ValueError):
            hill_boundary(p03, p03.c_jacobi + 0.1, HillComponent.EARTH)

    def test_boundary_centered_frame(self, p03):
        c = p03.c_jacobi - 0.5
        std = hill_boundary(p03, c, HillComponent.EARTH, n=16)
        cen = hill_boundary(p03, c, HillComponent.EARTH, n=16,
                            frame=Frame.CENTERED)
        assert np.allclose(std[:, 0] - 0.5, cen[:, 0])
