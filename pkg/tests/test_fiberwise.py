"""Hill-boundary curvature and fiberwise convexity."""

import math

import numpy as np
import pytest

from euler2c.errors import CollisionPoint
from euler2c.fiberwise import (
    C_l_derivatives,
    C_value,
    U_derivs,
    V_line,
    cone_curvature_C0,
    curvature_numerator,
    earth_boundary_near_vertex,
    fiberwise_verdict,
    lemma_polynomials,
    polar_C_derivs,
    positivity_certificates,
)
from euler2c.model import HillComponent, ProblemParams, potential_U
from euler2c.scan import fd_derivative


class TestUDerivatives:
    def test_value_matches_potential(self, p03, rng):
        for _ in range(10):
            q = (rng.uniform(-1, 2), rng.uniform(0.1, 1))
            assert U_derivs(q, p03).U == pytest.approx(
                potential_U(q, p03), rel=1e-14)

    def test_first_and_second_fd(self, p03):
        f = lambda x, y: potential_U((x, y), p03)
        for q in [(0.3, 0.4), (1.3, -0.5), (-0.6, 0.3)]:
            e = U_derivs(q, p03)
            checks = [((1, 0), e.U_1, 1e-5), ((0, 1), e.U_2, 1e-5),
                      ((2, 0), e.U_11, 1e-4), ((1, 1), e.U_12, 1e-4),
                      ((0, 2), e.U_22, 1e-4)]
            for (ox, oy), val, h in checks:
                fd = fd_derivative(f, q[0], q[1], ox, oy, h)
                assert fd == pytest.approx(val, rel=1e-6, abs=1e-8)

    def test_third_order_hierarchical(self, p03):
        pairs = [("U_111", "U_11", 1, 0), ("U_112", "U_11", 0, 1),
                 ("U_122", "U_12", 0, 1), ("U_222", "U_22", 0, 1)]
        for name, base, ox, oy in pairs:
            fb = lambda x, y: getattr(U_derivs((x, y), p03), base)
            for q in [(0.3, 0.4), (1.3, -0.5), (-0.6, 0.3)]:
                closed = getattr(U_derivs(q, p03), name)
                fd = fd_derivative(fb, q[0], q[1], ox, oy, 1e-5)
                assert fd == pytest.approx(closed, rel=1e-6, abs=1e-7), name

    def test_collision(self, p03):
        with pytest.raises(CollisionPoint):
            U_derivs((1.0, 0.0), p03)


class TestCurvature:
    def test_two_computations_agree(self, p03, rng):
        for _ in range(300):
            q = (rng.uniform(-1.5, 2.5), rng.uniform(-1.5, 1.5))
            if min(math.hypot(*q), math.hypot(q[0] - 1, q[1])) < 0.05:
                continue
            ev = C_value(q, p03)
            scale = max(abs(ev.C), abs(ev.C_closed), 1e-12)
            assert abs(ev.C - ev.C_closed) / scale < 1e-8

    def test_kappa_singular_at_critical_point(self, p03):
        ev = C_value((p03.l, 0.0), p03)
        assert ev.kappa_singular and math.isnan(ev.kappa)

    def test_kappa_regular_elsewhere(self, p03):
        ev = C_value((0.2, 0.1), p03)
        assert not ev.kappa_singular
        assert ev.kappa == pytest.approx(
            ev.C / math.hypot(U_derivs((0.2, 0.1), p03).U_1,
                              U_derivs((0.2, 0.1), p03).U_2) ** 3)

    def test_cone_contact(self, p03, p05):
        for p in (p03, p05):
            d = C_l_derivatives(p)
            assert abs(d["C0"]) < 1e-8
            assert abs(d["C1"]) < 1e-6
            assert abs(d["C2"]) < 1e-4
            assert abs(d["C3"]) < 1e-4
            assert d["slope_sq"] == pytest.approx(2.0, abs=1e-12)
            assert d["slope_sq_hill"] == pytest.approx(2.0, abs=1e-12)


class TestVLine:
    def test_derivative_ladder(self, p03):
        f = lambda t, _y=0.0: V_line(t, p03)["V"]
        for t in (0.15, 0.3, 0.45):
            d = V_line(t, p03)
            assert fd_derivative(f, t, 0, 1, 0, 1e-6) == pytest.approx(
                d["V1"], rel=1e-6, abs=1e-7)
            f1 = lambda t, _y=0.0: V_line(t, p03)["V1"]
            assert fd_derivative(f1, t, 0, 1, 0, 1e-6) == pytest.approx(
                d["V2"], rel=1e-6, abs=1e-7)
            f2 = lambda t, _y=0.0: V_line(t, p03)["V2"]
            assert fd_derivative(f2, t, 0, 1, 0, 1e-6) == pytest.approx(
                d["V3"], rel=1e-6, abs=1e-6)
            f3 = lambda t, _y=0.0: V_line(t, p03)["V3"]
            assert fd_derivative(f3, t, 0, 1, 0, 1e-6) == pytest.approx(
                d["V4"], rel=1e-5, abs=1e-5)

    def test_equal_mass_fourth_derivative(self, p05):
        assert V_line(0.5, p05)["V4"] == pytest.approx(2688.0, rel=1e-12)

    def test_critical_point_values(self, p03):
        d = V_line(p03.l, p03)
        assert abs(d["V"]) < 1e-13
        assert abs(d["V1"]) < 1e-13
        # the third derivative has the closed value
        l = p03.l
        expect = 12.0 * (2 * l - 1) / (l ** 2 * (1 - l) ** 2
                                       * (2 * l * l - 2 * l + 1))
        assert d["V3"] == pytest.approx(expect, rel=1e-10)


class TestEqualMassPolar:
    def test_polar_derivatives_vs_fd(self, p05):
        def cp(r, t):
            return float(curvature_numerator(
                (r * math.cos(t), r * math.sin(t)), p05))
        for r in (0.35, 0.6):
            for t in (0.7, 1.9):
                d = polar_C_derivs(r, t, p05)
                assert d["C"] == pytest.approx(cp(r, t), rel=1e-12)
                assert fd_derivative(cp, r, t, 1, 0, 1e-6) == \
                    pytest.approx(d["C_r"], rel=1e-6)
                assert fd_derivative(cp, r, t, 0, 1, 1e-6) == \
                    pytest.approx(d["C_theta"], rel=1e-6)

    def test_requires_equal_mass(self, p03):
        with pytest.raises(ValueError):
            polar_C_derivs(0.5, 1.0, p03)

    def test_G_matches_parts(self, p05):
        aux = lemma_polynomials(0.6, 0.3)
        s = math.sqrt(0.6 ** 2 - 2 * 0.6 * 0.3 + 1)
        assert aux["G"] == pytest.approx(
            aux["a_aux"] * s + aux["b_aux"], rel=1e-13)

    def test_F0_vanishes_on_F_zero_set(self, p05):
        # F0 is the surd-free norm of F: every zero of F is a zero of F0
        x = 0.6
        ys = np.linspace(-1.0, 1.0, 400)
        fv = lemma_polynomials(x, ys)["F_rderi"]
        idx = np.nonzero(np.sign(fv[:-1]) != np.sign(fv[1:]))[0]
        assert idx.size > 0
        for i in idx:
            a, b = ys[i], ys[i + 1]
            for _ in range(80):
                m = 0.5 * (a + b)
                fm = float(lemma_polynomials(x, m)["F_rderi"])
                if (fm > 0) == (float(
                        lemma_polynomials(x, a)["F_rderi"]) > 0):
                    a = m
                else:
                    b = m
            root = 0.5 * (a + b)
            assert abs(float(lemma_polynomials(x, root)["F0"])) < 1e-10

    def test_cone_curvature_positive(self, p05):
        q = np.linspace(0.05, 0.49, 300)
        c0 = cone_curvature_C0(q)
        assert np.all(c0 > 1e-10)

    def test_cone_curvature_matches_direct(self, p05):
        for q1 in np.linspace(0.05, 0.49, 40):
            direct = float(curvature_numerator(
                (q1, math.sqrt(2.0) * (q1 - 0.5)), p05))
            assert cone_curvature_C0(q1) == pytest.approx(
                direct, rel=1e-8)


class TestVerdicts:
    def test_equal_mass_convex(self, p05):
        for e in (-2.1, -3.0):
            rep = fiberwise_verdict(p05, e)
            assert rep.verdict == "convex"
            assert rep.min_C > 0

    def test_unequal_mass_critical_witness(self, p03):
        rep = fiberwise_verdict(p03, p03.c_jacobi)
        assert rep.verdict == "nonconvex-witness"
        e, (q1, q2), cval = rep.witness
        assert cval < 0
        # witness sits on the Earth lobe boundary near the vertex
        assert q1 < p03.l
        assert abs(potential_U((q1, q2), p03) - e) < 1e-8

    def test_vertex_boundary_solver(self, p03):
        c = p03.c_jacobi
        q1s = p03.l - np.linspace(0.01, 0.05, 5)
        pts = earth_boundary_near_vertex(p03, c, q1s)
        assert len(pts) == 5
        for q1, q2 in pts:
            assert abs(potential_U((q1, q2), p03) - c) < 1e-9

    def test_rejects_supercritical(self, p03):
        with pytest.raises(ValueError):
            fiberwise_verdict(p03, p03.c_jacobi + 0.1)


class TestCertificates:
    def test_all_certified(self):
        certs = positivity_certificates()
        assert certs["quartic_negative"].certified
        assert certs["sextic_positive"].certified
        assert certs["quadratic_no_real_root"]
        assert certs["quadratic_discriminant"] == -3960
        assert certs["quartic_at_one_third"] == -1
        assert float(certs["sextic_at_one_half"]) == 21 / 4
