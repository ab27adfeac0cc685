import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from curvshell.bodies import (
    ArcSupportCurve,
    PINCH_MARGIN,
    RevolutionBody,
    THETA_GRID,
    TrigSupportCurve,
    closure_residual,
    curvature_range,
    random_pinched_curve,
    rho_range,
    spindle_support_curve,
)
from curvshell.bounds import width_bound
from curvshell.geometry import PinchSpec
from curvshell.spindle import SpindleSpec

from conftest import FLAT, HYPER, SPHERE, random_pinch, rng_for

PINCH_12 = PinchSpec.from_curvatures(FLAT, 1.0, 2.0)


class TestTrigSupportCurve:
    def test_circle(self):
        c = TrigSupportCurve(0.75)
        assert_allclose(c.h(THETA_GRID), 0.75)
        assert_allclose(c.rho(THETA_GRID), 0.75)
        assert_allclose(curvature_range(c), (4.0 / 3.0, 4.0 / 3.0), rtol=1e-12)

    def test_boundary_consistency(self):
        body = random_pinched_curve(PINCH_12, seed=3, modes=6)
        th = np.linspace(0, 2 * math.pi, 64, endpoint=False)
        x = body.boundary(th)
        # support identity: <x(t), u(t)> = h(t)
        u = np.stack([np.cos(th), np.sin(th)], axis=1)
        assert_allclose((x * u).sum(axis=1), body.h(th), atol=1e-12)
        # finite-difference curvature radius |x'| = rho
        eps = 1e-6
        xp = (body.boundary(th + eps) - body.boundary(th - eps)) / (2 * eps)
        assert_allclose(np.linalg.norm(xp, axis=1), body.rho(th), atol=1e-6)

    def test_translation_moves_h_only(self):
        body = random_pinched_curve(PINCH_12, seed=5)
        t = np.array([0.3, -0.2])
        moved = body.translate(t)
        th = THETA_GRID[::64]
        u = np.stack([np.cos(th), np.sin(th)], axis=1)
        assert_allclose(moved.h(th), body.h(th) + u @ t, atol=1e-14)
        assert_allclose(moved.rho(th), body.rho(th), atol=1e-14)
        assert_allclose(moved.boundary(th), body.boundary(th) + t, atol=1e-13)

    def test_rotation(self):
        body = random_pinched_curve(PINCH_12, seed=6)
        alpha = 0.7
        rot = body.rotate(alpha)
        th = THETA_GRID[::32]
        assert_allclose(rot.h(th + alpha), body.h(th), atol=1e-13)
        assert_allclose(rot.rho(th + alpha), body.rho(th), atol=1e-13)

    def test_scale(self):
        body = random_pinched_curve(PINCH_12, seed=7)
        lam = 2.5
        big = body.scale(lam)
        kmin, kmax = curvature_range(body)
        kmin2, kmax2 = curvature_range(big)
        assert_allclose((kmin2, kmax2), (kmin / lam, kmax / lam), rtol=1e-12)
        with pytest.raises(ValueError):
            body.scale(0.0)


class TestGenerator:
    def test_deterministic_in_seed(self):
        a = random_pinched_curve(PINCH_12, seed=42, modes=6)
        b = random_pinched_curve(PINCH_12, seed=42, modes=6)
        assert_allclose(a.rho_cos, b.rho_cos, rtol=0, atol=0)
        assert_allclose(a.rho_sin, b.rho_sin, rtol=0, atol=0)
        c = random_pinched_curve(PINCH_12, seed=43, modes=6)
        assert not np.allclose(a.rho_cos, c.rho_cos)

    def test_pinched_within_band(self):
        for seed in range(40):
            body = random_pinched_curve(PINCH_12, seed=seed, modes=6)
            kmin, kmax = curvature_range(body)
            assert kmin >= 1.0 - 1e-8
            assert kmax <= 2.0 + 1e-8

    def test_band_edges_are_reached(self):
        # the rescaling pushes one rho extremum onto the margin inside the band
        for seed in range(20):
            body = random_pinched_curve(PINCH_12, seed=seed)
            lo, hi, _, _ = rho_range(body)
            assert lo >= 0.5 + PINCH_MARGIN - 1e-12
            assert hi <= 1.0 - PINCH_MARGIN + 1e-12
            touches_low = abs(lo - (0.5 + PINCH_MARGIN)) < 1e-9
            touches_high = abs(hi - (1.0 - PINCH_MARGIN)) < 1e-9
            assert touches_low or touches_high

    def test_closure(self):
        for seed in (0, 11, 99):
            body = random_pinched_curve(PINCH_12, seed=seed)
            assert closure_residual(body) <= 1e-10

    def test_origin_interior(self):
        # support values stay positive: the origin is inside every generated body
        for seed in range(25):
            body = random_pinched_curve(PINCH_12, seed=seed)
            assert body.h(THETA_GRID).min() > 0.0

    def test_degenerate_pinch_gives_circle(self):
        p = PinchSpec.from_curvatures(FLAT, 1.0, 1.0)
        body = random_pinched_curve(p, seed=1)
        assert_allclose(body.rho(THETA_GRID), 1.0, atol=1e-15)
        kmin, kmax = curvature_range(body)
        assert_allclose((kmin, kmax), (1.0, 1.0), rtol=1e-12)

    def test_rejects_curved_pinch_and_bad_modes(self):
        with pytest.raises(ValueError, match="flat"):
            random_pinched_curve(PinchSpec.from_curvatures(SPHERE, 1.0, 2.0), seed=0)
        with pytest.raises(ValueError):
            random_pinched_curve(PINCH_12, seed=0, modes=1)


class TestArcSupportCurve:
    def test_matches_profile_scan(self):
        body = spindle_support_curve(PINCH_12, 0.75)
        d = np.linalg.norm(body.boundary(THETA_GRID), axis=1)
        assert_allclose(d.min(), 0.75, atol=1e-9)
        assert_allclose(d.max(), 0.9330127018922193, atol=1e-9)

    def test_curvature_range_exact(self):
        body = spindle_support_curve(PINCH_12, 0.75)
        assert_allclose(curvature_range(body), (1.0, 2.0), atol=1e-6)

    def test_support_is_c1(self):
        body = spindle_support_curve(PINCH_12, 0.7)
        eps = 1e-9
        for t in (body.phi, math.pi - body.phi, math.pi + body.phi, -body.phi):
            assert abs(body.h(t + eps) - body.h(t - eps)) <= 1e-8
            assert abs(body.h_prime(t + eps) - body.h_prime(t - eps)) <= 1e-6

    def test_closure(self):
        assert closure_residual(spindle_support_curve(PINCH_12, 0.8)) <= 1e-10

    def test_degenerate_circle(self):
        body = spindle_support_curve(PINCH_12, 1.0)
        assert_allclose(body.h(THETA_GRID), 1.0, atol=1e-12)

    def test_rejects_curved(self):
        with pytest.raises(ValueError, match="flat"):
            ArcSupportCurve(PinchSpec.from_curvatures(SPHERE, 1.0, 2.0), 0.6)


class TestRevolutionBody:
    @pytest.mark.parametrize("space_idx", [1, 2])
    def test_curvature_range_from_segments(self, space_idx):
        space = [None, SPHERE, HYPER][space_idx]
        p = random_pinch(space, rng_for(41))
        wb = width_bound(space, p)
        body = RevolutionBody.spindle(SpindleSpec(space, p, wb.maximizer_r))
        kmin, kmax = curvature_range(body)
        assert_allclose((kmin, kmax), (p.kappa1, p.kappa2), rtol=1e-9)
