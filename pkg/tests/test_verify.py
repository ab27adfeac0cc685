import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from curvshell.bodies import RevolutionBody, TrigSupportCurve, random_pinched_curve, spindle_support_curve
from curvshell.bounds import outer_radius_bound, quotient_bound, quotient_maximizer, width_bound
from curvshell.geometry import PinchSpec
from curvshell.spindle import SpindleSpec
from curvshell.verify import (
    check_bounds,
    circumscribed_from_center,
    inscribed_ball,
    rolling_check,
    summarize_worst_margins,
    verify_batch,
    write_jsonl,
)
from curvshell.verify import _inscribed_support

from conftest import FLAT, HYPER, SPACES, SPHERE, random_pinch, rng_for

PINCH_12 = PinchSpec.from_curvatures(FLAT, 1.0, 2.0)


class TestInscribedBall:
    def test_circle(self):
        center, r = inscribed_ball(TrigSupportCurve(0.75))
        assert np.linalg.norm(center) <= 1e-9
        assert_allclose(r, 0.75, atol=1e-10)

    def test_translated_circle(self):
        t = np.array([0.4, -0.15])
        center, r = inscribed_ball(TrigSupportCurve(0.75).translate(t))
        assert np.linalg.norm(center - t) <= 1e-9
        assert_allclose(r, 0.75, atol=1e-10)

    def test_flat_spindle(self):
        body = spindle_support_curve(PINCH_12, 0.75)
        center, r = inscribed_ball(body)
        assert np.linalg.norm(center) <= 1e-7
        assert_allclose(r, 0.75, atol=1e-9)

    def test_random_bodies_interior_optimal(self):
        # moving the center in any direction may only shrink the minimum gap
        for seed in (1, 7, 23):
            body = random_pinched_curve(PINCH_12, seed=seed)
            center, r = inscribed_ball(body)
            from curvshell.verify import _support_gap_minima
            for ang in np.linspace(0, 2 * math.pi, 9, endpoint=False):
                off = center + 1e-5 * np.array([math.cos(ang), math.sin(ang)])
                assert _support_gap_minima(body, off)[0] <= r + 1e-12

    def test_restart_invariance(self):
        rng = rng_for(51)
        for seed in (3, 17):
            body = random_pinched_curve(PINCH_12, seed=seed)
            base_center, base_r = inscribed_ball(body)
            for _ in range(10):
                off = rng.uniform(0, 2 * math.pi / 2048)
                center, r = _inscribed_support(body, grid_offset=off)
                assert abs(r - base_r) <= 1e-9
                assert np.linalg.norm(center - base_center) <= 1e-9

    def test_revolution_spindle(self):
        for space in (SPHERE, HYPER):
            p = random_pinch(space, rng_for(52))
            r_t = 0.5 * (p.r1 + p.r2)
            body = RevolutionBody.spindle(SpindleSpec(space, p, r_t))
            center, r = inscribed_ball(body)
            assert_allclose(r, r_t, atol=1e-9)
            assert float(np.linalg.norm(center - body.profile.symmetry_center)) <= 1e-6

    @pytest.mark.parametrize("space_idx,k1,k2", [(1, 1.0, 5.0), (2, 2.0, 9.0)])
    def test_revolution_thin_pinch(self, space_idx, k1, k2):
        # elongated spindles: the axis extends far beyond the body, so the
        # search bracket must stop at the axis apexes
        space = SPACES[space_idx]
        p = PinchSpec.from_curvatures(space, k1, k2)
        for frac in (1e-3, 0.25, 0.95):
            r_t = p.r2 + frac * (p.r1 - p.r2)
            body = RevolutionBody.spindle(SpindleSpec(space, p, r_t))
            _, r = inscribed_ball(body)
            assert_allclose(r, r_t, atol=1e-8)

    def test_revolution_hemisphere_edge(self):
        # kappa1 = 0 on the sphere: the big circle is a great circle
        p = PinchSpec.from_curvatures(SPHERE, 0.0, 3.0)
        assert_allclose(p.r1, math.pi / 2, rtol=1e-15)
        r_t = 0.5 * (p.r1 + p.r2)
        body = RevolutionBody.spindle(SpindleSpec(SPHERE, p, r_t))
        _, r = inscribed_ball(body)
        assert_allclose(r, r_t, atol=1e-8)
        res = check_bounds(body, p)
        assert res.satisfied.width and res.satisfied.outer


class TestCircumscribed:
    def test_circle(self):
        assert_allclose(circumscribed_from_center(TrigSupportCurve(0.75), [0.0, 0.0]),
                        0.75, atol=1e-12)

    def test_flat_spindle_apex(self):
        body = spindle_support_curve(PINCH_12, 0.75)
        assert_allclose(circumscribed_from_center(body, [0.0, 0.0]),
                        0.9330127018922193, atol=1e-10)

    def test_outside_center_raises(self):
        with pytest.raises(ValueError, match="interior"):
            circumscribed_from_center(TrigSupportCurve(0.75), [2.0, 0.0])

    def test_random_below_outer_bound(self):
        body = random_pinched_curve(PINCH_12, seed=42, modes=6)
        center, r = inscribed_ball(body)
        big_r = circumscribed_from_center(body, center)
        assert big_r <= outer_radius_bound(FLAT, PINCH_12, min(max(r, 0.5), 1.0)) + 1e-7

    def test_revolution(self):
        p = random_pinch(SPHERE, rng_for(53))
        r_t = 0.7 * p.r1 + 0.3 * p.r2
        body = RevolutionBody.spindle(SpindleSpec(SPHERE, p, r_t))
        got = circumscribed_from_center(body, body.profile.symmetry_center)
        assert_allclose(got, outer_radius_bound(SPHERE, p, r_t), atol=1e-9)


class TestCheckBounds:
    def test_circle_trivial(self):
        res = check_bounds(TrigSupportCurve(0.75), PINCH_12)
        assert res.satisfied.all_ok
        assert res.width <= 1e-9
        assert_allclose(res.quotient, 1.0, atol=1e-8)

    def test_spindle_width_sharp(self):
        wb = width_bound(FLAT, PINCH_12)
        body = spindle_support_curve(PINCH_12, wb.maximizer_r)
        res = check_bounds(body, PINCH_12)
        assert res.satisfied.all_ok
        assert abs(res.width - wb.bound) <= 1e-6

    def test_spindle_quotient_sharp(self):
        body = spindle_support_curve(PINCH_12, quotient_maximizer(PINCH_12))
        res = check_bounds(body, PINCH_12)
        assert res.satisfied.all_ok
        assert abs(res.quotient - quotient_bound(PINCH_12).bound) <= 1e-6

    def test_random_batch_satisfied(self):
        recs = verify_batch(PINCH_12, seeds=range(40), modes=8)
        assert len(recs) == 40
        assert all(r["satisfied"]["width"] and r["satisfied"]["outer"]
                   and r["satisfied"]["quotient"] for r in recs)
        summary = summarize_worst_margins(recs)
        assert summary["all_satisfied"]
        assert summary["max_width"] <= width_bound(FLAT, PINCH_12).bound + 1e-7

    def test_pinch_violation_raises(self):
        body = random_pinched_curve(PINCH_12, seed=0)
        tighter = PinchSpec.from_curvatures(FLAT, 1.5, 2.0)
        with pytest.raises(ValueError, match="curvature"):
            check_bounds(body, tighter)

    @pytest.mark.parametrize("space", SPACES[1:])
    def test_revolution_lemma_inequality(self, space):
        rng = rng_for(54)
        for _ in range(5):
            p = random_pinch(space, rng)
            r_t = rng.uniform(p.r2, p.r1)
            body = RevolutionBody.spindle(SpindleSpec(space, p, r_t))
            res = check_bounds(body, p)
            assert res.satisfied.width and res.satisfied.outer
            assert res.quotient_bound is None
            # sharp family: outer radius equals its bound
            assert abs(res.outer_R - res.outer_bound) <= 1e-7

    def test_equivariance(self):
        body = random_pinched_curve(PINCH_12, seed=9)
        base = check_bounds(body, PINCH_12)
        moved = check_bounds(body.translate([0.21, -0.34]).rotate(0.6), PINCH_12)
        assert abs(base.width - moved.width) <= 1e-12
        assert abs(base.quotient - moved.quotient) <= 1e-12

    def test_scaling_covariance(self):
        body = random_pinched_curve(PINCH_12, seed=10)
        base = check_bounds(body, PINCH_12)
        lam = 2.0
        scaled_pinch = PinchSpec.from_curvatures(FLAT, 1.0 / lam, 2.0 / lam)
        scaled = check_bounds(body.scale(lam), scaled_pinch)
        assert abs(scaled.width - lam * base.width) <= 1e-10
        assert abs(scaled.quotient - base.quotient) <= 1e-12


class TestRolling:
    def test_circle(self):
        assert rolling_check(TrigSupportCurve(0.75), PINCH_12, samples=50)

    def test_flat_spindle(self):
        body = spindle_support_curve(PINCH_12, 0.75)
        assert rolling_check(body, PINCH_12, samples=100)

    def test_tighter_pinch_fails(self):
        body = spindle_support_curve(PINCH_12, 0.75)
        tighter = PinchSpec.from_curvatures(FLAT, 1.5, 2.0)
        assert not rolling_check(body, tighter, samples=100)

    def test_random_bodies(self):
        for seed in (0, 5, 12):
            body = random_pinched_curve(PINCH_12, seed=seed)
            assert rolling_check(body, PINCH_12, samples=60)

    @pytest.mark.parametrize("space", SPACES[1:])
    def test_revolution_spindles(self, space):
        p = random_pinch(space, rng_for(55))
        wb = width_bound(space, p)
        body = RevolutionBody.spindle(SpindleSpec(space, p, wb.maximizer_r))
        assert rolling_check(body, p, samples=100)
        # outer ball of an over-tightened pinch must fail
        tighter = PinchSpec.from_curvatures(space, p.kappa1 * 1.5 + space.k * 0.5, p.kappa2 * 2.0)
        assert not rolling_check(body, tighter, samples=100)


class TestBatchIO:
    def test_jsonl_and_summary(self, tmp_path):
        recs = verify_batch(PINCH_12, seeds=range(6), modes=6)
        path = tmp_path / "report.jsonl"
        write_jsonl(recs, path)
        lines = path.read_text().strip().split("\n")
        assert len(lines) == 6
        import json

        rec = json.loads(lines[0])
        assert rec["seed"] == 0
        assert set(rec) >= {"seed", "kappa1", "kappa2", "r", "R", "width",
                            "quotient", "bounds", "satisfied", "margins"}

    def test_parallel_matches_serial(self):
        serial = verify_batch(PINCH_12, seeds=range(8), modes=6, jobs=1)
        parallel = verify_batch(PINCH_12, seeds=range(8), modes=6, jobs=2)
        for a, b in zip(serial, parallel):
            assert a == b
