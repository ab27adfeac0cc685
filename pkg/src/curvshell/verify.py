"""Empirical verification of the shell bounds on concrete convex bodies.

The shell of a body is centered at its inscribed-ball (Chebyshev) center.
For planar support-function bodies the center solves the concave maximin

    maximize over o of  min over t of  h(t) - <o, u(t)>,

here by a certified cutting-plane scheme: a linear maximin over the 2048
support directions, then rounds of exact contact cuts (Newton-refined
global minima of the support gap, plus nearby "shadow" cuts that model
the curvature of the active branch) until the LP upper bound and the
exact objective agree to the requested gap.  Rotationally symmetric
bodies restrict the center to the rotation axis, where the problem is a
1-D concave maximization solved by golden section.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog, minimize_scalar

from ._optim import golden_section_max, local_extrema_mask, refine_critical_points
from .bodies import (
    GRID_N,
    THETA_GRID,
    RevolutionBody,
    curvature_range,
    random_pinched_curve,
    rho_range,
    unit_vectors,
)
from .bounds import outer_radius_bound, quotient_bound, width_bound
from .geometry import (
    PinchSpec,
    SpaceCurvature,
    angle_in_frame,
    axis_point_frame,
    distance,
    geodesic_toward,
    law_of_cosines_side,
)
from .spindle import arc_point, segment_length

BOUND_SLACK = 1e-7  # tolerance absorbing discretization in the satisfied flags

_U_GRID = unit_vectors(THETA_GRID)


@dataclass(frozen=True)
class BoundChecks:
    width: bool
    outer: bool
    quotient: bool | None

    @property
    def all_ok(self) -> bool:
        return self.width and self.outer and (self.quotient is None or self.quotient)


@dataclass(frozen=True)
class ShellResult:
    """Computed shell of one body, with the theoretical bounds it must obey."""

    center: np.ndarray
    inner_r: float
    outer_R: float
    width: float
    quotient: float
    width_bound: float
    outer_bound: float
    quotient_bound: float | None
    satisfied: BoundChecks

    @property
    def margins(self) -> dict:
        m = {
            "width": self.width_bound - self.width,
            "outer": self.outer_bound - self.outer_R,
        }
        if self.quotient_bound is not None:
            m["quotient"] = self.quotient_bound - self.quotient
        return m


# ---------------------------------------------------------------------------
# Support-gap minimization (flat bodies).

def _gap_fns(body, o):
    """f(t) = h(t) - <o, u(t)> and its t-derivatives (f'' = rho - f)."""
    o = np.asarray(o, float)

    def f(t):
        t = np.asarray(t, float)
        return body.h(t) - (np.cos(t) * o[0] + np.sin(t) * o[1])

    def fp(t):
        t = np.asarray(t, float)
        return body.h_prime(t) + np.sin(t) * o[0] - np.cos(t) * o[1]

    def fpp(t):
        return np.asarray(body.rho(t), float) - np.asarray(f(t), float)

    return f, fp, fpp


def _support_gap_minima(body, o, with_spread=False):
    """Newton-refined local minima of the support gap at center o.

    Returns (global_min, thetas, values), values ascending and thetas
    deduplicated to one representative per branch.  With with_spread=True
    a fourth element reports max - min of the gap over the whole grid
    (zero exactly for a ball centered at o).
    """
    f, fp, fpp = _gap_fns(body, o)
    f_grid = f(THETA_GRID)
    min_mask, _ = local_extrema_mask(f_grid)
    t0 = THETA_GRID[min_mask]
    step = 2.0 * math.pi / GRID_N
    t_ref = refine_critical_points(fp, fpp, t0, step)
    v_ref = np.asarray(f(t_ref), float)
    v0 = f_grid[min_mask]
    better = v_ref <= v0
    thetas = np.mod(np.where(better, t_ref, t0), 2.0 * math.pi)
    values = np.where(better, v_ref, v0)
    # one representative per branch
    order = np.argsort(thetas)
    thetas, values = thetas[order], values[order]
    if thetas.size > 1:
        gaps = np.diff(thetas, append=thetas[0] + 2.0 * math.pi)
        fresh = np.concatenate([[True], gaps[:-1] > 1e-6])
        thetas, values = thetas[fresh], values[fresh]
    gmin = float(min(values.min(), f_grid.min()))
    order = np.argsort(values)
    if with_spread:
        return gmin, thetas[order], values[order], float(f_grid.max() - gmin)
    return gmin, thetas[order], values[order]


def _branch_min(body, o, t_seed):
    """Refine a single local minimum of the support gap near t_seed."""
    f, fp, fpp = _gap_fns(body, o)
    t = refine_critical_points(fp, fpp, np.array([t_seed]), 0.05)
    return float(np.asarray(f(t), float)[0]), float(t[0])


_LP_OPTS = {"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10}


def _maximin_lp(a_dirs, b_vals):
    """max t s.t. <o, u_j> + t <= h_j; returns (o, t)."""
    rows = np.column_stack([a_dirs, np.ones(len(b_vals))])
    res = linprog(c=[0.0, 0.0, -1.0], A_ub=rows, b_ub=b_vals,
                  bounds=[(None, None)] * 3, method="highs", options=_LP_OPTS)
    if res.status != 0:
        raise RuntimeError(f"support maximin LP failed (status {res.status})")
    return res.x[:2], -res.fun


def _spanning(thetas) -> bool:
    """Whether the active normals positively span the plane."""
    if thetas.size < 3:
        return False
    ang = np.sort(np.mod(thetas, 2.0 * math.pi))
    gaps = np.diff(ang, append=ang[0] + 2.0 * math.pi)
    return bool(gaps.max() < math.pi - 1e-9)


def _best_spread_triple(thetas):
    """Pick three active normals with the largest minimal pairwise spread."""
    thetas = thetas[:12]  # near-ball bodies can have many near-equal contacts
    ang = np.mod(thetas, 2.0 * math.pi)
    idx = np.argsort(ang)
    ang = ang[idx]
    best, best_spread = None, -1.0
    n = ang.size

    for tri in itertools.combinations(range(n), 3):
        a = ang[list(tri)]
        gaps = np.diff(np.concatenate([a, [a[0] + 2.0 * math.pi]]))
        if gaps.max() >= math.pi - 1e-9:
            continue
        spread = gaps.min()
        if spread > best_spread:
            best_spread, best = spread, thetas[idx][list(tri)]
    return best


def _newton_triple(body, o, tri):
    """Newton iteration on three active contacts: intersect the tangent cuts."""
    tri = np.array(tri, float)
    for _ in range(20):
        f, fp, fpp = _gap_fns(body, o)
        tri = refine_critical_points(fp, fpp, tri, 0.05)
        u = unit_vectors(tri)
        rows = np.column_stack([u, np.ones(3)])
        try:
            sol = np.linalg.solve(rows, np.asarray(body.h(tri), float))
        except np.linalg.LinAlgError:
            return o, None
        o_new, t_val = sol[:2], sol[2]
        if np.linalg.norm(o_new - o) <= 1e-14 * (1.0 + np.linalg.norm(o)):
            return o_new, t_val
        o = o_new
    return o, t_val


def _line_search(body, o, direction, span):
    """Bounded golden maximization of the refined gap along a ray."""

    def g(s):
        return _support_gap_minima(body, o + s * direction)[0]

    s_star, _ = golden_section_max(g, 0.0, span, xtol=1e-12)
    return o + s_star * direction


def _ridge_newton(body, o, theta1, theta2):
    """Solve the two-contact optimum: equal branch values, antipodal normals.

    Newton on F(o) = (g1 - g2, theta1 - theta2 - pi), using
    d theta_i / d o = u'(theta_i) / f''(theta_i); quadratic convergence to
    machine precision where golden section would hit the sqrt(eps) floor.
    """
    t1, t2 = theta1, theta2
    scale = 1.0 + float(np.linalg.norm(o))
    for _ in range(40):
        g1, t1 = _branch_min(body, o, t1)
        g2, t2 = _branch_min(body, o, t2)
        _, _, fpp = _gap_fns(body, o)
        c1, c2 = float(fpp(t1)), float(fpp(t2))
        if c1 <= 1e-12 or c2 <= 1e-12:
            return o, False
        u1, u2 = unit_vectors(np.array([t1, t2]))
        up1 = np.array([-u1[1], u1[0]])
        up2 = np.array([-u2[1], u2[0]])
        r_val = g1 - g2
        r_ang = math.remainder(t1 - t2 - math.pi, 2.0 * math.pi)
        jac = np.vstack([u2 - u1, up1 / c1 - up2 / c2])
        try:
            delta = np.linalg.solve(jac, -np.array([r_val, r_ang]))
        except np.linalg.LinAlgError:
            return o, False
        norm = float(np.linalg.norm(delta))
        if norm > 0.1 * scale:
            delta *= 0.1 * scale / norm
        o = o + delta
        if norm <= 1e-15 * scale:
            return o, True
    return o, False


def _inscribed_support(body, grid_offset=0.0):
    """Chebyshev center of a support-function body: grid LP plus active-set polish.

    The linear maximin over the direction grid lands in the optimum's
    basin; the polish then resolves the exact contact structure (three
    spanning contacts -> Newton; an antipodal pair -> ridge maximization;
    fewer contacts -> ascent line searches).  grid_offset rotates the
    initial grid and must not change the result (restart stability).
    """
    thetas = THETA_GRID + grid_offset
    u_grid = unit_vectors(thetas) if grid_offset else _U_GRID
    h_grid = np.asarray(body.h(thetas), float)
    o, t_upper = _maximin_lp(u_grid, h_grid)

    best_o, best_val = o, _support_gap_minima(body, o)[0]
    for _ in range(16):
        gmin, t_min, v_min, spread = _support_gap_minima(body, o, with_spread=True)
        if gmin > best_val:
            best_o, best_val = o, gmin
        if spread <= 1e-13 * (1.0 + abs(gmin)):  # ball: every direction touches
            return o, gmin
        window = max(10.0 * max(t_upper - gmin, 0.0), 1e-11) + 1e-13
        act = t_min[v_min <= v_min[0] + window]
        if _spanning(act):
            tri = _best_spread_triple(act)
            if tri is not None:
                o_new, t_val = _newton_triple(body, o, tri)
                if t_val is not None:
                    g_new, _, _ = _support_gap_minima(body, o_new)
                    if g_new >= t_val - 1e-12:
                        return (o_new, g_new) if g_new >= best_val else (best_o, best_val)
                    # a branch outside the triple dips lower: iterate with it
                    o, t_upper = o_new, t_val
                    continue
        if act.size >= 2:
            d_ang = abs((act[0] - act[1]) % (2.0 * math.pi) - math.pi)
            if d_ang < 0.1:
                o_new, ok = _ridge_newton(body, o, act[0], act[1])
                g_new, _, _ = _support_gap_minima(body, o_new)
                if ok and g_new >= best_val - 1e-13:
                    return o_new, g_new
                if g_new > best_val:
                    best_o, best_val = o_new, g_new
                o = o_new
                continue
        # ascend against the mean active normal until more contacts appear
        u_act = unit_vectors(act[: min(act.size, 2)])
        direction = -u_act.sum(axis=0)
        nrm = np.linalg.norm(direction)
        if nrm < 1e-12:
            return best_o, best_val
        o = _line_search(body, o, direction / nrm, 2.0 * (1.0 + np.linalg.norm(o)))
    gmin, _, _ = _support_gap_minima(body, o)
    return (o, gmin) if gmin >= best_val else (best_o, best_val)


# ---------------------------------------------------------------------------
# Distances from a point to an arc-represented profile.

def _wrap_to(angle, base):
    return base + (angle - base) % (2.0 * math.pi)


def _ang_sep(x, y):
    """Circular angular separation in [0, pi]."""
    d = (x - y) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d)


def _arc_extreme_dists(space, point, arc):
    """(min, max) geodesic distance from point to one profile arc, closed form.

    The distance to a circle point is monotone in the central angle away
    from the direction of the query point, so the extremes over the arc
    are attained at the clamped nearest/farthest angles of the span.
    """
    delta = float(distance(space, point, arc.center))
    if delta < 1e-14:
        return arc.radius, arc.radius
    t_near = angle_in_frame(space, arc.center, arc.frame_u, arc.frame_v, point)
    lo, hi = arc.theta_start, arc.theta_end

    cand = _wrap_to(t_near, lo)
    near_t = cand if cand <= hi else (lo if _ang_sep(lo, t_near) <= _ang_sep(hi, t_near) else hi)
    cand = _wrap_to(t_near + math.pi, lo)
    far_t = cand if cand <= hi else (lo if _ang_sep(lo, t_near) >= _ang_sep(hi, t_near) else hi)

    d_near = law_of_cosines_side(space, delta, arc.radius, _ang_sep(near_t, t_near))
    d_far = law_of_cosines_side(space, delta, arc.radius, _ang_sep(far_t, t_near))
    return d_near, d_far


def profile_extreme_dists(body: RevolutionBody, point):
    """(min, max) geodesic distance from a meridian-plane point to the profile."""
    mins, maxs = [], []
    for seg in body.profile.segments:
        lo, hi = _arc_extreme_dists(body.space, point, seg)
        mins.append(lo)
        maxs.append(hi)
    return min(mins), max(maxs)


def _inscribed_revolution(body: RevolutionBody):
    space = body.space
    center = body.profile.symmetry_center
    # the profile meets the axis at +- the outer radius: beyond that the
    # axis point is outside the body and min-distance is not the inscribed
    # objective, so the bracket must stay on this chord
    reach = profile_extreme_dists(body, center)[1]

    def g(t):
        point, _, _ = axis_point_frame(space, 0, t)
        return profile_extreme_dists(body, point)[0]

    t_star, r = golden_section_max(g, -reach * (1 - 1e-9), reach * (1 - 1e-9), xtol=1e-12)
    point, _, _ = axis_point_frame(space, 0, t_star)
    return point, r


def inscribed_ball(body):
    """Center and radius of the largest ball inside the body.

    Flat support bodies solve the concave maximin over the plane (objective
    certified to 1e-10); revolution bodies maximize along the rotation axis
    (golden section, abscissa 1e-12).
    """
    if isinstance(body, RevolutionBody):
        return _inscribed_revolution(body)
    return _inscribed_support(body)


def circumscribed_from_center(body, center):
    """Largest geodesic distance from center to the boundary.

    The center must be interior.  Support bodies scan the boundary over the
    direction grid and polish the top local maxima; revolution bodies use
    the per-arc closed form.
    """
    if isinstance(body, RevolutionBody):
        lo, hi = profile_extreme_dists(body, np.asarray(center, float))
        if lo <= 0.0:
            raise ValueError("center must be interior to the body")
        return hi
    o = np.asarray(center, float)
    gmin, _, _ = _support_gap_minima(body, o)
    if gmin <= 0.0:
        raise ValueError("center must be interior to the body")
    bpts = np.asarray(body.boundary(THETA_GRID))
    d2 = ((bpts - o) ** 2).sum(axis=1)
    _, max_mask = local_extrema_mask(d2)
    cand = THETA_GRID[max_mask]
    cand = cand[np.argsort(d2[max_mask])][-4:]
    step = 2.0 * math.pi / GRID_N
    best = math.sqrt(float(d2.max()))
    for t0 in cand:
        res = minimize_scalar(
            lambda t: -float(((np.asarray(body.boundary(t)) - o) ** 2).sum()),
            bounds=(t0 - step, t0 + step), method="bounded", options={"xatol": 1e-13})
        best = max(best, math.sqrt(-res.fun))
    return best


def _pinch_precondition(body, pinch: PinchSpec):
    kmin, kmax = curvature_range(body)
    tol = 1e-8
    if kmin < pinch.kappa1 - tol or kmax > pinch.kappa2 + tol:
        lo, hi, lo_t, hi_t = rho_range(body)
        raise ValueError(
            "body violates the curvature pinching: "
            f"normal curvature range [{kmin:.12g}, {kmax:.12g}] vs "
            f"[{pinch.kappa1:.12g}, {pinch.kappa2:.12g}] "
            f"(curvature radius extremes at t={hi_t:.6g} and t={lo_t:.6g})"
        )


def check_bounds(body, pinch: PinchSpec) -> ShellResult:
    """Compute the body's shell at the inscribed center and compare to the bounds."""
    _pinch_precondition(body, pinch)
    space = body.space if isinstance(body, RevolutionBody) else SpaceCurvature.flat()
    center, r = inscribed_ball(body)
    big_r = circumscribed_from_center(body, center)

    r_clamped = min(max(r, pinch.r2), pinch.r1)
    if abs(r_clamped - r) > 1e-6:
        raise ValueError(
            f"inscribed radius {r} escapes [{pinch.r2}, {pinch.r1}]; "
            "the body is not pinched as claimed"
        )
    width = big_r - r
    quotient = big_r / r
    wb = width_bound(space, pinch).bound
    ob = outer_radius_bound(space, pinch, r_clamped)
    qb = quotient_bound(pinch).bound if space.kind == "flat" else None
    checks = BoundChecks(
        width=width <= wb + BOUND_SLACK,
        outer=big_r <= ob + BOUND_SLACK,
        quotient=None if qb is None else quotient <= qb + BOUND_SLACK,
    )
    return ShellResult(center, r, big_r, width, quotient, wb, ob, qb, checks)


# ---------------------------------------------------------------------------
# Blaschke rolling checks.

def rolling_check(body, pinch: PinchSpec, samples: int = 100, probes: int = 512,
                  tol: float = 1e-9) -> bool:
    """Sampled rolling test: the tangent ball of radius r2 fits inside, the
    body fits inside the tangent ball of radius r1, at each sampled
    boundary point.  Containment is probed on a grid of boundary points
    (probes per ball)."""
    if isinstance(body, RevolutionBody):
        return _rolling_revolution(body, pinch, samples, tol)
    th = np.arange(samples) * (2.0 * math.pi / samples)
    x = np.asarray(body.boundary(th))
    u = unit_vectors(th)
    c_in = x - pinch.r2 * u
    c_out = x - pinch.r1 * u

    th_probe = np.arange(probes) * (2.0 * math.pi / probes)
    u_probe = unit_vectors(th_probe)
    h_probe = np.asarray(body.h(th_probe))
    x_probe = np.asarray(body.boundary(th_probe))

    inner_gap = h_probe[None, :] - c_in @ u_probe.T  # support gap per (sample, probe)
    if inner_gap.min() < pinch.r2 - tol:
        return False
    d_out = np.linalg.norm(x_probe[None, :, :] - c_out[:, None, :], axis=2)
    return bool(d_out.max() <= pinch.r1 + tol)


def _rolling_revolution(body: RevolutionBody, pinch: PinchSpec, samples: int, tol: float) -> bool:
    space = body.space
    segs = body.profile.segments
    lengths = np.array([segment_length(space, s) for s in segs])
    counts = np.maximum((samples * lengths / lengths.sum()).round().astype(int), 1)
    for seg, m in zip(segs, counts):
        thetas = seg.theta_start + (np.arange(m) + 0.5) / m * seg.span
        for t in thetas:
            p = arc_point(space, seg, float(t))
            c_in = geodesic_toward(space, p, seg.center, pinch.r2)
            c_out = geodesic_toward(space, p, seg.center, pinch.r1)
            if profile_extreme_dists(body, c_in)[0] < pinch.r2 - tol:
                return False
            if profile_extreme_dists(body, c_out)[1] > pinch.r1 + tol:
                return False
    return True


# ---------------------------------------------------------------------------
# Batch verification over seeded random bodies.

def _record_from_result(res: ShellResult, seed, pinch: PinchSpec) -> dict:
    rec = {
        "seed": seed,
        "kappa1": pinch.kappa1,
        "kappa2": pinch.kappa2,
        "r": res.inner_r,
        "R": res.outer_R,
        "width": res.width,
        "quotient": res.quotient,
        "bounds": {
            "width": res.width_bound,
            "outer": res.outer_bound,
            "quotient": res.quotient_bound,
        },
        "satisfied": {
            "width": res.satisfied.width,
            "outer": res.satisfied.outer,
            "quotient": res.satisfied.quotient,
        },
        "margins": res.margins,
    }
    return rec


def _batch_worker(args):
    kappa1, kappa2, seed, modes = args
    pinch = PinchSpec.from_curvatures(SpaceCurvature.flat(), kappa1, kappa2)
    body = random_pinched_curve(pinch, seed=seed, modes=modes)
    res = check_bounds(body, pinch)
    return _record_from_result(res, seed, pinch)


def verify_batch(pinch: PinchSpec, seeds, modes: int = 8, jobs: int = 1):
    """Run check_bounds on the seeded random-body family; records sorted by seed."""
    tasks = [(pinch.kappa1, pinch.kappa2, int(s), modes) for s in seeds]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_batch_worker, tasks, chunksize=16))
    else:
        records = [_batch_worker(t) for t in tasks]
    records.sort(key=lambda r: r["seed"])
    return records


def write_jsonl(records, path) -> None:
    with open(path, "w") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")


def summarize_worst_margins(records) -> dict:
    """Worst (smallest) margin per bound over a batch, plus extreme widths."""
    out = {
        "count": len(records),
        "worst_width_margin": min(r["margins"]["width"] for r in records),
        "worst_outer_margin": min(r["margins"]["outer"] for r in records),
        "max_width": max(r["width"] for r in records),
        "max_quotient": max(r["quotient"] for r in records),
        "all_satisfied": all(
            r["satisfied"]["width"] and r["satisfied"]["outer"]
            and (r["satisfied"]["quotient"] is not False)
            for r in records
        ),
    }
    q_margins = [r["margins"].get("quotient") for r in records]
    if all(m is not None for m in q_margins) and q_margins:
        out["worst_quotient_margin"] = min(q_margins)
    return out


def write_summary_csv(summaries, path) -> None:
    """One row per pinch: worst margins of its batch."""
    cols = ["kappa1", "kappa2", "count", "worst_width_margin", "worst_outer_margin",
            "worst_quotient_margin", "max_width", "max_quotient", "all_satisfied"]
    with open(path, "w") as fh:
        fh.write(",".join(cols) + "\n")
        for s in summaries:
            fh.write(",".join(str(s.get(c, "")) for c in cols) + "\n")
