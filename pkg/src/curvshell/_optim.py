"""Small deterministic 1-D optimizers shared across modules."""

from __future__ import annotations

import math

import numpy as np

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def local_extrema_mask(values: np.ndarray):
    """Masks of cyclic local minima / maxima of a sampled periodic function."""
    prev = np.roll(values, 1)
    nxt = np.roll(values, -1)
    return (values <= prev) & (values <= nxt), (values >= prev) & (values >= nxt)


def refine_critical_points(d1, d2, t0: np.ndarray, halfwidth: float, iters: int = 60) -> np.ndarray:
    """Newton-polish critical points of a smooth periodic function.

    Starts from the grid candidates t0 and never leaves +-halfwidth around
    them, so each refined point stays in its own basin.
    """
    t = np.asarray(t0, float).copy()
    lo, hi = t - halfwidth, t + halfwidth
    for _ in range(iters):
        g = np.asarray(d1(t), float)
        h = np.asarray(d2(t), float)
        step = np.divide(g, h, out=np.zeros_like(g), where=np.abs(h) > 1e-300)
        step = np.clip(step, -halfwidth, halfwidth)
        t = np.clip(t - step, lo, hi)
        if np.max(np.abs(step)) < 1e-15:
            break
    return t


def golden_section_max(f, a: float, b: float, xtol: float = 1e-12):
    """Maximize a unimodal function on [a, b] by golden-section search.

    Returns (x, f(x)).  The bracket never leaves [a, b], which matters for
    objectives with hard domain boundaries.
    """
    if not b >= a:
        raise ValueError("need b >= a")
    span = b - a
    if span <= xtol:
        x = 0.5 * (a + b)
        return x, f(x)
    c = a + _INV_PHI_SQ * span
    d = a + _INV_PHI * span
    fc, fd = f(c), f(d)
    n = int(math.ceil(math.log(xtol / span) / math.log(_INV_PHI))) if span > xtol else 0
    for _ in range(max(n, 0)):
        if fc > fd:
            b, d, fd = d, c, fc
            span = b - a
            c = a + _INV_PHI_SQ * span
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            span = b - a
            d = a + _INV_PHI * span
            fd = f(d)
        if span <= xtol:
            break
    x = c if fc > fd else d
    return x, max(fc, fd)
