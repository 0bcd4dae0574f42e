"""Bounded scalar maximization by golden-section search.

Deterministic iteration count from the requested tolerance; ties resolved
toward the smaller argument. A vectorized variant evaluates a whole family of
one-dimensional problems in lockstep (same bracket geometry per problem), so
parallel sweeps are bit-identical to sequential ones.
"""
from __future__ import annotations

import math
from typing import Callable

import numpy as np

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def _n_iter(width: float, tol: float) -> int:
    if width <= tol:
        return 0
    return int(math.ceil(math.log(tol / width) / math.log(_INV_PHI)))


def golden_max(f: Callable[[float], float], lo: float, hi: float,
               tol: float = 1e-6) -> tuple[float, float]:
    """Maximize f on [lo, hi]; returns (argmax, value).

    Endpoints are compared against the interior solution, ties broken toward
    the smaller argument.
    """
    if hi < lo:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    a, b = lo, hi
    n = _n_iter(b - a, tol)
    if n > 0:
        dist = b - a
        c = a + _INV_PHI_SQ * dist
        d = a + _INV_PHI * dist
        yc, yd = f(c), f(d)
        for _ in range(n - 1):
            dist *= _INV_PHI
            if yc >= yd:
                b, d, yd = d, c, yc
                c = a + _INV_PHI_SQ * dist
                yc = f(c)
            else:
                a, c, yc = c, d, yd
                d = a + _INV_PHI * dist
                yd = f(d)
        x = (a + d) / 2.0 if yc >= yd else (c + b) / 2.0
    else:
        x = (a + b) / 2.0
    # endpoint comparison, ties toward the smaller argument
    candidates = [(lo, f(lo)), (x, f(x)), (hi, f(hi))]
    best_x, best_y = candidates[0]
    for cx, cy in candidates[1:]:
        if cy > best_y or (cy == best_y and cx < best_x):
            best_x, best_y = cx, cy
    return best_x, best_y


def golden_max_vec(f: Callable[[np.ndarray], np.ndarray], lo: np.ndarray,
                   hi: np.ndarray, tol: float = 1e-6) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized golden-section maximization over elementwise brackets.

    f maps an array of candidate points to an array of values; every problem
    runs the same iteration count (from the widest bracket).
    """
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    a = lo.copy()
    b = hi.copy()
    n = _n_iter(float(np.max(b - a, initial=0.0)), tol)
    dist = b - a
    c = a + _INV_PHI_SQ * dist
    d = a + _INV_PHI * dist
    yc, yd = f(c), f(d)
    for _ in range(max(n - 1, 0)):
        dist = dist * _INV_PHI
        left = yc >= yd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        c = a + _INV_PHI_SQ * dist
        d = a + _INV_PHI * dist
        yc = f(c)
        yd = f(d)
    x = np.where(yc >= yd, (a + d) / 2.0, (c + b) / 2.0)
    y = f(x)
    # endpoint comparison
    ylo, yhi = f(lo), f(hi)
    better_hi = yhi > y
    x = np.where(better_hi, hi, x)
    y = np.where(better_hi, yhi, y)
    better_lo = ylo >= y
    x = np.where(better_lo, lo, x)
    y = np.where(better_lo, ylo, y)
    return x, y


def bisect_root(g: Callable[[float], float], lo: float, hi: float,
                tol: float = 1e-15, max_iter: int = 200) -> float:
    """Root of a decreasing function g on [lo, hi] by bisection.

    Tolerant of kinks; requires g(lo) >= 0 >= g(hi).
    """
    glo, ghi = g(lo), g(hi)
    if glo < 0.0:
        return lo
    if ghi > 0.0:
        return hi
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * max(1.0, abs(mid)):
            return mid
        if g(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
