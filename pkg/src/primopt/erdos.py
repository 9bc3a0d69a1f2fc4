"""Reciprocal-log weights 1/(n log n) and their integral bridge to power weights.

For a finite set, the reciprocal-log sum equals the integral over t in
(1, inf) of the power-weight sum: each term integrates to n^-1/log n.  The
bridge check integrates numerically (adaptive Simpson on (1, 50], exact
geometric tail beyond) and compares against the direct sum, which is what
lets power-weight dominance transfer to reciprocal-log dominance.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import PrecisionError

_SPLIT_POINT = 50.0
_MAX_DEPTH = 40


def erdos_sum(members: Sequence[int]) -> float:
    """Sum of 1/(n log n) over a finite set of integers >= 2."""
    values = sorted(set(int(n) for n in members))
    if not values:
        raise ValueError("sum is defined for nonempty sets")
    if values[0] < 2:
        raise ValueError("weights 1/(n log n) need every element >= 2")
    return math.fsum(1.0 / (n * math.log(n)) for n in values)


def _adaptive_simpson(f, a: float, b: float, tol: float) -> float:
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def rec(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth >= _MAX_DEPTH:
            raise PrecisionError("adaptive quadrature did not converge")
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return rec(a, m, fa, flm, fm, left, tol / 2.0, depth + 1) + rec(
            m, b, fm, frm, fb, right, tol / 2.0, depth + 1
        )

    return rec(a, b, fa, fm, fb, whole, tol, 0)


def integral_bridge_check(members: Sequence[int], quad_tolerance: float = 1e-6) -> float:
    """Residual between the integral of the power-weight sum over (1, inf)
    and the direct reciprocal-log sum; must be below the quadrature tolerance.

    The integral splits at t = 50: adaptive Simpson below, and the exact
    per-term value n^-50 / log n above (the integrand decays geometrically).
    """
    values = sorted(set(int(n) for n in members))
    if not values or values[0] < 2:
        raise ValueError("bridge check needs a nonempty set of integers >= 2")
    floats = [float(n) for n in values]

    def power_sum(t: float) -> float:
        return math.fsum(x ** (-t) for x in floats)

    integral = _adaptive_simpson(power_sum, 1.0, _SPLIT_POINT, quad_tolerance / 4.0)
    tail = math.fsum(x ** (-_SPLIT_POINT) / math.log(x) for x in floats)
    return abs(integral + tail - erdos_sum(values))


def dominance_transfer_check(
    set_a: Sequence[int],
    set_b: Sequence[int],
    grid_points: int = 200,
    quad_tolerance: float = 1e-6,
) -> bool:
    """If the power-weight sum of A stays at or below that of B across a
    grid on (1, 50] and termwise at the tail, the reciprocal-log sum of A
    cannot exceed that of B beyond quadrature noise."""
    a = sorted(set(int(n) for n in set_a))
    b = sorted(set(int(n) for n in set_b))
    for i in range(grid_points):
        t = 1.0 + (_SPLIT_POINT - 1.0) * (i + 1) / grid_points
        if math.fsum(float(n) ** (-t) for n in a) > math.fsum(
            float(n) ** (-t) for n in b
        ):
            return False
    if min(a) < min(b):
        return False  # the smallest element dominates the tail integrand
    return erdos_sum(a) <= erdos_sum(b) + 2.0 * quad_tolerance
