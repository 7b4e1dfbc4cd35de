"""Small numeric solvers: polynomial roots and scalar bisection."""

from __future__ import annotations

import cmath
import math
from typing import Callable, Sequence

from .errors import NumericError

_DK_MAX_ITER = 500
_DK_STEP_TOL = 1e-13


def trim_leading(coeffs: Sequence[complex], rel_tol: float = 1e-13) -> list[complex]:
    """Drop leading coefficients that are negligibly small relative to the largest."""
    c = [complex(x) for x in coeffs]
    scale = max((abs(x) for x in c), default=0.0)
    if scale == 0.0:
        raise NumericError("zero polynomial has no well-defined roots")
    i = 0
    while i < len(c) - 1 and abs(c[i]) <= rel_tol * scale:
        i += 1
    return c[i:]


def durand_kerner(coeffs: Sequence[complex]) -> list[complex]:
    """All complex roots of a polynomial given by descending coefficients.

    Simultaneous (Durand-Kerner) iteration from initial guesses on a circle
    of radius 0.5 (slightly rotated to break symmetric stalls).  Stops when
    every displacement falls below 1e-13 or every residual is at backward
    error level; multiple roots converge to a cluster whose radius scales
    like eps^(1/multiplicity), which the residual criterion accepts.
    """
    c = trim_leading(coeffs)
    deg = len(c) - 1
    if deg == 0:
        return []
    lead = c[0]
    monic = [x / lead for x in c]
    if deg == 1:
        return [-monic[1]]
    roots = [0.5 * cmath.exp(1j * (2.0 * math.pi * k / deg + 0.4)) for k in range(deg)]
    for _ in range(_DK_MAX_ITER):
        max_step = 0.0
        for i in range(deg):
            zi = roots[i]
            num = _horner(monic, zi)
            den = 1.0 + 0j
            for j in range(deg):
                if j != i:
                    den *= zi - roots[j]
            if abs(den) < 1e-300:
                den = 1e-300 + 0j
            step = num / den
            roots[i] = zi - step
            max_step = max(max_step, abs(step))
        if max_step < _DK_STEP_TOL:
            return roots
        if all(_residual_small(monic, z) for z in roots):
            return roots
    if all(_residual_small(monic, z, 1e-9) for z in roots):
        return roots
    raise NumericError(f"root iteration did not converge within {_DK_MAX_ITER} sweeps")


def _horner(monic: list[complex], z: complex) -> complex:
    acc = 0j
    for a in monic:
        acc = acc * z + a
    return acc


def _residual_small(monic: list[complex], z: complex, tol: float = 1e-12) -> bool:
    # |p(z)| measured against the evaluation's own roundoff scale
    acc = 0j
    scale = 0.0
    az = abs(z)
    for a in monic:
        acc = acc * z + a
        scale = scale * az + abs(a)
    return abs(acc) <= tol * max(scale, 1e-300)


def bisect_root(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    """Root of f in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise NumericError(f"no sign change on [{lo}, {hi}]")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0 or hi - lo < tol:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
