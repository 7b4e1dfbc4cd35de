"""Julia sets of unicritical Blaschke products, seen from the unit circle.

The Julia set is the whole circle for elliptic parameters and for the
distinguished parabolic parameters whose second derivative vanishes at the
Denjoy-Wolff point; it is a Cantor subset of the circle for hyperbolic
parameters and for the remaining parabolic ones.  The two parabolic regimes
are also told apart dynamically: zero hyperbolic step (orbit steps shrink to
nothing) against positive step (steps settle at a positive limit).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .ellipticity import CircleArc, classify
from .errors import InconclusiveError
from .normalize import preimages
from .products import (
    BlaschkeClass,
    DynamicsClass,
    StepKind,
    UnicriticalBlaschke,
    hyperbolic_distance,
)

TWO_PI = 2.0 * math.pi

_SECOND_DERIV_TOL = 1e-8  # |B''(z0)| below this is the structural zero

# 64-bit linear congruential generator; fixed constants keep backward-orbit
# sampling bit-exact across platforms and languages.
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1

_STEP_PROBE_HALF = 100_000
_STEP_ZERO_RATIO = 0.6
_STEP_POSITIVE_RATIO = 0.9


class JuliaType(Enum):
    FULL_CIRCLE = "full_circle"
    CANTOR = "cantor"


@dataclass(frozen=True)
class JuliaSample:
    """Backward-orbit approximation of the Julia set on the circle.

    `angles` is sorted ascending in [0, 2pi); `chain` keeps generation order
    (each entry is a preimage of its predecessor).  Deterministic given
    (seed, transient, count).
    """

    angles: tuple[float, ...]
    seed: int
    transient: int
    count: int
    chain: tuple[float, ...]


def julia_type(B: UnicriticalBlaschke, classification: BlaschkeClass | None = None) -> JuliaType:
    """Full circle for elliptic maps, Cantor for hyperbolic; parabolic maps
    split on whether the second derivative vanishes at the Denjoy-Wolff point."""
    cls = classification if classification is not None else classify(B.n, B.w)
    if cls.kind is DynamicsClass.ELLIPTIC:
        return JuliaType.FULL_CIRCLE
    if cls.kind is DynamicsClass.HYPERBOLIC:
        return JuliaType.CANTOR
    if abs(B.second_derivative(cls.dw_point)) < _SECOND_DERIV_TOL:
        return JuliaType.FULL_CIRCLE
    return JuliaType.CANTOR


def backward_orbit(B: UnicriticalBlaschke, seed: int,
                   transient: int = 64, count: int = 10_000) -> JuliaSample:
    """Sample the Julia set by inverse iteration from q0 = e^{i(psi + 1)}.

    Each step replaces the point by one of its n preimages, chosen by the
    documented LCG; the first `transient` points are discarded (inverse
    iteration contracts toward the Julia set at a geometric rate, so 64
    steps crush the start point far below double precision).
    """
    if count <= 0:
        raise ValueError("count must be positive")
    if transient < 0:
        raise ValueError("transient must be nonnegative")
    state = seed & _LCG_MASK
    n = B.n
    q = cmath.exp(1j * (B.psi + 1.0))
    chain: list[float] = []
    for k in range(transient + count):
        state = (state * _LCG_MULT + _LCG_INC) & _LCG_MASK
        branch = int(n * ((state >> 11) / 9007199254740992.0))  # top 53 bits as U[0,1)
        q = preimages(B, q)[branch]
        q /= abs(q)  # backward orbits stay on the circle; renormalize drift
        if k >= transient:
            chain.append(cmath.phase(q) % TWO_PI)
    return JuliaSample(tuple(sorted(chain)), seed, transient, count, tuple(chain))


def fatou_gap(B: UnicriticalBlaschke, sample: JuliaSample) -> CircleArc:
    """Largest angular gap between consecutive sample points, as an arc.

    Only meaningful when the Julia set is a Cantor set; the gap then covers
    the boundary Denjoy-Wolff point.  Raises on full-circle parameters.
    """
    cls = classify(B.n, B.w)
    if julia_type(B, cls) is JuliaType.FULL_CIRCLE:
        raise ValueError("the Julia set is the whole circle; there is no Fatou gap")
    angles = sample.angles
    if len(angles) < 2:
        raise ValueError("need at least two sample points")
    best_width = -1.0
    best = (0.0, 0.0)
    for a, b in zip(angles, angles[1:]):
        if b - a > best_width:
            best_width = b - a
            best = (a, b)
    wrap = angles[0] + TWO_PI - angles[-1]
    if wrap > best_width:
        best = (angles[-1], angles[0] + TWO_PI)
    return CircleArc(best[0], best[1])


def median_gap(sample: JuliaSample) -> float:
    """Median angular spacing of the sorted sample (wrap gap included)."""
    angles = sample.angles
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(angles[0] + TWO_PI - angles[-1])
    gaps.sort()
    m = len(gaps)
    return gaps[m // 2] if m % 2 == 1 else 0.5 * (gaps[m // 2 - 1] + gaps[m // 2])


def hyperbolic_step_kind(B: UnicriticalBlaschke,
                         classification: BlaschkeClass | None = None) -> StepKind:
    """Zero vs positive hyperbolic step of a parabolic map, by orbit probe.

    The step sequence d(B^k z, B^{k+1} z) is non-increasing; in the zero-step
    regime it decays like 1/k, so the ratio d(2K)/d(K) approaches 1/2, while
    in the positive-step regime the ratio approaches 1.  The probe compares
    the ratio at K = 1e5 against 0.6 / 0.9 cutoffs and refuses to guess in
    between.
    """
    cls = classification if classification is not None else classify(B.n, B.w)
    if cls.kind is not DynamicsClass.PARABOLIC:
        raise ValueError("hyperbolic step kind is defined for parabolic maps only")
    w, wc, n = B.w, B.w.conjugate(), B.n
    z = 0j
    d_half = d_full = None
    for k in range(2 * _STEP_PROBE_HALF + 1):
        z_next = ((z - w) / (1.0 - wc * z)) ** n
        if k == _STEP_PROBE_HALF:
            d_half = hyperbolic_distance(z, z_next)
        elif k == 2 * _STEP_PROBE_HALF:
            d_full = hyperbolic_distance(z, z_next)
        z = z_next
    ratio = d_full / d_half
    if ratio < _STEP_ZERO_RATIO:
        return StepKind.ZERO
    if ratio > _STEP_POSITIVE_RATIO:
        return StepKind.POSITIVE
    raise InconclusiveError(
        f"step ratio {ratio:.3f} falls between the zero/positive cutoffs")


def write_angles_csv(sample: JuliaSample, path) -> None:
    """Export the sorted sample: header `angle`, one angle per line, 17
    significant digits, LF endings."""
    lines = ["angle"]
    lines.extend(f"{a:.17g}" for a in sample.angles)
    data = ("\n".join(lines) + "\n").encode("ascii")
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise OSError(f"cannot write Julia sample to {path}: {exc}") from exc
