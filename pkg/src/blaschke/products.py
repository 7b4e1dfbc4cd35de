"""Unicritical Blaschke products B(z) = ((z - w)/(1 - conj(w) z))^n.

Provides evaluation and derivatives, the continuous lift of the boundary
circle map, boundary fixed points, a forward-iteration Denjoy-Wolff oracle,
and hyperbolic distances / step sequences used to probe parabolic behaviour.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InconclusiveError

TWO_PI = 2.0 * math.pi

# Forward-iteration oracle thresholds.  A window of 50 consecutive orbit
# points with pairwise hyperbolic distance below 1e-3 counts as stalled
# (enforced through the per-step bound 1e-3 / 50); 20 consecutive iterates
# with |z| > 1 - 1e-6 count as boundary-bound.
_STALL_STEP = 1e-3 / 50.0
_STALL_RUN = 50
_BOUNDARY_NEAR = 1e-6
_BOUNDARY_RUN = 20

# Boundary fixed-point search: base grid per period, local refinement around
# the angles where |B'| = 1 (tangencies can hide between base grid nodes).
_GRID = 4096
_REFINE = 512
_ANGLE_TOL = 1e-12
_NEUTRAL_TOL = 1e-9
_MERGE_TOL = 1e-4


class DynamicsClass(Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class OrbitLocation(Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"


class StepKind(Enum):
    ZERO = "zero"
    POSITIVE = "positive"


@dataclass(frozen=True)
class BlaschkeClass:
    """Classification outcome: kind, Denjoy-Wolff point and its multiplier.

    Elliptic maps carry an interior point with |multiplier| < 1, parabolic
    maps a boundary point with |multiplier| = 1, hyperbolic maps a boundary
    point whose multiplier is real in (0, 1).
    """

    kind: DynamicsClass
    dw_point: complex
    multiplier: complex

    @property
    def is_elliptic(self) -> bool:
        return self.kind is DynamicsClass.ELLIPTIC

    @property
    def is_parabolic(self) -> bool:
        return self.kind is DynamicsClass.PARABOLIC

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind is DynamicsClass.HYPERBOLIC


@dataclass(frozen=True)
class UnicriticalBlaschke:
    """Degree-n Blaschke product with the single critical point w (multiplicity n-1)."""

    n: int
    w: complex

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"degree n must be an integer >= 2, got {self.n}")
        if abs(self.w) >= 1.0:
            raise ValueError(f"critical point must satisfy |w| < 1, got |w| = {abs(self.w)}")
        object.__setattr__(self, "w", complex(self.w))

    @property
    def s(self) -> float:
        return abs(self.w)

    @property
    def psi(self) -> float:
        p = cmath.phase(self.w)
        return p + TWO_PI if p < 0.0 else p

    def _inner(self, z: complex) -> complex:
        den = 1.0 - self.w.conjugate() * z
        if abs(den) < 1e-14 * (1.0 + abs(z)):
            raise ValueError(f"evaluation at the pole 1/conj(w): z = {z}")
        return (z - self.w) / den

    def __call__(self, z: complex) -> complex:
        return self._inner(z) ** self.n

    def derivative(self, z: complex) -> complex:
        den = 1.0 - self.w.conjugate() * z
        if abs(den) < 1e-14 * (1.0 + abs(z)):
            raise ValueError(f"evaluation at the pole 1/conj(w): z = {z}")
        a = (z - self.w) / den
        return self.n * a ** (self.n - 1) * (1.0 - abs(self.w) ** 2) / den**2

    def second_derivative(self, z: complex) -> complex:
        den = 1.0 - self.w.conjugate() * z
        if abs(den) < 1e-14 * (1.0 + abs(z)):
            raise ValueError(f"evaluation at the pole 1/conj(w): z = {z}")
        a = (z - self.w) / den
        one_minus = 1.0 - abs(self.w) ** 2
        factor = (self.n - 1) * one_minus + 2.0 * self.w.conjugate() * (z - self.w)
        return self.n * one_minus * a ** (self.n - 2) * factor / den**4

    def boundary_derivative_modulus(self, phi: float) -> float:
        """|B'(e^{i phi})| = n (1 - s^2) / (1 + s^2 - 2 s cos(phi - psi))."""
        s = self.s
        return self.n * (1.0 - s * s) / (1.0 + s * s - 2.0 * s * math.cos(phi - self.psi))

    def lift(self, phi: float) -> float:
        """Continuous lift F of the boundary circle map: e^{iF(phi)} = B(e^{i phi}).

        Closed form F(phi) = n (phi + 2 arg(1 - w e^{-i phi})); the argument is
        taken on the principal branch, which never jumps because
        Re(1 - w e^{-i phi}) >= 1 - |w| > 0.  F is real-analytic, strictly
        increasing with F' = |B'| on the circle, and F(phi + 2pi) = F(phi) + 2pi n.
        The branch is anchored so that F(0) = 2n arg(1 - w), which reduces to
        F(phi) = n phi for w = 0.
        """
        v = 1.0 - self.w * cmath.exp(-1j * phi)
        return self.n * (phi + 2.0 * math.atan2(v.imag, v.real))

    def lift_grid(self, phis: np.ndarray) -> np.ndarray:
        """Vectorized `lift` over an array of angles."""
        v = 1.0 - self.w * np.exp(-1j * np.asarray(phis, dtype=float))
        return self.n * (np.asarray(phis, dtype=float) + 2.0 * np.arctan2(v.imag, v.real))

    def _unit_derivative_angles(self) -> list[float]:
        """Angles in [0, 2pi) where |B'| = 1 on the circle (0, 1 or 2 of them)."""
        n, s = self.n, self.s
        smin = (n - 1) / (n + 1)
        if s < smin - 1e-15 or s == 0.0:
            return []
        t = (1.0 - n + (1.0 + n) * s * s) / (2.0 * s)
        t = min(1.0, max(-1.0, t))
        a = math.acos(t)
        if a > math.pi - 1e-12:
            return [(self.psi + math.pi) % TWO_PI]
        return [(self.psi + a) % TWO_PI, (self.psi + TWO_PI - a) % TWO_PI]

    def boundary_fixed_points(self) -> list[float]:
        """All angles phi in [0, 2pi) with B(e^{i phi}) = e^{i phi}, sorted.

        Roots of F(phi) - phi = 2 pi k are located by a sign-change scan of a
        dense grid, refined by bisection; tangential (neutral) roots sit at
        the angles where |B'| = 1 and are detected there directly, since
        bisection cannot find a double root.  The count is n-1 for elliptic
        parameters, n for parabolic (neutral root counted once) and n+1 for
        hyperbolic ones.
        """
        h = TWO_PI / _GRID
        # the half-step offset keeps common fixed points (phi = 0 and other
        # exact grid values) off the nodes, so the strict sign test sees them
        grids = [np.linspace(0.5 * h, TWO_PI + 0.5 * h, _GRID + 1)]
        neutral_angles = self._unit_derivative_angles()
        for e in neutral_angles:
            # near-tangent root pairs straddle these angles closer than the
            # base grid step; resolve them locally
            grids.append(np.linspace(e - 2.0 * h, e + 2.0 * h, _REFINE + 1))
        roots: list[float] = []
        for grid in grids:
            gap = self.lift_grid(grid) - grid
            kmin = int(math.floor(gap.min() / TWO_PI))
            kmax = int(math.ceil(gap.max() / TWO_PI))
            for k in range(kmin, kmax + 1):
                vals = gap - TWO_PI * k
                sign_flip = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
                for j in sign_flip:
                    roots.append(self._bisect_fixed_angle(grid[j], grid[j + 1], k))
        for e in neutral_angles:
            gap = self.lift(e) - e
            if abs(gap - TWO_PI * round(gap / TWO_PI)) < _NEUTRAL_TOL:
                roots.append(e)
        return self._merge_fixed_angles(roots)

    def _merge_fixed_angles(self, angles: list[float]) -> list[float]:
        """Cluster angles closer than the merge radius (distinct boundary fixed
        points only approach each other near parabolic parameters, where they
        should count once anyway) and keep the best root of each cluster."""
        if not angles:
            return []
        arr = sorted(a % TWO_PI for a in angles)
        clusters: list[list[float]] = [[arr[0]]]
        for a in arr[1:]:
            if a - clusters[-1][-1] <= _MERGE_TOL:
                clusters[-1].append(a)
            else:
                clusters.append([a])
        if len(clusters) > 1 and (TWO_PI - clusters[-1][-1]) + clusters[0][0] <= _MERGE_TOL:
            clusters[0].extend(clusters.pop())

        def residual(phi: float) -> float:
            z = cmath.exp(1j * phi)
            return abs(self(z) - z)

        return sorted(min(c, key=residual) for c in clusters)

    def _bisect_fixed_angle(self, lo: float, hi: float, k: int) -> float:
        target = TWO_PI * k
        flo = self.lift(lo) - lo - target
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            fmid = self.lift(mid) - mid - target
            if fmid == 0.0 or hi - lo < _ANGLE_TOL:
                return mid % TWO_PI
            if (flo < 0.0) == (fmid < 0.0):
                lo, flo = mid, fmid
            else:
                hi = mid
        return (0.5 * (lo + hi)) % TWO_PI

    def attracting_boundary_angle(self, tol: float = 1e-7) -> float:
        """The boundary fixed angle with |B'| <= 1 (attracting or neutral)."""
        candidates = [
            phi for phi in self.boundary_fixed_points()
            if self.boundary_derivative_modulus(phi) <= 1.0 + tol
        ]
        if not candidates:
            raise InconclusiveError("no boundary fixed point with |B'| <= 1 found")
        return min(candidates, key=self.boundary_derivative_modulus)


def hyperbolic_distance(z1: complex, z2: complex) -> float:
    """Hyperbolic distance arctanh |(z1 - z2)/(1 - conj(z2) z1)| in the disk.

    Convention without the factor 2; downstream code only consumes monotone
    limits, so the normalization is fixed once here.
    """
    if abs(z1) >= 1.0 or abs(z2) >= 1.0:
        raise ValueError("hyperbolic distance requires both points inside the open disk")
    return math.atanh(abs((z1 - z2) / (1.0 - z2.conjugate() * z1)))


def orbit_point(B: UnicriticalBlaschke, z: complex, k: int) -> complex:
    """B^k(z) by direct iteration (no history kept)."""
    w, wc, n = B.w, B.w.conjugate(), B.n
    for _ in range(k):
        z = ((z - w) / (1.0 - wc * z)) ** n
    return z


def hyperbolic_step_at(B: UnicriticalBlaschke, z: complex, k: int) -> float:
    """d(B^k(z), B^{k+1}(z)) without storing the orbit."""
    zk = orbit_point(B, z, k)
    return hyperbolic_distance(zk, orbit_point(B, zk, 1))


def hyperbolic_step_sequence(B: UnicriticalBlaschke, z: complex, count: int) -> list[float]:
    """The first `count` hyperbolic steps d(B^k(z), B^{k+1}(z)), k = 0..count-1.

    Non-increasing by the Schwarz-Pick lemma.  If the orbit numerically
    reaches |z| >= 1 - 1e-15 the sequence is truncated and a RuntimeWarning
    flags the truncation.
    """
    if abs(z) >= 1.0:
        raise ValueError("orbit start must lie inside the open disk")
    w, wc, n = B.w, B.w.conjugate(), B.n
    steps: list[float] = []
    for _ in range(count):
        z_next = ((z - w) / (1.0 - wc * z)) ** n
        if abs(z_next) >= 1.0 - 1e-15:
            warnings.warn("orbit reached the numerical boundary; step sequence truncated",
                          RuntimeWarning, stacklevel=2)
            break
        steps.append(hyperbolic_distance(z, z_next))
        z = z_next
    return steps


def _newton_fixed_point(B: UnicriticalBlaschke, z: complex, tol: float) -> complex | None:
    """Polish a fixed point of B by Newton on B(z) - z; None on failure."""
    for _ in range(60):
        f = B(z) - z
        if abs(f) < tol:
            return z
        df = B.derivative(z) - 1.0
        if abs(df) < 1e-14:
            return None
        step = f / df
        z = z - step
        if abs(z) > 1.0 + 1e-6:
            return None
    return z if abs(B(z) - z) < math.sqrt(tol) else None


def denjoy_wolff_iterate(B: UnicriticalBlaschke, tol: float, max_iter: int) -> tuple[complex, OrbitLocation]:
    """Forward-iteration Denjoy-Wolff oracle from the critical value z = 0.

    Interior verdicts come from an orbit stall (window of small hyperbolic
    steps) followed by Newton refinement of B(z) = z; if the refined point
    sits on the circle instead, the orbit was crawling toward a boundary
    fixed point and the verdict is Boundary.  Orbits that pin themselves
    against the circle for 20 consecutive iterates are also Boundary, with
    the point taken from `boundary_fixed_points` (the one with |B'| <= 1).
    Raises InconclusiveError when the budget runs out: this is the slow
    oracle, and near-threshold parameters are expected to be inconclusive.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    z = 0j
    stall = 0
    near_boundary = 0
    for _ in range(max_iter):
        z_next = B(z)
        if abs(z_next) >= 1.0 - 1e-15:
            near_boundary += 1
            if near_boundary >= _BOUNDARY_RUN:
                phi = B.attracting_boundary_angle()
                return cmath.exp(1j * phi), OrbitLocation.BOUNDARY
            z = z_next / abs(z_next) * (1.0 - 1e-15)
            continue
        step = hyperbolic_distance(z, z_next)
        z = z_next
        if abs(z) > 1.0 - _BOUNDARY_NEAR:
            near_boundary += 1
            if near_boundary >= _BOUNDARY_RUN:
                phi = B.attracting_boundary_angle()
                return cmath.exp(1j * phi), OrbitLocation.BOUNDARY
        else:
            near_boundary = 0
        if step < _STALL_STEP:
            stall += 1
            if stall >= _STALL_RUN:
                refined = _newton_fixed_point(B, z, tol)
                if refined is not None:
                    r = abs(refined)
                    mult = abs(B.derivative(refined))
                    # a genuine interior Denjoy-Wolff point is attracting;
                    # parabolic stalls produce pseudo-roots with |B'| ~ 1
                    # (Newton cannot resolve the multiple boundary root)
                    if (r <= 1.0 - 1e-6 and mult < 1.0 - 1e-6
                            and abs(B(refined) - refined) < max(tol, 1e-12)):
                        return refined, OrbitLocation.INTERIOR
                    if r > 1.0 - 1e-3 and abs(z) > 0.9:
                        phi = B.attracting_boundary_angle()
                        return cmath.exp(1j * phi), OrbitLocation.BOUNDARY
                stall = 0
        else:
            stall = 0
    raise InconclusiveError(
        f"orbit did not resolve within {max_iter} iterations (near-threshold parameter?)")
