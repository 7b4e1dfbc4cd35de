"""Exact classification of unicritical Blaschke products in parameter space.

For B(z) = ((z - w)/(1 - conj(w) z))^n with w = s e^{i psi}, the boundary
arc where |B'| <= 1 exists once s reaches (n-1)/(n+1); the map is elliptic,
parabolic or hyperbolic according to whether that arc's endpoints have moved
past their images.  Along every ray the elliptic radii form an initial
interval [0, s0), which this module computes: in closed form on the two
families of special angles, by bisection elsewhere.  Membership in the
elliptic parameter set, the connectedness locus, and their rotations are
derived from the same threshold.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar

import numpy as np

from .errors import NumericError
from .mobius import TWO_PI, _wrap_angle
from .products import (
    BlaschkeClass,
    DynamicsClass,
    UnicriticalBlaschke,
    _newton_fixed_point,
    denjoy_wolff_iterate,
)
from .solvers import durand_kerner, trim_leading

_SPECIAL_ANGLE_TOL = 1e-12
_THRESHOLD_TOL = 1e-10  # |s - s0| below this reports parabolic
_LOCUS_POINT_TOL = 1e-9
_SCAN_POINTS = 256
_CLAMP = 1e-14


def inner_radius(n: int) -> float:
    """(n-1)/(n+1): largest radius of the parameter disk that is entirely elliptic."""
    _check_degree(n)
    return (n - 1) / (n + 1)


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"degree n must be an integer >= 2, got {n}")


def _check_radial_domain(n: int, s: float, open_left: bool = False) -> None:
    smin = inner_radius(n)
    lo_ok = s > smin if open_left else s >= smin - 1e-15
    if not (lo_ok and s < 1.0):
        kind = "(" if open_left else "["
        raise ValueError(f"s must lie in {kind}{smin}, 1), got {s}")


def endpoint_cos(n: int, s: float) -> float:
    """cos of the angular offset (from psi) of the contracting arc's endpoints:
    (1 - n + (1 + n) s^2) / (2 s), in [-1, 1) on its domain."""
    _check_degree(n)
    _check_radial_domain(n, s)
    return (1.0 - n + (1.0 + n) * s * s) / (2.0 * s)


def image_endpoint_cos(n: int, s: float) -> float:
    """cos of the corresponding offset for the arc's image:
    (1 - n - (1 + n) s^2) / (2 n s), in [-1, 0) on its domain."""
    _check_degree(n)
    _check_radial_domain(n, s)
    return (1.0 - n - (1.0 + n) * s * s) / (2.0 * n * s)


def _clamped_acos(x: float) -> float:
    if x > 1.0:
        if x > 1.0 + _CLAMP:
            raise NumericError(f"arccos argument {x} out of range")
        x = 1.0
    elif x < -1.0:
        if x < -1.0 - _CLAMP:
            raise NumericError(f"arccos argument {x} out of range")
        x = -1.0
    return math.acos(x)


@dataclass(frozen=True)
class CircleArc:
    """Arc of the unit circle: empty, a single point, or [phi1, phi2].

    For the contracting arc the angles follow the convention
    phi1, phi2 in [psi, psi + 2pi), so phi1 < phi2 and the arc is symmetric
    about psi + pi.
    """

    phi1: float | None
    phi2: float | None

    EMPTY: ClassVar["CircleArc"]

    @classmethod
    def point(cls, phi: float) -> "CircleArc":
        return cls(phi, phi)

    @property
    def is_empty(self) -> bool:
        return self.phi1 is None

    @property
    def is_point(self) -> bool:
        return self.phi1 is not None and self.phi1 == self.phi2

    @property
    def length(self) -> float:
        if self.is_empty:
            return 0.0
        return self.phi2 - self.phi1

    def contains_angle(self, phi: float) -> bool:
        if self.is_empty:
            return False
        span = (phi - self.phi1) % TWO_PI
        return span <= (self.phi2 - self.phi1) + 1e-12


CircleArc.EMPTY = CircleArc(None, None)


def contracting_arc(n: int, s: float, psi: float) -> CircleArc:
    """The set of boundary angles where |B'| <= 1: empty below the inner
    radius, the single antipodal point at it, else an arc centred on psi + pi."""
    _check_degree(n)
    if not 0.0 <= s < 1.0:
        raise ValueError(f"s must lie in [0, 1), got {s}")
    smin = inner_radius(n)
    if s < smin - 1e-12:
        return CircleArc.EMPTY
    if abs(s - smin) <= 1e-12:
        return CircleArc.point(psi + math.pi)
    a = _clamped_acos(endpoint_cos(n, s))
    return CircleArc(psi + a, psi + TWO_PI - a)


def arc_length(n: int, s: float) -> float:
    """|K(s)| = 2 pi - 2 arccos(t(s)) for the contracting arc K."""
    return TWO_PI - 2.0 * _clamped_acos(endpoint_cos(n, s))


def image_arc_length(n: int, s: float) -> float:
    """|B(K)| = n (2 pi - 2 arccos(u(s))); always <= |K| < 2 pi."""
    return n * (TWO_PI - 2.0 * _clamped_acos(image_endpoint_cos(n, s)))


def _rate_denominator(n: int, s: float) -> float:
    inner = -((1.0 - n) ** 2) + (1.0 + n) ** 2 * s * s
    if inner <= 0.0:
        raise ValueError(f"arc growth rates are singular at s = {s}")
    return s * math.sqrt(1.0 - s * s) * math.sqrt(inner)


def arc_length_rate(n: int, s: float) -> float:
    """d|K|/ds = 2 (n - 1 + (n + 1) s^2) / (s sqrt(1 - s^2) sqrt((n+1)^2 s^2 - (n-1)^2))."""
    _check_degree(n)
    _check_radial_domain(n, s, open_left=True)
    return 2.0 * (n - 1.0 + (n + 1.0) * s * s) / _rate_denominator(n, s)


def image_arc_length_rate(n: int, s: float) -> float:
    """d|B(K)|/ds = 2 n (n - 1 - (n + 1) s^2) / (same denominator); always
    smaller than d|K|/ds on the domain, so the arc outgrows its image."""
    _check_degree(n)
    _check_radial_domain(n, s, open_left=True)
    return 2.0 * n * (n - 1.0 - (n + 1.0) * s * s) / _rate_denominator(n, s)


def _angle_residue_matches(n: int, psi: float, target: float) -> bool:
    r = math.fmod((n - 1) * psi - target, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    return min(r, TWO_PI - r) < _SPECIAL_ANGLE_TOL


def is_always_elliptic_angle(n: int, psi: float) -> bool:
    """Rays on which B stays elliptic for every s in [0, 1).

    Holds when (n-1) psi = 0 (mod 2pi) for even n, or = pi (mod 2pi) for odd
    n: then the antipode e^{i(psi+pi)} maps exactly opposite itself, onto the
    repelling fixed point of the inner Mobius map, and no point of the
    contracting arc can ever be fixed.
    """
    _check_degree(n)
    target = 0.0 if n % 2 == 0 else math.pi
    return _angle_residue_matches(n, psi, target)


def is_fixed_antipode_angle(n: int, psi: float) -> bool:
    """Rays on which e^{i(psi+pi)} is a fixed point of B for every s.

    Holds when (n-1) psi = 0 (mod 2pi) for odd n, or = pi (mod 2pi) for even
    n.  On these rays the threshold sits exactly at the inner radius, and the
    parabolic map there is the distinguished one with vanishing second
    derivative at its Denjoy-Wolff point.
    """
    _check_degree(n)
    target = 0.0 if n % 2 == 1 else math.pi
    return _angle_residue_matches(n, psi, target)


def zero_step_parameter(n: int) -> complex:
    """The unique non-elliptic parameter of the connectedness locus in the
    fundamental sector: modulus (n-1)/(n+1) on the fixed-antipode ray."""
    _check_degree(n)
    r = inner_radius(n)
    if n % 2 == 1:
        return complex(r, 0.0)
    if n == 2:
        return complex(-r, 0.0)
    psi = math.pi / (n - 1)
    return complex(r * math.cos(psi), r * math.sin(psi))


def _endpoint_gap(n: int, s: float, psi: float, upper: bool) -> float:
    """Lift displacement F(phi_i) - phi_i at a contracting-arc endpoint.

    With the endpoint offset a = arccos(t(s)) this is
    (n-1)(psi -+ a mod-free) + 2n arg(1 - s e^{-+ ia}); smooth in s, so
    integer multiples of 2pi can be tracked without wrapping artefacts.
    """
    t = endpoint_cos(n, s)
    a = _clamped_acos(t)
    inner = math.atan2(s * math.sin(a), 1.0 - s * math.cos(a))
    if upper:
        return (n - 1.0) * (psi + TWO_PI - a) - 2.0 * n * inner
    return (n - 1.0) * (psi + a) + 2.0 * n * inner


def endpoint_displacement(n: int, s: float, psi: float) -> tuple[float, float]:
    """Signed angular displacement of B at each endpoint of the contracting
    arc, as principal values in (-pi, pi]; a zero signals a parabolic
    parameter (the endpoint, where |B'| = 1, is fixed)."""
    _check_degree(n)
    _check_radial_domain(n, s, open_left=True)
    if is_always_elliptic_angle(n, psi) or is_fixed_antipode_angle(n, psi):
        raise ValueError("endpoint displacement is not defined on special rays")
    out = []
    for upper in (False, True):
        gap = _endpoint_gap(n, s, psi, upper)
        d = math.remainder(gap, TWO_PI)
        out.append(d if d != -math.pi else math.pi)
    return out[0], out[1]


class RayKind(Enum):
    ALWAYS_ELLIPTIC = "always_elliptic"
    THRESHOLD = "threshold"


@dataclass(frozen=True)
class RayClassification:
    """Radial structure of a single parameter ray.

    `s0` is the parabolic threshold (None on always-elliptic rays);
    `at_inner_radius` marks the fixed-antipode rays, where s0 equals
    (n-1)/(n+1) in closed form rather than by root finding.
    """

    kind: RayKind
    s0: float | None
    at_inner_radius: bool

    @property
    def is_always_elliptic(self) -> bool:
        return self.kind is RayKind.ALWAYS_ELLIPTIC


def ray_threshold(n: int, psi: float, tol: float = 1e-12) -> RayClassification:
    """Classify the ray arg(w) = psi: always elliptic, threshold at the inner
    radius (fixed-antipode rays), or threshold at the unique root s0 of an
    endpoint-displacement equation, found by bisection to absolute `tol`.
    """
    _check_degree(n)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if is_always_elliptic_angle(n, psi):
        return RayClassification(RayKind.ALWAYS_ELLIPTIC, None, False)
    if is_fixed_antipode_angle(n, psi):
        return RayClassification(RayKind.THRESHOLD, inner_radius(n), True)
    lo = inner_radius(n) + 1e-9
    hi = 1.0 - 1e-9
    grid = np.linspace(lo, hi, _SCAN_POINTS)
    t = (1.0 - n + (1.0 + n) * grid * grid) / (2.0 * grid)
    a = np.arccos(np.clip(t, -1.0, 1.0))
    inner = np.arctan2(grid * np.sin(a), 1.0 - grid * np.cos(a))
    gaps = {
        False: (n - 1.0) * (psi + a) + 2.0 * n * inner,
        True: (n - 1.0) * (psi + TWO_PI - a) - 2.0 * n * inner,
    }
    roots = []
    for upper, gap in gaps.items():
        floors = np.floor(gap / TWO_PI).astype(int)
        for j in np.nonzero(np.diff(floors))[0]:
            klo, khi = sorted((floors[j], floors[j + 1]))
            for k in range(klo + 1, khi + 1):
                roots.append(_bisect_threshold(n, psi, upper, grid[j], grid[j + 1], k, tol))
    if not roots:
        raise NumericError(
            f"no parabolic threshold found on the ray psi = {psi} (n = {n}); "
            "this contradicts the radial trichotomy and signals a bug or a "
            "parameter within ~1e-9 of a special ray")
    return RayClassification(RayKind.THRESHOLD, min(roots), False)


def _bisect_threshold(n, psi, upper, lo, hi, k, tol) -> float:
    target = TWO_PI * k

    def f(s: float) -> float:
        return _endpoint_gap(n, s, psi, upper) - target

    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise NumericError("threshold bracket lost its sign change")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _fixed_point_polynomial(B: UnicriticalBlaschke) -> list[complex]:
    """(z - w)^n - z (1 - conj(w) z)^n, descending coefficients (degree n + 1)."""
    num = np.array([1.0 + 0j])
    den = np.array([1.0 + 0j])
    for _ in range(B.n):
        num = np.convolve(num, [1.0, -B.w])
        den = np.convolve(den, [-B.w.conjugate(), 1.0])
    den_z = np.append(den, 0.0)
    return list(np.append(0.0, num) - den_z)


def _interior_fixed_point(B: UnicriticalBlaschke) -> complex:
    """The unique fixed point of an elliptic B inside the disk."""
    roots = durand_kerner(trim_leading(_fixed_point_polynomial(B)))
    best = None
    for z in roots:
        if abs(z) >= 1.0 - 1e-7:
            continue
        polished = _newton_fixed_point(B, z, 1e-14)
        cand = polished if polished is not None else z
        if abs(cand) < 1.0 - 1e-9 and abs(B(cand) - cand) < 1e-8:
            if best is None or abs(B(cand) - cand) < abs(B(best) - best):
                best = cand
    if best is not None:
        return best
    # near-parabolic parameters squeeze the root against the circle; fall
    # back on the forward orbit, which still stalls at the right point
    point, location = denjoy_wolff_iterate(B, 1e-12, 300_000)
    if location.value != "interior":
        raise NumericError("interior fixed point not found for an elliptic parameter")
    return point


def classify(n: int, w: complex, threshold_tol: float = _THRESHOLD_TOL) -> BlaschkeClass:
    """Exact elliptic/parabolic/hyperbolic classification of B_w.

    Compares s = |w| against the ray threshold; |s - s0| <= threshold_tol
    reports parabolic (parabolicity has measure zero, so exact hits occur
    only for constructed parameters).  The returned record carries the
    Denjoy-Wolff point and the derivative there.
    """
    _check_degree(n)
    w = complex(w)
    if abs(w) >= 1.0:
        raise ValueError("parameter must lie in the open unit disk")
    B = UnicriticalBlaschke(n, w)
    s, psi = B.s, B.psi
    ray = ray_threshold(n, psi)
    if ray.is_always_elliptic or s < ray.s0 - threshold_tol:
        p = _interior_fixed_point(B)
        return BlaschkeClass(DynamicsClass.ELLIPTIC, p, B.derivative(p))
    if s <= ray.s0 + threshold_tol:
        dw = _parabolic_point(n, ray.s0, psi, ray.at_inner_radius)
        return BlaschkeClass(DynamicsClass.PARABOLIC, dw, B.derivative(dw))
    phi = B.attracting_boundary_angle()
    dw = cmath.exp(1j * phi)
    return BlaschkeClass(DynamicsClass.HYPERBOLIC, dw, B.derivative(dw))


def _parabolic_point(n: int, s0: float, psi: float, at_inner_radius: bool) -> complex:
    if at_inner_radius:
        return cmath.exp(1j * math.fmod(psi + math.pi, TWO_PI))
    arc = contracting_arc(n, s0, psi)
    d1, d2 = endpoint_displacement(n, s0, psi)
    phi = arc.phi1 if abs(d1) <= abs(d2) else arc.phi2
    return cmath.exp(1j * math.fmod(phi, TWO_PI))


def _require_sector(n: int, w: complex) -> None:
    sector = TWO_PI / (n - 1)
    psi = _wrap_angle(cmath.phase(w))
    if psi >= TWO_PI - _SPECIAL_ANGLE_TOL:
        psi = 0.0
    if psi >= sector - _SPECIAL_ANGLE_TOL and abs(w) > 0.0:
        raise ValueError(
            f"arg(w) = {psi} outside the fundamental sector [0, {sector}); "
            "use the *_full_disk variant for arbitrary angles")


def _reduce_to_sector(n: int, w: complex) -> complex:
    if w == 0:
        return 0j
    sector = TWO_PI / (n - 1)
    psi = _wrap_angle(cmath.phase(w)) % sector
    if psi >= sector - _SPECIAL_ANGLE_TOL:
        psi = 0.0
    return abs(w) * cmath.exp(1j * psi)


def in_elliptic_set(n: int, w: complex, threshold_tol: float = _THRESHOLD_TOL) -> bool:
    """Membership of w (in the fundamental sector) in the elliptic parameter set."""
    _check_degree(n)
    _require_sector(n, w)
    return classify(n, w, threshold_tol).is_elliptic


def in_connectedness_locus(n: int, w: complex, threshold_tol: float = _THRESHOLD_TOL) -> bool:
    """Membership in the connectedness locus: the elliptic set plus the single
    zero-step parabolic parameter of the sector."""
    _check_degree(n)
    _require_sector(n, w)
    if abs(w - zero_step_parameter(n)) <= _LOCUS_POINT_TOL:
        return True
    return classify(n, w, threshold_tol).is_elliptic


def in_elliptic_set_full_disk(n: int, w: complex, threshold_tol: float = _THRESHOLD_TOL) -> bool:
    """Elliptic-set membership for arbitrary angles, via the rotational
    symmetry w -> w e^{2 pi i/(n-1)} of the family."""
    _check_degree(n)
    return classify(n, _reduce_to_sector(n, w), threshold_tol).is_elliptic


def in_connectedness_locus_full_disk(n: int, w: complex,
                                     threshold_tol: float = _THRESHOLD_TOL) -> bool:
    """Connectedness-locus membership for arbitrary angles."""
    _check_degree(n)
    return in_connectedness_locus(n, _reduce_to_sector(n, w), threshold_tol)
