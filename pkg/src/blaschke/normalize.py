"""Reduction of unicritical finite Blaschke products to normal form.

A degree-n unicritical product is conjugate by a disk automorphism to a
unique B_w(z) = ((z - w)/(1 - conj(w) z))^n with arg(w) in [0, 2pi/(n-1)).
The pipeline: move the critical point to 0, factor the result as a Mobius
map applied to z^n, conjugate by that Mobius map to reach power form, and
rotate the parameter into the fundamental sector.  Every step is verified
numerically and the worst residual is reported.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .mobius import TWO_PI, DiskMobius, _wrap_angle
from .products import UnicriticalBlaschke
from .solvers import durand_kerner, trim_leading

_FACTOR_RESIDUAL_GATE = 1e-8
_CRITICAL_ORACLE_TOL = 1e-9
_SECTOR_SEAM_TOL = 1e-12


@dataclass(frozen=True)
class FiniteBlaschke:
    """e^{i theta} prod_i (z - z_i)/(1 - conj(z_i) z), zeros with multiplicity."""

    theta: float
    zeros: tuple[complex, ...]

    def __post_init__(self):
        zs = tuple(complex(z) for z in self.zeros)
        if any(abs(z) >= 1.0 for z in zs):
            raise ValueError("all zeros must lie in the open unit disk")
        object.__setattr__(self, "theta", _wrap_angle(float(self.theta)))
        object.__setattr__(self, "zeros", zs)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def __call__(self, z: complex) -> complex:
        acc = cmath.exp(1j * self.theta)
        for zi in self.zeros:
            den = 1.0 - zi.conjugate() * z
            if abs(den) < 1e-14 * (1.0 + abs(z)):
                raise ValueError(f"evaluation at a pole 1/conj(zero): z = {z}")
            acc *= (z - zi) / den
        return acc


@dataclass(frozen=True)
class NormalizationResult:
    """Normal-form parameter plus the conjugating chain and verification residual.

    `conjugator` is the composed automorphism Phi with Phi o F o Phi^{-1} = B_w;
    it factors as rotation(alpha) o M^{-1} o A where A moves the critical point
    to the origin and M is the Mobius factor of F near the origin.
    """

    w: complex
    residual: float
    conjugator: DiskMobius
    to_origin: DiskMobius
    mobius_factor: DiskMobius
    rotation_angle: float


def _derivative_numerator(F: FiniteBlaschke) -> np.ndarray:
    """Descending coefficients of the polynomial numerator of F'.

    F'/F = sum_i (1 - |z_i|^2) / ((z - z_i)(1 - conj(z_i) z)); clearing
    denominators gives a polynomial of degree <= 2(n-1) whose roots split
    into the n-1 interior critical points and their exterior reflections.
    """
    n = F.degree
    factors = [np.convolve([1.0, -zi], [-zi.conjugate(), 1.0]) for zi in F.zeros]
    total = np.zeros(2 * n - 1, dtype=complex)
    for i, zi in enumerate(F.zeros):
        term = np.array([1.0 + 0j])
        for j in range(n):
            if j != i:
                term = np.convolve(term, factors[j])
        total[-term.size:] += (1.0 - abs(zi) ** 2) * term
    return total


def critical_points(F: FiniteBlaschke) -> list[complex]:
    """Zeros of F' inside the disk, with multiplicity, via the derivative numerator."""
    n = F.degree
    if n < 2:
        raise ValueError("critical points require degree >= 2")
    roots = durand_kerner(trim_leading(_derivative_numerator(F)))
    inside = [z for z in roots if abs(z) < 1.0]
    if len(inside) != n - 1:
        # roots hugging the circle defeat the strict filter; retry with margin
        inside = [z for z in roots if abs(z) < 1.0 - 1e-9]
        if len(inside) != n - 1:
            raise NumericError(
                f"expected {n - 1} interior critical points, found {len(inside)}")
    return inside


def _cluster_critical_point(F: FiniteBlaschke) -> complex:
    """Unique critical point of a unicritical product, or NumericError.

    Root clusters of multiplicity m have radius ~ eps^(1/m) in double
    precision, so the clustering gate scales with multiplicity.  The cluster
    centroid is then polished by Newton on the (m-1)-th derivative of the
    numerator polynomial, where the critical point is a simple root and full
    precision is recoverable.
    """
    pts = critical_points(F)
    m = len(pts)
    centroid = sum(pts) / m
    if m > 1:
        gate = max(1e-6, 50.0 * (1e-13) ** (1.0 / m))
        spread = max(abs(p - centroid) for p in pts)
        if spread > gate:
            raise NumericError(
                f"critical points do not cluster (spread {spread:.3e} > {gate:.3e}): "
                "input is not unicritical")
    poly = _derivative_numerator(F)
    for _ in range(m - 1):
        poly = np.polyder(poly)
    dpoly = np.polyder(poly)
    z = centroid
    for _ in range(100):
        step = np.polyval(poly, z) / np.polyval(dpoly, z)
        z = z - step
        if abs(step) < 1e-15:
            break
    if abs(z - centroid) > max(1e-5, 2.0 * max(abs(p - centroid) for p in pts) if m > 1 else 1e-5):
        raise NumericError("critical-point refinement diverged from the cluster")
    h = 1e-6
    deriv = (F(z + h) - F(z - h)) / (2.0 * h)
    if abs(deriv) > _CRITICAL_ORACLE_TOL:
        raise NumericError(
            f"|F'| = {abs(deriv):.3e} at the cluster centre; input is not unicritical")
    return z


def _mobius_through(points: list[tuple[complex, complex]]) -> DiskMobius:
    """Disk automorphism through three point pairs, via cross-ratio matching."""
    (p1, q1), (p2, q2), (p3, q3) = points
    # T sends p1, p2, p3 to 0, 1, inf; same for S on the targets; M = S^{-1} T
    t = np.array([[p2 - p3, -p1 * (p2 - p3)], [p2 - p1, -p3 * (p2 - p1)]], dtype=complex)
    s = np.array([[q2 - q3, -q1 * (q2 - q3)], [q2 - q1, -q3 * (q2 - q1)]], dtype=complex)
    s_inv = np.array([[s[1, 1], -s[0, 1]], [-s[1, 0], s[0, 0]]], dtype=complex)
    m = s_inv @ t
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    if abs(a) < 1e-300 or abs(d) < 1e-300:
        raise NumericError("interpolated map is not a disk automorphism")
    u = -b / a
    rot = a / d
    if abs(u) >= 1.0 or abs(abs(rot) - 1.0) > 1e-9 or abs((-b / a).conjugate() + c / d) > 1e-9:
        raise NumericError("interpolated map is not a disk automorphism")
    return DiskMobius(cmath.phase(rot), u)


# deterministic verification nodes on the circle (offset keeps them away
# from the real axis and from each other's images)
_VERIFY_ANGLES = [TWO_PI * k / 32.0 + 0.37 for k in range(32)]


def normalize(F: FiniteBlaschke) -> NormalizationResult:
    """Normal-form parameter w of a unicritical product, with verified conjugation.

    Steps: (1) A(z) = (z - z0)/(1 - conj(z0) z) moves the critical point z0
    to the origin, giving B1 = A o F o A^{-1}; (2) B1(z) = M(z^n) for a disk
    automorphism M, recovered by interpolation through (0, B1(0)),
    (1, B1(1)), (-1, B1(e^{i pi/n})) and verified at 32 boundary nodes;
    (3) conjugating by M gives power form with parameter u read from M;
    (4) a rotation angle alpha with n theta + (1-n) alpha = 0 (mod 2pi) is
    chosen so that arg(u e^{i alpha}) lands in [0, 2pi/(n-1)).
    """
    n = F.degree
    if n < 2:
        raise ValueError("normalization requires degree >= 2")
    z0 = _cluster_critical_point(F)
    to_origin = DiskMobius(0.0, z0)
    a_inv = to_origin.inverse()

    def b1(z: complex) -> complex:
        return to_origin(F(a_inv(z)))

    q1 = b1(0j)
    q2 = b1(1.0 + 0j)
    q3 = b1(cmath.exp(1j * math.pi / n))
    mob = _mobius_through([(0j, q1), (1.0 + 0j, q2), (-1.0 + 0j, q3)])

    residual = 0.0
    for ang in _VERIFY_ANGLES:
        z = cmath.exp(1j * ang)
        residual = max(residual, abs(b1(z) - mob(z**n)))
    if residual > _FACTOR_RESIDUAL_GATE:
        raise NumericError(
            f"Mobius-power factorization residual {residual:.3e} exceeds "
            f"{_FACTOR_RESIDUAL_GATE}: input is not a unicritical Blaschke product")

    theta, u = mob.theta, mob.w
    sector = TWO_PI / (n - 1)
    if abs(u) < 1e-13:
        w = 0j
        alpha = theta * n / (n - 1)
    else:
        alpha = None
        for j in range(n - 1):
            cand = (n * theta + TWO_PI * j) / (n - 1)
            beta = _wrap_angle(cmath.phase(u) + cand)
            if beta >= TWO_PI - _SECTOR_SEAM_TOL:
                beta = 0.0
            if beta < sector - _SECTOR_SEAM_TOL:
                alpha = cand
                break
        if alpha is None:
            raise NumericError("no rotation places the parameter in the fundamental sector")
        w = u * cmath.exp(1j * alpha)
        if _wrap_angle(cmath.phase(w)) >= TWO_PI - _SECTOR_SEAM_TOL:
            w = abs(w) + 0j

    conjugator = DiskMobius.rotation(alpha).compose(mob.inverse().compose(to_origin))
    b_w = UnicriticalBlaschke(n, w)
    phi_inv = conjugator.inverse()
    for ang in _VERIFY_ANGLES[:16]:
        z = cmath.exp(1j * ang)
        residual = max(residual, abs(conjugator(F(phi_inv(z))) - b_w(z)))
        zi = 0.3 * cmath.exp(1j * ang)
        residual = max(residual, abs(conjugator(F(phi_inv(zi))) - b_w(zi)))
    if residual > _FACTOR_RESIDUAL_GATE:
        raise NumericError(f"conjugation residual {residual:.3e} exceeds {_FACTOR_RESIDUAL_GATE}")
    return NormalizationResult(w, residual, conjugator, to_origin, mob, alpha)


def preimages(B: UnicriticalBlaschke, q: complex) -> list[complex]:
    """The n solutions of B(z) = q for |q| <= 1, ordered by the root branch.

    z_k = A^{-1}(q^{1/n} e^{2 pi i k/n}) with A the inner Mobius map and the
    principal n-th root; |q| = 1 puts all preimages on the circle.
    """
    if abs(q) > 1.0 + 1e-12:
        raise ValueError("preimages are computed for |q| <= 1")
    n = B.n
    if q == 0:
        root = 0j
    else:
        root = abs(q) ** (1.0 / n) * cmath.exp(1j * cmath.phase(q) / n)
    out = []
    for k in range(n):
        y = root * cmath.exp(2j * math.pi * k / n)
        out.append((y + B.w) / (1.0 + B.w.conjugate() * y))
    return out


def conjugate(B: UnicriticalBlaschke, C: DiskMobius) -> FiniteBlaschke:
    """C o B o C^{-1} in (theta, zeros) form.

    Its zeros are the C-images of the n preimages of C's zero under B; the
    rotation factor is fixed by matching the value at z = 1.
    """
    zeros = [C(z) for z in preimages(B, C.w)]
    c_inv = C.inverse()
    target = C(B(c_inv(1.0 + 0j)))
    prod = 1.0 + 0j
    for zi in zeros:
        prod *= (1.0 - zi) / (1.0 - zi.conjugate())
    theta = cmath.phase(target / prod)
    return FiniteBlaschke(theta, tuple(zeros))
