"""Mobius automorphisms of the unit disk.

A disk automorphism is stored in the normal form

    A(z) = e^{i theta} (z - w) / (1 - conj(w) z),   theta in [0, 2pi), |w| < 1,

and classified as identity / elliptic / parabolic / hyperbolic through the
trace-squared of its unit-determinant matrix representative.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi

# |tau - 4| below this counts as parabolic: double precision keeps ~1e-12
# relative error in tau, so 1e-9 separates noise from near-parabolicity.
PARABOLIC_TOL = 1e-9

_IDENTITY_TOL = 1e-12


class MobiusClass(Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


def _wrap_angle(theta: float) -> float:
    """Reduce an angle to [0, 2pi)."""
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:  # fmod can round up to 2pi for inputs just below a multiple
        t -= TWO_PI
    return t


@dataclass(frozen=True)
class DiskMobius:
    """Disk automorphism e^{i theta} (z - w)/(1 - conj(w) z)."""

    theta: float
    w: complex

    def __post_init__(self):
        if abs(self.w) >= 1.0:
            raise ValueError(f"parameter w must satisfy |w| < 1, got |w| = {abs(self.w)}")
        object.__setattr__(self, "theta", _wrap_angle(float(self.theta)))
        object.__setattr__(self, "w", complex(self.w))

    @classmethod
    def identity(cls) -> "DiskMobius":
        return cls(0.0, 0j)

    @classmethod
    def rotation(cls, alpha: float) -> "DiskMobius":
        return cls(alpha, 0j)

    def __call__(self, z: complex) -> complex:
        den = 1.0 - self.w.conjugate() * z
        if abs(den) < 1e-14 * (1.0 + abs(z)):
            raise ValueError(f"evaluation at the pole 1/conj(w) of the automorphism: z = {z}")
        return cmath.exp(1j * self.theta) * (z - self.w) / den

    def inverse(self) -> "DiskMobius":
        """Automorphism A^{-1}; closed form (-theta, -w e^{i theta})."""
        return DiskMobius(-self.theta, -self.w * cmath.exp(1j * self.theta))

    def compose(self, other: "DiskMobius") -> "DiskMobius":
        """self after other, re-normalized to (theta, w) form.

        The matrix product is reduced back to normal form by reading off the
        zero of the composite map (its w) and the image of a boundary point
        (its rotation factor), which keeps |w| < 1 checkable on construction.
        """
        a1, b1, c1, d1 = self._matrix()
        a2, b2, c2, d2 = other._matrix()
        a = a1 * a2 + b1 * c2
        b = a1 * b2 + b1 * d2
        c = c1 * a2 + d1 * c2
        d = c1 * b2 + d1 * d2
        w = -b / a
        num = a + b
        den = c + d
        value_at_one = num / den
        theta = cmath.phase(value_at_one * (1.0 - w.conjugate()) / (1.0 - w))
        return DiskMobius(theta, w)

    def _matrix(self) -> tuple[complex, complex, complex, complex]:
        """Unnormalized matrix [[a, b], [c, d]] with A(z) = (az+b)/(cz+d)."""
        rot = cmath.exp(1j * self.theta)
        return rot, -rot * self.w, -self.w.conjugate(), 1.0 + 0j

    def trace_squared(self) -> float:
        """tau(A) = 2 (1 + cos theta) / (1 - |w|^2), always >= 0."""
        return 2.0 * (1.0 + math.cos(self.theta)) / (1.0 - abs(self.w) ** 2)

    def is_identity(self, tol: float = _IDENTITY_TOL) -> bool:
        # theta lives on a circle: treat values next to 2pi as next to 0.
        return min(self.theta, TWO_PI - self.theta) < tol and abs(self.w) < tol

    def classify(self, tol: float = PARABOLIC_TOL) -> MobiusClass:
        if self.is_identity():
            return MobiusClass.IDENTITY
        tau = self.trace_squared()
        if abs(tau - 4.0) <= tol:
            return MobiusClass.PARABOLIC
        if tau < 4.0:
            return MobiusClass.ELLIPTIC
        return MobiusClass.HYPERBOLIC

    def fixed_points(self) -> list[complex]:
        """Solutions of A(z) = z on the Riemann sphere (infinity as complex(inf, 0)).

        Elliptic maps fix one point in the disk and its reflection outside,
        parabolic maps fix a double point on the circle, hyperbolic maps fix
        two points on the circle.  Raises for the identity (everything fixed).
        """
        if self.is_identity():
            raise ValueError("the identity fixes every point")
        rot = cmath.exp(1j * self.theta)
        a = self.w.conjugate()
        b = rot - 1.0
        c = -rot * self.w
        if abs(a) < 1e-300:
            # rotation about the origin: fixes 0 and infinity
            return [0j, complex(math.inf, 0.0)]
        disc = cmath.sqrt(b * b - 4.0 * a * c)
        # sign-matched quadratic formula avoids cancellation near parabolic maps
        if (b.conjugate() * disc).real < 0.0:
            disc = -disc
        q = -0.5 * (b + disc)
        z1 = q / a
        z2 = c / q if abs(q) > 1e-300 else -b / a - z1
        return [z1, z2]


def in_ellipticity_domain(theta: float, w: complex) -> bool:
    """Membership of (theta, w) in the open elliptic parameter set |w| < sin(theta/2).

    The set is empty for theta = 0; its boundary consists of the parabolic
    parameters.
    """
    if abs(w) >= 1.0:
        raise ValueError("w must lie in the open unit disk")
    return abs(w) < math.sin(_wrap_angle(theta) / 2.0)
