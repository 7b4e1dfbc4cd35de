"""Self-contained invariant suite behind `blaschke selfcheck`.

Every check returns (ok, detail) and is sized by level: "quick" keeps the
whole run in a few seconds, "full" runs the complete sample counts.  The
checks mirror the library's mathematical contracts: closed forms against
sampling oracles, the exact classifier against the forward-orbit oracle,
normalization round trips, Julia-sample statistics and render determinism.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

import numpy as np

from . import ellipticity, julia, products, render
from .errors import InconclusiveError, NumericError
from .mobius import TWO_PI, DiskMobius, MobiusClass, in_ellipticity_domain
from .normalize import conjugate, normalize as normalize_product, preimages

_RNG_SEED = 20240811


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _sizes(level: str) -> dict[str, int]:
    if level == "full":
        return dict(mobius=10_000, eq_deriv=1000, pairs=200, lift=200, second=100,
                    counts=100, arcs=20, rates=50, rays=256, inner=1024, oracle=500,
                    rot=64, trips=60, uniq=25, closure=500, equi=8, gap=8, render=128)
    return dict(mobius=1000, eq_deriv=200, pairs=50, lift=50, second=30,
                counts=30, arcs=5, rates=10, rays=32, inner=128, oracle=60,
                rot=16, trips=12, uniq=6, closure=100, equi=3, gap=3, render=64)


def _random_mobius(rng: random.Random) -> DiskMobius:
    return DiskMobius(rng.uniform(0.0, TWO_PI),
                      0.97 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random()))


def _random_blaschke(rng: random.Random, nmax: int = 5, smax: float = 0.95):
    n = rng.randint(2, nmax)
    w = smax * rng.random() * cmath.exp(2j * math.pi * rng.random())
    return products.UnicriticalBlaschke(n, w)


def check_mobius_classification_oracle(level, rng):
    m = _sizes(level)["mobius"]
    for _ in range(m):
        a = _random_mobius(rng)
        cls = a.classify()
        if cls is MobiusClass.IDENTITY:
            continue
        roots = a.fixed_points()
        finite = [z for z in roots if abs(z) != math.inf]
        on_circle = [z for z in finite if abs(abs(z) - 1.0) < 1e-6]
        if cls is MobiusClass.PARABOLIC:
            if len(finite) == 2 and abs(finite[0] - finite[1]) > 1e-3:
                return False, f"parabolic map with split fixed points: {a}"
        elif cls is MobiusClass.HYPERBOLIC:
            if len(on_circle) != 2:
                return False, f"hyperbolic map without two circle fixed points: {a}"
        else:
            inside = [z for z in roots if abs(z) < 1.0 - 1e-9]
            if len(inside) != 1 or len(on_circle) != 0:
                return False, f"elliptic map with wrong fixed-point layout: {a}"
    return True, f"{m} random maps agree with the fixed-point oracle"


def check_mobius_ellipticity_domain(level, rng):
    m = _sizes(level)["mobius"] // 2
    for _ in range(m):
        a = _random_mobius(rng)
        if a.is_identity():
            continue
        if in_ellipticity_domain(a.theta, a.w) != (a.classify() is MobiusClass.ELLIPTIC):
            return False, f"ellipticity-domain mismatch at theta={a.theta}, w={a.w}"
    return True, f"|w| < sin(theta/2) matches the elliptic classification on {m} samples"


def check_mobius_trace_matrix(level, rng):
    m = _sizes(level)["mobius"] // 4
    for _ in range(m):
        a = _random_mobius(rng)
        c = (1.0 - abs(a.w) ** 2) ** -0.5
        half = cmath.exp(0.5j * a.theta)
        mat = np.array([[c * half, -c * half * a.w],
                        [-c / half * a.w.conjugate(), c / half]])
        tau = np.trace(mat) ** 2
        if abs(tau.real - a.trace_squared()) > 1e-12 * max(1.0, abs(tau)):
            return False, f"trace mismatch at theta={a.theta}, w={a.w}"
    return True, f"trace-squared matches the unit-determinant matrix on {m} samples"


def check_mobius_compose(level, rng):
    m = _sizes(level)["pairs"]
    for _ in range(m):
        a, b, c = (_random_mobius(rng) for _ in range(3))
        z = 0.8 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        lhs = a.compose(b).compose(c)
        rhs = a.compose(b.compose(c))
        if abs(lhs(z) - rhs(z)) > 1e-11:
            return False, "composition is not associative pointwise"
        if abs(a.compose(b)(z) - a(b(z))) > 1e-12:
            return False, "composition disagrees with pointwise application"
        if abs(a.compose(a.inverse())(z) - z) > 1e-13:
            return False, "A o A^{-1} is not the identity"
    return True, f"compose/inverse verified pointwise on {m} random triples"


def check_boundary_derivative_identity(level, rng):
    m = _sizes(level)["eq_deriv"]
    for _ in range(m):
        b = _random_blaschke(rng)
        phi = rng.uniform(0.0, TWO_PI)
        direct = abs(b.derivative(cmath.exp(1j * phi)))
        if abs(direct - b.boundary_derivative_modulus(phi)) > 1e-12 * max(1.0, direct):
            return False, f"|B'| identity fails at n={b.n}, w={b.w}, phi={phi}"
    return True, f"|B'| closed form matches direct evaluation on {m} samples"


def check_reciprocal_fixed_points(level, rng):
    m = _sizes(level)["pairs"]
    done = 0
    while done < m:
        b = _random_blaschke(rng, smax=0.6)
        try:
            cls = ellipticity.classify(b.n, b.w)
        except NumericError:
            continue
        if not cls.is_elliptic or abs(cls.dw_point) < 1e-3:
            continue
        mirror = 1.0 / cls.dw_point.conjugate()
        if abs(b(mirror) - mirror) > 1e-9 * max(1.0, abs(mirror) ** b.n):
            return False, f"reflected fixed point not fixed at n={b.n}, w={b.w}"
        done += 1
    return True, f"1/conj(z0) is fixed for {m} elliptic samples"


def check_lift_degree(level, rng):
    m = _sizes(level)["lift"]
    for _ in range(m):
        b = _random_blaschke(rng)
        phi = rng.uniform(-10.0, 10.0)
        if abs(b.lift(phi + TWO_PI) - b.lift(phi) - TWO_PI * b.n) > 1e-9:
            return False, f"lift degree violated at n={b.n}, w={b.w}"
        if abs(cmath.exp(1j * b.lift(phi)) - b(cmath.exp(1j * phi))) > 1e-11:
            return False, f"lift does not track the boundary map at n={b.n}, w={b.w}"
    return True, f"F(phi + 2pi) = F(phi) + 2 pi n on {m} samples"


def check_second_derivative_fd(level, rng):
    m = _sizes(level)["second"]
    h = 1e-5
    for _ in range(m):
        b = _random_blaschke(rng, smax=0.8)
        z = 0.9 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random())
        fd = (b.derivative(z + h) - b.derivative(z - h)) / (2.0 * h)
        exact = b.second_derivative(z)
        if abs(fd - exact) > 1e-6 * max(1.0, abs(exact)):
            return False, f"B'' disagrees with finite differences at n={b.n}, w={b.w}, z={z}"
    return True, f"B'' matches central differences on {m} samples"


def check_step_monotone(level, rng):
    m = max(3, _sizes(level)["pairs"] // 10)
    for _ in range(m):
        b = _random_blaschke(rng, smax=0.9)
        seq = products.hyperbolic_step_sequence(b, 0.3 + 0.2j, 400)
        for prev, cur in zip(seq, seq[1:]):
            if cur > prev + 1e-12:
                return False, f"step sequence increased at n={b.n}, w={b.w}"
    return True, f"step sequences non-increasing for {m} parameters"


def check_fixed_point_counts(level, rng):
    m = _sizes(level)["counts"]
    done = 0
    while done < m:
        b = _random_blaschke(rng, nmax=4)
        ray = ellipticity.ray_threshold(b.n, b.psi)
        if not ray.is_always_elliptic and abs(b.s - ray.s0) < 1e-3:
            continue
        count = len(b.boundary_fixed_points())
        cls = ellipticity.classify(b.n, b.w)
        expected = b.n - 1 if cls.is_elliptic else b.n + 1
        if count != expected:
            return False, f"n={b.n}, w={b.w}: {count} boundary fixed points, expected {expected}"
        done += 1
    return True, f"fixed-point counts match the classification on {m} generic samples"


def check_arc_length_sampling(level, rng):
    m = _sizes(level)["arcs"]
    grid = np.linspace(0.0, TWO_PI, 1_000_001)[:-1]
    for _ in range(m):
        n = rng.randint(2, 6)
        smin = ellipticity.inner_radius(n)
        s = smin + (0.999 - smin) * rng.random()
        mod = n * (1 - s * s) / (1 + s * s - 2 * s * np.cos(grid))
        measured = np.count_nonzero(mod <= 1.0) * TWO_PI / grid.size
        if abs(measured - ellipticity.arc_length(n, s)) > 1e-4:
            return False, f"arc length vs sampling off at n={n}, s={s}"
        b = products.UnicriticalBlaschke(n, s)
        arc = ellipticity.contracting_arc(n, s, 0.0)
        via_lift = b.lift(arc.phi2) - b.lift(arc.phi1)
        if abs(via_lift - ellipticity.image_arc_length(n, s)) > 1e-9:
            return False, f"image arc length vs lift off at n={n}, s={s}"
    return True, f"closed-form arc lengths match sampling/lift oracles on {m} draws"


def check_rates(level, rng):
    m = _sizes(level)["rates"]
    h = 1e-6
    for n in range(2, 7):
        smin = ellipticity.inner_radius(n)
        for _ in range(m):
            s = smin + 1e-4 + (0.999 - smin - 2e-4) * rng.random()
            fd_p = (ellipticity.arc_length(n, s + h) - ellipticity.arc_length(n, s - h)) / (2 * h)
            fd_q = (ellipticity.image_arc_length(n, s + h)
                    - ellipticity.image_arc_length(n, s - h)) / (2 * h)
            p_rate = ellipticity.arc_length_rate(n, s)
            q_rate = ellipticity.image_arc_length_rate(n, s)
            if abs(fd_p - p_rate) > 1e-5 * max(1.0, abs(p_rate)):
                return False, f"arc rate vs finite difference off at n={n}, s={s}"
            if abs(fd_q - q_rate) > 1e-5 * max(1.0, abs(q_rate)):
                return False, f"image rate vs finite difference off at n={n}, s={s}"
            if p_rate <= q_rate:
                return False, f"growth-rate inequality fails at n={n}, s={s}"
    return True, f"rates match finite differences and |K| outgrows |B(K)| ({m}/degree)"


def check_radial_monotonicity(level, rng):
    rays = _sizes(level)["rays"]
    for n in (2, 3, 4):
        for k in range(rays):
            psi = TWO_PI / (n - 1) * (k + 0.5) / rays
            ray = ellipticity.ray_threshold(n, psi)
            if ray.is_always_elliptic:
                samples_in = [0.2, 0.7, 0.95]
                samples_out = []
            else:
                s0 = ray.s0
                samples_in = [s0 * f for f in (0.3, 0.8, 0.97)]
                samples_out = [s0 + (1 - s0) * f for f in (0.05, 0.5, 0.9)]
            for s in samples_in:
                if s < 1e-6 or s0_gap_too_small(ray, s):
                    continue
                if not ellipticity.classify(n, s * cmath.exp(1j * psi)).is_elliptic:
                    return False, f"elliptic expected below threshold: n={n}, psi={psi}, s={s}"
            for s in samples_out:
                if s >= 1.0 - 1e-9 or s0_gap_too_small(ray, s):
                    continue
                if not ellipticity.classify(n, s * cmath.exp(1j * psi)).is_hyperbolic:
                    return False, f"hyperbolic expected above threshold: n={n}, psi={psi}, s={s}"
    return True, f"elliptic radii form an initial interval on {rays} rays per degree"


def s0_gap_too_small(ray, s, margin: float = 1e-6) -> bool:
    return (not ray.is_always_elliptic) and abs(s - ray.s0) < margin


def check_inner_radius(level, rng):
    rays = _sizes(level)["inner"]
    for n in (2, 3, 4):
        smin = ellipticity.inner_radius(n)
        best = math.inf
        for k in range(rays):
            psi = TWO_PI / (n - 1) * k / rays
            ray = ellipticity.ray_threshold(n, psi)
            if ray.is_always_elliptic:
                continue
            if ray.s0 < smin - 1e-9:
                return False, f"threshold below the inner radius at n={n}, psi={psi}"
            if ray.s0 < best:
                best = ray.s0
            if abs(ray.s0 - smin) < 1e-9 and not ray.at_inner_radius:
                return False, f"minimum attained off the fixed-antipode ray at n={n}, psi={psi}"
        if abs(best - smin) > 1e-6:
            return False, f"inner radius not attained at n={n}: min s0 = {best}"
    return True, f"min threshold equals (n-1)/(n+1) over {rays} sector rays, n=2..4"


def check_threshold_quadratic(level, rng):
    for n in range(2, 11):
        # (n+1) r^2 - 2 r + (1-n) factors as (r - 1)((n+1) r + (n-1)); the
        # admissible circle radii are the root moduli {1, (n-1)/(n+1)}
        roots = np.roots([n + 1, -2.0, 1.0 - n])
        expected = sorted([1.0, (n - 1) / (n + 1)])
        got = sorted(abs(r) for r in roots)
        if max(abs(a - b) for a, b in zip(got, expected)) > 1e-12:
            return False, f"threshold quadratic root moduli wrong for n={n}"
    return True, "quadratic root moduli are {1, (n-1)/(n+1)} for n = 2..10"


def check_classifier_vs_orbit_oracle(level, rng):
    m = _sizes(level)["oracle"]
    done = 0
    while done < m:
        n = rng.randint(2, 4)
        psi = rng.uniform(0.0, TWO_PI)
        s = rng.uniform(0.0, 0.95)
        ray = ellipticity.ray_threshold(n, psi)
        if not ray.is_always_elliptic and abs(s - ray.s0) < 1e-3:
            continue
        w = s * cmath.exp(1j * psi)
        cls = ellipticity.classify(n, w)
        try:
            _, loc = products.denjoy_wolff_iterate(products.UnicriticalBlaschke(n, w),
                                                   1e-12, 200_000)
        except InconclusiveError:
            return False, f"oracle inconclusive away from threshold: n={n}, w={w}"
        if cls.is_elliptic != (loc is products.OrbitLocation.INTERIOR):
            return False, f"classifier/oracle disagree at n={n}, w={w}"
        done += 1
    return True, f"exact classifier agrees with the orbit oracle on {m} parameters"


def check_threshold_symmetry(level, rng):
    m = _sizes(level)["rot"]
    for _ in range(m):
        n = rng.randint(2, 5)
        psi = rng.uniform(0.0, TWO_PI)
        ray = ellipticity.ray_threshold(n, psi)
        rotated = ellipticity.ray_threshold(n, psi + TWO_PI / (n - 1))
        mirrored = ellipticity.ray_threshold(n, -psi % TWO_PI)
        if ray.is_always_elliptic != rotated.is_always_elliptic:
            return False, f"rotation symmetry broken at n={n}, psi={psi}"
        if not ray.is_always_elliptic and abs(ray.s0 - rotated.s0) > 1e-10:
            return False, f"rotation symmetry broken at n={n}, psi={psi}"
        if ray.is_always_elliptic != mirrored.is_always_elliptic:
            return False, f"conjugation symmetry broken at n={n}, psi={psi}"
        if not ray.is_always_elliptic and abs(ray.s0 - mirrored.s0) > 1e-10:
            return False, f"conjugation symmetry broken at n={n}, psi={psi}"
    return True, f"s0 is rotation- and conjugation-symmetric on {m} rays"


def check_normalization_round_trip(level, rng):
    m = _sizes(level)["trips"]
    worst = 0.0
    for _ in range(m):
        n = rng.randint(2, 6)
        sector = TWO_PI / (n - 1)
        w = (0.05 + 0.75 * rng.random()) * cmath.exp(1j * sector * rng.random() * 0.999)
        b = products.UnicriticalBlaschke(n, w)
        c = DiskMobius(rng.uniform(0.0, TWO_PI),
                       0.6 * math.sqrt(rng.random()) * cmath.exp(2j * math.pi * rng.random()))
        res = normalize_product(conjugate(b, c))
        worst = max(worst, abs(res.w - w))
        if worst > 1e-8:
            return False, f"round trip error {worst:.2e} at n={n}, w={w}"
    return True, f"{m} random conjugates re-normalize to w (worst error {worst:.1e})"


def check_normalization_uniqueness(level, rng):
    m = _sizes(level)["uniq"]
    for _ in range(m):
        n = rng.randint(2, 5)
        sector = TWO_PI / (n - 1)
        w1 = (0.1 + 0.6 * rng.random()) * cmath.exp(1j * sector * rng.random() * 0.99)
        w2 = (0.1 + 0.6 * rng.random()) * cmath.exp(1j * sector * rng.random() * 0.99)
        if abs(w1 - w2) < 1e-4:
            continue
        c = DiskMobius(rng.uniform(0.0, TWO_PI),
                       0.5 * rng.random() * cmath.exp(2j * math.pi * rng.random()))
        r1 = normalize_product(conjugate(products.UnicriticalBlaschke(n, w1), c))
        r2 = normalize_product(conjugate(products.UnicriticalBlaschke(n, w2), c))
        if abs(r1.w - r2.w) < 1e-6:
            return False, f"distinct parameters normalized together at n={n}"
    return True, f"distinct parameters stay distinct through normalization ({m} pairs)"


def check_julia_three_way(level, rng):
    generic = 2 if level == "quick" else 6
    for n in (2, 3, 4, 5):
        w = ellipticity.zero_step_parameter(n)
        b = products.UnicriticalBlaschke(n, w)
        cls = ellipticity.classify(n, w)
        if julia.julia_type(b, cls) is not julia.JuliaType.FULL_CIRCLE:
            return False, f"zero-step parameter without full-circle Julia set at n={n}"
        if julia.hyperbolic_step_kind(b, cls) is not products.StepKind.ZERO:
            return False, f"zero-step parameter probes positive at n={n}"
    done = 0
    while done < generic:
        n = rng.randint(2, 4)
        psi = rng.uniform(0.2, TWO_PI)
        if ellipticity.is_always_elliptic_angle(n, psi) or ellipticity.is_fixed_antipode_angle(n, psi):
            continue
        ray = ellipticity.ray_threshold(n, psi, tol=1e-15)
        w = ray.s0 * cmath.exp(1j * psi)
        b = products.UnicriticalBlaschke(n, w)
        cls = ellipticity.classify(n, w)
        if not cls.is_parabolic:
            continue
        if julia.julia_type(b, cls) is not julia.JuliaType.CANTOR:
            return False, f"generic parabolic with full-circle Julia set at n={n}, psi={psi}"
        if julia.hyperbolic_step_kind(b, cls) is not products.StepKind.POSITIVE:
            return False, f"generic parabolic probes zero step at n={n}, psi={psi}"
        done += 1
    return True, f"second derivative, step probe and Julia type concur (m-points + {generic} generic)"


def check_backward_orbit_closure(level, rng):
    m = _sizes(level)["closure"]
    b = products.UnicriticalBlaschke(3, 0.4 * cmath.exp(0.7j))
    sample = julia.backward_orbit(b, seed=9, transient=64, count=max(m, 50))
    for phi in sample.angles[:m]:
        target = cmath.exp(1j * phi)
        for z in preimages(b, target):
            if abs(b(z) - target) > 1e-10:
                return False, f"preimage does not map forward onto its point at phi={phi}"
    return True, f"all preimages of {m} sampled angles map forward within 1e-10"


def check_elliptic_equidistribution(level, rng):
    # samples drawn from the inner half of the always-elliptic disk, where
    # the boundary map is uniformly expanding; closer to the threshold the
    # balanced measure thins out exponentially and the gap proxy is void
    m = _sizes(level)["equi"]
    for _ in range(m):
        n = rng.randint(2, 4)
        psi = rng.uniform(0.0, TWO_PI)
        w = rng.uniform(0.0, 0.5 * ellipticity.inner_radius(n)) * cmath.exp(1j * psi)
        sample = julia.backward_orbit(products.UnicriticalBlaschke(n, w),
                                      seed=rng.randrange(1 << 60), count=10_000)
        gaps = np.diff(np.array(sample.angles))
        max_gap = max(gaps.max(), sample.angles[0] + TWO_PI - sample.angles[-1])
        if max_gap >= 0.1:
            return False, f"elliptic sample with gap {max_gap:.3f} at n={n}, w={w}"
    return True, f"max gap < 0.1 rad for {m} elliptic samples of 1e4 points"


def check_hyperbolic_gap(level, rng):
    m = _sizes(level)["gap"]
    done = 0
    while done < m:
        n = rng.randint(2, 4)
        psi = rng.uniform(0.0, TWO_PI)
        ray = ellipticity.ray_threshold(n, psi)
        if ray.is_always_elliptic or ray.s0 > 0.93:
            continue
        s = min(0.97, ray.s0 + rng.uniform(0.02, 0.4))
        w = s * cmath.exp(1j * psi)
        b = products.UnicriticalBlaschke(n, w)
        sample = julia.backward_orbit(b, seed=rng.randrange(1 << 60), count=10_000)
        gap = julia.fatou_gap(b, sample)
        dw_angle = cmath.phase(ellipticity.classify(n, w).dw_point) % TWO_PI
        if not gap.contains_angle(dw_angle):
            return False, f"dominant gap misses the Denjoy-Wolff point at n={n}, w={w}"
        if gap.length <= 10.0 * julia.median_gap(sample):
            return False, f"dominant gap not dominant at n={n}, w={w}"
        done += 1
    return True, f"dominant gap covers the Denjoy-Wolff point for {m} hyperbolic samples"


def check_render_determinism(level, rng):
    size = _sizes(level)["render"]
    img1 = render.render_parameter_plane(2, size, size, workers=1)
    img2 = render.render_parameter_plane(2, size, size, workers=3)
    if img1.pixels != img2.pixels:
        return False, "parameter-plane render differs across worker counts"
    b = products.UnicriticalBlaschke(2, -0.5)
    s1 = julia.backward_orbit(b, seed=5, count=2000)
    s2 = julia.backward_orbit(b, seed=5, count=2000)
    if s1.angles != s2.angles:
        return False, "seeded backward orbit is not reproducible"
    if render.render_julia_circle(b, s1, 64).pixels != render.render_julia_circle(b, s2, 64).pixels:
        return False, "Julia render differs between identical inputs"
    return True, f"renders and samples byte-identical (size {size})"


def check_render_boundary_consistency(level, rng):
    size = _sizes(level)["render"]
    img = render.render_parameter_plane(2, size, size)
    table = render.boundary_curve(2, 16)
    px = 2.0 / size
    for psi, s0 in zip(table.psi, table.s0):
        if math.isnan(s0) or s0 > 1.0 - 3 * px:
            continue
        last_blue = first_gray = None
        for r in np.arange(0.5 * px, 1.0 - px, 0.5 * px):
            w = r * cmath.exp(1j * psi)
            i, j = render.parameter_to_pixel(w, size, size)
            rr, gg, bb = img.pixel(i, j)
            if bb > rr and bb >= 150:
                last_blue = r
            elif rr == gg == bb and rr > 0 and first_gray is None:
                first_gray = r
        if last_blue is None or first_gray is None:
            return False, f"missing colour transition along psi={psi}"
        if last_blue > s0 + 2.5 * px or first_gray < s0 - 2.5 * px:
            return False, (f"transition at psi={psi} off the curve value: "
                           f"blue up to {last_blue}, gray from {first_gray}, s0={s0}")
    return True, "colour transitions sit on the boundary-curve radii"


CHECKS = [
    ("mobius-classification-oracle", check_mobius_classification_oracle),
    ("mobius-ellipticity-domain", check_mobius_ellipticity_domain),
    ("mobius-trace-matrix", check_mobius_trace_matrix),
    ("mobius-compose", check_mobius_compose),
    ("boundary-derivative-identity", check_boundary_derivative_identity),
    ("reciprocal-fixed-points", check_reciprocal_fixed_points),
    ("lift-degree", check_lift_degree),
    ("second-derivative-fd", check_second_derivative_fd),
    ("step-monotone", check_step_monotone),
    ("fixed-point-counts", check_fixed_point_counts),
    ("arc-length-oracles", check_arc_length_sampling),
    ("arc-growth-rates", check_rates),
    ("radial-monotonicity", check_radial_monotonicity),
    ("inner-radius", check_inner_radius),
    ("threshold-quadratic", check_threshold_quadratic),
    ("classifier-vs-orbit-oracle", check_classifier_vs_orbit_oracle),
    ("threshold-symmetry", check_threshold_symmetry),
    ("normalization-round-trip", check_normalization_round_trip),
    ("normalization-uniqueness", check_normalization_uniqueness),
    ("julia-three-way-agreement", check_julia_three_way),
    ("backward-orbit-closure", check_backward_orbit_closure),
    ("elliptic-equidistribution", check_elliptic_equidistribution),
    ("hyperbolic-gap", check_hyperbolic_gap),
    ("render-determinism", check_render_determinism),
    ("render-boundary-consistency", check_render_boundary_consistency),
]


def run_selfcheck(level: str = "quick") -> list[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError("level must be 'quick' or 'full'")
    results = []
    for name, fn in CHECKS:
        rng = random.Random(_RNG_SEED ^ hash(name) & 0xFFFFFFFF)
        try:
            ok, detail = fn(level, rng)
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail))
    return results
