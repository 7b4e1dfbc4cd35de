"""Deterministic rendering of parameter planes, boundary curves and Julia samples.

Images are raw 8-bit RGB rasters written as binary PPM (P6); curve tables are
CSV with 17-significant-digit decimals.  Both formats are byte-exact
contracts: repeated runs, and runs with different worker counts, produce
identical files.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .ellipticity import RayClassification, classify, ray_threshold, zero_step_parameter
from .julia import JuliaSample
from .mobius import TWO_PI
from .products import UnicriticalBlaschke

# colour scale endpoints are fixed so golden-image tests stay stable:
# elliptic multiplier 0 -> (0, 0, 150), multiplier 1 -> (200, 200, 255);
# hyperbolic (s - s0)/(1 - s0) = 0 -> white, = 1 -> black.
_BLUE_BASE = 150
_BLUE_RAMP = 105
_GRAY_RAMP = 255

REGION_SECTOR = "sector"
REGION_FULL_DISK = "fulldisk"

_MULT_ITERATIONS = 80
_MULT_NEWTON = 12


@dataclass(frozen=True)
class RasterImage:
    """Row-major 8-bit RGB raster (rows top to bottom)."""

    width: int
    height: int
    pixels: bytes

    def __post_init__(self):
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError("pixel buffer size does not match width*height")

    def pixel(self, i: int, j: int) -> tuple[int, int, int]:
        k = 3 * (j * self.width + i)
        return self.pixels[k], self.pixels[k + 1], self.pixels[k + 2]


@dataclass(frozen=True)
class CurveTable:
    """Rows (psi, s0) of the elliptic-set boundary; NaN marks always-elliptic rays."""

    n: int
    psi: tuple[float, ...]
    s0: tuple[float, ...]


def pixel_to_parameter(i: int, j: int, width: int, height: int) -> complex:
    """Centre of pixel (i, j): x rightward, y upward, disk inscribed in [-1,1]^2."""
    return complex(2.0 * (i + 0.5) / width - 1.0, 1.0 - 2.0 * (j + 0.5) / height)


def parameter_to_pixel(w: complex, width: int, height: int) -> tuple[int, int]:
    i = int(math.floor((w.real + 1.0) * 0.5 * width))
    j = int(math.floor((1.0 - w.imag) * 0.5 * height))
    return min(max(i, 0), width - 1), min(max(j, 0), height - 1)


def _ray_thresholds(n: int, nrays: int, workers: int) -> np.ndarray:
    """s0 per ray angle 2 pi k / nrays; +inf on always-elliptic rays.

    Worker count only splits the ray range; every ray is computed from its
    own angle, so results are identical for any split.
    """
    def one(k: int) -> float:
        ray: RayClassification = ray_threshold(n, TWO_PI * k / nrays)
        return math.inf if ray.is_always_elliptic else ray.s0

    if workers <= 1:
        values = [one(k) for k in range(nrays)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(one, range(nrays)))
    return np.array(values, dtype=float)


def boundary_curve(n: int, angles: int) -> CurveTable:
    """Threshold table over the full-disk angle grid psi_k = 2 pi k / angles."""
    if angles < 4:
        raise ValueError("need at least 4 angles")
    psi = tuple(TWO_PI * k / angles for k in range(angles))
    s0 = []
    for p in psi:
        ray = ray_threshold(n, p)
        s0.append(math.nan if ray.is_always_elliptic else ray.s0)
    return CurveTable(n, psi, tuple(s0))


def _elliptic_multiplier(n: int, params: np.ndarray) -> np.ndarray:
    """|B'| at the interior fixed point, vectorized over elliptic parameters.

    Fixed-count power iteration plus Newton polish keeps the render
    deterministic; pixels that fail the residual check (only possible in the
    near-parabolic fringe) fall back to multiplier 1, which is the correct
    limit at the boundary.
    """
    if params.size == 0:
        return np.zeros(0)
    wc = params.conjugate()
    z = np.zeros_like(params)
    with np.errstate(all="ignore"):
        for _ in range(_MULT_ITERATIONS):
            z = ((z - params) / (1.0 - wc * z)) ** n
        for _ in range(_MULT_NEWTON):
            a = (z - params) / (1.0 - wc * z)
            bz = a**n
            deriv = n * a ** (n - 1) * (1.0 - np.abs(params) ** 2) / (1.0 - wc * z) ** 2
            step = (bz - z) / (deriv - 1.0)
            z_new = z - step
            z = np.where(np.isfinite(z_new) & (np.abs(z_new) < 1.0), z_new, z)
        a = (z - params) / (1.0 - wc * z)
        residual = np.abs(a**n - z)
        mult = np.abs(n * a ** (n - 1) * (1.0 - np.abs(params) ** 2) / (1.0 - wc * z) ** 2)
    good = np.isfinite(mult) & (residual < 1e-6)
    return np.clip(np.where(good, mult, 1.0), 0.0, 1.0)


def render_parameter_plane(n: int, width: int, height: int,
                           region: str = REGION_FULL_DISK, workers: int = 1) -> RasterImage:
    """Colour the parameter disk by classification.

    Elliptic parameters are blue scaled by the Denjoy-Wolff multiplier,
    hyperbolic ones grayscale scaled by (s - s0)/(1 - s0), the parabolic
    boundary is a black curve, the zero-step locus points are 5x5 red
    squares, and everything outside the disk (or outside the fundamental
    sector, for region="sector") is black.  Thresholds are computed once per
    sampled ray; radial monotonicity makes that exact up to pixel quantization.
    """
    if width < 16 or height < 16:
        raise ValueError("raster must be at least 16x16")
    if region not in (REGION_SECTOR, REGION_FULL_DISK):
        raise ValueError(f"unknown region {region!r}")
    nrays = max(1024, 8 * max(width, height))
    thresholds = _ray_thresholds(n, nrays, workers)

    xs = 2.0 * (np.arange(width) + 0.5) / width - 1.0
    ys = 1.0 - 2.0 * (np.arange(height) + 0.5) / height
    params = xs[None, :] + 1j * ys[:, None]
    radius = np.abs(params)
    angle = np.angle(params) % TWO_PI
    ray_index = np.round(angle / TWO_PI * nrays).astype(int) % nrays
    s0 = thresholds[ray_index]

    inside = radius < 1.0
    if region == REGION_SECTOR:
        inside &= angle < TWO_PI / (n - 1)
    band = np.zeros_like(inside)
    finite = np.isfinite(s0)
    band[finite] = np.abs(radius[finite] - s0[finite]) <= 1.5 / width
    band &= inside

    rgb = np.zeros((height, width, 3), dtype=np.uint8)
    elliptic = inside & ~band & (radius < s0)
    hyperbolic = inside & ~band & (radius > s0) & finite

    mult = _elliptic_multiplier(n, params[elliptic])
    rgb[elliptic, 0] = np.round(200.0 * mult).astype(np.uint8)
    rgb[elliptic, 1] = np.round(200.0 * mult).astype(np.uint8)
    rgb[elliptic, 2] = np.round(_BLUE_BASE + _BLUE_RAMP * mult).astype(np.uint8)

    ratio = (radius[hyperbolic] - s0[hyperbolic]) / (1.0 - s0[hyperbolic])
    gray = np.round(_GRAY_RAMP * (1.0 - np.clip(ratio, 0.0, 1.0))).astype(np.uint8)
    for c in range(3):
        rgb[hyperbolic, c] = gray

    copies = 1 if region == REGION_SECTOR else n - 1
    base = zero_step_parameter(n)
    for j in range(copies):
        point = base * np.exp(2j * math.pi * j / (n - 1))
        ci, cj = parameter_to_pixel(complex(point), width, height)
        for dj in range(-2, 3):
            for di in range(-2, 3):
                ii, jj = ci + di, cj + dj
                if 0 <= ii < width and 0 <= jj < height:
                    rgb[jj, ii] = (255, 0, 0)

    return RasterImage(width, height, rgb.tobytes())


def render_julia_circle(B: UnicriticalBlaschke, sample: JuliaSample, width: int) -> RasterImage:
    """Square dynamical-plane render: light-gray unit-circle annulus, sampled
    Julia angles in black, Denjoy-Wolff point as a 3x3 red square, white
    background."""
    if width < 64:
        raise ValueError("raster must be at least 64 pixels wide")
    height = width
    xs = 2.0 * (np.arange(width) + 0.5) / width - 1.0
    ys = 1.0 - 2.0 * (np.arange(height) + 0.5) / height
    radius = np.abs(xs[None, :] + 1j * ys[:, None])
    rgb = np.full((height, width, 3), 255, dtype=np.uint8)
    annulus = np.abs(radius - 1.0) <= 3.0 / width
    rgb[annulus] = (200, 200, 200)
    for phi in sample.angles:
        i, j = parameter_to_pixel(complex(math.cos(phi), math.sin(phi)), width, height)
        rgb[j, i] = (0, 0, 0)
    dw = classify(B.n, B.w).dw_point
    ci, cj = parameter_to_pixel(dw, width, height)
    for dj in range(-1, 2):
        for di in range(-1, 2):
            ii, jj = ci + di, cj + dj
            if 0 <= ii < width and 0 <= jj < height:
                rgb[jj, ii] = (255, 0, 0)
    return RasterImage(width, height, rgb.tobytes())


def write_ppm(image: RasterImage, path) -> None:
    """Binary PPM: exactly `P6\\n<width> <height>\\n255\\n` then raw RGB rows."""
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    try:
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(image.pixels)
    except OSError as exc:
        raise OSError(f"cannot write PPM to {path}: {exc}") from exc


def write_csv(table: CurveTable, path) -> None:
    """Curve table as `psi,s0` CSV, 17 significant digits, `nan` sentinel,
    LF endings, one line per row with no extra padding."""
    lines = ["psi,s0"]
    lines.extend(f"{p:.17g},{v:.17g}" for p, v in zip(table.psi, table.s0))
    data = ("\n".join(lines) + "\n").encode("ascii")
    try:
        with open(path, "wb") as fh:
            fh.write(data)
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc


def read_csv(path) -> CurveTable:
    """Parse a boundary CSV written by `write_csv` (degree is not recorded
    in the file; the result carries n = 0)."""
    with open(path, "rb") as fh:
        text = fh.read().decode("ascii")
    rows = text.split("\n")
    if rows and rows[-1] == "":
        rows.pop()
    if not rows or rows[0] != "psi,s0":
        raise ValueError(f"{path} is not a boundary curve CSV")
    psi, s0 = [], []
    for row in rows[1:]:
        a, b = row.split(",")
        psi.append(float(a))
        s0.append(float(b))
    return CurveTable(0, tuple(psi), tuple(s0))
