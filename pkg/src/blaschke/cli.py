"""Command-line interface.

Subcommands: classify, boundary, render-param, render-julia, normalize,
selfcheck.  Angles are radians; floats print with 17 significant digits.
Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 I/O error.
"""

from __future__ import annotations

import argparse
import cmath
import math
import sys

from . import ellipticity, render, selfcheck
from . import julia as julia_mod
from .errors import NumericError
from .normalize import FiniteBlaschke, normalize as normalize_product
from .products import DynamicsClass, UnicriticalBlaschke


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; 2 is reserved for numeric
    # failures here, so usage problems are rerouted to exit code 1
    def error(self, message):
        raise _UsageError(message)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _build_parser() -> _Parser:
    parser = _Parser(prog="blaschke",
                     description="Unicritical Blaschke products: classification, "
                                 "parameter sets, Julia sets, renders.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify B_w and report its invariants")
    p.add_argument("--n", type=int, required=True, help="degree (>= 2)")
    p.add_argument("--s", type=float, help="|w| (with --psi)")
    p.add_argument("--psi", type=float, help="arg(w) in radians (with --s)")
    p.add_argument("--re", type=float, help="Re(w) (with --im)")
    p.add_argument("--im", type=float, help="Im(w) (with --re)")

    p = sub.add_parser("boundary", help="write the threshold curve s0(psi) as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--angles", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("render-param", help="render the parameter plane as PPM")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--region", choices=[render.REGION_SECTOR, render.REGION_FULL_DISK],
                   default=render.REGION_FULL_DISK)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("render-julia", help="sample a Julia set and render the circle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--psi", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out-image", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--width", type=int, default=512)
    p.add_argument("--transient", type=int, default=64)

    p = sub.add_parser("normalize", help="normalize a finite Blaschke product from a spec file")
    p.add_argument("path")

    p = sub.add_parser("selfcheck", help="run the invariant suite")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    return parser


def _parameter_from_args(args) -> complex:
    polar = args.s is not None or args.psi is not None
    cartesian = args.re is not None or args.im is not None
    if polar == cartesian:
        raise _UsageError("give exactly one of (--s, --psi) or (--re, --im)")
    if polar:
        if args.s is None or args.psi is None:
            raise _UsageError("--s and --psi must be given together")
        return complex(args.s * math.cos(args.psi), args.s * math.sin(args.psi))
    if args.re is None or args.im is None:
        raise _UsageError("--re and --im must be given together")
    return complex(args.re, args.im)


def _cmd_classify(args) -> int:
    w = _parameter_from_args(args)
    n = args.n
    B = UnicriticalBlaschke(n, w)
    cls = ellipticity.classify(n, w)
    ray = ellipticity.ray_threshold(n, B.psi)
    jt = julia_mod.julia_type(B, cls)
    print(f"class={cls.kind.value}")
    print(f"dw={_fmt_complex(cls.dw_point)}")
    print(f"multiplier={_fmt_complex(cls.multiplier)}")
    print("s0=always_elliptic" if ray.is_always_elliptic else f"s0={_fmt(ray.s0)}")
    print(f"julia={jt.value}")
    if cls.kind is DynamicsClass.PARABOLIC:
        print(f"step={julia_mod.hyperbolic_step_kind(B, cls).value}")
    return 0


def _cmd_boundary(args) -> int:
    table = render.boundary_curve(args.n, args.angles)
    render.write_csv(table, args.out)
    return 0


def _cmd_render_param(args) -> int:
    img = render.render_parameter_plane(args.n, args.width, args.height,
                                        region=args.region, workers=args.workers)
    render.write_ppm(img, args.out)
    return 0


def _cmd_render_julia(args) -> int:
    w = complex(args.s * math.cos(args.psi), args.s * math.sin(args.psi))
    B = UnicriticalBlaschke(args.n, w)
    sample = julia_mod.backward_orbit(B, seed=args.seed,
                                      transient=args.transient, count=args.count)
    img = render.render_julia_circle(B, sample, args.width)
    render.write_ppm(img, args.out_image)
    julia_mod.write_angles_csv(sample, args.out_csv)
    return 0


def _parse_product_file(path) -> FiniteBlaschke:
    """Plain-text product description: `theta <radians>`, `n <int>`, then one
    `zero <re> <im>` line per zero."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc
    if len(lines) < 3 or not lines[0].startswith("theta ") or not lines[1].startswith("n "):
        raise _UsageError(f"{path}: expected `theta <radians>`, `n <int>`, `zero <re> <im>`...")
    try:
        theta = float(lines[0].split()[1])
        n = int(lines[1].split()[1])
        zeros = []
        for ln in lines[2:]:
            tag, re_part, im_part = ln.split()
            if tag != "zero":
                raise ValueError(f"unexpected line {ln!r}")
            zeros.append(complex(float(re_part), float(im_part)))
    except (ValueError, IndexError) as exc:
        raise _UsageError(f"{path}: {exc}") from exc
    if len(zeros) != n:
        raise _UsageError(f"{path}: n = {n} but {len(zeros)} zero lines")
    return FiniteBlaschke(theta, tuple(zeros))


def _cmd_normalize(args) -> int:
    product = _parse_product_file(args.path)
    result = normalize_product(product)
    print(f"w {_fmt(result.w.real)} {_fmt(result.w.imag)}")
    print(f"residual {_fmt(result.residual)}")
    return 0


def _cmd_selfcheck(args) -> int:
    results = selfcheck.run_selfcheck(args.level)
    failed = 0
    for res in results:
        mark = "ok  " if res.ok else "FAIL"
        print(f"{mark} {res.name}: {res.detail}")
        failed += 0 if res.ok else 1
    print(f"{len(results) - failed}/{len(results)} checks passed (level={args.level})")
    return 0 if failed == 0 else 2


_COMMANDS = {
    "classify": _cmd_classify,
    "boundary": _cmd_boundary,
    "render-param": _cmd_render_param,
    "render-julia": _cmd_render_julia,
    "normalize": _cmd_normalize,
    "selfcheck": _cmd_selfcheck,
}


def run(argv: list[str]) -> int:
    """Execute the CLI; returns the process exit code instead of raising."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
