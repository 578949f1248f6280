"""Command-line interface: ``leastcap {center,radius,figure,verify}``.

Exit codes: 0 success, 1 usage or domain error, 2 optimizer did not
converge (best effort printed), 3 verification failure.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .capacity import (
    figure_geometry,
    figure_rows,
    figure_svg,
    least_capacity_point,
    preset_triangle,
    radius_at,
)
from .errors import LeastCapError
from .geometry import Triangle
from .optimize import OptimizerConfig

EXIT_OK, EXIT_USAGE, EXIT_NOT_CONVERGED, EXIT_VERIFY = 0, 1, 2, 3

PRESETS = ("iso-right", "30-60-90", "6-9-13")
BACKENDS = ("auto", "sigma", "jacobi", "sc")

_TRIANGLE_HELP = (
    "Triangles are given as three vertices 'x,y' or with --preset. "
    "Preset 30-60-90 has vertices 0, k30 and i*sqrt(3)*k30 with "
    "k30 = Gamma(1/3)Gamma(1/6)/(2^(5/3) sqrt(pi)) ~ 2.6500; its least capacity "
    "point, printed in figure captions as 0.359+0.406i, is in units of k30."
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _point(text):
    try:
        x, y = (float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'x,y', got {text!r}") from None
    return complex(x, y)


def _add_triangle(p):
    p.add_argument("vertices", nargs="*", type=_point, metavar="x,y", help="three vertices")
    p.add_argument("--preset", choices=PRESETS)


def build_parser():
    parser = _Parser(
        prog="leastcap",
        description="Inner radius and least capacity point of triangles. " + _TRIANGLE_HELP,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("center", help="least capacity point (JSON report)", description=_TRIANGLE_HELP)
    _add_triangle(c)
    c.add_argument("--backend", choices=BACKENDS, default="auto")
    c.add_argument("--tol", type=float, default=None, help="optimizer position tolerance (relative)")
    c.add_argument("--out", default=None)

    r = sub.add_parser("radius", help="inner radius at a point (JSON report)", description=_TRIANGLE_HELP)
    _add_triangle(r)
    r.add_argument("--at", type=_point, required=True, metavar="x,y")
    r.add_argument("--backend", choices=BACKENDS, default="auto")
    r.add_argument("--out", default=None)

    f = sub.add_parser("figure", help="images of circles and rays (CSV or SVG)", description=_TRIANGLE_HELP)
    _add_triangle(f)
    f.add_argument("--at", type=_point, default=None, metavar="x,y",
                   help="conformal center (default: least capacity point)")
    f.add_argument("--backend", choices=BACKENDS, default="auto")
    f.add_argument("--format", choices=("csv", "svg"), default="csv")
    f.add_argument("--circles", type=int, default=10)
    f.add_argument("--rays", type=int, default=24)
    f.add_argument("--samples", type=int, default=512)
    f.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="check published constants and invariants")
    v.add_argument("--tol", type=float, default=None, help="override every row tolerance")
    v.add_argument("--only", action="append", default=None, metavar="GROUP",
                   help="run one group (repeatable): sigma, constants, weierstrass_p, jacobi, "
                        "306090, sc, cross, special, figure")
    return parser


def _triangle(args):
    if args.preset and args.vertices:
        raise LeastCapError("give either three vertices or --preset, not both")
    if args.preset:
        return preset_triangle(args.preset)
    if len(args.vertices) != 3:
        raise LeastCapError(f"expected three vertices, got {len(args.vertices)}")
    return Triangle.from_points(*args.vertices)


def _backend(args):
    return None if args.backend == "auto" else args.backend


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json(report):
    return json.dumps(report.to_dict(), indent=2) + "\n"


def cmd_center(args):
    tri = _triangle(args)
    cfg = OptimizerConfig() if args.tol is None else OptimizerConfig(tol_x=args.tol)
    report = least_capacity_point(tri, _backend(args), cfg)
    _emit(_json(report), args.out)
    if not report.converged:
        print("warning: optimizer did not converge; best point reported", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_radius(args):
    tri = _triangle(args)
    _emit(_json(radius_at(tri, args.at, _backend(args))), args.out)
    return EXIT_OK


def cmd_figure(args):
    tri = _triangle(args)
    if args.circles < 1 or args.rays < 1:
        raise LeastCapError("--circles and --rays must be positive")
    fig = figure_geometry(tri, args.at, args.circles, args.rays, args.samples, _backend(args))
    if args.format == "svg":
        _emit(figure_svg(fig) + "\n", args.out)
        return EXIT_OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("curve_type", "curve_id", "sample_index", "x", "y"))
    for kind, cid, i, x, y in figure_rows(fig):
        w.writerow((kind, cid, i, repr(x), repr(y)))
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_checks

    rows = run_checks(args.only)
    for row in rows:
        print(row.line(args.tol))
    failed = sum(not row.passed(args.tol) for row in rows)
    print(f"{len(rows) - failed}/{len(rows)} passed")
    return EXIT_VERIFY if failed else EXIT_OK


_COMMANDS = {"center": cmd_center, "radius": cmd_radius, "figure": cmd_figure, "verify": cmd_verify}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (LeastCapError, ValueError, OSError) as exc:
        print(f"leastcap: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
