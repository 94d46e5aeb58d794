"""Command-line interface: ``specpara {eig,bound,scan,certify,plot}``.

Exit codes: 0 success, 1 verification failure, 2 invalid input,
3 I/O failure, 4 undetermined certification.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from specpara.certificates import CERTIFIERS, certify_all, overall_status, s_value
from specpara.errors import DomainError
from specpara.galerkin import BASES, DEFAULT_SPEC, SCAN_SPECS, GalerkinSpec, neumann_spectrum
from specpara.geometry import ParallelogramParams, PolarPoint, from_polar, scale_invariant_target, to_polar
from specpara.regions import (
    CSV_HEADER,
    region_masks,
    coverage_scan,
    format_regions,
    main_inequality,
    target_scan,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_IO, EXIT_UNDETERMINED = 0, 1, 2, 3, 4
RATIO_TOL = 1e-9
REGION_COLORS = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759")
SVG_SIZE = 600
S_GRAPH_ROWS = 512


class InputError(Exception):
    pass


def fmt(v) -> str:
    return f"{float(v):.12g}"


# -- argument handling -------------------------------------------------------

def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c", type=float, help="shear offset c >= 0")
    p.add_argument("--d", type=float, help="height d > 0, c^2 + d^2 <= 1")
    p.add_argument("--r", type=float, help="polar radius in (0, 1]")
    p.add_argument("--theta", type=float, help="polar angle in (0, pi/2]")


def _params(args) -> ParallelogramParams:
    cartesian = args.c is not None or args.d is not None
    polar = args.r is not None or args.theta is not None
    if cartesian and polar:
        raise InputError("give either --c/--d or --r/--theta, not both")
    if cartesian:
        if args.c is None or args.d is None:
            raise InputError("--c and --d must be given together")
        return ParallelogramParams(args.c, args.d)
    if polar:
        if args.r is None or args.theta is None:
            raise InputError("--r and --theta must be given together")
        return from_polar(PolarPoint(args.r, args.theta))
    raise InputError("parameters required: --c/--d or --r/--theta")


def _trunc(text: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if text is None:
        return default
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--trunc expects N or NX,NY, got {text!r}") from None
    if len(parts) == 1:
        parts *= 2
    if len(parts) != 2:
        raise InputError(f"--trunc expects N or NX,NY, got {text!r}")
    return parts[0], parts[1]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", newline="") as fh:
        fh.write(text)


# -- subcommands -------------------------------------------------------------

def cmd_eig(args) -> int:
    q = _params(args)
    spec = GalerkinSpec(*_trunc(args.trunc, (DEFAULT_SPEC.max_mx, DEFAULT_SPEC.max_my)), args.basis)
    if args.k < 1:
        raise InputError(f"--k must be >= 1, got {args.k}")
    spectrum = neumann_spectrum(q, spec, max(args.k, 3))
    mu3 = spectrum.values[2]
    target = scale_invariant_target(max(mu3, 0.0), q)
    values = spectrum.values[: args.k]
    if args.format == "json":
        print(json.dumps({"c": q.c, "d": q.d, "basis": spec.basis, "trunc": [spec.max_mx, spec.max_my],
                          "eigenvalues": list(values), "mu3": mu3, "target": target,
                          "target_over_36pi2": target / (36 * math.pi ** 2)}, indent=2))
    else:
        print(f"c = {fmt(q.c)}  d = {fmt(q.d)}  basis = {spec.basis} {spec.max_mx}x{spec.max_my}")
        for i, v in enumerate(values, start=1):
            print(f"mu_{i} = {fmt(v)}")
        print(f"mu_3 |boundary|^2 = {fmt(target)}  ({fmt(target / (36 * math.pi ** 2))} x 36 pi^2)")
    return EXIT_OK


def cmd_bound(args) -> int:
    q = _params(args)
    rep = main_inequality(to_polar(q))
    ok = rep.status in ("STRICT", "EQUALITY")
    fields = {"c": q.c, "d": q.d, "r": rep.point.r, "theta": rep.point.theta, "rr_bound": rep.rr_bound,
              "kroger": rep.kroger, "rhs": rep.rhs, "margin": rep.margin}
    if args.format == "json":
        print(json.dumps({**fields, "regions": format_regions(rep.regions), "status": rep.status}, indent=2))
    else:
        for key, v in fields.items():
            print(f"{key:9s} {fmt(v)}")
        print(f"{'regions':9s} {format_regions(rep.regions)}")
        print(f"{'status':9s} {rep.status}")
    return EXIT_OK if ok else EXIT_FAIL


def _scan_specs(args) -> tuple[GalerkinSpec, ...]:
    if args.basis == "both":
        if args.trunc is None:
            return SCAN_SPECS
        n = _trunc(args.trunc, (0, 0))
        return tuple(GalerkinSpec(*n, s.basis) for s in SCAN_SPECS)
    default = next(s for s in SCAN_SPECS if s.basis == args.basis)
    return (GalerkinSpec(*_trunc(args.trunc, (default.max_mx, default.max_my)), args.basis),)


def scan_csv(report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in report.rows:
        writer.writerow(row.csv_fields())
    return buf.getvalue()


def cmd_scan(args) -> int:
    if args.nr < 2 or args.ntheta < 2:
        raise InputError(f"grid must be at least 2 x 2, got {args.nr} x {args.ntheta}")
    specs = _scan_specs(args)
    report = target_scan(args.nr, args.ntheta, specs)
    coverage = coverage_scan(args.nr, args.ntheta)
    _emit(scan_csv(report), args.out)

    best = report.argmax
    bad_margin = sum(1 for row in report.rows
                     if row.margin >= 0 and math.hypot(row.r - 0.5, row.theta - math.pi / 2) > 1e-3)
    summary = {
        "grid": [args.nr, args.ntheta],
        "trial_spaces": [f"{s.basis} {s.max_mx}x{s.max_my}" for s in specs],
        "max_target_ratio": best.target_ratio,
        "argmax": {"r": best.r, "theta": best.theta, "c": best.c, "d": best.d},
        "uncovered": coverage.n_uncovered,
        "region_counts": coverage.counts,
        "nonnegative_margins_outside_equality_ball": bad_margin,
    }
    print(json.dumps(summary), file=sys.stderr if args.out is None else sys.stdout)
    ok = coverage.n_uncovered == 0 and best.target_ratio <= 1 + RATIO_TOL
    return EXIT_OK if ok else EXIT_FAIL


def cmd_certify(args) -> int:
    which = args.which.lower()
    if which == "all":
        reports = certify_all()
    elif which in CERTIFIERS:
        reports = [CERTIFIERS[which]()]
    else:
        raise InputError(f"unknown certificate {args.which!r}; choose from a1, a2, a3, a4, all")
    overall = overall_status(c.status for r in reports for c in r.checks)
    if args.format == "table":
        for rep in reports:
            print(f"{rep.lemma}: {rep.overall}")
            for c in rep.checks:
                extra = c.detail.get("approx") or c.detail.get("residual", "")
                enc = c.detail.get("enclosure")
                enc_s = f" [{fmt(enc[0])}, {fmt(enc[1])}]" if enc else ""
                print(f"  {c.status.value:15s} {c.name}{enc_s} {extra}".rstrip())
        print(f"overall: {overall}")
    elif which == "all":
        print(json.dumps({"reports": [r.to_dict() for r in reports], "overall": overall}, indent=2))
    else:
        print(reports[0].to_json())
    return {"PASS": EXIT_OK, "FAIL": EXIT_FAIL}.get(overall, EXIT_UNDETERMINED)


def regions_svg(size: int = SVG_SIZE) -> str:
    """Quarter disk in the (c, d) plane, each pixel coloured by its lowest-index region."""
    centers = (np.arange(size) + 0.5) / size
    c, d = np.meshgrid(centers, centers[::-1])
    r = np.hypot(c, d)
    inside = r <= 1.0
    cos_t = np.where(r > 0, c / np.where(r > 0, r, 1), 0.0)
    masks = region_masks(r, cos_t)
    label = np.zeros(c.shape, dtype=int)
    for idx in range(len(masks) - 1, -1, -1):
        label[masks[idx] & inside] = idx + 1
    label[~inside] = 0

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size + 40}" '
        f'viewBox="0 0 {size} {size + 40}" shape-rendering="crispEdges">',
        f'<rect width="{size}" height="{size + 40}" fill="#ffffff"/>',
    ]
    for y in range(size):
        row = label[y]
        x = 0
        while x < size:
            v = row[x]
            end = x + 1
            while end < size and row[end] == v:
                end += 1
            if v:
                lines.append(f'<rect x="{x}" y="{y}" width="{end - x}" height="1" fill="{REGION_COLORS[v - 1]}"/>')
            x = end
    for i, color in enumerate(REGION_COLORS):
        x0 = 10 + 90 * i
        lines.append(f'<rect x="{x0}" y="{size + 12}" width="16" height="16" fill="{color}"/>')
        lines.append(f'<text x="{x0 + 22}" y="{size + 26}" font-family="sans-serif" font-size="14">R{i + 1}</text>')
    lines.append(f'<text x="{size - 10}" y="{size + 26}" font-family="sans-serif" font-size="12" '
                 f'text-anchor="end">c horizontal, d vertical</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def s_graph_csv(rows: int = S_GRAPH_ROWS) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("r", "S"))
    for k in range(rows):
        r = 0.5 + 0.25 * k / (rows - 1)
        writer.writerow((repr(r), repr(float(s_value(r)))))
    return buf.getvalue()


def cmd_plot(args) -> int:
    text = regions_svg() if args.kind == "regions" else s_graph_csv()
    _emit(text, args.out)
    return EXIT_OK


# -- entry point -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specpara", description="Neumann eigenvalue bounds for parallelograms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eig", help="Galerkin Neumann eigenvalues")
    _add_params(p)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--trunc", help="mode cutoff N or NX,NY (default 16)")
    p.add_argument("--basis", choices=BASES, default="cosine")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_eig)

    p = sub.add_parser("bound", help="Rayleigh-Ritz and Kroger bounds against 9 pi^2/(1+r)^2")
    _add_params(p)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("scan", help="grid scan of margins, coverage and the target ratio")
    p.add_argument("--nr", type=int, default=200)
    p.add_argument("--ntheta", type=int, default=200)
    p.add_argument("--trunc", help="mode cutoff N or NX,NY for the selected trial spaces")
    p.add_argument("--basis", choices=BASES + ("both",), default="both")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("certify", help="run the auxiliary-inequality certificates")
    p.add_argument("which", help="a1, a2, a3, a4 or all")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("plot", help="figure data: region map (SVG) or S graph (CSV)")
    p.add_argument("kind", choices=("regions", "s-graph"))
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"specpara: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"specpara: I/O failure: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
