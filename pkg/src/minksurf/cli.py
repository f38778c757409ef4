"""Command-line front end.

Subcommands:

* ``family``     build a closed-form family (general lightlike-H or cone)
                 and export CSV / OBJ grids.
* ``sample``     sample a custom parabolic patch (profile expressions) to a
                 positions-only CSV / OBJ.
* ``invariants`` full invariant CSV for a custom parabolic patch.
* ``section``    report a plane section of the paraboloid: curvature,
                 domain, constancy check; optional per-sample CSV.
* ``verify``     run the claim suite and print one report block per claim.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
Diagnostics go to stderr; data goes to files or stdout.
"""

from __future__ import annotations

import argparse
import sys

from .errors import Error, ExprError, UsageError
from .expr import compile_profile
from .meridian import (MTFamilyParams, PlaneSection, ProfileCurvePhi,
                       ProfilePair, RootBranch, SignBranch, build_parabolic,
                       kappa_bar, mt_cone_patch, mt_general_profile,
                       plane_section_curvature, plane_section_phi, profile_v)
from .surface import Interval
from .verify import GridSpec, claim_suite, render_reports
from . import exporters


def _parse_axis(spec: str, name: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError(f"--{name} must be start:end:count, got {spec!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError:
        raise UsageError(f"--{name} must be start:end:count, got {spec!r}") from None
    if count < 2:
        raise UsageError(f"--{name} needs count >= 2, got {count}")
    if not lo < hi:
        raise UsageError(f"--{name} needs start < end, got {spec!r}")
    return lo, hi, count


def _parse_section(spec: str) -> PlaneSection:
    fields: dict[str, str] = {}
    for item in spec.split(","):
        if "=" not in item:
            raise UsageError(f"--section entries must be key=value, got {item!r}")
        key, _, val = item.partition("=")
        fields[key.strip()] = val.strip()
    missing = {"A", "B", "C", "root"} - set(fields)
    if missing:
        raise UsageError(f"--section is missing {sorted(missing)}")
    try:
        a = float(fields["A"])
        b = float(fields["B"])
        c = float(fields["C"])
    except ValueError as exc:
        raise UsageError(f"--section has a malformed number: {exc}") from None
    root = _parse_branch(fields["root"], RootBranch, "--section root")
    return PlaneSection(a, b, c, root)


def _parse_branch(text: str, enum_cls, what: str):
    try:
        return enum_cls[text.strip().upper()]
    except KeyError:
        raise UsageError(f"{what} must be plus or minus, got {text!r}") from None


def _parse_projection(spec: str):
    try:
        entries = [float(x) for x in spec.split(",")]
    except ValueError as exc:
        raise UsageError(f"--projection has a malformed number: {exc}") from None
    if len(entries) != 12:
        raise UsageError(
            f"--projection needs 12 comma-separated reals, got {len(entries)}")
    return tuple(tuple(entries[r * 4:(r + 1) * 4]) for r in range(3))


def _grid(args) -> GridSpec:
    if args.u is None or args.v is None:
        raise UsageError("both --u and --v grid ranges are required")
    ulo, uhi, un = _parse_axis(args.u, "u")
    vlo, vhi, vn = _parse_axis(args.v, "v")
    return GridSpec(un, vn, Interval(ulo, uhi), Interval(vlo, vhi))


def _export(patch, grid, args, positions_only: bool = False) -> None:
    wrote = False
    if args.csv:
        if positions_only:
            rows = exporters.export_positions_csv(patch, grid, args.csv)
        else:
            rows = exporters.export_grid_csv(patch, grid, args.csv)
        print(f"wrote {rows} rows to {args.csv}", file=sys.stderr)
        wrote = True
    if args.obj:
        projection = (_parse_projection(args.projection)
                      if args.projection else exporters.DEFAULT_PROJECTION)
        nv, nf = exporters.export_obj(patch, grid, projection, args.obj)
        print(f"wrote {nv} vertices, {nf} faces to {args.obj}", file=sys.stderr)
        wrote = True
    if not wrote:
        raise UsageError("nothing to do: pass --csv and/or --obj")


def _phi_from_args(args, v_range: Interval) -> ProfileCurvePhi:
    if getattr(args, "section", None):
        section = _parse_section(args.section)
        base = plane_section_phi(section.A, section.B, section.C,
                                 section.root_branch)
        return ProfileCurvePhi(base.phi, v_range)
    if getattr(args, "phi_expr", None):
        return ProfileCurvePhi(compile_profile(args.phi_expr, "v"), v_range)
    raise UsageError("a generating profile is required: --section or --phi-expr")


def _cmd_family(args) -> int:
    grid = _grid(args)
    if args.type == "parabolic-mt":
        for name in ("a", "b", "c"):
            if getattr(args, name) is None:
                raise UsageError(f"--{name} is required for parabolic-mt "
                                 f"(c != 0, a != 0)")
        if args.sign is None:
            raise UsageError("--sign is required for parabolic-mt")
        if not args.section:
            raise UsageError("--section is required for parabolic-mt")
        branch = _parse_branch(args.sign, SignBranch, "--sign")
        params = MTFamilyParams(a=args.a, b=args.b, c=args.c,
                                sign_branch=branch,
                                section=_parse_section(args.section))
        prof = mt_general_profile(params)
        if not (prof.domain.contains(grid.u_range.lo)
                and prof.domain.contains(grid.u_range.hi)):
            raise UsageError(
                f"--u range [{grid.u_range.lo}, {grid.u_range.hi}] exits the "
                f"admissible profile domain [{prof.domain.lo}, {prof.domain.hi}]")
        fp = ProfilePair(prof.f, prof.g, grid.u_range)
        phi = _phi_from_args(args, grid.v_range)
        patch = build_parabolic(fp, phi, label="general lightlike-H family")
    elif args.type == "cone":
        for name in ("a", "b"):
            if getattr(args, name) is None:
                raise UsageError(f"--{name} is required for cone")
        phi = _phi_from_args(args, grid.v_range)
        patch = mt_cone_patch(args.a, args.b, phi, u_range=grid.u_range)
    else:
        raise UsageError(f"unknown family type {args.type!r}")
    _export(patch, grid, args)
    return 0


def _custom_parabolic(args):
    grid = _grid(args)
    for name in ("f_expr", "g_expr", "phi_expr"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required")
    fp = ProfilePair(compile_profile(args.f_expr, "u"),
                     compile_profile(args.g_expr, "u"),
                     grid.u_range)
    phi = ProfileCurvePhi(compile_profile(args.phi_expr, "v"), grid.v_range)
    return build_parabolic(fp, phi, label="custom parabolic patch"), grid


def _cmd_sample(args) -> int:
    patch, grid = _custom_parabolic(args)
    _export(patch, grid, args, positions_only=True)
    return 0


def _cmd_invariants(args) -> int:
    patch, grid = _custom_parabolic(args)
    _export(patch, grid, args)
    return 0


def _cmd_section(args) -> int:
    phi = plane_section_phi(args.A, args.B, args.C,
                            _parse_branch(args.root, RootBranch, "--root"))
    curvature = plane_section_curvature(args.A, args.B, args.C,
                                        _parse_branch(args.root, RootBranch,
                                                      "--root"))
    vs = phi.domain.linspace(args.samples, inset=0.02)
    values = [kappa_bar(phi, v) for v in vs]
    mean = sum(values) / len(values)
    print(f"domain: [{exporters.fmt(phi.domain.lo)}, {exporters.fmt(phi.domain.hi)}]")
    print(f"curvature: {exporters.fmt(curvature)}")
    print(f"sampled mean: {exporters.fmt(mean)}")
    print(f"sampled max deviation: "
          f"{exporters.fmt(max(abs(x - curvature) for x in values))}")
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="\n") as fh:
            fh.write("v,phi,kappa_bar\n")
            for v, kb in zip(vs, values):
                p = profile_v(phi.phi, v).val
                fh.write(",".join(exporters.fmt(x) for x in (v, p, kb)) + "\n")
        print(f"wrote {len(vs)} rows to {args.csv}", file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    if args.suite != "paper":
        raise UsageError(f"unknown suite {args.suite!r}")
    reports = claim_suite(tol=args.tol)
    sys.stdout.write(render_reports(reports))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minksurf",
        description="Invariants and lightlike-H certificates for meridian "
                    "surfaces in Minkowski 4-space.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_grid_and_output(p, with_projection=True):
        p.add_argument("--u", help="u grid as start:end:count")
        p.add_argument("--v", help="v grid as start:end:count")
        p.add_argument("--csv", help="output CSV path")
        p.add_argument("--obj", help="output OBJ path")
        if with_projection:
            p.add_argument("--projection",
                           help="3x4 projection, 12 comma-separated reals "
                                "(row major; default drops x4)")

    fam = sub.add_parser("family", help="build a closed-form family")
    fam.add_argument("--type", required=True, choices=["parabolic-mt", "cone"])
    fam.add_argument("--a", type=float)
    fam.add_argument("--b", type=float)
    fam.add_argument("--c", type=float)
    fam.add_argument("--sign", help="plus or minus")
    fam.add_argument("--section", help="A=..,B=..,C=..,root=plus|minus")
    fam.add_argument("--phi-expr", dest="phi_expr",
                     help="generating profile as an expression of v")
    add_grid_and_output(fam)
    fam.set_defaults(func=_cmd_family)

    for name, fn, helptext in (
            ("sample", _cmd_sample, "positions of a custom parabolic patch"),
            ("invariants", _cmd_invariants,
             "full invariant table of a custom parabolic patch")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--f-expr", dest="f_expr",
                       help="meridian profile f as an expression of u")
        p.add_argument("--g-expr", dest="g_expr",
                       help="meridian profile g as an expression of u")
        p.add_argument("--phi-expr", dest="phi_expr",
                       help="generating profile as an expression of v")
        add_grid_and_output(p)
        p.set_defaults(func=fn)

    sec = sub.add_parser("section", help="plane section of the paraboloid")
    sec.add_argument("--A", type=float, required=True)
    sec.add_argument("--B", type=float, required=True)
    sec.add_argument("--C", type=float, required=True)
    sec.add_argument("--root", default="plus", help="plus or minus")
    sec.add_argument("--samples", type=int, default=1000)
    sec.add_argument("--csv", help="per-sample CSV path")
    sec.set_defaults(func=_cmd_section)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", default="paper")
    ver.add_argument("--tol", type=float, default=1e-9)
    ver.set_defaults(func=_cmd_verify)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # argparse usage errors already carry code 2
        return int(exc.code or 0)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
