"""Command-line front end: bound calculators, spindle export, batch verification.

Numbers are printed with 9 significant digits; JSON output carries full
binary64 values.  Exit codes: 0 success, 1 invalid input, 2 a verification
run found a bound violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .bodies import RevolutionBody, spindle_support_curve
from .bounds import (
    outer_radius_bound,
    quotient_bound,
    quotient_bound_coarse,
    quotient_maximizer,
    stability_quotient_constant,
    stability_width_constant,
    width_bound,
)
from .export import write_profile_csv, write_profile_svg
from .geometry import PinchSpec, SpaceCurvature, admissible
from .spindle import SpindleSpec, build_spindle, spindle_radii
from .verify import check_bounds, summarize_worst_margins, verify_batch, write_jsonl
from .verify import _record_from_result

_JOBS_ENV = "CURVSHELL_JOBS"


@dataclass
class RunConfig:
    """Validated run parameters shared by the subcommands."""

    space: SpaceCurvature
    pinch: PinchSpec
    args: argparse.Namespace


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _add_geometry_args(parser: argparse.ArgumentParser) -> None:
    geo = parser.add_mutually_exclusive_group(required=True)
    geo.add_argument("--flat", action="store_true", help="Euclidean plane (c = 0)")
    geo.add_argument("--spherical", type=float, metavar="K", help="sphere, c = K^2")
    geo.add_argument("--hyperbolic", type=float, metavar="K", help="hyperbolic plane, c = -K^2")
    parser.add_argument("--k1", type=float, required=True, help="lower curvature bound")
    parser.add_argument("--k2", type=float, required=True, help="upper curvature bound")


def _space_from(args) -> SpaceCurvature:
    if args.flat:
        return SpaceCurvature.flat()
    if args.spherical is not None:
        return SpaceCurvature.spherical(args.spherical)
    return SpaceCurvature.hyperbolic(args.hyperbolic)


def _admissibility_reason(space: SpaceCurvature, k1: float, k2: float) -> str:
    if not k2 >= k1:
        return f"kappa2 = {k2} must be >= kappa1 = {k1}"
    if space.kind == "flat":
        return f"flat geometry requires kappa1 > 0 (got kappa1 = {k1})"
    if space.kind == "spherical":
        return f"spherical geometry requires kappa1 >= 0 (got kappa1 = {k1})"
    return (f"hyperbolic geometry requires kappa1 > sqrt(-c) = {space.k} "
            f"(got kappa1 = {k1})")


def _build_config(args) -> RunConfig:
    space = _space_from(args)
    if not admissible(space, args.k1, args.k2):
        raise ValueError(_admissibility_reason(space, args.k1, args.k2))
    return RunConfig(space, PinchSpec.from_curvatures(space, args.k1, args.k2), args)


def _geometry_record(space: SpaceCurvature) -> dict:
    return {"c": space.c, "kind": space.kind, "k": space.k}


def _resolve_r_tilde(cfg: RunConfig, token: str) -> float:
    if token == "max-width":
        return width_bound(cfg.space, cfg.pinch).maximizer_r
    if token == "max-quotient":
        return quotient_maximizer(cfg.pinch)
    return float(token)


def cmd_bound(cfg: RunConfig) -> int:
    space, pinch, args = cfg.space, cfg.pinch, cfg.args
    wb = width_bound(space, pinch)
    record = {
        "geometry": _geometry_record(space),
        "kappa1": pinch.kappa1,
        "kappa2": pinch.kappa2,
        "r1": pinch.r1,
        "r2": pinch.r2,
        "width_bound": wb.bound,
        "width_maximizer_r": wb.maximizer_r,
        "stability_width_constant": stability_width_constant(pinch.kappa1, space)
        if pinch.kappa1 ** 2 + space.c > 0 and admissible(space, pinch.kappa1, pinch.kappa1)
        else None,
    }
    print(f"width_bound {_fmt(wb.bound)}")
    print(f"width_maximizer_r {_fmt(wb.maximizer_r)}")
    if args.r is not None:
        ob = outer_radius_bound(space, pinch, args.r)
        record["r"] = args.r
        record["outer_radius_bound"] = ob
        print(f"outer_radius_bound(r={_fmt(args.r)}) {_fmt(ob)}")
    if space.kind == "flat":
        qb = quotient_bound(pinch)
        coarse = quotient_bound_coarse(pinch)
        record["quotient_bound"] = qb.bound
        record["quotient_maximizer_r"] = qb.maximizer_r
        record["quotient_bound_coarse"] = coarse
        record["stability_quotient_constant"] = stability_quotient_constant()
        print(f"quotient_bound {_fmt(qb.bound)}")
        print(f"quotient_maximizer_r {_fmt(qb.maximizer_r)}")
        print(f"quotient_bound_coarse {_fmt(coarse)}")
        print(f"stability_quotient_constant {_fmt(stability_quotient_constant())}")
    if record["stability_width_constant"] is not None:
        print(f"stability_width_constant(kappa1) {_fmt(record['stability_width_constant'])}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    return 0


def cmd_spindle(cfg: RunConfig) -> int:
    space, pinch, args = cfg.space, cfg.pinch, cfg.args
    r_tilde = _resolve_r_tilde(cfg, args.r)
    spec = SpindleSpec(space, pinch, r_tilde)
    r, big_r = spindle_radii(spec)
    print(f"r_tilde {_fmt(r)}")
    print(f"R_tilde {_fmt(big_r)}")
    print(f"width {_fmt(big_r - r)}")
    print(f"quotient {_fmt(big_r / r)}")
    profile = build_spindle(spec)
    if args.csv:
        write_profile_csv(profile, args.csv, n=args.samples)
    if args.svg:
        write_profile_svg(profile, args.svg, n=args.samples)
    if args.json:
        record = {
            "geometry": _geometry_record(space),
            "kappa1": pinch.kappa1,
            "kappa2": pinch.kappa2,
            "r_tilde": r,
            "R_tilde": big_r,
            "width": big_r - r,
            "quotient": big_r / r,
            "segments": len(profile.segments),
        }
        with open(args.json, "w") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    return 0


def _parse_seed_range(token: str):
    if ".." in token:
        lo, hi = token.split("..", 1)
        return range(int(lo), int(hi) + 1)
    return [int(token)]


def _spindle_family_records(cfg: RunConfig, grid: int):
    space, pinch = cfg.space, cfg.pinch
    records = []
    for i, r_tilde in enumerate(np.linspace(pinch.r2, pinch.r1, grid)):
        spec = SpindleSpec(space, pinch, float(r_tilde))
        body = (spindle_support_curve(pinch, float(r_tilde)) if space.is_flat
                else RevolutionBody.spindle(spec))
        res = check_bounds(body, pinch)
        rec = _record_from_result(res, seed=None, pinch=pinch)
        rec["family_index"] = i
        rec["r_tilde"] = float(r_tilde)
        records.append(rec)
    return records


def cmd_verify(cfg: RunConfig) -> int:
    space, pinch, args = cfg.space, cfg.pinch, cfg.args
    if args.family == "spindle":
        records = _spindle_family_records(cfg, args.grid)
        label = "r_tilde"
    else:
        if not space.is_flat:
            raise ValueError(
                "random support-curve verification is flat-only; "
                "use --family spindle for the curved geometries"
            )
        seeds = _parse_seed_range(args.seeds)
        records = verify_batch(pinch, seeds, modes=args.modes, jobs=args.jobs)
        label = "seed"
    summary = summarize_worst_margins(records)
    if args.report:
        write_jsonl(records, args.report)
    if args.summary:
        from .verify import write_summary_csv

        row = dict(summary)
        row["kappa1"], row["kappa2"] = pinch.kappa1, pinch.kappa2
        write_summary_csv([row], args.summary)
    bad = [r for r in records
           if not (r["satisfied"]["width"] and r["satisfied"]["outer"]
                   and r["satisfied"]["quotient"] is not False)]
    n_ok = len(records) - len(bad)
    print(f"{n_ok}/{len(records)} satisfied")
    print(f"max_width {_fmt(summary['max_width'])}")
    print(f"worst_width_margin {_fmt(summary['worst_width_margin'])}")
    print(f"worst_outer_margin {_fmt(summary['worst_outer_margin'])}")
    if "worst_quotient_margin" in summary:
        print(f"worst_quotient_margin {_fmt(summary['worst_quotient_margin'])}")
    if bad:
        key = "seed" if label == "seed" else "r_tilde"
        ident = bad[0][key] if label == "seed" else bad[0]["r_tilde"]
        print(f"violation at {key}={ident}", file=sys.stderr)
        return 2
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvshell",
        description="Shell bounds for curvature-pinched convex bodies in "
                    "constant-curvature spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bound = sub.add_parser("bound", help="evaluate the closed-form bounds")
    _add_geometry_args(p_bound)
    p_bound.add_argument("--r", type=float, default=None,
                         help="inscribed radius for the outer-radius bound")
    p_bound.add_argument("--json", default=None, help="write a JSON record here")
    p_bound.set_defaults(func=cmd_bound)

    p_spin = sub.add_parser("spindle", help="build and export an extremal spindle")
    _add_geometry_args(p_spin)
    p_spin.add_argument("--r", required=True,
                        help="inscribed radius, or 'max-width' / 'max-quotient'")
    p_spin.add_argument("--samples", type=int, default=1024, help="export sample count")
    p_spin.add_argument("--csv", default=None, help="write sampled profile CSV here")
    p_spin.add_argument("--svg", default=None, help="write an SVG drawing here")
    p_spin.add_argument("--json", default=None, help="write a JSON record here")
    p_spin.set_defaults(func=cmd_spindle)

    p_ver = sub.add_parser("verify", help="check the bounds on generated bodies")
    _add_geometry_args(p_ver)
    p_ver.add_argument("--seeds", default="0..99", help="seed range A..B (random bodies)")
    p_ver.add_argument("--modes", type=int, default=8, help="highest harmonic of the generator")
    p_ver.add_argument("--family", choices=["spindle"], default=None,
                       help="verify the extremal family instead of random bodies")
    p_ver.add_argument("--grid", type=int, default=33, help="family grid size")
    p_ver.add_argument("--jobs", type=int,
                       default=int(os.environ.get(_JOBS_ENV, "1")),
                       help=f"parallel workers (default ${_JOBS_ENV} or 1)")
    p_ver.add_argument("--report", default=None, help="write JSON-lines records here")
    p_ver.add_argument("--summary", default=None, help="write a summary CSV here")
    p_ver.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _build_config(args)
        return args.func(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
