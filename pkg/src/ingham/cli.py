"""Command-line front end.

Subcommands: catalog, constants, survey, verify, export, reproduce.
Outputs are byte-deterministic for fixed flags: JSON is emitted with sorted
keys, CSVs in a fixed column order, and nothing time- or path-dependent is
recorded.  Exit codes: 0 success, 1 computation mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import catalog, geometry, search, spectral
from .catalog import load_spec_file, minimality_witnesses, spec_to_json
from .errors import InghamError, UnknownTilingError
from .gram import SupportSet, frame_bound_check, inscribed_hole, removal_witness
from .lattice import minimality_certificate, realize_points
from .reproduce import build_report
from .spectral import A2_DET_TOL, TranslationConfig


def _a2_tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("INGHAM_TOL")
    return float(env) if env else A2_DET_TOL


def _entry(args) -> catalog.CatalogEntry:
    if getattr(args, "spec_file", None):
        spec = load_spec_file(args.spec_file)
        return catalog.CatalogEntry(
            spec=spec,
            default_configs={},
            expected=(),
            primary_config="",
        )
    r = Fraction(args.r) if getattr(args, "r", None) else None
    R = Fraction(args.R) if getattr(args, "R", None) else None
    return catalog.get(args.tiling, r=r, R=R)


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _write_csv(path: str | None, header: list[str], rows) -> None:
    if path:
        fh = open(path, "w", newline="", encoding="utf-8")
    else:
        fh = sys.stdout
    writer = csv.writer(fh)
    writer.writerow(header)
    writer.writerows(rows)
    if path:
        fh.close()


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog.names():
            if name == "two_square":
                print("two_square (parametric: --r and --R)")
            else:
                print(name)
        return 0
    entry = catalog.get(args.name, r=Fraction(args.r) if args.r else None,
                        R=Fraction(args.R) if args.R else None)
    data = spec_to_json(entry.spec) if _single_field(entry) else _spec_json_loose(entry)
    data["m"] = entry.spec.m
    data["configs"] = {k: str(v) for k, v in sorted(entry.default_configs.items())}
    data["minimality_certified"] = _minimality_status(entry)
    _emit_json(data)
    return 0


def _single_field(entry) -> bool:
    try:
        spec_to_json(entry.spec)
        return True
    except ValueError:
        return False


def _spec_json_loose(entry) -> dict:
    spec = entry.spec
    return {
        "name": spec.name,
        "l_star": [[float(e) for e in row] for row in spec.l_star],
        "us": [[float(c) for c in u] for u in spec.us],
        "note": "mixed radicals; entries shown as floats",
    }


def _minimality_status(entry) -> bool | None:
    try:
        return minimality_certificate(entry.spec, minimality_witnesses(entry))
    except InghamError:
        return None


def cmd_constants(args) -> int:
    entry = _entry(args)
    config = TranslationConfig.parse(args.config)
    sr = spectral.ingham_constants(entry.spec, config, tol=_a2_tol(args))
    _emit_json(
        {
            "tiling": entry.spec.name,
            "config": str(config),
            "a2": sr.satisfies_a2,
            "kappa1": sr.kappa1,
            "kappa2": sr.kappa2,
            "det_abs": sr.det_abs,
            "c1_full": sr.c1_full,
            "c2_full": sr.c2_full,
            "connected": geometry.is_connected(config.ns),
        }
    )
    return 0


def cmd_survey(args) -> int:
    entry = _entry(args)
    tol = _a2_tol(args)
    if args.connected_only:
        result = search.connected_survey(entry.spec, tol=tol)
    else:
        result = search.classify_all(entry.spec, args.grid, entry.spec.m, tol=tol)
    if args.csv:
        _write_csv(
            args.csv,
            ["config", "connected", "a2", "kappa1", "kappa2", "ratio"],
            search.survey_csv_rows(result),
        )
    _emit_json(
        {
            "tiling": entry.spec.name,
            "grid_max": None if args.connected_only else args.grid,
            "connected_only": bool(args.connected_only),
            "total": result.total,
            "passing": result.passing,
            "failing": result.failing,
        }
    )
    return 0


def cmd_verify(args) -> int:
    entry = _entry(args)
    config = TranslationConfig.parse(args.config)
    support = SupportSet.centered(entry.spec, args.support_radius)
    fb = frame_bound_check(entry.spec, config, support, tol=_a2_tol(args))
    data = {
        "tiling": entry.spec.name,
        "config": str(config),
        "support_size": len(support),
        "a2": fb.a2,
        "lambda_min": fb.lambda_min,
        "lambda_max": fb.lambda_max,
        "c1_full": fb.c1_full,
        "c2_full": fb.c2_full,
        "frame_bounds_pass": fb.passed,
    }
    if args.hole or args.hole_fraction:
        if args.hole:
            hole = tuple(float(v) for v in args.hole.split(","))
        else:
            hole = inscribed_hole(entry.spec, config, args.hole_cell, args.hole_fraction)
        radii = [int(v) for v in args.witness_radii.split(",")]
        supports = [SupportSet.centered(entry.spec, k) for k in radii]
        lambdas = removal_witness(entry.spec, config, hole, supports)
        data["hole"] = list(hole)
        data["witness"] = [
            {"support_size": len(s), "lambda_min": lam}
            for s, lam in zip(supports, lambdas)
        ]
        if args.csv:
            _write_csv(
                args.csv,
                ["support_size", "lambda_min"],
                [(len(s), f"{lam:.12g}") for s, lam in zip(supports, lambdas)],
            )
    _emit_json(data)
    return 0 if fb.passed else 1


def cmd_export(args) -> int:
    entry = _entry(args)
    if args.what == "points":
        bbox = tuple(float(v) for v in args.bbox.split(","))
        rows = [
            (f"{p.x:.12g}", f"{p.y:.12g}", p.j, p.m[0], p.m[1])
            for p in realize_points(entry.spec, bbox)
        ]
        _write_csv(args.csv, ["x", "y", "j", "m0", "m1"], rows)
        return 0
    config = (
        TranslationConfig.parse(args.config)
        if args.config
        else entry.default_configs[entry.primary_config]
    )
    geom = geometry.omega_cells(entry.spec, config)
    rows = [
        (cell, vertex, f"{x:.12g}", f"{y:.12g}")
        for cell, vertex, x, y in geometry.cells_csv_rows(geom)
    ]
    _write_csv(args.csv, ["cell_index", "vertex_index", "x", "y"], rows)
    return 0


def cmd_reproduce(args) -> int:
    report = build_report(out_dir=args.out)
    summary = report["summary"]
    for entry in report["entries"]:
        status = "PASS" if entry["pass"] else "FAIL"
        extra = ""
        if "printed" in entry:
            extra = f"  [published value {entry['printed']!r} documented-discrepant]"
        print(f"{status}  {entry['tiling']}/{entry['kind']}/{entry['key']}{extra}")
    print(
        f"{summary['passed']}/{summary['total']} checks passed; "
        f"{len(summary['documented_discrepancies'])} documented discrepancies"
    )
    return 0 if summary["all_pass"] else 1


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ingham",
        description="Two-sided estimate data for lattice tilings of the plane",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list tilings or show one")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--r", default=None)
    p.add_argument("--R", default=None)
    p.set_defaults(func=cmd_catalog)

    def common(p):
        p.add_argument("--tiling", required=False)
        p.add_argument("--spec-file", default=None)
        p.add_argument("--r", default=None)
        p.add_argument("--R", default=None)
        p.add_argument("--tol", type=float, default=None)

    p = sub.add_parser("constants", help="spectral constants of one configuration")
    common(p)
    p.add_argument("--config", required=True, help="integer pairs 'a,b;a,b;...'")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("survey", help="exhaustive grid or connected-shape survey")
    common(p)
    p.add_argument("--grid", type=int, default=3)
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--csv", default=None, help="write per-config records to a CSV file")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("verify", help="frame-bound and removal-witness checks")
    common(p)
    p.add_argument("--config", required=True)
    p.add_argument("--support-radius", type=int, default=1)
    p.add_argument("--hole", default=None, help="x0,y0,x1,y1")
    p.add_argument("--hole-fraction", type=float, default=None)
    p.add_argument("--hole-cell", type=int, default=0)
    p.add_argument("--witness-radii", default="0,1,2,3")
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="figure data as CSV")
    common(p)
    p.add_argument("--what", choices=["points", "domain"], required=True)
    p.add_argument("--bbox", default="0,0,1,1", help="x0,y0,x1,y1 for points")
    p.add_argument("--config", default=None)
    p.add_argument("--csv", default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("reproduce", help="run the full expected-results table")
    p.add_argument("--out", default=None, help="directory for report.json and CSVs")
    p.set_defaults(func=cmd_reproduce)

    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownTilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InghamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
