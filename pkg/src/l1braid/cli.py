"""Command-line entry point: ``l1braid {verify,scan-l1,derive-brm,ybe-check,figures}``.

Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import brm_pipeline, checks, l1_extrema, ybe
from .errors import L1BraidError
from .report import CheckResult, Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# (file stem, 2J, 2M) for the five reference l1-norm curves
FIGURES = (
    ("l1_j1-2_m1-2", 1, 1),
    ("l1_j1_m1", 2, 2),
    ("l1_j1_m0", 2, 0),
    ("l1_j3-2_m3-2", 3, 3),
    ("l1_j3-2_m1-2", 3, 1),
)

YBE_FAMILIES = {
    "r4-type1": (ybe.SpectralFamily(ybe.FamilyTag.R4_TYPE_I, alpha=0.7), 1.2, 1e-10),
    "r4-type2": (ybe.SpectralFamily(ybe.FamilyTag.R4_TYPE_II, eta=-1), 1.2, 1e-12),
    "2d-type1": (ybe.SpectralFamily(ybe.FamilyTag.A2_TYPE_I), 0.9, 1e-10),
    "2d-type2": (ybe.SpectralFamily(ybe.FamilyTag.A2_TYPE_II, gamma=1), 0.45, 1e-12),
}


class UsageError(Exception):
    pass


def parse_half(text: str) -> int:
    """'3/2' -> 3, '-1' -> -2, '0.5' -> 1; returns twice the value."""
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a half-integer: {text!r}") from exc
    twice = 2 * v
    if twice.denominator != 1:
        raise UsageError(f"not a half-integer: {text!r}")
    return int(twice)


def write_profile_csv(path: Path, two_j: int, two_m: int, samples: int) -> l1_extrema.L1Profile:
    prof = l1_extrema.l1_profile(two_j, two_m, samples)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["theta", "f"])
            for t, f in zip(prof.thetas, prof.values):
                w.writerow([repr(float(t)), repr(float(f))])
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return prof


def read_profile_csv(path: Path) -> tuple[np.ndarray, np.ndarray]:
    with Path(path).open() as fh:
        rows = list(csv.reader(fh))
    if rows[0] != ["theta", "f"]:
        raise ValueError(f"unexpected header in {path}: {rows[0]}")
    data = np.array([[float(a), float(b)] for a, b in rows[1:]])
    return data[:, 0], data[:, 1]


def cmd_verify(filter_text: str | None = None, seed: int = checks.DEFAULT_SEED) -> Report:
    t0 = time.perf_counter()
    results = checks.run_checks(filter_text, seed)
    return Report.build(results, int((time.perf_counter() - t0) * 1000))


def cmd_ybe_check(family: str, grid: int) -> Report:
    if family not in YBE_FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {sorted(YBE_FAMILIES)}")
    if grid <= 0:
        raise UsageError("grid must be a positive integer")
    t0 = time.perf_counter()
    fam, half_width, tol = YBE_FAMILIES[family]
    values = np.linspace(-half_width, half_width, grid)
    r = ybe.ybe_grid(fam, values)
    check = CheckResult.of(f"ybe.{family}", r, tol, f"{grid}x{grid} grid on [-{half_width}, {half_width}]")
    return Report.build([check], int((time.perf_counter() - t0) * 1000))


def cmd_derive_brm(two_j: int, type_name: str, out: Path) -> brm_pipeline.DerivedBrm:
    tag = {"I": brm_pipeline.BrmTag.TYPE_I, "II": brm_pipeline.BrmTag.TYPE_II}[type_name]
    derived = brm_pipeline.canonical_brm(two_j, tag)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(derived.to_json() + "\n")
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc.strerror or exc}") from exc
    return derived


def cmd_figures(out_dir: Path, samples: int) -> list[Path]:
    paths = []
    for stem, two_j, two_m in FIGURES:
        p = out_dir / f"{stem}.csv"
        write_profile_csv(p, two_j, two_m, samples)
        paths.append(p)
    return paths


def _emit(report: Report, stream=None) -> int:
    stream = stream or sys.stdout
    stream.write(report.to_json() + "\n")
    for c in report.checks:
        print(c.line(), file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="l1braid", description="Braid matrices from l1-extremal D-functions.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every registered invariant check")
    v.add_argument("--filter", default=None, help="substring matched against check names")
    v.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)

    s = sub.add_parser("scan-l1", help="write one l1-norm curve as CSV")
    s.add_argument("--two-j", type=int, required=True, help="2J")
    s.add_argument("--row", required=True, help="M, e.g. 1/2 or -1")
    s.add_argument("--samples", type=int, default=l1_extrema.DEFAULT_SAMPLES)
    s.add_argument("--out", type=Path, required=True)

    d = sub.add_parser("derive-brm", help="run the canonical BRM derivation")
    d.add_argument("--two-j", type=int, required=True)
    d.add_argument("--type", choices=("I", "II"), required=True)
    d.add_argument("--out", type=Path, required=True)

    y = sub.add_parser("ybe-check", help="scan a spectral family for YBE residuals")
    y.add_argument("--family", required=True)
    y.add_argument("--grid", type=int, default=20)

    f = sub.add_parser("figures", help="write the five l1-norm curves")
    f.add_argument("--out", type=Path, required=True)
    f.add_argument("--samples", type=int, default=l1_extrema.DEFAULT_SAMPLES)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _emit(cmd_verify(args.filter, args.seed))
        if args.command == "ybe-check":
            return _emit(cmd_ybe_check(args.family, args.grid))
        if args.command == "scan-l1":
            prof = write_profile_csv(args.out, args.two_j, parse_half(args.row), args.samples)
            print(f"wrote {len(prof.thetas)} rows to {args.out}")
            return EXIT_OK
        if args.command == "derive-brm":
            derived = cmd_derive_brm(args.two_j, args.type, args.out)
            print(f"wrote {args.out} (paper_match_residual={derived.paper_match_residual:.3e})")
            return EXIT_OK if derived.paper_match_residual < 1e-12 else EXIT_FAIL
        if args.command == "figures":
            for p in cmd_figures(args.out, args.samples):
                print(f"wrote {p}")
            return EXIT_OK
    except (UsageError, L1BraidError) as exc:
        print(f"l1braid: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"l1braid: error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
