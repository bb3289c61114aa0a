"""Command-line front end: construction, verification, characters.

Kinds are written the way the twisted algebras are parametrized:
``A 2`` is the rank-3 lattice (parameter n gives rank 2n-1), ``D 4`` is
rank 4, ``E6`` takes no number.  Exit status: 0 on success, 1 when a
requested check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters as characters_mod
from . import cocycle as cocycle_mod
from . import modes as modes_mod
from .lattice import ConfigurationError, RootSystemKind, build_root_system
from .report import Report

VERIFY_CHECKS = ("cocycle", "nuhat", "pairs", "simple", "recursion", "shifted")
RECURSION_CAP = 16
SHIFTED_CAP = 12


def _parse_kind(args) -> RootSystemKind:
    if args.family == "E6":
        if args.n is not None:
            raise ConfigurationError("E6 takes no parameter")
        return RootSystemKind("E6")
    if args.n is None:
        raise ConfigurationError(f"family {args.family} needs a parameter n")
    return RootSystemKind(args.family, args.n)


def _emit(obj, fmt: str, text_fn):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text_fn())


def _cmd_roots(args) -> int:
    rs = build_root_system(_parse_kind(args))
    orbits = []
    seen = set()
    for idx in range(len(rs.positive_roots)):
        if idx in seen:
            continue
        orbit = sorted({idx, rs.nu_positive[idx]})
        seen.update(orbit)
        orbits.append(orbit)
    obj = {
        "kind": rs.kind.family,
        "n": rs.kind.n,
        "rank": rs.rank,
        "orbit_reps": list(rs.orbit_reps),
        "positive_roots": [
            {"coeffs": list(rs.root_coeffs[i]), "nu": rs.nu_positive[i]}
            for i in range(len(rs.positive_roots))
        ],
        "nu_orbits": orbits,
    }

    def text():
        lines = [f"{rs.kind.label()}: rank {rs.rank}, "
                 f"{len(rs.positive_roots)} positive roots"]
        for i, coeffs in enumerate(rs.root_coeffs):
            mark = "fixed" if rs.nu_positive[i] == i else f"nu-> {rs.nu_positive[i]}"
            lines.append(f"  [{i:3d}] {list(coeffs)} {mark}")
        lines.append("nu-orbits: " + " ".join(str(o) for o in orbits))
        lines.append("orbit representatives (simple labels): "
                     + str(list(rs.orbit_reps)))
        return "\n".join(lines)

    _emit(obj, args.format, text)
    return 0


def _cmd_matrix(args) -> int:
    rs = build_root_system(_parse_kind(args))
    cm = rs._charge_matrix
    obj = {
        "kind": rs.kind.family,
        "n": rs.kind.n,
        "k": cm.k,
        "A": [list(row) for row in cm.entries],
        "a": list(cm.a),
    }

    def text():
        lines = [f"{rs.kind.label()}: charge matrix A ({cm.k} x {cm.k})"]
        width = max(len(str(v)) for row in cm.entries for v in row)
        for row in cm.entries:
            lines.append("  [" + " ".join(f"{v:>{width}}" for v in row) + "]")
        lines.append(f"a = {list(cm.a)}")
        return "\n".join(lines)

    _emit(obj, args.format, text)
    return 0


def _cmd_character(args) -> int:
    rs = build_root_system(_parse_kind(args))
    if args.shift is not None and args.shift not in rs.orbit_reps:
        raise ConfigurationError(
            f"--shift must be an orbit representative {list(rs.orbit_reps)}")
    series = characters_mod.nahm_character(rs, args.order, shift=args.shift)
    reports: list[Report] = []
    if args.check_recursion:
        reports = _recursion_reports(rs, args.order, series if args.shift is None else None)
    ok = all(r.passed for r in reports)

    if args.format == "json":
        obj = characters_mod.series_json(rs, series, args.shift)
        if args.check_recursion:
            obj = {"character": obj, "checks": [r.to_json() for r in reports]}
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(characters_mod.format_series(series))
        for r in reports:
            print(r.describe())
    return 0 if ok else 1


def _recursion_reports(rs, cap, precomputed=None) -> list:
    nah = precomputed or characters_mod.nahm_character(rs, cap)
    sol = characters_mod.recursion_solve(rs, cap)
    params = {"cap": cap, "sectors": len(nah.sectors)}
    out = [Report("closed-form-vs-recursion", rs.kind.label(),
                  nah.sectors == sol.sectors, params)]
    for i in rs.orbit_reps:
        resid = characters_mod.recursion_residual(rs, i, nah)
        out.append(Report("recursion-residual", rs.kind.label(),
                          resid.is_zero(), {"cap": cap, "rep": i}))
    return out


def _cmd_verify(args) -> int:
    rs = build_root_system(_parse_kind(args))
    wanted = args.checks.split(",")
    for w in wanted:
        if w != "all" and w not in VERIFY_CHECKS:
            raise ConfigurationError(f"unknown check {w!r}")
    if "all" in wanted:
        wanted = list(VERIFY_CHECKS)

    reports: list[Report] = []
    if "cocycle" in wanted:
        reports.append(cocycle_mod.verify_cocycle(rs, args.window))
    if "nuhat" in wanted:
        reports.append(cocycle_mod.verify_nu_hat(rs, args.window))
    if "pairs" in wanted:
        reports.append(modes_mod.verify_pair_lemma(rs))
    if "simple" in wanted:
        reports.append(modes_mod.verify_simple_pairing_lemma(rs))
    if "recursion" in wanted:
        reports.extend(_recursion_reports(rs, RECURSION_CAP))
    if "shifted" in wanted:
        for j in rs.orbit_reps:
            reports.append(
                characters_mod.shifted_character_check(rs, j, SHIFTED_CAP))

    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2,
                         sort_keys=True))
    else:
        for r in reports:
            print(r.describe())
    return 0 if all(r.passed for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistchar",
        description="Folded ADE lattices, their sign cocycle, and exact "
                    "multigraded characters of the principal subspaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kind(p):
        p.add_argument("family", choices=["A", "D", "E6"],
                       help="A n means the rank 2n-1 lattice")
        p.add_argument("n", nargs="?", type=int, default=None)
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("roots", help="positive roots, nu-orbits, representatives")
    add_kind(p)
    p.set_defaults(fn=_cmd_roots)

    p = sub.add_parser("matrix", help="charge matrix A and exponent vector a")
    add_kind(p)
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("character", help="multigraded character up to a degree cap")
    add_kind(p)
    p.add_argument("--order", type=int, default=10, metavar="N",
                   help="q-degree cap (default 10)")
    p.add_argument("--shift", type=int, default=None, metavar="J",
                   help="shift at orbit representative J")
    p.add_argument("--check-recursion", action="store_true",
                   help="cross-check against the recursion solver and residuals")
    p.set_defaults(fn=_cmd_character)

    p = sub.add_parser("verify", help="run verification suites")
    add_kind(p)
    p.add_argument("--checks", default="all",
                   help="comma list from: " + ",".join(VERIFY_CHECKS) + ",all")
    p.add_argument("--window", type=int, default=2,
                   help="coefficient window for the cocycle checks (default 2)")
    p.set_defaults(fn=_cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    try:
        if args.command == "character" and args.order < 0:
            raise ConfigurationError("--order must be >= 0")
        if args.command == "verify" and args.window < 1:
            raise ConfigurationError("--window must be >= 1")
        return args.fn(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
