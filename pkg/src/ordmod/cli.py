"""Command-line surface: levels, roots, weyl, classify, verify, witness.

Algebra names follow the grammar

    sl(n|m)      n > m > 0
    osp(1|2n)    osp(2|2n)    osp(2m+1|2n)    osp(2m|2n)
    F(4)  G(3)  sl(n)  sp(4)  g2

(whitespace-insensitive, letters case-insensitive).  ``verify`` also accepts
the roster alias ``all-desk``.  Every rational in a JSON payload is rendered
as an exact ``p/q`` string; documents carry ``schema_version`` "1".

Exit codes: 0 success / all verified, 1 verification failure, 2 usage or
parse error, 3 rejected level (coprimality failure or a subprincipal-only u).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .admissible import RejectedLevelError, boundary_levels, enumerate_candidates, principal_level, principal_rejection_reason
from .classify import PASS, CanonicalWeight
from .classify import classify as run_classify
from .classify import verify as run_verify
from .dominance import is_even_dominant_integral
from .rootdata import ConstructionError, Family, FamilySpec, RootSystem, build_root_system
from .weyl import generate_weyl
from .witness import find_long_root_witness, find_witness

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_REJECTED_LEVEL = 3

SCHEMA_VERSION = "1"

ALL_DESK = (
    "sl(2|1)", "sl(3|1)", "sl(3|2)",
    "osp(2|2)", "osp(2|4)",
    "osp(1|2)", "osp(1|4)", "osp(3|2)", "osp(5|2)", "osp(6|2)", "osp(4|4)",
    "F(4)", "G(3)",
    "sl(2)", "sl(3)", "sp(4)", "g2",
)

_GRAMMAR = (
    "sl(n|m) with n > m > 0; osp(1|2n); osp(2|2n); osp(2m+1|2n); osp(2m|2n) with m >= 2; "
    "F(4); G(3); sl(n); sp(4); g2"
)

_SL_SUPER = re.compile(r"^sl\((\d+)\|(\d+)\)$")
_SL = re.compile(r"^sl\((\d+)\)$")
_OSP = re.compile(r"^osp\((\d+)\|(\d+)\)$")


class UsageError(ValueError):
    pass


def parse_algebra(name: str) -> FamilySpec:
    """Parse an algebra name into a validated family spec."""
    key = "".join(name.split()).lower()
    m = _SL_SUPER.match(key)
    if m:
        spec = FamilySpec(Family.SL_SUPER, int(m.group(1)), int(m.group(2)))
    elif (m := _SL.match(key)) is not None:
        k = int(m.group(1))
        if k < 2:
            raise UsageError(f"sl(n) requires n >= 2, got {k}")
        spec = FamilySpec(Family.SIMPLE_A, k - 1)
    elif (m := _OSP.match(key)) is not None:
        a, b = int(m.group(1)), int(m.group(2))
        if b < 2 or b % 2:
            raise UsageError(f"osp(a|b) requires even b >= 2, got b={b}")
        n = b // 2
        if a == 2:
            spec = FamilySpec(Family.OSP_C, n)
        elif a % 2 == 1:
            spec = FamilySpec(Family.OSP_B, n, (a - 1) // 2)
        else:
            spec = FamilySpec(Family.OSP_D, n, a // 2)
    elif key == "f(4)":
        spec = FamilySpec(Family.F4)
    elif key == "g(3)":
        spec = FamilySpec(Family.G3)
    elif key == "sp(4)":
        spec = FamilySpec(Family.SIMPLE_B2)
    elif key == "g2":
        spec = FamilySpec(Family.SIMPLE_G2)
    else:
        raise UsageError(f"cannot parse algebra {name!r}; accepted forms: {_GRAMMAR}")
    from .rootdata import validate_spec

    validate_spec(spec)  # raises ConstructionError on bad parameters
    return spec


def _q(x) -> str:
    return str(Fraction(x))


def _qvec(v) -> list[str]:
    return [_q(c) for c in v]


def _qmat(m) -> list[list[str]]:
    return [_qvec(row) for row in m]


def _weight_doc(w: CanonicalWeight) -> dict:
    return {"level": _q(w.level), "pairings": _qvec(w.pairings)}


def _parse_u_range(text: str) -> range:
    m = re.match(r"^(\d+)\.\.(\d+)$", text)
    if not m:
        raise UsageError(f"cannot parse u range {text!r}; expected the form A..B")
    lo, hi = int(m.group(1)), int(m.group(2))
    if not 1 <= lo <= hi:
        raise UsageError(f"invalid u range {text!r}")
    return range(lo, hi + 1)


def _cmd_levels(rs: RootSystem, args) -> tuple[int, dict]:
    levels = boundary_levels(rs, args.u_max)
    return EXIT_OK, {
        "command": "levels",
        "algebra": rs.name,
        "u_max": args.u_max,
        "h_dual": _q(rs.h_dual),
        "levels": [{"u": b.u, "kind": b.kind, "level": _q(b.level)} for b in levels],
    }


def _cmd_roots(rs: RootSystem, args) -> tuple[int, dict]:
    return EXIT_OK, {
        "command": "roots",
        "algebra": rs.name,
        "dim": rs.dim,
        "signature": _qvec(rs.signature),
        "simple_roots": _qmat(rs.simple_roots),
        "parity": ["odd" if p else "even" for p in rs.parity],
        "gram": _qmat(rs.gram),
        "cartan": _qmat(rs.cartan_matrix()),
        "theta": _qvec(rs.theta),
        "marks": list(rs.marks),
        "rho_pairings": _qvec(rs.rho_pairings()),
        "h_dual": _q(rs.h_dual),
        "lacety": rs.lacety,
        "root_counts": {"even": len(rs.even_roots), "odd": len(rs.odd_roots)},
        "even_simple": _qmat(rs.even_simple),
    }


def _cmd_weyl(rs: RootSystem, args) -> tuple[int, dict]:
    group = generate_weyl(rs)
    return EXIT_OK, {
        "command": "weyl",
        "algebra": rs.name,
        "order": group.order,
        "generators": _qmat(rs.even_simple),
        "words": [list(w.word) for w in group.elements],
    }


def _cmd_classify(rs: RootSystem, args) -> tuple[int, dict]:
    weights = run_classify(rs, args.u)
    candidates = enumerate_candidates(rs, args.u)
    survivors = [c for c in candidates if is_even_dominant_integral(rs, c.weight).accepted]
    return EXIT_OK, {
        "command": "classify",
        "algebra": rs.name,
        "u": args.u,
        "level": _q(principal_level(rs, args.u)),
        "weights": [_weight_doc(w) for w in weights],
        "candidates": len(candidates),
        "survivors": len(survivors),
    }


def _verify_one(rs: RootSystem, u: int) -> dict:
    report = run_verify(rs, u)
    return {
        "algebra": rs.name,
        "u": u,
        "verdict": report.verdict,
        "found": [_weight_doc(w) for w in report.found],
        "expected": [_weight_doc(w) for w in report.expected],
        "stats": report.candidate_stats,
    }


def _cmd_verify(args) -> tuple[int, dict]:
    names = list(ALL_DESK) if args.algebra.strip().lower() == "all-desk" else [args.algebra]
    batch = args.u_range is not None or len(names) > 1
    us = list(_parse_u_range(args.u_range)) if args.u_range is not None else [args.u]
    reports = []
    all_pass = True
    for name in names:
        rs = build_root_system(parse_algebra(name))
        for u in us:
            reason = principal_rejection_reason(rs, u)
            if reason is not None:
                if not batch:
                    raise RejectedLevelError(f"{rs.name}, u={u}: {reason}")
                reports.append({"algebra": rs.name, "u": u, "skipped": reason})
                continue
            doc = _verify_one(rs, u)
            all_pass = all_pass and doc["verdict"] == PASS
            reports.append(doc)
    code = EXIT_OK if all_pass else EXIT_VERIFY_FAIL
    return code, {"command": "verify", "reports": reports, "all_pass": all_pass}


def _cmd_witness(rs: RootSystem, args) -> tuple[int, dict]:
    group = generate_weyl(rs)
    rows = []
    for idx, y in enumerate(group.elements):
        if idx == 0:
            continue
        w = find_witness(rs, y)
        rows.append(
            {
                "index": idx,
                "word": list(y.word),
                "kind": w.kind,
                "branch": w.branch,
                "alpha": _qvec(w.alpha),
                "bound": _q(w.bound),
                "threshold": None if w.threshold is None else _q(w.threshold),
                "strict": w.strict,
                "verified": True,
            }
        )
    doc = {
        "command": "witness",
        "algebra": rs.name,
        "order": group.order,
        "results": rows,
        "all_verified": True,
    }
    if rs.spec.family in (Family.OSP_B, Family.OSP_D):
        moved, stabilizer, outside = [], [], []
        for idx, y in enumerate(group.elements):
            try:
                alpha = find_long_root_witness(rs, y)
            except ValueError as exc:
                (stabilizer if "stabilizer" in str(exc) else outside).append(idx)
            else:
                moved.append({"index": idx, "alpha": _qvec(alpha)})
        doc["long_root"] = {"moved": moved, "stabilizer": stabilizer, "outside_factor": outside}
    return EXIT_OK, doc


def _render_table(doc: dict) -> str:
    cmd = doc.get("command")
    lines: list[str] = []
    if cmd == "levels":
        lines.append(f"{doc['algebra']}  (h_dual = {doc['h_dual']})")
        lines.append(f"{'u':>4}  {'kind':<12} level")
        for row in doc["levels"]:
            lines.append(f"{row['u']:>4}  {row['kind']:<12} {row['level']}")
    elif cmd == "classify":
        lines.append(f"{doc['algebra']}  u={doc['u']}  level={doc['level']}")
        lines.append(f"candidates={doc['candidates']}  survivors={doc['survivors']}")
        n = len(doc["weights"][0]["pairings"]) if doc["weights"] else 0
        header = "  ".join(f"{f'alpha_{i+1}':>8}" for i in range(n))
        lines.append(f"{'level':>8}  {header}")
        for w in doc["weights"]:
            cells = "  ".join(f"{p:>8}" for p in w["pairings"])
            lines.append(f"{w['level']:>8}  {cells}")
    elif cmd == "verify":
        lines.append(f"{'algebra':<10} {'u':>3}  {'verdict':<16} found/expected")
        for r in doc["reports"]:
            if "skipped" in r:
                lines.append(f"{r['algebra']:<10} {r['u']:>3}  {'SKIPPED':<16} {r['skipped']}")
            else:
                lines.append(
                    f"{r['algebra']:<10} {r['u']:>3}  {r['verdict']:<16} "
                    f"{len(r['found'])}/{len(r['expected'])}"
                )
        lines.append(f"all_pass: {doc['all_pass']}")
    elif cmd == "witness":
        lines.append(f"{doc['algebra']}  |W| = {doc['order']}")
        lines.append(f"{'idx':>4}  {'kind':<10} {'branch':>6}  {'bound':>8}  {'threshold':>10}  strict")
        for r in doc["results"]:
            th = r["threshold"] if r["threshold"] is not None else "-"
            lines.append(
                f"{r['index']:>4}  {r['kind']:<10} {r['branch']:>6}  {r['bound']:>8}  {th:>10}  {r['strict']}"
            )
        if "long_root" in doc:
            lr = doc["long_root"]
            lines.append(
                f"long-root witnesses: moved={len(lr['moved'])} "
                f"stabilizer={len(lr['stabilizer'])} outside={len(lr['outside_factor'])}"
            )
    else:
        for key, val in doc.items():
            if key == "schema_version":
                continue
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordmod",
        description="Exact classification of ordinary irreducible modules at boundary admissible levels.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, need_algebra=True):
        if need_algebra:
            p.add_argument("--algebra", required=True, help=f"algebra name; grammar: {_GRAMMAR}")
        p.add_argument("--format", choices=("json", "table"), default="table")

    p = sub.add_parser("levels", help="enumerate boundary admissible levels")
    common(p)
    p.add_argument("--u-max", type=int, default=10)

    p = sub.add_parser("roots", help="root-system summary")
    common(p)

    p = sub.add_parser("weyl", help="even Weyl group order and generators")
    common(p)

    p = sub.add_parser("classify", help="classify modules at the principal level for u")
    common(p)
    p.add_argument("--u", type=int, required=True)

    p = sub.add_parser("verify", help="compare the classifier against the closed forms")
    p.add_argument("--algebra", required=True, help="algebra name or 'all-desk'")
    p.add_argument("--format", choices=("json", "table"), default="table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--u", type=int)
    group.add_argument("--u-range", help="inclusive range A..B")

    p = sub.add_parser("witness", help="verified witnesses for every nontrivial Weyl element")
    common(p)
    return parser


def run(argv) -> tuple[int, dict | None]:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), None
    try:
        if args.subcommand == "verify":
            code, doc = _cmd_verify(args)
        else:
            rs = build_root_system(parse_algebra(args.algebra))
            handler = {
                "levels": _cmd_levels,
                "roots": _cmd_roots,
                "weyl": _cmd_weyl,
                "classify": _cmd_classify,
                "witness": _cmd_witness,
            }[args.subcommand]
            code, doc = handler(rs, args)
    except RejectedLevelError as exc:
        print(f"rejected level: {exc}", file=sys.stderr)
        return EXIT_REJECTED_LEVEL, None
    except (UsageError, ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    doc = {"schema_version": SCHEMA_VERSION, **doc}
    print(json.dumps(doc, indent=2) if args.format == "json" else _render_table(doc))
    return code, doc


def main() -> None:
    code, _ = run(sys.argv[1:])
    sys.exit(code)


if __name__ == "__main__":
    main()
