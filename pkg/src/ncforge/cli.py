"""ncforge command line.

Subcommands::

    ncforge check <check_id> [options]     run one named check
    ncforge scan <check_id> --grid SPEC    grid scan with a custom grid
    ncforge all [options]                  every registered check
    ncforge list                           list check ids
    ncforge inspect <file> [options]       complete a user presentation file

Common options: --field fp:<prime>|qq, --seed N, --bound N, --max-rules N,
--trials N, --json PATH, --csv PATH, --figures DIR.

Exit codes: 0 all pass/skip, 1 any fail, 2 internal error.
"""

from __future__ import annotations

import argparse
import csv as csv_mod
import json
import random
import sys

from . import gbasis, verify
from .field import FieldError, parse_field
from .parser import ParseError, parse_presentation
from .verify import CheckConfig, Report


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--field", default="fp:10009", help="fp:<prime> or qq (default fp:10009)")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bound", type=int, default=12, help="completion degree bound")
    p.add_argument("--max-rules", type=int, default=200)
    p.add_argument("--trials", type=int, default=50, help="randomized identity trials")
    p.add_argument("--json", metavar="PATH", help="write the JSON report document")
    p.add_argument("--csv", metavar="PATH", help="write per-point results as CSV")
    p.add_argument("--figures", metavar="DIR", help="render figures into DIR")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ncforge",
                                 description="exact verification for small deformation families")
    sub = ap.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run one named check")
    p_check.add_argument("check_id")
    _add_common(p_check)

    p_scan = sub.add_parser("scan", help="run a grid check over a custom grid")
    p_scan.add_argument("check_id")
    p_scan.add_argument("--grid", required=True,
                        help="axes joined by 'x': each a comma list of ints or lo..hi; "
                             "or random:N")
    _add_common(p_scan)

    p_all = sub.add_parser("all", help="run every registered check")
    _add_common(p_all)

    sub.add_parser("list", help="list check ids")

    p_ins = sub.add_parser("inspect", help="complete a presentation file and report")
    p_ins.add_argument("file")
    p_ins.add_argument("--max-degree", type=int, default=8,
                       help="Hilbert series horizon (default 8)")
    _add_common(p_ins)
    return ap


def parse_grid(spec: str, arity: int, seed: int, span: int) -> list[tuple]:
    """Parse --grid: 'random:N' or per-axis comma lists / lo..hi ranges."""
    if spec.startswith("random:"):
        n = int(spec.split(":", 1)[1])
        rng = random.Random(seed)
        return [tuple(rng.randrange(span) for _ in range(arity)) for _ in range(n)]
    axes = []
    for axis in spec.split("x"):
        vals: list[int] = []
        for item in axis.split(","):
            item = item.strip()
            if ".." in item:
                lo, hi = item.split("..", 1)
                vals.extend(range(int(lo), int(hi) + 1))
            elif item:
                vals.append(int(item))
        if not vals:
            raise ValueError(f"empty grid axis in {spec!r}")
        axes.append(vals)
    if len(axes) != arity:
        raise ValueError(f"grid has {len(axes)} axes, check needs {arity}")
    pts = [()]
    for axis in axes:
        pts = [p + (v,) for p in pts for v in axis]
    return pts


def _print_report(r: Report):
    mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP", "error": "ERROR"}[r.status]
    print(f"{mark:5s} {r.check_id} - {verify.CHECKS[r.check_id].doc}"
          if r.check_id in verify.CHECKS else f"{mark:5s} {r.check_id}")
    points = r.details.get("points")
    if isinstance(points, list):
        bad = [e for e in points if isinstance(e, dict) and e.get("ok") is False]
        n_skip = len(r.details.get("skipped_points", []))
        extra = f", {n_skip} skipped" if n_skip else ""
        print(f"      {len(points)} points{extra}" + (f", {len(bad)} failing" if bad else ""))
        for e in bad[:10]:
            print(f"      FAIL at point {e.get('point')}: {e}")
    if r.error_bound:
        print(f"      error bound {r.error_bound.split(' = ')[0]}")
    if r.status == "error":
        print(f"      {r.details.get('error', '')}")


def _write_outputs(reports: list[Report], cfg: CheckConfig, args) -> None:
    doc = verify.report_document(reports, cfg)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"report written to {args.json}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv_mod.writer(fh)
            w.writerow(["check_id", "status", "point", "detail"])
            for r in reports:
                pts = r.details.get("points")
                if isinstance(pts, list) and pts and isinstance(pts[0], dict):
                    for e in pts:
                        rest = {k: v for k, v in e.items() if k != "point"}
                        w.writerow([r.check_id,
                                    "pass" if rest.get("ok", True) else "fail",
                                    " ".join(str(v) for v in e.get("point", [])),
                                    ";".join(f"{k}={v}" for k, v in rest.items())])
                    for s in r.details.get("skipped_points", []):
                        w.writerow([r.check_id, "skipped",
                                    " ".join(str(v) for v in s["point"]),
                                    s.get("reason", "")])
                else:
                    w.writerow([r.check_id, r.status, "",
                                ";".join(f"{k}={v}" for k, v in r.details.items())])
        print(f"csv written to {args.csv}")
    if args.figures:
        from . import figures
        written = figures.render_document(doc, args.figures)
        for path in written:
            print(f"figure written to {path}")


def _config(args) -> CheckConfig:
    return CheckConfig(field=parse_field(args.field), seed=args.seed,
                       degree_bound=args.bound, max_rules=args.max_rules,
                       trials=args.trials)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            for check_id, check in verify.CHECKS.items():
                kind = f"grid[{check.grid_arity}]" if check.grid_arity else "fixed"
                print(f"{check_id:22s} {kind:8s} {check.doc}")
            return 0

        if args.command == "inspect":
            return _inspect(args)

        cfg = _config(args)
        if args.command == "check":
            reports = [verify.run_check(args.check_id, cfg)]
        elif args.command == "scan":
            arity = verify.CHECKS[args.check_id].grid_arity if args.check_id in verify.CHECKS else 0
            if not arity:
                verify.scan(args.check_id, cfg)  # raises the proper error
            cfg.grid = parse_grid(args.grid, arity, cfg.seed,
                                  cfg.field.modulus or 10009)
            reports = [verify.scan(args.check_id, cfg)]
        else:
            reports = verify.run_all(cfg)
        for r in reports:
            _print_report(r)
        _write_outputs(reports, cfg, args)
        return verify.exit_code(reports)
    except verify.UnknownCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FieldError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _inspect(args) -> int:
    cfg = _config(args)
    with open(args.file) as fh:
        text = fh.read()
    pres = parse_presentation(text, cfg.field, label=args.file)
    try:
        rs = gbasis.complete(pres, cfg.degree_bound, cfg.max_rules)
    except gbasis.CompletionOverflow as exc:
        print(f"completion overflow: {exc}")
        print(f"partial rules: {len(exc.partial)}")
        return 2
    print(f"presentation: {len(pres.relations)} relations over "
          f"{', '.join(pres.alphabet.names)} ({cfg.field.name})")
    print(f"completed: {len(rs)} rules, certified={rs.certified}")
    for lead, tail in rs.rules:
        arrow_tail = str(tail) if not tail.is_zero() else "0"
        print(f"  {pres.alphabet.word_str(lead)} -> {arrow_tail}")
    finite = gbasis.is_finite_dimensional(rs)
    print(f"finite-dimensional: {finite}")
    if finite:
        words = gbasis.normal_words(rs)
        print(f"dimension: {len(words)}")
        print(f"hilbert: {gbasis.hilbert_series(rs, args.max_degree)}")
        if len(words) <= 64:
            print("basis:", " ".join(pres.alphabet.word_str(w) for w in words))
    else:
        print(f"hilbert (to degree {args.max_degree}): "
              f"{gbasis.hilbert_series(rs, args.max_degree)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
