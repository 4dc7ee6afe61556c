"""Command-line front end.

Exit codes: 0 success, 2 parse, 3 hypothesis, 4 budget, 5 mismatch,
6 not stabilized.
"""

import argparse
import csv
import json
import sys

from .analysis import D2, Analysis, InstanceFile, fmt, load_instance, verify_rows
from .d2 import d2_polynomial, difference_lattice_index
from .errors import BudgetError, HypothesisError, ItersumError, MismatchError, ParseError
from .geometry import hull_volume_dfact
from .sampling import SplitMix64, random_d2_instance, random_d3_instance
from .sumsets import DEFAULT_BUDGET_POINTS, MAX_H, cardinality_sequence, khovanskii_fit

CSV_FIELDS = ("h", "exact", "lower", "upper", "brute", "match")


def _emit(args, report, human):
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        human(report)


def _print_block(title, block, indent="  "):
    print(f"{title}:")
    for key, value in block.items():
        print(f"{indent}{key}: {json.dumps(value)}")


def _print_analysis(report):
    print(f"points: {json.dumps(report['instance']['points'])}")
    print(f"classification: {report['classification']} ({report['hull']['class']})")
    if "translation" in report:
        print(f"translation: {json.dumps(report['translation'])}")
    _print_block("hypotheses", report["hypotheses"])
    if report.get("invariants"):
        _print_block("invariants", report["invariants"])


def _print_rows(rows):
    def cell(x):
        return "-" if x is None else str(x)

    print("  ".join(f"{c:>8}" for c in CSV_FIELDS))
    for row in rows:
        print("  ".join(f"{cell(row[c]):>8}" for c in CSV_FIELDS))


def _write_csv(path, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: "" if row[k] is None else row[k] for k in CSV_FIELDS})


def _check_h_max(h_max):
    if h_max < 0:
        raise ParseError("--h-max must be nonnegative")
    if h_max > MAX_H:
        raise BudgetError(f"--h-max {h_max} exceeds the maximum of {MAX_H}", h=h_max)


def cmd_analyze(args):
    analysis = Analysis(load_instance(args.file)).run()
    _emit(args, analysis.report(), _print_analysis)
    return 0


def cmd_verify(args):
    analysis = Analysis(load_instance(args.file))
    if args.brute_only:
        if args.h_max is None:
            raise ParseError("--brute-only needs --h-max")
        report = {"instance": {"d": analysis.d, "points": [list(p) for p in analysis.spec.points]},
                  "classification": analysis.classification, "mode": "brute-only"}
    else:
        analysis.run()
        report = analysis.report()
        report["mode"] = args.mode
    h_max = args.h_max if args.h_max is not None else analysis.default_h_max()
    _check_h_max(h_max)
    rows = verify_rows(analysis, h_max, args.mode, args.brute_only, args.budget_points)
    report["h_max"] = h_max
    report["rows"] = rows
    report["all_match"] = all(r["match"] for r in rows)
    if args.csv:
        _write_csv(args.csv, rows)

    def human(rep):
        if "hypotheses" in rep:
            _print_analysis(rep)
        else:
            print(f"points: {json.dumps(rep['instance']['points'])}")
        _print_rows(rep["rows"])
        print(f"all_match: {json.dumps(rep['all_match'])}")

    _emit(args, report, human)
    return 0 if report["all_match"] else MismatchError.exit_code


def _scan_one(rng, args):
    if args.family == "d2":
        inst = random_d2_instance(rng, args.dim, args.bound, max_h=args.h_max)
    else:
        inst = random_d3_instance(rng, args.dim, args.bound, max_h=args.h_max)
    points = inst.base.points
    analysis = Analysis(InstanceFile(args.dim, list(points))).run()
    rows = verify_rows(analysis, analysis.default_h_max(), "all", False, args.budget_points)
    bad = [r for r in rows if not r["match"]]
    return analysis, bad


def cmd_scan(args):
    if not 1 <= args.dim <= 4:
        raise ParseError("scan supports 1 <= d <= 4")
    if args.count < 0:
        raise ParseError("--count must be nonnegative")
    _check_h_max(args.h_max)
    rng = SplitMix64(args.seed)
    failures = []
    equality = 0
    for k in range(args.count):
        analysis, bad = _scan_one(rng, args)
        if analysis.equality:
            equality += 1
        if bad:
            failures.append({"index": k, "points": [list(p) for p in analysis.spec.points],
                             "rows": bad})
    report = {
        "family": args.family, "d": args.dim, "count": args.count, "seed": args.seed,
        "bound": args.bound, "passed": args.count - len(failures), "failed": len(failures),
        "failures": failures,
    }
    if args.family == "d3":
        report["equality_instances"] = equality

    def human(rep):
        print(f"family {rep['family']}, d = {rep['d']}, seed = {rep['seed']}, bound = {rep['bound']}")
        print(f"{rep['passed']}/{rep['count']} pass")
        if "equality_instances" in rep:
            print(f"equality condition held on {rep['equality_instances']} instances")
        for f in rep["failures"]:
            print(f"FAIL #{f['index']}: {json.dumps(f['points'])} at h = "
                  f"{[r['h'] for r in f['rows']]}")

    _emit(args, report, human)
    return MismatchError.exit_code if failures else 0


def cmd_khovanskii(args):
    analysis = Analysis(load_instance(args.file))
    index = difference_lattice_index(analysis.a)
    if index != 1:
        raise HypothesisError("difference_lattice_index",
                              f"A - A generates a sublattice of index {fmt(index)}")
    _check_h_max(args.h_max)
    seq = cardinality_sequence(analysis.a, args.h_max, args.budget_points)
    fit = khovanskii_fit(seq, analysis.d)
    volume = hull_volume_dfact(analysis.a)
    report = {
        "instance": {"d": analysis.d, "points": [list(p) for p in analysis.spec.points]},
        "h_max": args.h_max,
        "sequence": list(seq.values),
        "h0": fit.h0,
        "coefficients": fmt(fit.coefficients),
        "degree": fit.degree,
        "leading_coefficient_times_dfact": fit.leading_coefficient_times_dfact,
        "hull_volume_dfact": volume,
        "volume_match": fit.degree == analysis.d and fit.leading_coefficient_times_dfact == volume,
    }
    if analysis.classification == D2:
        analysis.run()
        closed = d2_polynomial(analysis.d, analysis.radon.r)
        report["closed_form_coefficients"] = fmt(closed)
        report["closed_form_match"] = tuple(fit.coefficients[:len(closed)]) == closed and not any(
            fit.coefficients[len(closed):])

    def human(rep):
        terms = " + ".join(f"({c})*h^{k}" for k, c in enumerate(rep["coefficients"]) if c != "0")
        print(f"|hA| = {terms or '0'} for h >= {rep['h0']}")
        for key in ("degree", "leading_coefficient_times_dfact", "hull_volume_dfact",
                    "volume_match", "closed_form_match"):
            if key in rep:
                print(f"{key}: {json.dumps(rep[key])}")

    _emit(args, report, human)
    ok = report["volume_match"] and report.get("closed_form_match", True)
    return 0 if ok else MismatchError.exit_code


def cmd_brute(args):
    spec = load_instance(args.file)
    analysis = Analysis(spec)
    _check_h_max(args.h_max)
    rows = verify_rows(analysis, args.h_max, brute_only=True, budget_points=args.budget_points)
    if args.csv:
        _write_csv(args.csv, rows)
    report = {"instance": {"d": spec.d, "points": [list(p) for p in spec.points]},
              "h_max": args.h_max, "sequence": [r["brute"] for r in rows]}

    def human(rep):
        for h, v in enumerate(rep["sequence"]):
            print(f"{h:>4}  {v}")

    _emit(args, report, human)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="itersum", description="Exact sizes of iterated sumsets hA for small A in Z^d.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, h_max_default):
        p.add_argument("--json", action="store_true", help="print a JSON report")
        p.add_argument("--budget-points", type=int, default=DEFAULT_BUDGET_POINTS,
                       help="maximum points in one sumset layer")
        if h_max_default is not False:
            p.add_argument("--h-max", type=int, default=h_max_default)

    p = sub.add_parser("analyze", help="classify an instance and compute its invariants")
    p.add_argument("file")
    common(p, False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="compare the formulas with brute force")
    p.add_argument("file")
    common(p, None)
    p.add_argument("--mode", choices=("formula", "bounds", "all"), default="all")
    p.add_argument("--csv", metavar="PATH")
    p.add_argument("--brute-only", action="store_true", help="skip formulas, any point set")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="verify pseudo-random instances")
    common(p, MAX_H)
    p.add_argument("--dim", "-d", type=int, default=1)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=5, help="coordinates drawn from [-bound, bound]")
    p.add_argument("--family", choices=("d2", "d3"), default="d2")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("khovanskii", help="fit the eventual polynomial of |hA|")
    p.add_argument("file")
    common(p, 20)
    p.set_defaults(func=cmd_khovanskii)

    p = sub.add_parser("brute", help="print |hA| for h = 0..h_max by enumeration")
    p.add_argument("file")
    common(p, 10)
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_brute)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ItersumError as exc:
        name = getattr(exc, "predicate", None)
        prefix = f"hypothesis violated ({name})" if name else type(exc).__name__
        print(f"error: {prefix}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
